#include "cox/walls.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cox {

const char* to_string(Side s) { return s == Side::Plus ? "+" : "-"; }

Side halfspace_membership(const WordProblem& wp, const Element& t, const Element& w) {
  Element tw = wp.multiply(t, w);
  return tw.length() > w.length() ? Side::Plus : Side::Minus;
}

Halfspace positive_halfspace(const WordProblem& wp, const Element& t) {
  if (!wp.is_reflection(t))
    throw std::invalid_argument("halfspace requires a reflection: " + word_to_string(t.nf));
  return Halfspace{t, Side::Plus};
}

bool halfspace_contains(const WordProblem& wp, const Halfspace& h, const Element& w) {
  return halfspace_membership(wp, h.t, w) == h.side;
}

std::vector<WallEdge> wall_edges(const WordProblem& wp, const Ball& ball, const Element& t) {
  std::vector<WallEdge> edges;
  for (int v = 0; v < ball.size(); ++v)
    for (Gen s = 1; s <= ball.rank(); ++s) {
      int w = ball.adjacency[v][s - 1];
      if (w == kOutside || w < v) continue; // each edge once, from its lower endpoint
      // w s w^-1 = t  <=>  t * (ws) = w
      if (wp.multiply(t, ball.vertices[w]) == ball.vertices[v])
        edges.push_back({v, s, w});
    }
  return edges;
}

namespace {

std::set<std::pair<int, Gen>> edge_set(const std::vector<WallEdge>& edges) {
  std::set<std::pair<int, Gen>> keys;
  for (const WallEdge& e : edges) keys.emplace(e.source, e.gen);
  return keys;
}

// Graph distance to the nearest wall-edge endpoint, by multi-source BFS.
std::vector<int> distance_to_wall(const Ball& ball, const std::vector<WallEdge>& edges) {
  std::vector<int> dist(ball.size(), -1);
  std::deque<int> queue;
  for (const WallEdge& e : edges) {
    for (int v : {e.source, e.target})
      if (dist[v] != 0) {
        dist[v] = 0;
        queue.push_back(v);
      }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int s = 1; s <= ball.rank(); ++s) {
      int w = ball.adjacency[v][s - 1];
      if (w == kOutside || dist[w] != -1) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

} // namespace

WallCertificate wall_certificate(const WordProblem& wp, Gen i, int radius, BallLimits limits) {
  if (radius < 2) throw std::invalid_argument("wall certificate requires radius >= 2");
  Element t = wp.generator(i);
  Ball ball = build_ball(wp, radius, limits);
  std::vector<WallEdge> wall = wall_edges(wp, ball, t);
  auto in_wall = edge_set(wall);

  WallCertificate cert;
  cert.gen = i;
  cert.radius = radius;
  cert.wall_edge_count = static_cast<int>(wall.size());

  std::vector<Side> sign(ball.size());
  for (int v = 0; v < ball.size(); ++v)
    sign[v] = halfspace_membership(wp, t, ball.vertices[v]);

  // (a) depth on both sides
  if (!wall.empty()) {
    std::vector<int> wd = distance_to_wall(ball, wall);
    for (int v = 0; v < ball.size(); ++v) {
      int& deepest = sign[v] == Side::Plus ? cert.deepest_plus : cert.deepest_minus;
      deepest = std::max(deepest, wd[v]);
    }
    cert.deep_vertices_both_sides =
        cert.deepest_plus >= radius - 1 && cert.deepest_minus >= radius - 1;
  }

  // (b) sign flips across an edge exactly at wall edges, within B_{R-1}
  cert.boundary_matches_wall = true;
  int interior = ball.prefix_size(radius - 1);
  for (int v = 0; v < interior && cert.boundary_matches_wall; ++v)
    for (Gen s = 1; s <= ball.rank(); ++s) {
      int w = ball.adjacency[v][s - 1];
      bool flip = sign[v] != sign[w];
      bool marked = in_wall.count({std::min(v, w), s}) > 0;
      if (flip != marked) {
        cert.boundary_matches_wall = false;
        break;
      }
    }

  // (c) C(t) ∩ B_{R/2} maps wall edges into the wall
  cert.stabilizer_preserves_wall = true;
  int half = ball.prefix_size(radius / 2);
  for (int h = 0; h < half; ++h) {
    if (!wp.is_in_centralizer(ball.vertices[h], i)) continue;
    ++cert.stabilizer_elements_checked;
    for (const WallEdge& e : wall) {
      int hv = ball.find(wp.multiply(ball.vertices[h], ball.vertices[e.source]));
      int hw = ball.find(wp.multiply(ball.vertices[h], ball.vertices[e.target]));
      if (hv == -1 || hw == -1) continue; // out of range
      ++cert.stabilizer_edges_checked;
      if (!in_wall.count({std::min(hv, hw), e.gen})) {
        cert.stabilizer_preserves_wall = false;
        break;
      }
    }
    if (!cert.stabilizer_preserves_wall) break;
  }
  return cert;
}

const CrossingEntry* CrossingReport::entry_for(const Word& g) const {
  for (const CrossingEntry& e : entries)
    if (e.g == g) return &e;
  return nullptr;
}

CrossingReport crossing_obstruction(const WordProblem& wp, Gen i, int radius, BallLimits limits) {
  if (radius < 2) throw std::invalid_argument("crossing scan requires radius >= 2");
  Element t = wp.generator(i);
  Ball ball = build_ball(wp, radius, limits);

  std::vector<Side> sign(ball.size());
  for (int v = 0; v < ball.size(); ++v)
    sign[v] = halfspace_membership(wp, t, ball.vertices[v]);

  // side of g^-1 v relative to wall(t), cached across the scan
  std::map<Word, Side> side_of;
  auto side_of_element = [&](const Element& u) {
    auto it = side_of.find(u.nf);
    if (it != side_of.end()) return it->second;
    Side s = halfspace_membership(wp, t, u);
    side_of.emplace(u.nf, s);
    return s;
  };

  CrossingReport report;
  report.gen = i;
  report.radius = radius;
  report.entries.reserve(ball.size());

  for (int gi = 0; gi < ball.size(); ++gi) {
    const Element& g = ball.vertices[gi];
    Element ginv = wp.inverse(g);
    CrossingEntry entry;
    entry.g = g.nf;
    entry.exact = g.is_identity() || g == t;
    int remaining = 4;
    for (int v = 0; v < ball.size() && remaining > 0; ++v) {
      Side in_A = sign[v];
      Side in_gA = side_of_element(wp.multiply(ginv, ball.vertices[v]));
      int corner = (in_A == Side::Plus ? 0 : 2) + (in_gA == Side::Plus ? 0 : 1);
      if (!entry.corners[corner].nonempty) {
        entry.corners[corner].nonempty = true;
        entry.corners[corner].witness = ball.vertices[v].nf;
        --remaining;
      }
    }
    entry.crosses = remaining == 0;
    if (entry.crosses) ++report.crosses_count;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

} // namespace cox
