#include "cox/ball.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cox {

int Ball::find(const Element& e) const {
  auto it = index_of.find(e.nf);
  return it == index_of.end() ? -1 : it->second;
}

int Ball::prefix_size(int r) const {
  auto it = std::upper_bound(distance.begin(), distance.end(), r);
  return static_cast<int>(it - distance.begin());
}

int CosetBall::prefix_size(int r) const {
  auto it = std::upper_bound(distance.begin(), distance.end(), r);
  return static_cast<int>(it - distance.begin());
}

namespace detail {

Ball build_ball_capped(const WordProblem& wp, int radius, BallLimits limits) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  if (limits.vertex_budget < 1) throw std::invalid_argument("vertex budget must be >= 1");
  const int n = wp.system().rank();

  std::vector<std::vector<Word>> layers;
  layers.push_back({Word{}});
  std::size_t total = 1;
  int achieved = radius;

  for (int d = 1; d <= radius; ++d) {
    const auto& prev = layers[d - 1];
    if (prev.empty()) {
      layers.emplace_back();
      continue; // saturated: all further layers are empty
    }
    std::set<Word> next;
    for (const Word& w : prev) {
      Element e{w};
      for (Gen s = 1; s <= n; ++s) {
        Element u = wp.multiply(e, Element{Word{s}});
        if (u.length() == d) next.insert(std::move(u.nf));
      }
    }
    if (total + next.size() > limits.vertex_budget) {
      achieved = d - 1;
      break;
    }
    total += next.size();
    layers.emplace_back(next.begin(), next.end());
  }

  Ball ball;
  ball.radius = achieved;
  for (int d = 0; d <= achieved; ++d)
    for (Word& w : layers[d]) {
      ball.index_of.emplace(w, ball.size());
      ball.distance.push_back(d);
      ball.vertices.push_back(Element{std::move(w)});
    }
  ball.saturated = achieved == 0 ? false : layers[achieved].empty();

  ball.adjacency.assign(ball.vertices.size(), std::vector<int>(n, kOutside));
  for (int v = 0; v < ball.size(); ++v)
    for (Gen s = 1; s <= n; ++s) {
      Element u = wp.multiply(ball.vertices[v], Element{Word{s}});
      ball.adjacency[v][s - 1] = ball.find(u);
    }
  return ball;
}

namespace {

struct CosetMatcher {
  const WordProblem& wp;
  const MembershipOracle& oracle;
  bool keyed;
  std::map<Word, int> key_to_index; // coset key -> final index (keyed path)
  std::vector<Element> rep_inverses; // parallel to reps (pairwise path)

  Word key_of(const Element& g) const { return oracle.coset_key(g); }

  void on_commit(const Element& rep) {
    if (!keyed) rep_inverses.push_back(wp.inverse(rep));
  }

  // Final index of the coset of `cand` among committed cosets whose layer is
  // in [lo, hi], or -1. A coset adjacent to layer d has distance in
  // {d-1, d, d+1}, so probing those layers is complete.
  int match_committed(const Element& cand, const std::vector<std::vector<int>>& layer_indices,
                      int lo, int hi) const {
    if (keyed) {
      auto it = key_to_index.find(key_of(cand));
      return it == key_to_index.end() ? -1 : it->second;
    }
    for (int d = std::max(lo, 0); d <= hi && d < static_cast<int>(layer_indices.size()); ++d)
      for (int u : layer_indices[d])
        if (oracle.contains(wp.multiply(cand, rep_inverses[u]))) return u;
    return -1;
  }
};

} // namespace

CosetBall build_coset_ball_capped(const WordProblem& wp, const MembershipOracle& H, int radius,
                                  BallLimits limits) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  if (limits.vertex_budget < 1) throw std::invalid_argument("vertex budget must be >= 1");
  if (!H.contains) throw std::invalid_argument("membership oracle has no predicate");
  if (!H.contains(Element{})) throw std::invalid_argument("membership oracle rejects the identity");
  const int n = wp.system().rank();

  CosetBall ball;
  ball.oracle_descriptor = H.descriptor;

  std::vector<std::vector<int>> layer_indices(1, std::vector<int>{0});
  std::vector<Element> reps{Element{}};
  std::vector<int> dist{0};
  std::vector<std::vector<int>> adjacency; // rows committed layer by layer

  CosetMatcher matcher{wp, H, static_cast<bool>(H.coset_key), {}, {}};
  if (matcher.keyed) matcher.key_to_index.emplace(matcher.key_of(reps[0]), 0);
  matcher.on_commit(reps[0]);

  int achieved = radius;

  for (int d = 0; d < radius; ++d) {
    const auto& layer = layer_indices[d];
    if (layer.empty()) {
      layer_indices.emplace_back();
      continue; // saturated
    }

    // Provisional new cosets at layer d+1: ShortLex-least candidate kept.
    std::vector<Word> new_reps;
    std::vector<Word> new_keys; // keyed path only
    std::map<Word, int> new_key_to_id;
    std::vector<Element> new_inverses; // pairwise path only
    // Encoded rows for this layer: final index, or -2 - provisional id.
    std::vector<std::vector<int>> rows(layer.size(), std::vector<int>(n, kOutside));

    for (std::size_t li = 0; li < layer.size(); ++li) {
      int v = layer[li];
      for (Gen s = 1; s <= n; ++s) {
        Element cand = wp.multiply(reps[v], Element{Word{s}});
        int target = matcher.match_committed(cand, layer_indices, d - 1, d);
        if (target == -1) {
          // match against this layer's provisional cosets
          int prov = -1;
          if (matcher.keyed) {
            Word k = matcher.key_of(cand);
            auto it = new_key_to_id.find(k);
            if (it != new_key_to_id.end())
              prov = it->second;
            else {
              prov = static_cast<int>(new_reps.size());
              new_keys.push_back(k);
              new_key_to_id.emplace(std::move(k), prov);
            }
          } else {
            for (std::size_t p = 0; p < new_reps.size(); ++p)
              if (H.contains(wp.multiply(cand, new_inverses[p]))) {
                prov = static_cast<int>(p);
                break;
              }
            if (prov == -1) {
              prov = static_cast<int>(new_reps.size());
              new_inverses.push_back(wp.inverse(cand));
            }
          }
          if (prov == static_cast<int>(new_reps.size()))
            new_reps.push_back(cand.nf);
          else if (shortlex_less(cand.nf, new_reps[prov]))
            new_reps[prov] = cand.nf;
          rows[li][s - 1] = -2 - prov;
        } else {
          rows[li][s - 1] = target;
        }
      }
    }

    if (reps.size() + new_reps.size() > limits.vertex_budget) {
      achieved = d;
      break; // discard this expansion; the final pass re-derives layer-d rows
    }

    // Commit: provisional cosets sorted by representative, then remap rows.
    std::vector<int> order(new_reps.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return shortlex_less(new_reps[a], new_reps[b]); });
    std::vector<int> final_of(new_reps.size());
    std::vector<int> next_layer;
    for (std::size_t k = 0; k < order.size(); ++k) {
      int prov = order[k];
      int idx = static_cast<int>(reps.size());
      final_of[prov] = idx;
      next_layer.push_back(idx);
      reps.push_back(Element{new_reps[prov]});
      dist.push_back(d + 1);
      if (matcher.keyed) matcher.key_to_index.emplace(new_keys[prov], idx);
      matcher.on_commit(reps.back());
    }
    for (auto& row : rows)
      for (int& target : row)
        if (target <= -2) target = final_of[-2 - target];
    adjacency.insert(adjacency.end(), rows.begin(), rows.end());
    layer_indices.push_back(std::move(next_layer));
  }

  // Rows for the outermost completed layer: match-only, unmatched -> outside.
  while (static_cast<int>(adjacency.size()) < static_cast<int>(reps.size())) {
    int v = static_cast<int>(adjacency.size());
    std::vector<int> row(n, kOutside);
    for (Gen s = 1; s <= n; ++s) {
      Element cand = wp.multiply(reps[v], Element{Word{s}});
      row[s - 1] = matcher.match_committed(cand, layer_indices, dist[v] - 1, dist[v]);
    }
    adjacency.push_back(std::move(row));
  }

  ball.radius = achieved;
  ball.representatives = std::move(reps);
  ball.distance = std::move(dist);
  ball.adjacency = std::move(adjacency);
  ball.saturated = achieved > 0 && static_cast<int>(layer_indices.size()) > achieved &&
                   layer_indices[achieved].empty();
  return ball;
}

} // namespace detail

Ball build_ball(const WordProblem& wp, int radius, BallLimits limits) {
  Ball ball = detail::build_ball_capped(wp, radius, limits);
  if (ball.radius < radius)
    throw BudgetError("vertex budget exceeded building ball of radius " + std::to_string(radius));
  return ball;
}

CosetBall build_coset_ball(const WordProblem& wp, const MembershipOracle& H, int radius,
                           BallLimits limits) {
  CosetBall ball = detail::build_coset_ball_capped(wp, H, radius, limits);
  if (ball.radius < radius)
    throw BudgetError("vertex budget exceeded building coset ball of radius " +
                      std::to_string(radius));
  return ball;
}

MembershipOracle trivial_oracle() {
  MembershipOracle o;
  o.contains = [](const Element& g) { return g.is_identity(); };
  o.descriptor = "trivial subgroup";
  o.coset_key = [](const Element& g) { return g.nf; };
  return o;
}

MembershipOracle whole_group_oracle() {
  MembershipOracle o;
  o.contains = [](const Element&) { return true; };
  o.descriptor = "whole group";
  o.coset_key = [](const Element&) { return Word{}; };
  return o;
}

MembershipOracle centralizer_oracle(const WordProblem& wp, Gen i) {
  if (i < 1 || i > wp.system().rank()) throw std::invalid_argument("generator index out of range");
  MembershipOracle o;
  o.contains = [&wp, i](const Element& g) { return wp.is_in_centralizer(g, i); };
  o.descriptor = "centralizer of s" + std::to_string(i);
  // x -> nf(x^-1 s_i x): equal on x, y iff x y^-1 centralizes s_i.
  o.coset_key = [&wp, i](const Element& g) {
    Element gi = wp.inverse(g);
    return wp.multiply(wp.multiply(gi, wp.generator(i)), g).nf;
  };
  return o;
}

namespace {

template <typename B>
std::string dump_graph(const B& ball, const std::vector<Element>& elems, const char* kind) {
  std::ostringstream out;
  out << "# " << kind << " radius " << ball.radius << " rank " << ball.rank() << " saturated "
      << (ball.saturated ? 1 : 0) << "\n";
  out << "# vertices: index length normal_form\n";
  for (int v = 0; v < ball.size(); ++v)
    out << v << " " << ball.distance[v] << " " << word_to_string(elems[v].nf) << "\n";
  out << "# edges: source generator target (-1 = outside)\n";
  for (int v = 0; v < ball.size(); ++v)
    for (int s = 1; s <= ball.rank(); ++s)
      out << v << " " << s << " " << ball.adjacency[v][s - 1] << "\n";
  return out.str();
}

} // namespace

std::string dump_ball(const Ball& ball) { return dump_graph(ball, ball.vertices, "cayley ball"); }

std::string dump_coset_ball(const CosetBall& ball) {
  return dump_graph(ball, ball.representatives, "coset ball");
}

} // namespace cox
