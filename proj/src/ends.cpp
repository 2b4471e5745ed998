#include "cox/ends.hpp"

#include <algorithm>
#include <numeric>

namespace cox {

const char* to_string(EndsVerdict v) {
  switch (v) {
    case EndsVerdict::Zero: return "ZERO";
    case EndsVerdict::One: return "ONE";
    case EndsVerdict::Two: return "TWO";
    case EndsVerdict::Many: return "MANY";
    case EndsVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::vector<SchedulePoint> default_schedule(int r_min, int r_max) {
  std::vector<SchedulePoint> s;
  for (int r = r_min; r <= r_max; ++r) s.push_back({r, 2 * r});
  return s;
}

namespace {

void validate_schedule(const std::vector<SchedulePoint>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("empty schedule");
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (schedule[k].r < 1) throw std::invalid_argument("schedule radius r must be >= 1");
    if (schedule[k].R < 2 * schedule[k].r)
      throw std::invalid_argument("schedule requires R >= 2r");
    if (k > 0 && (schedule[k].r <= schedule[k - 1].r || schedule[k].R <= schedule[k - 1].R))
      throw std::invalid_argument("schedule radii must be strictly increasing");
  }
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Components of the induced subgraph on r < distance <= R containing a vertex
// at distance exactly R. `Graph` is a Ball or CosetBall whose vertex indexing
// is layer-ordered, so the sub-ball of radius R is the index prefix.
template <typename Graph>
int annulus_components(const Graph& g, int r, int R) {
  int limit = g.prefix_size(R);
  Dsu dsu(limit);
  for (int v = 0; v < limit; ++v) {
    if (g.distance[v] <= r) continue;
    for (int s = 1; s <= g.rank(); ++s) {
      int w = g.adjacency[v][s - 1];
      if (w == kOutside || w >= limit || w == v) continue;
      if (g.distance[w] <= r) continue;
      dsu.unite(v, w);
    }
  }
  std::vector<char> counted(limit, 0);
  int components = 0;
  for (int v = 0; v < limit; ++v) {
    if (g.distance[v] != R) continue;
    int root = dsu.find(v);
    if (!counted[root]) {
      counted[root] = 1;
      ++components;
    }
  }
  return components;
}

} // namespace

int annulus_component_count(const Ball& ball, int r, int R) {
  if (R > ball.radius) throw std::invalid_argument("annulus exceeds ball radius");
  return annulus_components(ball, r, R);
}

int annulus_component_count(const CosetBall& ball, int r, int R) {
  if (R > ball.radius) throw std::invalid_argument("annulus exceeds ball radius");
  return annulus_components(ball, r, R);
}

namespace {

template <typename Graph>
EndsEstimate estimate_on(const Graph& ball, const std::vector<SchedulePoint>& schedule,
                         int requested_max_R) {
  EndsEstimate est;
  if (ball.radius < requested_max_R)
    est.warnings.push_back("schedule truncated at R=" + std::to_string(ball.radius) +
                           ": vertex budget");

  bool enumerated = false; // sphere empty at some scheduled R
  for (const SchedulePoint& p : schedule) {
    if (p.R > ball.radius) break;
    bool sphere_empty = ball.prefix_size(p.R) == ball.prefix_size(p.R - 1);
    if (sphere_empty) {
      enumerated = true;
      est.schedule.push_back({p.r, p.R, 0});
      break;
    }
    est.schedule.push_back({p.r, p.R, annulus_components(ball, p.r, p.R)});
  }

  est.saturated = enumerated || ball.saturated;
  if (est.saturated) {
    est.verdict = EndsVerdict::Zero;
    return est;
  }
  if (est.schedule.size() < 2) {
    est.verdict = EndsVerdict::Inconclusive;
    if (est.schedule.size() < schedule.size())
      est.warnings.push_back("fewer than two schedule points completed");
    return est;
  }
  int last = est.schedule.back().components;
  int prev = est.schedule[est.schedule.size() - 2].components;
  if (last >= 3 && prev >= 3)
    est.verdict = EndsVerdict::Many;
  else if (last == prev && last == 2)
    est.verdict = EndsVerdict::Two;
  else if (last == prev && last == 1)
    est.verdict = EndsVerdict::One;
  else
    est.verdict = EndsVerdict::Inconclusive;
  return est;
}

} // namespace

EndsEstimate estimate_ends(const WordProblem& wp, const std::vector<SchedulePoint>& schedule,
                           BallLimits limits) {
  validate_schedule(schedule);
  int max_R = schedule.back().R;
  Ball ball = detail::build_ball_capped(wp, max_R, limits);
  return estimate_on(ball, schedule, max_R);
}

EndsEstimate estimate_relative_ends(const WordProblem& wp, const MembershipOracle& H,
                                    const std::vector<SchedulePoint>& schedule,
                                    BallLimits limits) {
  validate_schedule(schedule);
  int max_R = schedule.back().R;
  CosetBall ball = detail::build_coset_ball_capped(wp, H, max_R, limits);
  EndsEstimate est = estimate_on(ball, schedule, max_R);

  // Finiteness probe: |H ∩ B_5| == |H ∩ B_7| suggests a finite subgroup, for
  // which the coset-graph count and e(G) diverge (e.g. edge inversions give a
  // ray). Probing is best effort under a small budget.
  try {
    BallLimits probe_limits{20'000};
    Ball probe = build_ball(wp, 7, probe_limits);
    long in5 = 0, in7 = 0;
    for (int v = 0; v < probe.size(); ++v)
      if (H.contains(probe.vertices[v])) {
        ++in7;
        if (probe.distance[v] <= 5) ++in5;
      }
    if (in5 == in7)
      est.warnings.push_back("membership oracle looks finite (|H∩B_5| = |H∩B_7| = " +
                             std::to_string(in7) +
                             "); coset-graph ends of finite subgroups need not equal e(G)");
  } catch (const BudgetError&) {
    // group too large to probe cheaply; skip
  }
  return est;
}

} // namespace cox
