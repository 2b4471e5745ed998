#pragma once

#include "cox/word_problem.hpp"

#include <functional>
#include <map>

namespace cox {

// Adjacency target for edges leaving the ball: distinguishes "unknown beyond
// the horizon" from "absent".
constexpr int kOutside = -1;

struct BallLimits {
  std::size_t vertex_budget = 500'000;
};

// Radius-R piece of the Cayley graph (right multiplication by generators).
// BFS distance equals Coxeter length. Vertices are indexed in (length,
// ShortLex) order, so the ball of any smaller radius is an index prefix.
struct Ball {
  int radius = 0;
  std::vector<Element> vertices;
  std::vector<int> distance;
  std::vector<std::vector<int>> adjacency; // [v][s-1] -> vertex index or kOutside
  bool saturated = false;                  // sphere(radius) empty: fully enumerated
  std::map<Word, int> index_of;

  int size() const { return static_cast<int>(vertices.size()); }
  int rank() const { return adjacency.empty() ? 0 : static_cast<int>(adjacency[0].size()); }
  bool on_sphere(int v) const { return distance[v] == radius; }
  // Vertex index of e, or -1 if absent.
  int find(const Element& e) const;
  // Number of vertices with distance <= r (an index prefix).
  int prefix_size(int r) const;
};

Ball build_ball(const WordProblem& wp, int radius, BallLimits limits = {});

// Subgroup membership test. `contains` must be a pure predicate with
// contains(identity) = true. `coset_key`, when set, must be constant exactly
// on left cosets Hg (key(x) == key(y) iff Hx == Hy); build_coset_ball then
// uses it in place of pairwise oracle probes, with identical results.
struct MembershipOracle {
  std::function<bool(const Element&)> contains;
  std::string descriptor;
  std::function<Word(const Element&)> coset_key; // optional fast path
};

MembershipOracle trivial_oracle();
MembershipOracle whole_group_oracle();

// The centralizer C(s_i), i.e. the wall stabilizer of s_i. The oracle borrows
// `wp`, which must outlive it. Its coset key is x -> nf(x^-1 s_i x), constant
// exactly on cosets C(s_i) x.
MembershipOracle centralizer_oracle(const WordProblem& wp, Gen i);

// Radius-R piece of the coset graph: vertices are left cosets Hg, edges are
// right multiplication by generators. Loops (Hgs == Hg) are kept. Each coset
// carries the ShortLex-least representative among the candidates generated at
// its discovery layer; vertices are indexed in (layer, ShortLex) order.
struct CosetBall {
  int radius = 0;
  std::string oracle_descriptor;
  std::vector<Element> representatives;
  std::vector<int> distance;
  std::vector<std::vector<int>> adjacency;
  bool saturated = false;

  int size() const { return static_cast<int>(representatives.size()); }
  int rank() const { return adjacency.empty() ? 0 : static_cast<int>(adjacency[0].size()); }
  bool on_sphere(int v) const { return distance[v] == radius; }
  int prefix_size(int r) const;
};

CosetBall build_coset_ball(const WordProblem& wp, const MembershipOracle& H, int radius,
                           BallLimits limits = {});

namespace detail {

// Capped builders: on vertex-budget exhaustion they return the largest fully
// completed ball instead of throwing; the result's radius reports how far the
// construction got. Used by the ends estimators to truncate schedules.
Ball build_ball_capped(const WordProblem& wp, int radius, BallLimits limits);
CosetBall build_coset_ball_capped(const WordProblem& wp, const MembershipOracle& H, int radius,
                                  BallLimits limits);

} // namespace detail

// Line-oriented ASCII dump: a vertex table `index length normal_form` followed
// by the total edge map `source generator target` (target -1 = outside).
std::string dump_ball(const Ball& ball);
std::string dump_coset_ball(const CosetBall& ball);

} // namespace cox
