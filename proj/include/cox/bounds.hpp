#pragma once

#include "cox/rational.hpp"
#include "cox/system.hpp"

#include <array>
#include <optional>

namespace cox {

struct TriangleParams {
  int p = 2;
  int q = 2;
  int r = 2;
};

// 1/p + 1/q + 1/r against 1.
bool is_hyperbolic(const TriangleParams& t);
bool is_euclidean(const TriangleParams& t);
bool is_spherical(const TriangleParams& t);

// First L2-Betti lower bound for a Coxeter presentation:
//   n/2 - 1 - sum over pairs with finite label m of 1/m
// (infinite labels contribute 0). Validated symbolically against the W_n
// family display; reports should label it "lower bound per family-validated
// formula" when applied outside that family.
Q coxeter_betti_lower_bound(const CoxeterSystem& sys);

// Orbifold Euler characteristic of the (p,q,r) triangle reflection group:
// (1/p + 1/q + 1/r - 1) / 2. Defined for all labels >= 2.
Q triangle_euler_char(const TriangleParams& t);

// First L2-Betti number -chi for hyperbolic triangles, 0 for Euclidean ones
// (virtually Z^2). Spherical input is rejected.
Q triangle_betti(const TriangleParams& t);

// 2g - 2 for the genus-g surface group, g >= 1.
Q surface_betti(int genus);

// Value for an index-k subgroup: k * beta (both beta and chi scale with
// index).
Q betti_scale_finite_index(const Q& beta, long index);

// Betti number of the wall stabilizer T(p,q,r) x Z/2: half the triangle
// value. Spherical input is rejected.
Q centralizer_betti_family(const TriangleParams& t);

// The W_n family: s_1 commutes with exactly s_2, s_3, s_4; the triangle
// labels (p,q,r) sit on pairs (2,3), (2,4), (3,4); m(1,j) is infinite for
// j >= 5; every remaining pair carries n^2. Requires n >= 5.
CoxeterSystem family_system(int n, const TriangleParams& t);

// (n, p, q, r) when sys matches the family shape exactly.
std::optional<std::array<int, 4>> match_family(const CoxeterSystem& sys);

// Threshold index of the splitting corollary: beta_H / beta_G; an index
// strictly above it qualifies. beta_G must be positive.
Q index_threshold(const Q& beta_H, const Q& beta_G);

struct BoundReport {
  int n = 0;
  TriangleParams t;
  Q lower_bound_W;            // beta_1^(2)(W_n) >= this
  Q centralizer_value;        // beta_1^(2)(C(s_1))
  bool inequality_holds = false;          // lower_bound_W > centralizer_value, exact
  bool sufficient_criterion_holds = false; // n - 6 > 3 chi + 2, exact
  std::optional<int> minimal_n;            // least n with the inequality, when requested
  std::optional<Q> threshold;              // centralizer/lower bound when the bound is positive
};

// Evaluates the family inequality two ways (via the general bound on
// family_system and via its closed form in n) and requires them to agree.
BoundReport splitting_criterion(int n, const TriangleParams& t, bool find_minimal_n = false);

} // namespace cox
