#include "cox/bounds.hpp"

#include "cox/checker.hpp"
#include "cox/word_problem.hpp"
#include "doctest.h"

using namespace cox;

TEST_CASE("triangle Euler characteristics") {
  CHECK(triangle_euler_char({2, 3, 7}) == Q(-1, 84));
  CHECK(triangle_euler_char({3, 3, 3}) == Q(0));
  CHECK(triangle_euler_char({2, 3, 8}) == Q(-1, 48));
  CHECK(triangle_euler_char({2, 3, 5}) == Q(1, 60)); // spherical chi is fine
  CHECK_THROWS_AS(triangle_euler_char({1, 3, 3}), std::invalid_argument);
}

TEST_CASE("triangle Betti numbers") {
  CHECK(triangle_betti({2, 3, 7}) == Q(1, 84));
  CHECK(triangle_betti({3, 3, 3}) == Q(0)); // Euclidean: virtually Z^2
  CHECK(triangle_betti({2, 4, 4}) == Q(0));
  CHECK(triangle_betti({2, 4, 5}) == Q(1, 40));
  CHECK_THROWS_AS(triangle_betti({2, 3, 5}), std::invalid_argument); // spherical
  CHECK_THROWS_AS(triangle_betti({2, 2, 2}), std::invalid_argument);
}

TEST_CASE("hyperbolicity classification") {
  CHECK(is_hyperbolic({2, 3, 7}));
  CHECK_FALSE(is_hyperbolic({3, 3, 3}));
  CHECK(is_euclidean({2, 4, 4}));
  CHECK(is_euclidean({2, 3, 6}));
  CHECK(is_spherical({2, 3, 5}));
}

TEST_CASE("surface Betti numbers") {
  CHECK(surface_betti(3) == Q(4));
  CHECK(surface_betti(1) == Q(0));
  CHECK(surface_betti(2) == Q(2));
  CHECK_THROWS_AS(surface_betti(0), std::invalid_argument);
}

TEST_CASE("finite-index scaling") {
  CHECK(betti_scale_finite_index(Q(1, 84), 336) == Q(4));
  CHECK(betti_scale_finite_index(Q(5, 34), 1) == Q(5, 34));
  CHECK(betti_scale_finite_index(Q(1, 84), 2) == Q(1, 42));
  CHECK_THROWS_AS(betti_scale_finite_index(Q(1), 0), std::invalid_argument);
}

TEST_CASE("Klein quartic consistency: index times triangle Betti is the surface value") {
  CHECK(betti_scale_finite_index(triangle_betti({2, 3, 7}), 336) == surface_betti(3));
}

TEST_CASE("centralizer Betti values") {
  CHECK(centralizer_betti_family({2, 3, 7}) == Q(1, 168));
  CHECK(centralizer_betti_family({2, 4, 5}) == Q(1, 80));
  CHECK(centralizer_betti_family({2, 3, 8}) == Q(1, 96));
  CHECK(centralizer_betti_family({3, 3, 3}) == Q(0)); // Euclidean centralizer
  CHECK_THROWS_AS(centralizer_betti_family({2, 3, 4}), std::invalid_argument);
}

TEST_CASE("family system shape") {
  CoxeterSystem w8 = family_system(8, {2, 3, 7});
  CHECK(w8.rank() == 8);
  CHECK(w8.label(1, 2) == 2);
  CHECK(w8.label(1, 3) == 2);
  CHECK(w8.label(1, 4) == 2);
  CHECK(w8.label(2, 3) == 2);
  CHECK(w8.label(2, 4) == 3);
  CHECK(w8.label(3, 4) == 7);
  int infinite = 0, at_square = 0;
  for (Gen i = 1; i <= 8; ++i)
    for (Gen j = i + 1; j <= 8; ++j) {
      if (w8.label(i, j) == kInfinity) ++infinite;
      if (w8.label(i, j) == 64) ++at_square;
    }
  CHECK(infinite == 4);
  CHECK(at_square == 18);

  CoxeterSystem w5 = family_system(5, {2, 3, 7});
  int at_25 = 0;
  for (Gen i = 1; i <= 5; ++i)
    for (Gen j = i + 1; j <= 5; ++j)
      if (w5.label(i, j) == 25) ++at_25;
  CHECK(at_25 == 3); // pairs {5 with 2,3,4}

  CHECK_THROWS_AS(family_system(4, TriangleParams{2, 3, 7}), std::invalid_argument);
}

TEST_CASE("s1 commutes with exactly three family generators") {
  WordProblem wp(family_system(6, {2, 3, 7}));
  for (Gen j = 2; j <= 6; ++j)
    CHECK(wp.is_in_centralizer(wp.generator(j), 1) == (j <= 4));
}

TEST_CASE("the general lower bound on the worked systems") {
  CHECK(coxeter_betti_lower_bound(family_system(8, {2, 3, 7})) == Q(163, 672));
  CHECK(coxeter_betti_lower_bound(eight_generator_example(51)) == Q(5, 34));
  CHECK(coxeter_betti_lower_bound(CoxeterSystem(1, {})) == Q(-1, 2));
}

// Validation gate: the general-form bound specializes to the family's closed
// form exactly, for every n in 5..12 and hyperbolic labels up to 10.
TEST_CASE("specialization identity over the family grid") {
  for (int n = 5; n <= 12; ++n)
    for (int p = 2; p <= 10; ++p)
      for (int q = 2; q <= 10; ++q)
        for (int r = 2; r <= 10; ++r) {
          TriangleParams t{p, q, r};
          if (!is_hyperbolic(t)) continue;
          Q general = coxeter_betti_lower_bound(family_system(n, t));
          Q display = (Q(n) - 6 + Q(3, n) + Q(4) / (Q(n) * n)) / 2 -
                      (Q(1, p) + Q(1, q) + Q(1, r));
          CHECK(general == display);
        }
}

TEST_CASE("the bound is monotone in the labels") {
  const int labels[] = {2, 3, 7, kInfinity};
  auto bump = [](int m) { // next larger label in the test lattice
    if (m == 2) return 3;
    if (m == 3) return 7;
    return kInfinity;
  };
  for (int a : labels)
    for (int b : labels)
      for (int c : labels) {
        CoxeterSystem base(3, {{{1, 2}, a}, {{1, 3}, b}, {{2, 3}, c}});
        Q base_bound = coxeter_betti_lower_bound(base);
        for (int slot = 0; slot < 3; ++slot) {
          int na = a, nb = b, nc = c;
          int& target = slot == 0 ? na : slot == 1 ? nb : nc;
          if (target == kInfinity) continue;
          target = bump(target);
          CoxeterSystem bumped(3, {{{1, 2}, na}, {{1, 3}, nb}, {{2, 3}, nc}});
          CHECK(coxeter_betti_lower_bound(bumped) >= base_bound);
        }
      }
}

TEST_CASE("splitting criterion at the paper's parameters") {
  BoundReport at8 = splitting_criterion(8, {2, 3, 7}, true);
  CHECK(at8.lower_bound_W == Q(163, 672));
  CHECK(at8.centralizer_value == Q(1, 168));
  CHECK(at8.inequality_holds);
  CHECK(at8.sufficient_criterion_holds);
  REQUIRE(at8.minimal_n.has_value());
  CHECK(*at8.minimal_n == 8);
  REQUIRE(at8.threshold.has_value());
  CHECK(*at8.threshold == Q(4, 163));

  BoundReport at7 = splitting_criterion(7, {2, 3, 7});
  CHECK_FALSE(at7.sufficient_criterion_holds);
  CHECK_FALSE(at7.inequality_holds);
  CHECK(3 * triangle_euler_char({2, 3, 7}) + 2 == Q(55, 28));
  CHECK_FALSE(at7.threshold.has_value()); // bound is negative at n=7

  CHECK_THROWS_AS(splitting_criterion(8, TriangleParams{3, 3, 3}), std::invalid_argument);
}

TEST_CASE("sufficient criterion implies the exact inequality on a sweep") {
  for (int n = 5; n <= 16; ++n)
    for (int p = 2; p <= 8; ++p)
      for (int q = p; q <= 8; ++q)
        for (int r = q; r <= 8; ++r) {
          TriangleParams t{p, q, r};
          if (!is_hyperbolic(t)) continue;
          BoundReport report = splitting_criterion(n, t);
          if (report.sufficient_criterion_holds) CHECK(report.inequality_holds);
        }
}

TEST_CASE("index threshold") {
  CHECK(index_threshold(Q(1, 168), Q(163, 672)) == Q(4, 163));
  CHECK(index_threshold(Q(0), Q(1, 2)) == Q(0));
  CHECK(index_threshold(Q(1), Q(1, 2)) == Q(2));
  CHECK_THROWS_AS(index_threshold(Q(1), Q(0)), std::invalid_argument);
  CHECK_THROWS_AS(index_threshold(Q(1), Q(-1, 2)), std::invalid_argument);
}

TEST_CASE("family matching") {
  auto match = match_family(family_system(8, {2, 3, 7}));
  REQUIRE(match.has_value());
  CHECK(*match == std::array<int, 4>{8, 2, 3, 7});
  CHECK_FALSE(match_family(eight_generator_example(51)).has_value());
  CHECK_FALSE(match_family(CoxeterSystem(2, {{{1, 2}, 3}})).has_value());

  // perturb one off-triangle label: no longer a family instance
  CoxeterSystem w6 = family_system(6, {2, 3, 7});
  std::map<std::pair<Gen, Gen>, int> labels;
  for (Gen i = 1; i <= 6; ++i)
    for (Gen j = i + 1; j <= 6; ++j) labels[{i, j}] = w6.label(i, j);
  labels[{5, 6}] = 7;
  CHECK_FALSE(match_family(CoxeterSystem(6, labels)).has_value());
}

TEST_CASE("eight generator example census") {
  CoxeterSystem sys = eight_generator_example(51);
  int twos = 0, threes = 0, infs = 0, defaults = 0;
  for (Gen i = 1; i <= 8; ++i)
    for (Gen j = i + 1; j <= 8; ++j) {
      int m = sys.label(i, j);
      if (m == 2) ++twos;
      else if (m == 3) ++threes;
      else if (m == kInfinity) ++infs;
      else if (m == 51) ++defaults;
    }
  CHECK(twos == 3);
  CHECK(threes == 3);
  CHECK(infs == 4);
  CHECK(defaults == 18);
}
