#include "cox/bounds.hpp"

#include <map>

namespace cox {

namespace {

Q angle_sum(const TriangleParams& t) {
  if (t.p < 2 || t.q < 2 || t.r < 2)
    throw std::invalid_argument("triangle labels must be >= 2");
  return Q(1, t.p) + Q(1, t.q) + Q(1, t.r);
}

} // namespace

bool is_hyperbolic(const TriangleParams& t) { return angle_sum(t) < 1; }
bool is_euclidean(const TriangleParams& t) { return angle_sum(t) == 1; }
bool is_spherical(const TriangleParams& t) { return angle_sum(t) > 1; }

Q coxeter_betti_lower_bound(const CoxeterSystem& sys) {
  Q bound = Q(sys.rank(), 2) - 1;
  for (Gen i = 1; i <= sys.rank(); ++i)
    for (Gen j = i + 1; j <= sys.rank(); ++j) {
      int m = sys.label(i, j);
      if (m != kInfinity) bound -= Q(1, m);
    }
  return bound;
}

Q triangle_euler_char(const TriangleParams& t) { return (angle_sum(t) - 1) / 2; }

Q triangle_betti(const TriangleParams& t) {
  if (is_spherical(t))
    throw std::invalid_argument("triangle_betti: spherical parameters rejected");
  return -triangle_euler_char(t); // 0 in the Euclidean case
}

Q surface_betti(int genus) {
  if (genus < 1) throw std::invalid_argument("surface_betti requires genus >= 1");
  return Q(2 * genus - 2);
}

Q betti_scale_finite_index(const Q& beta, long index) {
  if (index < 1) throw std::invalid_argument("index must be >= 1");
  return beta * index;
}

Q centralizer_betti_family(const TriangleParams& t) { return triangle_betti(t) / 2; }

CoxeterSystem family_system(int n, const TriangleParams& t) {
  if (n < 5) throw std::invalid_argument("family_system requires n >= 5");
  if (t.p < 2 || t.q < 2 || t.r < 2)
    throw std::invalid_argument("triangle labels must be >= 2");
  std::map<std::pair<Gen, Gen>, int> labels;
  labels[{1, 2}] = 2;
  labels[{1, 3}] = 2;
  labels[{1, 4}] = 2;
  labels[{2, 3}] = t.p;
  labels[{2, 4}] = t.q;
  labels[{3, 4}] = t.r;
  for (Gen j = 5; j <= n; ++j) labels[{1, j}] = kInfinity;
  for (Gen i = 2; i <= n; ++i)
    for (Gen j = i + 1; j <= n; ++j)
      if (!labels.count({i, j})) labels[{i, j}] = n * n;
  return CoxeterSystem(n, labels);
}

std::optional<std::array<int, 4>> match_family(const CoxeterSystem& sys) {
  int n = sys.rank();
  if (n < 5) return std::nullopt;
  for (Gen j : {2, 3, 4})
    if (sys.label(1, j) != 2) return std::nullopt;
  for (Gen j = 5; j <= n; ++j)
    if (sys.label(1, j) != kInfinity) return std::nullopt;
  for (Gen i = 2; i <= n; ++i)
    for (Gen j = i + 1; j <= n; ++j) {
      if (i <= 4 && j <= 4) continue; // triangle labels are free
      if (sys.label(i, j) != n * n) return std::nullopt;
    }
  return std::array<int, 4>{n, sys.label(2, 3), sys.label(2, 4), sys.label(3, 4)};
}

Q index_threshold(const Q& beta_H, const Q& beta_G) {
  if (beta_G <= 0) throw std::invalid_argument("index_threshold requires beta_G > 0");
  return beta_H / beta_G;
}

BoundReport splitting_criterion(int n, const TriangleParams& t, bool find_minimal_n) {
  if (!is_hyperbolic(t))
    throw std::invalid_argument("splitting_criterion requires a hyperbolic triangle");

  // Closed form of the family bound in n; must agree with the general bound
  // on the constructed system.
  auto closed_form = [&](int k) {
    return (Q(k) - 6 + Q(3, k) + Q(4) / (Q(k) * k)) / 2 - angle_sum(t);
  };

  BoundReport report;
  report.n = n;
  report.t = t;
  report.lower_bound_W = coxeter_betti_lower_bound(family_system(n, t));
  report.centralizer_value = centralizer_betti_family(t);

  Q chi = triangle_euler_char(t);
  if (closed_form(n) != report.lower_bound_W || -chi / 2 != report.centralizer_value)
    throw std::logic_error("family bound disagrees with its closed form");

  report.inequality_holds = report.lower_bound_W > report.centralizer_value;
  report.sufficient_criterion_holds = Q(n - 6) > 3 * chi + 2;
  if (report.lower_bound_W > 0)
    report.threshold = index_threshold(report.centralizer_value, report.lower_bound_W);

  if (find_minimal_n) {
    for (int k = 5; k <= 10'000; ++k)
      if (closed_form(k) > report.centralizer_value) {
        report.minimal_n = k;
        break;
      }
  }
  return report;
}

} // namespace cox
