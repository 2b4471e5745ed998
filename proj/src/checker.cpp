#include "cox/checker.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cox {

namespace {

void validate_profile_radii(const std::vector<int>& radii) {
  if (radii.empty()) throw std::invalid_argument("profile needs at least one radius");
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (radii[k] < 0) throw std::invalid_argument("profile radius must be >= 0");
    if (k > 0 && radii[k] <= radii[k - 1])
      throw std::invalid_argument("profile radii must be strictly increasing");
  }
}

} // namespace

IntersectionProfile conjugate_intersection_profile(const WordProblem& wp,
                                                   const MembershipOracle& H, const Element& g,
                                                   const std::vector<int>& radii,
                                                   BallLimits limits) {
  validate_profile_radii(radii);
  Ball ball = build_ball(wp, radii.back(), limits);
  return conjugate_intersection_profile(wp, H, g, radii, ball);
}

IntersectionProfile conjugate_intersection_profile(const WordProblem& wp,
                                                   const MembershipOracle& H, const Element& g,
                                                   const std::vector<int>& radii,
                                                   const Ball& ball) {
  validate_profile_radii(radii);
  if (ball.radius < radii.back())
    throw std::invalid_argument("profile ball is smaller than the largest radius");
  Element ginv = wp.inverse(g);

  IntersectionProfile profile;
  profile.g = g.nf;
  std::size_t next = 0;
  long count = 0;
  int limit = ball.prefix_size(radii.back());
  for (int v = 0; v < limit; ++v) {
    while (next < radii.size() && ball.distance[v] > radii[next])
      profile.counts.emplace_back(radii[next++], count);
    const Element& h = ball.vertices[v];
    if (H.contains(h) && H.contains(wp.multiply(wp.multiply(ginv, h), g))) ++count;
  }
  while (next < radii.size()) profile.counts.emplace_back(radii[next++], count);

  profile.stabilized = profile.counts.size() >= 2 &&
                       profile.counts.back().second ==
                           profile.counts[profile.counts.size() - 2].second;
  return profile;
}

ReflectionReport analyze_reflection(const WordProblem& wp, Gen i, const AnalysisParams& params) {
  if (i < 1 || i > wp.system().rank())
    throw std::invalid_argument("generator index out of range");

  ReflectionReport report;
  report.gen = i;
  report.general_lower_bound = coxeter_betti_lower_bound(wp.system());
  if (auto family = match_family(wp.system())) {
    auto [n, p, q, r] = *family;
    report.family_bounds = splitting_criterion(n, TriangleParams{p, q, r}, true);
  }

  MembershipOracle H = centralizer_oracle(wp, i);

  // Finite groups saturate a small ball; no geometry beyond that.
  try {
    Ball probe = detail::build_ball_capped(wp, params.cert_radius, params.ball_limits);
    report.finite_group = probe.saturated;
  } catch (const std::exception& e) {
    report.skipped.emplace_back(std::string("finiteness probe: ") + e.what());
  }

  std::vector<SchedulePoint> schedule;
  for (int r : params.ends_radii) schedule.push_back({r, 2 * r});
  try {
    report.relative_ends = estimate_relative_ends(wp, H, schedule, params.ball_limits);
  } catch (const std::exception& e) {
    report.skipped.emplace_back(std::string("relative ends: ") + e.what());
  }

  if (report.finite_group) {
    report.skipped.emplace_back("wall certificate: group saturated at probe radius");
    report.skipped.emplace_back("crossing scan: group saturated at probe radius");
    report.skipped.emplace_back("intersection profiles: group saturated at probe radius");
    return report;
  }

  try {
    report.certificate = wall_certificate(wp, i, params.cert_radius, params.ball_limits);
  } catch (const std::exception& e) {
    report.skipped.emplace_back(std::string("wall certificate: ") + e.what());
  }

  try {
    CrossingReport crossing =
        crossing_obstruction(wp, i, params.crossing_radius, params.ball_limits);
    report.crossing =
        CrossingSummary{crossing.radius, static_cast<int>(crossing.entries.size()),
                        crossing.crosses_count};
  } catch (const std::exception& e) {
    report.skipped.emplace_back(std::string("crossing scan: ") + e.what());
  }

  try {
    Ball sample_ball = build_ball(wp, 3, params.ball_limits);
    std::vector<Element> sample;
    for (int v = 0; v < sample_ball.size() && sample.size() < params.profile_sample_cap; ++v)
      if (!H.contains(sample_ball.vertices[v])) sample.push_back(sample_ball.vertices[v]);
    Ball profile_ball = build_ball(wp, params.profile_radii.back(), params.ball_limits);
    for (const Element& g : sample)
      report.profiles.push_back(
          conjugate_intersection_profile(wp, H, g, params.profile_radii, profile_ball));
  } catch (const std::exception& e) {
    report.skipped.emplace_back(std::string("intersection profiles: ") + e.what());
  }
  return report;
}

CoxeterSystem eight_generator_example(int default_label) {
  if (default_label < 2) throw std::invalid_argument("default label must be >= 2");
  std::map<std::pair<Gen, Gen>, int> labels;
  for (Gen j : {4, 5, 6}) labels[{1, j}] = 2;
  for (Gen j : {2, 3, 7, 8}) labels[{1, j}] = kInfinity;
  labels[{4, 5}] = 3;
  labels[{4, 6}] = 3;
  labels[{5, 6}] = 3;
  for (Gen i = 2; i <= 8; ++i)
    for (Gen j = i + 1; j <= 8; ++j)
      if (!labels.count({i, j})) labels[{i, j}] = default_label;
  return CoxeterSystem(8, labels);
}

namespace {

void add_item(PaperExamplesReport& report, const std::string& name, const std::string& expected,
              const std::string& actual) {
  report.items.push_back({name, expected, actual, expected == actual});
}

} // namespace

PaperExamplesReport verify_paper_examples() {
  PaperExamplesReport report;
  const TriangleParams t237{2, 3, 7};

  add_item(report, "triangle-2-3-7",
           "beta=1/84 chi=-1/84",
           "beta=" + q_to_string(triangle_betti(t237)) +
               " chi=" + q_to_string(triangle_euler_char(t237)));

  add_item(report, "klein-quartic",
           "336*beta(T)=4 surface_betti(3)=4",
           "336*beta(T)=" + q_to_string(betti_scale_finite_index(triangle_betti(t237), 336)) +
               " surface_betti(3)=" + q_to_string(surface_betti(3)));

  {
    BoundReport at8 = splitting_criterion(8, t237, true);
    BoundReport at7 = splitting_criterion(7, t237, false);
    std::ostringstream actual;
    actual << "minimal_n=" << (at8.minimal_n ? std::to_string(*at8.minimal_n) : "none")
           << " n7_sufficient=" << (at7.sufficient_criterion_holds ? "true" : "false")
           << " 3chi+2=" << q_to_string(3 * triangle_euler_char(t237) + 2);
    add_item(report, "family-2-3-7-minimal-n", "minimal_n=8 n7_sufficient=false 3chi+2=55/28",
             actual.str());

    std::ostringstream bound;
    bound << "lower=" << q_to_string(at8.lower_bound_W)
          << " centralizer=" << q_to_string(at8.centralizer_value)
          << " inequality=" << (at8.inequality_holds ? "true" : "false");
    add_item(report, "family-n8-2-3-7", "lower=163/672 centralizer=1/168 inequality=true",
             bound.str());
  }

  {
    Q bound = coxeter_betti_lower_bound(eight_generator_example(51));
    add_item(report, "example-1-labels-51", "lower=5/34 positive=true",
             "lower=" + q_to_string(bound) + " positive=" + (bound > 0 ? "true" : "false"));
  }

  add_item(report, "index-threshold-klein",
           "threshold=4/163",
           "threshold=" + q_to_string(index_threshold(Q(1, 168), Q(163, 672))));

  report.all_pass = std::all_of(report.items.begin(), report.items.end(),
                                [](const PaperExampleResult& r) { return r.pass; });
  return report;
}

} // namespace cox
