#pragma once

#include "cox/bounds.hpp"
#include "cox/ends.hpp"
#include "cox/walls.hpp"

namespace cox {

// Growth probe for H ∩ H^g: counts h in B_r with H(h) and H(g^-1 h g).
struct IntersectionProfile {
  Word g;
  std::vector<std::pair<int, long>> counts; // (r, count), non-decreasing in r
  bool stabilized = false;                  // last two counts equal
};

IntersectionProfile conjugate_intersection_profile(const WordProblem& wp,
                                                   const MembershipOracle& H, const Element& g,
                                                   const std::vector<int>& radii,
                                                   BallLimits limits = {});

// Same, over a prebuilt ball of radius >= radii.back(); used when profiling
// many conjugators against one subgroup.
IntersectionProfile conjugate_intersection_profile(const WordProblem& wp,
                                                   const MembershipOracle& H, const Element& g,
                                                   const std::vector<int>& radii,
                                                   const Ball& ball);

struct AnalysisParams {
  std::vector<int> ends_radii = {2, 3}; // r values; R = 2r
  int cert_radius = 4;
  int crossing_radius = 3;
  std::vector<int> profile_radii = {2, 3, 4};
  // Profile sample: all g of length <= 3 outside H, ShortLex order, capped.
  std::size_t profile_sample_cap = 50;
  BallLimits ball_limits;
};

struct CrossingSummary {
  int radius = 0;
  int tested = 0;
  int crosses_count = 0;
};

// Checkable hypotheses gathered per reflection: relative-ends evidence, wall
// certificate, singularity scan, Betti bounds, intersection profiles. The
// report never concludes "splits"; emptiness claims stay radius-relative.
// Sub-analyses that fail are recorded with reasons, not thrown.
struct ReflectionReport {
  Gen gen = 0;
  bool finite_group = false;
  std::optional<EndsEstimate> relative_ends;
  std::optional<WallCertificate> certificate;
  std::optional<CrossingSummary> crossing;
  Q general_lower_bound;                  // family-validated formula on the input system
  std::optional<BoundReport> family_bounds; // when the system matches the W_n family
  std::vector<IntersectionProfile> profiles;
  std::vector<std::string> skipped; // "<analysis>: <reason>"
};

ReflectionReport analyze_reflection(const WordProblem& wp, Gen i,
                                    const AnalysisParams& params = {});

// The worked examples as a fixed preset suite with stored expected values.
struct PaperExampleResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct PaperExamplesReport {
  std::vector<PaperExampleResult> items;
  bool all_pass = false;
};

PaperExamplesReport verify_paper_examples();

// The 8-generator example: s_1 commutes with s_4, s_5, s_6; products of s_1
// with s_2, s_3, s_7, s_8 have infinite order; s_4, s_5, s_6 pairwise carry 3;
// the remaining 18 pairs carry `default_label` (stand-in for "finite > 50").
CoxeterSystem eight_generator_example(int default_label = 51);

} // namespace cox
