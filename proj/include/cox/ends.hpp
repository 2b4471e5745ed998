#pragma once

#include "cox/ball.hpp"

namespace cox {

// Hopf: the number of ends of a finitely generated group is 0, 1, 2 or
// infinite. MANY stands for ">= 3, hence infinitely many"; the estimator never
// claims an exact finite count above 2. INCONCLUSIVE is a result, not an
// error.
enum class EndsVerdict { Zero, One, Two, Many, Inconclusive };

const char* to_string(EndsVerdict v);

struct SchedulePoint {
  int r;
  int R; // R >= 2r
};

// Default policy: r in {r_min..r_max}, R = 2r.
std::vector<SchedulePoint> default_schedule(int r_min = 2, int r_max = 5);

struct AnnulusCount {
  int r = 0;
  int R = 0;
  // Connected components of the induced subgraph on r < distance <= R that
  // contain a sphere-R vertex.
  int components = 0;
};

struct EndsEstimate {
  std::vector<AnnulusCount> schedule;
  EndsVerdict verdict = EndsVerdict::Inconclusive;
  bool saturated = false;
  std::vector<std::string> warnings;
};

// Connected components of the induced subgraph on r < distance <= R that
// contain a sphere-R vertex (the estimator's per-point count). Requires
// R <= ball.radius.
int annulus_component_count(const Ball& ball, int r, int R);
int annulus_component_count(const CosetBall& ball, int r, int R);

// Freudenthal-Hopf estimation on Cayley balls: ZERO iff the ball saturates;
// ONE/TWO when the last two counts agree at that value; MANY when both are
// >= 3; INCONCLUSIVE otherwise. The schedule is truncated (with a warning)
// when the vertex budget cuts construction short.
EndsEstimate estimate_ends(const WordProblem& wp, const std::vector<SchedulePoint>& schedule,
                           BallLimits limits = {});

// Same estimation on the coset graph of H. Finite-looking oracles draw a
// warning: the coset-graph convention for finite H differs from e(G).
EndsEstimate estimate_relative_ends(const WordProblem& wp, const MembershipOracle& H,
                                    const std::vector<SchedulePoint>& schedule,
                                    BallLimits limits = {});

} // namespace cox
