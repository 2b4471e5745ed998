#pragma once

#include "cox/ball.hpp"

#include <array>
#include <optional>

namespace cox {

enum class Side { Plus, Minus };

inline Side opposite(Side s) { return s == Side::Plus ? Side::Minus : Side::Plus; }
const char* to_string(Side s);

// One side of the wall of a reflection t. The identity side is Plus:
// w lies in A+ iff l(t w) > l(w). Membership is exact; no ball is needed.
struct Halfspace {
  Element t;
  Side side = Side::Plus;
};

// Side of w relative to wall(t). l(t w) != l(w) always, so this is total.
Side halfspace_membership(const WordProblem& wp, const Element& t, const Element& w);

// Validates that t is a reflection.
Halfspace positive_halfspace(const WordProblem& wp, const Element& t);

bool halfspace_contains(const WordProblem& wp, const Halfspace& h, const Element& w);

// An in-ball edge {source, source*s}; source is the lower vertex index.
struct WallEdge {
  int source = 0;
  Gen gen = 0;
  int target = 0;
};

// All in-ball edges {w, ws} with w s w^-1 = t, found via the equivalent
// equation t(ws) = w. The endpoints of such an edge get opposite halfspace
// signs, and only they do.
std::vector<WallEdge> wall_edges(const WordProblem& wp, const Ball& ball, const Element& t);

// Desk-scale evidence that the halfspaces of t = s_i behave like almost
// invariant sets over the wall stabilizer, inside B_R:
//  (a) both halfspaces contain vertices at graph distance >= R-1 from every
//      wall edge;
//  (b) within B_{R-1}, the symmetric difference A+ Δ (A+ · s) consists exactly
//      of the endpoints of the s-labelled wall edges, for every generator s;
//  (c) every h in C(t) ∩ B_{R/2} maps wall edges to wall edges (within range).
// A failed check is a report field, not an exception.
struct WallCertificate {
  Gen gen = 0;
  int radius = 0;
  int wall_edge_count = 0;
  bool deep_vertices_both_sides = false; // (a)
  int deepest_plus = -1;                 // max over A+ of distance to the wall
  int deepest_minus = -1;
  bool boundary_matches_wall = false;    // (b)
  bool stabilizer_preserves_wall = false; // (c)
  int stabilizer_elements_checked = 0;
  int stabilizer_edges_checked = 0;

  bool all_pass() const {
    return deep_vertices_both_sides && boundary_matches_wall && stabilizer_preserves_wall;
  }
};

WallCertificate wall_certificate(const WordProblem& wp, Gen i, int radius, BallLimits limits = {});

// Corner order: A∩gA, A∩gA*, A*∩gA, A*∩gA*.
struct CornerFlag {
  bool nonempty = false;
  std::optional<Word> witness; // ShortLex-least witness vertex
};

struct CrossingEntry {
  Word g;
  std::array<CornerFlag, 4> corners;
  bool crosses = false; // all four corners nonempty
  bool exact = false;   // emptiness provably exact (g in {e, t}), not radius-relative
};

// Four-corner singularity scan for A = A+(s_i): for every g in B_R, the
// corner nonemptiness flags over witnesses v in B_R, where v in gA iff
// g^-1 v in A. CROSSES iff all four corners meet B_R; emptiness is otherwise
// only NESTED-AT-THIS-RADIUS.
struct CrossingReport {
  Gen gen = 0;
  int radius = 0;
  std::vector<CrossingEntry> entries; // in ball vertex order
  int crosses_count = 0;

  const CrossingEntry* entry_for(const Word& g) const;
};

CrossingReport crossing_obstruction(const WordProblem& wp, Gen i, int radius,
                                    BallLimits limits = {});

} // namespace cox
