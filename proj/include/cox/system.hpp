#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cox {

// Generator indices are 1-based, matching the input format.
using Gen = int;

// A word over the generators; it need not be reduced.
using Word = std::vector<Gen>;

// Coxeter matrix entry m(i,j) = order of s_i s_j. kInfinity encodes m = infinity.
constexpr int kInfinity = 0;

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A Coxeter presentation: rank n and a total symmetric label map on pairs
// {i,j}, every finite label >= 2. Immutable after construction.
class CoxeterSystem {
public:
  CoxeterSystem(int rank, const std::map<std::pair<Gen, Gen>, int>& labels);

  int rank() const { return rank_; }

  // Order of s_i s_j; label(i,i) = 1, kInfinity for unbounded order.
  int label(Gen i, Gen j) const {
    if (i < 1 || j < 1 || i > rank_ || j > rank_)
      throw std::invalid_argument("generator index out of range");
    return labels_[(i - 1) * rank_ + (j - 1)];
  }

  std::string generator_name(Gen i) const;

  bool operator==(const CoxeterSystem& other) const = default;

private:
  int rank_ = 0;
  std::vector<int> labels_; // full square matrix, row-major
};

// Line-oriented format: `rank N`, optional `default <m|inf>`, then
// `m i j <m|inf>` with 1 <= i < j <= N; `#` starts a comment. Unspecified
// pairs take the default; a missing default with unspecified pairs is an
// error. `default_override` replaces (or supplies) the file's default.
CoxeterSystem parse_system(const std::string& text,
                           std::optional<int> default_override = std::nullopt);

// Canonical rendering: every pair explicit, no default line.
// parse_system(render_system(sys)) == sys.
std::string render_system(const CoxeterSystem& sys);

// Length-first, then lexicographic on generator indices.
bool shortlex_less(const Word& a, const Word& b);

std::string word_to_string(const Word& w); // "1.2.1"; "e" for the empty word
Word word_from_string(const std::string& s); // accepts "1.2.1", "1 2 1", "1,2,1"

} // namespace cox
