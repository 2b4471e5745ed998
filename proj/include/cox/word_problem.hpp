#pragma once

#include "cox/system.hpp"

#include <set>
#include <shared_mutex>
#include <unordered_map>

namespace cox {

// Raised when a combinatorial search exceeds its configured budget. Always an
// explicit error, never a silent wrong answer.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A group element, carried by its normal form: the ShortLex-least reduced word
// (all reduced words of an element share a length, so least-lexicographic
// among them is ShortLex-least overall).
struct Element {
  Word nf;

  int length() const { return static_cast<int>(nf.size()); }
  bool is_identity() const { return nf.empty(); }
  friend bool operator==(const Element&, const Element&) = default;
};

inline bool shortlex_less(const Element& a, const Element& b) { return shortlex_less(a.nf, b.nf); }

struct WordProblemLimits {
  // Nodes per braid-closure search (one search per normal-form step).
  std::size_t closure_node_budget = 2'000'000;
  // Memo entries kept; past the cap results are recomputed, never wrong.
  // Bounds memory on long runs where conjugation folds spray one-shot words.
  std::size_t memo_entry_cap = 4'000'000;
};

// Tits' combinatorial solution of the word problem: a word is reduced iff no
// member of its braid closure contains an adjacent equal pair, and two reduced
// words represent the same element iff they are connected by braid moves
// alone. Normal forms are computed letter by letter; each step explores one
// braid closure and is memoized. The memo table behaves as if absent: all
// operations are pure and safe to call from multiple threads.
class WordProblem {
public:
  explicit WordProblem(CoxeterSystem sys, WordProblemLimits limits = {});

  const CoxeterSystem& system() const { return sys_; }
  const WordProblemLimits& limits() const { return limits_; }

  Element identity() const { return Element{}; }
  Element generator(Gen i) const;

  // Normal form of an arbitrary word.
  Element reduce(const Word& w) const;

  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;

  // g s_i g^-1, always a reflection (odd length).
  Element conjugate_reflection(const Element& g, Gen i) const;

  // True iff g s_i g^-1 == s_i; computed via the equivalent commutation test
  // g s_i == s_i g, which keeps intermediate words short.
  bool is_in_centralizer(const Element& g, Gen i) const;

  // Every reduced word of t, i.e. its braid closure.
  std::set<Word> reduced_expressions(const Element& t) const;

  // True iff t is a conjugate of a generator: an odd-length involution whose
  // closure contains a palindromic reduced word.
  bool is_reflection(const Element& t) const;

private:
  struct AppendKey {
    Word u;
    Gen s;
  };
  // Reference view of a key: lookups never copy the word.
  struct AppendRef {
    const Word* u;
    Gen s;
  };
  static std::size_t hash_append(const Word& u, Gen s) {
    std::size_t h = 1469598103934665603ull;
    for (Gen g : u) h = (h ^ static_cast<std::size_t>(g)) * 1099511628211ull;
    return (h ^ static_cast<std::size_t>(s + 0x9e37)) * 1099511628211ull;
  }
  struct AppendHash {
    using is_transparent = void;
    std::size_t operator()(const AppendKey& k) const { return hash_append(k.u, k.s); }
    std::size_t operator()(const AppendRef& r) const { return hash_append(*r.u, r.s); }
  };
  struct AppendEq {
    using is_transparent = void;
    bool operator()(const AppendKey& a, const AppendKey& b) const {
      return a.s == b.s && a.u == b.u;
    }
    bool operator()(const AppendRef& a, const AppendKey& b) const {
      return a.s == b.s && *a.u == b.u;
    }
    bool operator()(const AppendKey& a, const AppendRef& b) const {
      return a.s == b.s && a.u == *b.u;
    }
  };

  struct ExploreResult {
    Word word;    // shortened word if deleted, else lexicographic min of the closure
    bool deleted; // an adjacent equal pair was found and removed
  };

  void check_index(Gen i) const;

  // Braid-closure search from w0. Stops at the first word containing an
  // adjacent equal pair (returning it with the pair deleted); if none exists
  // the closure is fully enumerated and its minimum returned.
  ExploreResult explore(const Word& w0) const;

  // out = normal form of u * s, for reduced u; memoized. `out` is a scratch
  // buffer reused across calls, distinct from u.
  void append_gen(const Word& u, Gen s, Word& out) const;

  // Folds `tail` onto the reduced word in `acc` through append_gen.
  void fold(Word& acc, const Word& tail, Word& scratch) const;

  CoxeterSystem sys_;
  WordProblemLimits limits_;
  mutable std::unordered_map<AppendKey, Word, AppendHash, AppendEq> memo_;
  mutable std::shared_mutex memo_mutex_;
};

} // namespace cox
