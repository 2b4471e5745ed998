#include "cox/word_problem.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_set>

namespace cox {

namespace {

// Position of an adjacent equal pair, or -1.
int find_adjacent_pair(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k] == w[k + 1]) return static_cast<int>(k);
  return -1;
}

Word delete_pair(const Word& w, int k) {
  Word out;
  out.reserve(w.size() - 2);
  out.insert(out.end(), w.begin(), w.begin() + k);
  out.insert(out.end(), w.begin() + k + 2, w.end());
  return out;
}

} // namespace

WordProblem::WordProblem(CoxeterSystem sys, WordProblemLimits limits)
    : sys_(std::move(sys)), limits_(limits) {}

void WordProblem::check_index(Gen i) const {
  if (i < 1 || i > sys_.rank()) throw std::invalid_argument("generator index out of range");
}

Element WordProblem::generator(Gen i) const {
  check_index(i);
  return Element{Word{i}};
}

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Gen g : w) h = (h ^ static_cast<std::size_t>(g)) * 1099511628211ull;
    return h;
  }
};

} // namespace

WordProblem::ExploreResult WordProblem::explore(const Word& w0) const {
  if (int k = find_adjacent_pair(w0); k >= 0) return {delete_pair(w0, k), true};

  // Fast path: no braid move applies anywhere, so the closure is {w0}.
  {
    bool any_move = false;
    const int len = static_cast<int>(w0.size());
    for (int a = 0; a + 1 < len && !any_move; ++a) {
      int m = sys_.label(w0[a], w0[a + 1]);
      if (m == kInfinity || a + m > len) continue;
      any_move = true;
      for (int t = 2; t < m; ++t)
        if (w0[a + t] != ((t % 2 == 0) ? w0[a] : w0[a + 1])) {
          any_move = false;
          break;
        }
    }
    if (!any_move) return {w0, false};
  }

  std::unordered_set<Word, WordHash> seen;
  seen.reserve(32);
  const Word* min_word = &*seen.insert(w0).first;
  std::deque<const Word*> queue{min_word};
  std::size_t nodes = 1;
  const int len = static_cast<int>(w0.size());

  while (!queue.empty()) {
    const Word& w = *queue.front();
    queue.pop_front();
    for (int a = 0; a + 1 < len; ++a) {
      Gen x = w[a], y = w[a + 1];
      int m = sys_.label(x, y); // x != y: queued words carry no adjacent pair
      if (m == kInfinity || a + m > len) continue;
      bool alternates = true;
      for (int t = 2; t < m; ++t)
        if (w[a + t] != ((t % 2 == 0) ? x : y)) {
          alternates = false;
          break;
        }
      if (!alternates) continue;
      Word nb = w;
      for (int t = 0; t < m; ++t) nb[a + t] = (t % 2 == 0) ? y : x;
      // only the run's boundaries can produce a new adjacent equal pair
      if (a > 0 && nb[a - 1] == nb[a]) return {delete_pair(nb, a - 1), true};
      if (a + m < len && nb[a + m - 1] == nb[a + m]) return {delete_pair(nb, a + m - 1), true};
      auto [it, inserted] = seen.insert(std::move(nb));
      if (!inserted) continue;
      if (++nodes > limits_.closure_node_budget)
        throw BudgetError("braid-closure node budget exceeded (word length " +
                          std::to_string(len) + ")");
      if (*it < *min_word) min_word = &*it;
      queue.push_back(&*it);
    }
  }
  return {*min_word, false};
}

void WordProblem::append_gen(const Word& u, Gen s, Word& out) const {
  {
    std::shared_lock lock(memo_mutex_);
    if (auto it = memo_.find(AppendRef{&u, s}); it != memo_.end()) {
      out = it->second;
      return;
    }
  }

  Word w = u;
  w.push_back(s);
  ExploreResult first = explore(w);
  if (!first.deleted) {
    out = std::move(first.word);
  } else {
    // One deletion lands at length l(u)-1 = l(u*s), so the word is reduced;
    // a second pass picks the ShortLex form.
    ExploreResult second = explore(first.word);
    if (second.deleted)
      throw std::logic_error("word problem: deletion in a reduced word's closure");
    out = std::move(second.word);
  }

  {
    std::unique_lock lock(memo_mutex_);
    if (memo_.size() < limits_.memo_entry_cap) memo_.emplace(AppendKey{u, s}, out);
  }
}

void WordProblem::fold(Word& acc, const Word& tail, Word& scratch) const {
  for (Gen s : tail) {
    append_gen(acc, s, scratch);
    std::swap(acc, scratch);
  }
}

Element WordProblem::reduce(const Word& w) const {
  for (Gen g : w) check_index(g);
  Word cur, scratch;
  fold(cur, w, scratch);
  return Element{std::move(cur)};
}

Element WordProblem::multiply(const Element& a, const Element& b) const {
  Word cur = a.nf, scratch;
  fold(cur, b.nf, scratch);
  return Element{std::move(cur)};
}

Element WordProblem::inverse(const Element& a) const {
  Word rev(a.nf.rbegin(), a.nf.rend());
  Word cur, scratch;
  fold(cur, rev, scratch);
  return Element{std::move(cur)};
}

Element WordProblem::conjugate_reflection(const Element& g, Gen i) const {
  check_index(i);
  Word w = g.nf;
  w.push_back(i);
  w.insert(w.end(), g.nf.rbegin(), g.nf.rend());
  return reduce(w);
}

bool WordProblem::is_in_centralizer(const Element& g, Gen i) const {
  check_index(i);
  Element gs = multiply(g, generator(i));
  Element sg = multiply(generator(i), g);
  return gs == sg;
}

std::set<Word> WordProblem::reduced_expressions(const Element& t) const {
  std::set<Word> seen{t.nf};
  std::deque<Word> queue{t.nf};
  std::size_t nodes = 1;
  const int len = t.length();
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (int a = 0; a + 1 < len; ++a) {
      Gen x = w[a], y = w[a + 1];
      int m = sys_.label(x, y);
      if (m == kInfinity || a + m > len) continue;
      bool alternates = true;
      for (int t2 = 2; t2 < m; ++t2)
        if (w[a + t2] != ((t2 % 2 == 0) ? x : y)) {
          alternates = false;
          break;
        }
      if (!alternates) continue;
      Word nb = w;
      for (int t2 = 0; t2 < m; ++t2) nb[a + t2] = (t2 % 2 == 0) ? y : x;
      if (seen.insert(nb).second) {
        if (++nodes > limits_.closure_node_budget)
          throw BudgetError("braid-closure node budget exceeded (reduced expressions)");
        queue.push_back(std::move(nb));
      }
    }
  }
  return seen;
}

bool WordProblem::is_reflection(const Element& t) const {
  if (t.length() % 2 == 0) return false;
  if (!multiply(t, t).is_identity()) return false;
  for (const Word& w : reduced_expressions(t)) {
    bool pal = true;
    for (std::size_t k = 0; k < w.size() / 2; ++k)
      if (w[k] != w[w.size() - 1 - k]) {
        pal = false;
        break;
      }
    if (pal) return true;
  }
  return false;
}

} // namespace cox
