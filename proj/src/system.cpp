#include "cox/system.hpp"

#include <algorithm>
#include <sstream>

namespace cox {

CoxeterSystem::CoxeterSystem(int rank, const std::map<std::pair<Gen, Gen>, int>& labels)
    : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  labels_.assign(static_cast<std::size_t>(rank) * rank, -1);
  for (Gen i = 1; i <= rank; ++i) labels_[(i - 1) * rank + (i - 1)] = 1;
  for (const auto& [pair, m] : labels) {
    auto [i, j] = pair;
    if (i < 1 || j < 1 || i > rank || j > rank || i >= j)
      throw std::invalid_argument("label pair out of range");
    if (m != kInfinity && m < 2)
      throw std::invalid_argument("finite label must be >= 2");
    labels_[(i - 1) * rank + (j - 1)] = m;
    labels_[(j - 1) * rank + (i - 1)] = m;
  }
  for (int v : labels_)
    if (v == -1) throw std::invalid_argument("label map is not total");
}

std::string CoxeterSystem::generator_name(Gen i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("generator index out of range");
  return "s" + std::to_string(i);
}

namespace {

// Returns kInfinity for "inf", the integer value otherwise; -1 on junk.
int parse_label_token(const std::string& tok) {
  if (tok == "inf") return kInfinity;
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return -1;
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    return -1;
  }
}

} // namespace

CoxeterSystem parse_system(const std::string& text, std::optional<int> default_override) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int rank = -1;
  std::optional<int> default_label = default_override;
  bool saw_pair_line = false;
  std::map<std::pair<Gen, Gen>, int> labels;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string directive;
    if (!(line >> directive)) continue; // blank line
    if (directive == "rank") {
      if (rank != -1) throw ParseError(lineno, "duplicate rank line");
      if (!(line >> rank)) throw ParseError(lineno, "expected `rank N`");
      if (rank < 1) throw ParseError(lineno, "rank must be >= 1");
    } else if (directive == "default") {
      if (rank == -1) throw ParseError(lineno, "`default` before `rank`");
      if (saw_pair_line) throw ParseError(lineno, "`default` must precede `m` lines");
      std::string tok;
      if (!(line >> tok)) throw ParseError(lineno, "expected `default <m|inf>`");
      int m = parse_label_token(tok);
      if (m == -1) throw ParseError(lineno, "bad label `" + tok + "`");
      if (m != kInfinity && m < 2) throw ParseError(lineno, "label must be >= 2 or inf");
      if (!default_override) default_label = m;
    } else if (directive == "m") {
      if (rank == -1) throw ParseError(lineno, "`m` before `rank`");
      saw_pair_line = true;
      int i, j;
      std::string tok;
      if (!(line >> i >> j >> tok)) throw ParseError(lineno, "expected `m i j <m|inf>`");
      if (i < 1 || j < 1 || i > rank || j > rank)
        throw ParseError(lineno, "generator index out of range");
      if (i >= j) throw ParseError(lineno, "pair must satisfy i < j");
      int m = parse_label_token(tok);
      if (m == -1) throw ParseError(lineno, "bad label `" + tok + "`");
      if (m != kInfinity && m < 2) throw ParseError(lineno, "label must be >= 2 or inf");
      if (!labels.emplace(std::make_pair(i, j), m).second)
        throw ParseError(lineno, "duplicate pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    } else {
      throw ParseError(lineno, "unknown directive `" + directive + "`");
    }
    std::string trailing;
    if (line >> trailing) throw ParseError(lineno, "trailing token `" + trailing + "`");
  }

  if (rank == -1) throw ParseError(lineno, "missing `rank` line");
  for (Gen i = 1; i <= rank; ++i)
    for (Gen j = i + 1; j <= rank; ++j)
      if (!labels.count({i, j})) {
        if (!default_label)
          throw ParseError(lineno, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") unspecified and no default given");
        labels.emplace(std::make_pair(i, j), *default_label);
      }
  return CoxeterSystem(rank, labels);
}

std::string render_system(const CoxeterSystem& sys) {
  std::ostringstream out;
  out << "rank " << sys.rank() << "\n";
  for (Gen i = 1; i <= sys.rank(); ++i)
    for (Gen j = i + 1; j <= sys.rank(); ++j) {
      out << "m " << i << " " << j << " ";
      int m = sys.label(i, j);
      if (m == kInfinity)
        out << "inf";
      else
        out << m;
      out << "\n";
    }
  return out.str();
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ".";
    s += std::to_string(w[k]);
  }
  return s;
}

Word word_from_string(const std::string& s) {
  Word w;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur == "e") { // the empty word
      cur.clear();
      return;
    }
    if (cur.find('e') != std::string::npos)
      throw std::invalid_argument("bad word token `" + cur + "`");
    w.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == '.' || c == ',' || c == ' ' || c == '\t')
      flush();
    else if ((c >= '0' && c <= '9') || c == 'e')
      cur += c;
    else
      throw std::invalid_argument("bad word character `" + std::string(1, c) + "`");
  }
  flush();
  return w;
}

} // namespace cox
