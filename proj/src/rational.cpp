#include "cox/rational.hpp"

namespace cox {

std::string q_to_string(const Q& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

std::string q_decimal(const Q& q, int places) {
  Z num = numerator(q);
  const Z& den = denominator(q);
  bool neg = num < 0;
  if (neg) num = -num;
  Z scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Z scaled = num * scale;
  Z quot = scaled / den;
  if ((scaled % den) * 2 >= den) ++quot;
  Z ip = quot / scale;
  Z fp = quot % scale;
  std::string out;
  if (neg && quot != 0) out += "-";
  out += ip.str();
  if (places > 0) {
    std::string frac = fp.str();
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    out += ".";
    out += frac;
  }
  return out;
}

} // namespace cox
