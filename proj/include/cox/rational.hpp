#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cox {

// All Betti/Euler values are exact rationals; comparisons never touch floating
// point. Decimal renderings exist for display only.
using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

inline Q q_of(long num, long den = 1) { return Q(num, den); }

// "163/672", "4", "-1/84"
std::string q_to_string(const Q& q);

// Fixed-point decimal string, rounded half away from zero. Display only.
std::string q_decimal(const Q& q, int places = 6);

} // namespace cox
