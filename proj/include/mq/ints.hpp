#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "mq/error.hpp"

namespace mq {

// Arbitrary-precision integer used throughout; fixed-width arithmetic would
// overflow on pivots of Wirtinger-sized normal form computations.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// Floor division and the matching remainder (operator/ truncates toward zero).
inline Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int fmod(const Int& a, const Int& b) { return a - fdiv(a, b) * b; }

inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) throw internal_error("exact_div: not divisible");
  return a / b;
}

inline Int ceil_div(const Int& a, const Int& b) { return -fdiv(-a, b); }

}  // namespace mq
