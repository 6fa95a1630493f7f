#pragma once

#include <string>
#include <vector>

#include "mq/ints.hpp"

namespace mq {

// One-variable integer Laurent polynomial in canonical form: the coefficient
// array has nonzero first and last entries; the zero polynomial is the empty
// array anchored at exponent 0.  Values are immutable; all operations are
// pure functions.
class Laurent {
public:
  Laurent() = default;  // zero
  Laurent(const Int& constant);
  Laurent(long low, std::vector<Int> coeffs);  // trims to canonical form

  static Laurent t_power(long e, const Int& c = Int(1));

  bool is_zero() const { return coeff_.empty(); }
  long low() const { return low_; }
  long high() const { return coeff_.empty() ? 0 : low_ + long(coeff_.size()) - 1; }
  long degree_span() const { return coeff_.empty() ? 0 : long(coeff_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeff_; }
  Int coeff_at(long e) const;
  const Int& leading() const;  // coefficient of t^high (throws on zero poly)

  Laurent operator-() const;
  friend Laurent operator+(const Laurent&, const Laurent&);
  friend Laurent operator-(const Laurent&, const Laurent&);
  friend Laurent operator*(const Laurent&, const Laurent&);
  Laurent times_t_power(long e) const;
  friend bool operator==(const Laurent&, const Laurent&) = default;

  Int evaluate_at(const Int& x) const;  // error: x = 0 with negative exponents
  Int content() const;                  // gcd of coefficients, nonnegative
  Laurent primitive_part() const;
  // Strips a unit +-t^k: lowest exponent 0, positive leading coefficient.
  Laurent unit_normalized() const;
  Laurent substitute_t_inverse() const;  // t -> t^-1

  // Text form: terms `c*t^k` joined by +/-, ascending exponents, coefficient
  // 1 and the exponents 0, 1 abbreviated: "1 - t + t^2", "2*t^-1 + 3".
  std::string str() const;
  static Laurent parse(const std::string& text);

private:
  long low_ = 0;
  std::vector<Int> coeff_;
};

// Primitive integer generator of the gcd ideal in Q[t, t^-1], returned with
// lowest exponent 0 and positive leading coefficient.  Errors if both zero.
Laurent laurent_gcd_over_rationals(const Laurent& f, const Laurent& g);

bool is_prime(const Int& p);

// Coefficient reduction into [0, p); errors unless p is prime.
Laurent laurent_mod_p(const Laurent& f, const Int& p);

// Monic generator of (f, g) in F_p[t, t^-1], t-power stripped (lowest
// exponent 0).  Errors unless p is prime or if both reduce to zero.
Laurent gcd_mod_p(const Laurent& f, const Laurent& g, const Int& p);

// Exact determinant of a square Laurent matrix.  Dispatches to cofactor
// expansion for dimension <= 4 and Bareiss fraction-free elimination above.
Laurent laurent_matrix_det(const std::vector<std::vector<Laurent>>& m);
Laurent laurent_det_cofactor(const std::vector<std::vector<Laurent>>& m);
Laurent laurent_det_bareiss(const std::vector<std::vector<Laurent>>& m);

}  // namespace mq
