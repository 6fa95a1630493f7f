#include "mq/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mq {

Laurent::Laurent(const Int& constant) {
  if (constant != 0) coeff_.push_back(constant);
}

Laurent::Laurent(long low, std::vector<Int> coeffs) : low_(low), coeff_(std::move(coeffs)) {
  std::size_t head = 0;
  while (head < coeff_.size() && coeff_[head] == 0) ++head;
  if (head == coeff_.size()) {
    coeff_.clear();
    low_ = 0;
    return;
  }
  std::size_t tail = coeff_.size();
  while (tail > head && coeff_[tail - 1] == 0) --tail;
  coeff_ = std::vector<Int>(coeff_.begin() + head, coeff_.begin() + tail);
  low_ += long(head);
}

Laurent Laurent::t_power(long e, const Int& c) { return Laurent(e, {c}); }

Int Laurent::coeff_at(long e) const {
  if (coeff_.empty() || e < low_ || e > high()) return 0;
  return coeff_[std::size_t(e - low_)];
}

const Int& Laurent::leading() const {
  if (coeff_.empty()) throw internal_error("leading coefficient of zero polynomial");
  return coeff_.back();
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& c : out.coeff_) c = -c;
  return out;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long low = std::min(a.low_, b.low_);
  long high = std::max(a.high(), b.high());
  std::vector<Int> c(std::size_t(high - low + 1), Int(0));
  for (std::size_t i = 0; i < a.coeff_.size(); ++i) c[std::size_t(a.low_ - low) + i] += a.coeff_[i];
  for (std::size_t i = 0; i < b.coeff_.size(); ++i) c[std::size_t(b.low_ - low) + i] += b.coeff_[i];
  return Laurent(low, std::move(c));
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent();
  std::vector<Int> c(a.coeff_.size() + b.coeff_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
    if (a.coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeff_.size(); ++j) c[i + j] += a.coeff_[i] * b.coeff_[j];
  }
  return Laurent(a.low_ + b.low_, std::move(c));
}

Laurent Laurent::times_t_power(long e) const {
  if (is_zero()) return Laurent();
  return Laurent(low_ + e, coeff_);
}

Int Laurent::evaluate_at(const Int& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (low_ < 0) throw parse_error("cannot evaluate at 0: negative exponent present");
    return low_ == 0 ? coeff_.front() : Int(0);
  }
  // Horner on the polynomial part, then the t^low factor.
  Int acc = 0;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
  if (low_ > 0) {
    for (long i = 0; i < low_; ++i) acc *= x;
  } else if (low_ < 0) {
    if (x != 1 && x != -1)
      throw parse_error("cannot evaluate at non-unit with negative exponent");
    if (x == -1 && (low_ % 2 != 0)) acc = -acc;
  }
  return acc;
}

Int Laurent::content() const {
  Int g = 0;
  for (const auto& c : coeff_) g = gcd_int(g, c);
  return g;
}

Laurent Laurent::primitive_part() const {
  if (is_zero()) return Laurent();
  Int g = content();
  std::vector<Int> c = coeff_;
  for (auto& x : c) x /= g;
  return Laurent(low_, std::move(c));
}

Laurent Laurent::unit_normalized() const {
  if (is_zero()) return Laurent();
  std::vector<Int> c = coeff_;
  if (c.back() < 0)
    for (auto& x : c) x = -x;
  return Laurent(0, std::move(c));
}

Laurent Laurent::substitute_t_inverse() const {
  if (is_zero()) return Laurent();
  std::vector<Int> c(coeff_.rbegin(), coeff_.rend());
  return Laurent(-high(), std::move(c));
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    const Int& c = coeff_[i];
    if (c == 0) continue;
    long e = low_ + long(i);
    Int a = abs_int(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

Laurent Laurent::parse(const std::string& text) {
  // terms of the form [c][*]t[^e], split on top-level +/-
  Laurent acc;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  if (i == text.size()) throw parse_error("empty polynomial text");
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    int sign = 1;
    while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip_ws();
    }
    if (i == text.size()) {
      if (any) throw parse_error("dangling sign in polynomial text");
      break;
    }
    Int coeff = 1;
    bool have_coeff = false;
    if (std::isdigit((unsigned char)text[i])) {
      std::string digits;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) digits += text[i++];
      coeff = Int(digits);
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    long expo = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      expo = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        std::string digits;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) digits += text[i++];
        if (digits.empty()) throw parse_error("missing exponent after ^");
        expo = std::stol(digits);
        if (neg) expo = -expo;
      }
    } else if (!have_coeff) {
      throw parse_error("bad polynomial term near \"" + text.substr(i) + "\"");
    }
    acc = acc + Laurent::t_power(expo, sign < 0 ? Int(-coeff) : coeff);
    any = true;
    skip_ws();
  }
  if (!any) throw parse_error("empty polynomial text");
  return acc;
}

// ---------------------------------------------------------------------------
// polynomial helpers on plain coefficient arrays (lowest exponent 0)

namespace {

using Poly = std::vector<Int>;  // trimmed: back() != 0 unless empty

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_of(const Laurent& f) { return trim(f.coeffs()); }

Poly scale(Poly a, const Int& c) {
  for (auto& x : a) x *= c;
  return trim(std::move(a));
}

Int poly_content(const Poly& p) {
  Int g = 0;
  for (const auto& c : p) g = gcd_int(g, c);
  return g;
}

Poly poly_primitive(Poly p) {
  if (p.empty()) return p;
  Int g = poly_content(p);
  for (auto& c : p) c /= g;
  return p;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, computed over Z.
Poly prem(Poly a, const Poly& b) {
  if (b.empty()) throw internal_error("prem by zero polynomial");
  long da = long(a.size()) - 1, db = long(b.size()) - 1;
  if (da < db) return a;
  const Int& lb = b.back();
  for (long k = da; k >= db; --k) {
    a = scale(std::move(a), lb);
    if (long(a.size()) - 1 < k) continue;
    Int q = a[std::size_t(k)];  // divisible by construction after scaling
    q /= lb;
    for (long j = 0; j <= db; ++j) a[std::size_t(k - db + j)] -= q * b[std::size_t(j)];
    a = trim(std::move(a));
  }
  return a;
}

}  // namespace

Laurent laurent_gcd_over_rationals(const Laurent& f, const Laurent& g) {
  if (f.is_zero() && g.is_zero())
    throw parse_error("gcd of two zero polynomials is undefined");
  if (f.is_zero()) return g.primitive_part().unit_normalized();
  if (g.is_zero()) return f.primitive_part().unit_normalized();
  Poly a = poly_primitive(poly_of(f));
  Poly b = poly_primitive(poly_of(g));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Poly r = poly_primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return Laurent(0, std::move(a)).unit_normalized();
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

Int mod_inverse(const Int& a, const Int& p) {
  // extended Euclid; p prime, a not 0 mod p
  Int r0 = p, r1 = fmod(a, p), s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw internal_error("mod_inverse: not invertible");
  return fmod(s0, p);
}

Poly poly_mod(const Poly& a, const Int& p) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = fmod(a[i], p);
  return trim(std::move(out));
}

Poly make_monic_mod(Poly a, const Int& p) {
  if (a.empty()) return a;
  Int inv = mod_inverse(a.back(), p);
  for (auto& c : a) c = fmod(c * inv, p);
  return a;
}

}  // namespace

Laurent laurent_mod_p(const Laurent& f, const Int& p) {
  if (!is_prime(p)) throw parse_error("modulus is not prime");
  if (f.is_zero()) return Laurent();
  std::vector<Int> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fmod(f.coeffs()[i], p);
  return Laurent(f.low(), std::move(c));
}

Laurent gcd_mod_p(const Laurent& f, const Laurent& g, const Int& p) {
  if (!is_prime(p)) throw parse_error("modulus is not prime");
  Poly a = poly_mod(poly_of(f), p);
  Poly b = poly_mod(poly_of(g), p);
  // strip powers of t (units in the Laurent ring over F_p)
  auto strip = [](Poly x) {
    std::size_t i = 0;
    while (i < x.size() && x[i] == 0) ++i;
    return Poly(x.begin() + long(i), x.end());
  };
  a = strip(std::move(a));
  b = strip(std::move(b));
  if (a.empty() && b.empty())
    throw parse_error("gcd_mod_p: both polynomials vanish mod p");
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    b = make_monic_mod(std::move(b), p);
    // remainder of a by monic b over F_p
    Poly r = a;
    long db = long(b.size()) - 1;
    while (!r.empty() && long(r.size()) - 1 >= db) {
      Int q = r.back();
      long shift = long(r.size()) - 1 - db;
      for (long j = 0; j <= db; ++j)
        r[std::size_t(shift + j)] = fmod(r[std::size_t(shift + j)] - q * b[std::size_t(j)], p);
      r = trim(std::move(r));
    }
    a = std::move(b);
    b = strip(std::move(r));
  }
  a = make_monic_mod(std::move(a), p);
  return Laurent(0, std::move(a));
}

// ---------------------------------------------------------------------------
// determinants

Laurent laurent_det_cofactor(const std::vector<std::vector<Laurent>>& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw parse_error("determinant of non-square matrix");
  if (n == 0) return Laurent(Int(1));
  if (n == 1) return m[0][0];
  Laurent acc;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[0][k].is_zero()) continue;
    std::vector<std::vector<Laurent>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) minor[i - 1].push_back(m[i][j]);
    Laurent term = m[0][k] * laurent_det_cofactor(minor);
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

namespace {

// Exact polynomial division (throws if not exact); operands as Laurent with
// arbitrary lows, quotient exact in the Laurent ring.
Laurent divexact_laurent(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw internal_error("division by zero polynomial");
  if (a.is_zero()) return Laurent();
  Poly r = poly_of(a);
  Poly d = poly_of(b);
  long dd = long(d.size()) - 1;
  if (long(r.size()) - 1 < dd) throw internal_error("inexact polynomial division");
  Poly q(r.size() - d.size() + 1, Int(0));
  while (!r.empty() && long(r.size()) - 1 >= dd) {
    long k = long(r.size()) - 1 - dd;
    Int c = r.back();
    if (c % d.back() != 0) throw internal_error("inexact polynomial division");
    c /= d.back();
    q[std::size_t(k)] = c;
    for (long j = 0; j <= dd; ++j) r[std::size_t(k + j)] -= c * d[std::size_t(j)];
    r = trim(std::move(r));
  }
  if (!r.empty()) throw internal_error("inexact polynomial division");
  return Laurent(a.low() - b.low(), std::move(q));
}

Int max_abs_coeff(const Laurent& f) {
  Int m = 0;
  for (const auto& c : f.coeffs()) {
    Int a = abs_int(c);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

Laurent laurent_det_bareiss(const std::vector<std::vector<Laurent>>& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw parse_error("determinant of non-square matrix");
  if (n == 0) return Laurent(Int(1));

  // Factor t^k out of each row so every entry is an honest polynomial.
  auto a = m;
  long shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long lo = 0;
    bool any = false;
    for (const auto& e : a[i])
      if (!e.is_zero()) {
        lo = any ? std::min(lo, e.low()) : e.low();
        any = true;
      }
    if (!any) return Laurent();  // zero row
    shift += lo;
    for (auto& e : a[i]) e = e.times_t_power(-lo);
  }

  int sign = 1;
  Laurent prev(Int(1));
  for (std::size_t t = 0; t + 1 < n; ++t) {
    // pivot: minimal (degree span, coefficient size), ties by (row, col)
    std::size_t pi = n, pj = n;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j].is_zero()) continue;
        if (pi == n ||
            std::pair(a[i][j].degree_span(), max_abs_coeff(a[i][j])) <
                std::pair(a[pi][pj].degree_span(), max_abs_coeff(a[pi][pj])))
          pi = i, pj = j;
      }
    if (pi == n) return Laurent();
    if (pi != t) {
      std::swap(a[pi], a[t]);
      sign = -sign;
    }
    if (pj != t) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][pj], a[i][t]);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        a[i][j] = divexact_laurent(a[t][t] * a[i][j] - a[i][t] * a[t][j], prev);
    prev = a[t][t];
  }
  Laurent det = a[n - 1][n - 1].times_t_power(shift);
  return sign > 0 ? det : -det;
}

Laurent laurent_matrix_det(const std::vector<std::vector<Laurent>>& m) {
  return m.size() <= 4 ? laurent_det_cofactor(m) : laurent_det_bareiss(m);
}

}  // namespace mq
