#include "mq/alexander.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mq/normal_form.hpp"

namespace mq {

std::vector<Int> infinite_cyclic_weights(const Presentation& p) {
  const std::size_t n = p.generators().size();
  auto dec = snf(p.exponent_matrix());
  std::size_t rank = dec.invariant_factors.size();
  bool cyclic = (n == rank + 1) &&
                std::all_of(dec.invariant_factors.begin(), dec.invariant_factors.end(),
                            [](const Int& d) { return d == 1; });
  if (!cyclic)
    throw hypothesis_error(
        "H_1 of the presentation is not infinite cyclic (multivariable case out of scope)");
  // The free coordinate is the last Smith coordinate; generator j maps to
  // row j of V there.
  std::vector<Int> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = dec.v(j, n - 1);
  for (const auto& x : w)
    if (x != 0) {
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
  return w;
}

AlexanderMatrix alexander_matrix(const Presentation& p) {
  const std::size_t n = p.generators().size();
  const std::size_t m = p.relators().size();
  if (m != n && m + 1 != n)
    throw hypothesis_error(
        "Wirtinger-style presentation required: relator count must be n or n-1");

  AlexanderMatrix out;
  out.weights = infinite_cyclic_weights(p);

  std::size_t drop_col = n;
  for (std::size_t j = 0; j < n; ++j)
    if (out.weights[j] == 1 || out.weights[j] == -1) {
      drop_col = j;
      break;
    }
  if (drop_col == n)
    throw hypothesis_error("no generator of weight +-1 to drop from the Jacobian");
  out.dropped_column = drop_col;

  std::vector<Word> retained = p.relators();
  if (m == n) {
    out.dropped_relator = m - 1;
    retained.pop_back();
  }

  std::map<std::string, Int> wmap;
  for (std::size_t j = 0; j < n; ++j) wmap[p.generators()[j]] = out.weights[j];

  for (const auto& rel : retained) {
    std::vector<Laurent> row;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == drop_col) continue;
      row.push_back(abelianize_t(fox_derivative(rel, p.generators()[j]), wmap));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

Laurent alexander_polynomial(const Presentation& p) {
  auto am = alexander_matrix(p);
  return laurent_matrix_det(am.entries).unit_normalized();
}

Int knot_determinant(const Presentation& p) {
  return abs_int(alexander_polynomial(p).evaluate_at(Int(-1)));
}

std::string ProperWitness::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::rational_gcd:
      out << "rational gcd " << rational_gcd.str() << " has positive degree";
      break;
    case Kind::prime_reduction:
      out << "mod " << prime << " the generators share the nonunit factor "
          << residue_gcd.str();
      break;
    case Kind::zero_ideal:
      out << "all generators vanish";
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// extended gcd over Q[t]

namespace {

using QPoly = std::vector<Rational>;

QPoly qtrim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return qtrim(std::move(c));
}

QPoly qadd(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return qtrim(std::move(c));
}

QPoly qscale(QPoly a, const Rational& c) {
  for (auto& x : a) x *= c;
  return qtrim(std::move(a));
}

// a = q*b + r with deg r < deg b
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t k = a.size() - b.size();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    a = qtrim(std::move(a));
  }
  return {qtrim(std::move(q)), std::move(a)};
}

struct ExtGcd {
  QPoly g, u, v;  // u*a + v*b = g, g monic
};

ExtGcd qext_gcd(QPoly a, QPoly b) {
  QPoly u0{Rational(1)}, v0{}, u1{}, v1{Rational(1)};
  while (!b.empty()) {
    auto [q, r] = qdivmod(a, b);
    QPoly u2 = qadd(u0, qscale(qmul(q, u1), Rational(-1)));
    QPoly v2 = qadd(v0, qscale(qmul(q, v1), Rational(-1)));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (a.empty()) return {a, u0, v0};
  Rational lead = a.back();
  return {qscale(std::move(a), 1 / lead), qscale(std::move(u0), 1 / lead),
          qscale(std::move(v0), 1 / lead)};
}

QPoly qpoly_of(const Laurent& f) {
  QPoly out;
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return qtrim(std::move(out));
}

std::vector<Int> factor_primes(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  for (Int d = 2; d * d <= n; d = d == 2 ? Int(3) : d + 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

IdealDecision ideal_is_unit(const std::vector<Laurent>& gens) {
  if (gens.empty()) throw parse_error("ideal_is_unit: empty generator list");

  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) nonzero.push_back(i);
  if (nonzero.empty()) {
    IdealDecision out;
    out.unit = false;
    out.witness.kind = ProperWitness::Kind::zero_ideal;
    return out;
  }

  // Stage 1: iterated extended gcd over Q[t] on the t-stripped generators,
  // carrying cofactors so a unit gcd yields an explicit combination.
  QPoly d = qpoly_of(gens[nonzero[0]]);
  std::map<std::size_t, QPoly> cof;
  cof[nonzero[0]] = {Rational(1)};
  {
    Rational lead = d.back();
    d = qscale(std::move(d), 1 / lead);
    cof[nonzero[0]] = qscale(cof[nonzero[0]], 1 / lead);
  }
  for (std::size_t idx = 1; idx < nonzero.size() && d.size() > 1; ++idx) {
    std::size_t i = nonzero[idx];
    auto eg = qext_gcd(d, qpoly_of(gens[i]));
    for (auto& [k, c] : cof) c = qmul(eg.u, c);
    cof[i] = eg.v;
    d = eg.g;
  }

  if (d.size() > 1) {
    // positive-degree rational gcd: the ideal sits inside a proper ideal
    Int lcm = 1;
    for (const auto& c : d) lcm = lcm_int(lcm, boost::multiprecision::denominator(c));
    std::vector<Int> zc;
    for (const auto& c : d)
      zc.push_back(boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
    IdealDecision out;
    out.unit = false;
    out.witness.kind = ProperWitness::Kind::rational_gcd;
    out.witness.rational_gcd = Laurent(0, std::move(zc)).primitive_part().unit_normalized();
    return out;
  }

  // Stage 2: clear denominators to get sum A_i * gens_i = N with N a positive
  // integer, then test the reduction at every prime dividing N.
  Int lcm = 1;
  for (const auto& [i, c] : cof)
    for (const auto& x : c) lcm = lcm_int(lcm, boost::multiprecision::denominator(x));
  Int n = lcm;  // d is the monic constant 1, so the combination sums to lcm

  UnitCertificate cert;
  cert.combination.assign(gens.size(), Laurent());
  for (const auto& [i, c] : cof) {
    std::vector<Int> zc;
    for (const auto& x : c)
      zc.push_back(boost::multiprecision::numerator(x) *
                   (lcm / boost::multiprecision::denominator(x)));
    // cofactor applies to the t-stripped generator; fold the strip back in
    cert.combination[i] = Laurent(-gens[i].low(), std::move(zc));
  }
  cert.constant = n;

  {
    Laurent check;
    for (std::size_t i = 0; i < gens.size(); ++i) check = check + cert.combination[i] * gens[i];
    if (!(check == Laurent(n)))
      throw internal_error("ideal_is_unit: combination certificate failed to verify");
  }

  for (const Int& p : factor_primes(n)) {
    Laurent cur;
    bool have = false;
    for (std::size_t i : nonzero) {
      Laurent red = laurent_mod_p(gens[i], p);
      if (red.is_zero()) continue;
      cur = have ? gcd_mod_p(cur, red, p) : gcd_mod_p(red, Laurent(), p);
      have = true;
      if (cur.degree_span() == 0) break;  // already a unit mod p
    }
    if (!have) {
      IdealDecision out;
      out.unit = false;
      out.witness.kind = ProperWitness::Kind::prime_reduction;
      out.witness.prime = p;
      out.witness.residue_gcd = Laurent();
      return out;
    }
    if (cur.degree_span() > 0) {
      IdealDecision out;
      out.unit = false;
      out.witness.kind = ProperWitness::Kind::prime_reduction;
      out.witness.prime = p;
      out.witness.residue_gcd = cur;
      return out;
    }
    cert.primes.push_back(p);
  }

  IdealDecision out;
  out.unit = true;
  out.certificate = std::move(cert);
  return out;
}

ElementaryIdeal elementary_ideal(const Presentation& p, std::size_t k) {
  auto am = alexander_matrix(p);
  const std::size_t s = am.entries.size();

  ElementaryIdeal out;
  out.index = k;
  if (k >= s) {
    out.generators = {Laurent(Int(1))};  // the empty minor
    out.decision = ideal_is_unit(out.generators);
    return out;
  }
  const std::size_t msize = s - k;

  // lexicographic enumeration of index subsets
  auto subsets = [&](std::size_t total) {
    std::vector<std::vector<std::size_t>> all;
    if (msize > total) return all;
    std::vector<std::size_t> cur(msize);
    for (std::size_t i = 0; i < msize; ++i) cur[i] = i;
    for (;;) {
      all.push_back(cur);
      std::size_t i = msize;
      while (i > 0 && cur[i - 1] + (msize - (i - 1)) >= total) --i;
      if (i == 0) return all;
      --i;
      ++cur[i];
      for (std::size_t j = i + 1; j < msize; ++j) cur[j] = cur[j - 1] + 1;
    }
  };

  auto rows = subsets(s);
  for (const auto& ri : rows)
    for (const auto& ci : rows) {
      std::vector<std::vector<Laurent>> minor(msize, std::vector<Laurent>(msize));
      for (std::size_t a = 0; a < msize; ++a)
        for (std::size_t b = 0; b < msize; ++b) minor[a][b] = am.entries[ri[a]][ci[b]];
      out.generators.push_back(laurent_matrix_det(minor));
    }
  out.decision = ideal_is_unit(out.generators);
  return out;
}

NakanishiLowerBound nakanishi_lower(const Presentation& p) {
  NakanishiLowerBound out;
  std::optional<ElementaryIdeal> last_proper;
  for (std::size_t k = 0;; ++k) {
    auto e = elementary_ideal(p, k);
    if (e.decision.unit) {
      out.value = k;
      out.proper_ideal = std::move(last_proper);
      out.unit_ideal = std::move(e);
      return out;
    }
    last_proper = std::move(e);
  }
}

}  // namespace mq
