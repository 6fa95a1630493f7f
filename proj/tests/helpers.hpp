#pragma once

#include <random>
#include <string>
#include <vector>

#include "mq/knots.hpp"
#include "mq/laurent.hpp"
#include "mq/matrix.hpp"
#include "mq/presentation.hpp"

namespace mqtest {

using RNG = std::mt19937_64;

inline std::vector<std::string> generator_names(std::size_t n) {
  static const std::vector<std::string> pool = {"x", "y", "z", "w", "v", "u"};
  return {pool.begin(), pool.begin() + long(n)};
}

inline mq::Word random_word(RNG& rng, const std::vector<std::string>& gens,
                            std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<mq::Letter> ls;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i)
    ls.push_back(mq::Letter{gens[pick(rng)], sgn(rng) ? 1 : -1});
  return mq::Word(std::move(ls));
}

inline mq::Word random_nonempty_word(RNG& rng, const std::vector<std::string>& gens,
                                     std::size_t max_len) {
  for (;;) {
    mq::Word w = random_word(rng, gens, max_len);
    if (!w.empty()) return w;
  }
}

inline mq::Presentation random_presentation(RNG& rng, std::size_t max_gens = 4,
                                            std::size_t max_rel = 4,
                                            std::size_t max_len = 8) {
  std::uniform_int_distribution<std::size_t> ng(2, max_gens);
  std::uniform_int_distribution<std::size_t> nr(1, max_rel);
  auto gens = generator_names(ng(rng));
  std::vector<mq::Word> rel;
  std::size_t k = nr(rng);
  for (std::size_t i = 0; i < k; ++i) rel.push_back(random_nonempty_word(rng, gens, max_len));
  return mq::Presentation(gens, std::move(rel));
}

// A valid null-homologous relator replacement: the new relator is a
// conjugate of (a power-sign of) the old one times commutators, so the
// exponent lattice is preserved and both directions check out.
inline mq::Presentation random_null_replacement(RNG& rng, const mq::Presentation& p) {
  std::uniform_int_distribution<std::size_t> pick_rel(0, p.relators().size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  const mq::Word& old_r = p.relators()[pick_rel(rng)];
  mq::Word conj = random_word(rng, p.generators(), 3);
  mq::Word base = coin(rng) ? old_r : old_r.inverse();
  mq::Word w = conjugate(base, conj);
  int extra = coin(rng) + coin(rng);
  for (int i = 0; i < extra; ++i) {
    mq::Word u = random_word(rng, p.generators(), 3);
    mq::Word v = random_word(rng, p.generators(), 3);
    w = w * commutator(u, v);
  }
  return replace_relator(p, old_r, w, /*enforce_null_homologous=*/true);
}

inline mq::IntMatrix random_matrix(RNG& rng, std::size_t rows, std::size_t cols,
                                   int max_abs = 9) {
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  mq::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

inline mq::Laurent random_laurent(RNG& rng, long max_deg = 3, int max_coeff = 4,
                                  long max_shift = 2) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<long> shift(-max_shift, max_shift);
  std::vector<mq::Int> c(std::size_t(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return mq::Laurent(shift(rng), std::move(c));
}

// Random virtual-knot Gauss code: any interleaving of O/U letter pairs is a
// legal virtual diagram.
inline mq::GaussCode random_gauss(RNG& rng, std::size_t crossings) {
  std::vector<mq::GaussEntry> entries;
  std::uniform_int_distribution<int> sgn(0, 1);
  for (std::size_t id = 1; id <= crossings; ++id) {
    int s = sgn(rng) ? 1 : -1;
    entries.push_back(mq::GaussEntry{int(id), true, s});
    entries.push_back(mq::GaussEntry{int(id), false, s});
  }
  std::shuffle(entries.begin(), entries.end(), rng);
  mq::GaussCode gc;
  gc.entries = std::move(entries);
  return gc;
}

// Bounded combination search: sound "the ideal contains a unit" oracle.
inline bool oracle_ideal_unit(const std::vector<mq::Laurent>& gens, long max_deg,
                              int max_coeff) {
  std::size_t m = gens.size();
  std::size_t slots = m * std::size_t(max_deg + 1);
  std::vector<int> c(slots, -max_coeff);
  for (;;) {
    mq::Laurent acc;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<mq::Int> coeffs;
      for (long d = 0; d <= max_deg; ++d)
        coeffs.push_back(c[i * std::size_t(max_deg + 1) + std::size_t(d)]);
      acc = acc + mq::Laurent(0, coeffs) * gens[i];
    }
    if (!acc.is_zero() && acc.coeffs().size() == 1 && mq::abs_int(acc.coeffs()[0]) == 1)
      return true;
    std::size_t k = 0;
    while (k < slots && c[k] == max_coeff) c[k++] = -max_coeff;
    if (k == slots) return false;
    ++c[k];
  }
}

// Sound properness certificate: the ring maps t -> 1 and t -> -1 send the
// ideal into a proper ideal of Z whenever the value gcd exceeds 1.
inline bool oracle_ideal_proper(const std::vector<mq::Laurent>& gens) {
  for (mq::Int point : {mq::Int(1), mq::Int(-1)}) {
    mq::Int g = 0;
    for (const auto& f : gens) g = mq::gcd_int(g, mq::abs_int(f.evaluate_at(point)));
    if (g != 1) return true;
  }
  return false;
}

// One-cancellation-at-a-time reduction oracle with a random choice of which
// adjacent inverse pair to cancel first.
inline mq::Word stepwise_reduce_oracle(RNG& rng, std::vector<mq::Letter> raw) {
  for (;;) {
    std::vector<std::size_t> cancellable;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i)
      if (raw[i].gen == raw[i + 1].gen && raw[i].sign == -raw[i + 1].sign)
        cancellable.push_back(i);
    if (cancellable.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, cancellable.size() - 1);
    std::size_t at = cancellable[pick(rng)];
    raw.erase(raw.begin() + long(at), raw.begin() + long(at) + 2);
  }
  mq::Word w(raw);  // already reduced; constructor is a no-op re-check
  return w;
}

}  // namespace mqtest
