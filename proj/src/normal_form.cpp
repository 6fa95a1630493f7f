#include "mq/normal_form.hpp"

namespace mq {

namespace {

// Pivot choice: smallest nonzero absolute value, ties broken by lowest
// (row, col).  Keeps coefficient growth down and runs deterministic.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& a,
                                                              std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs_int(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(r);
  IntMatrix v = IntMatrix::identity(c);
  const std::size_t steps = std::min(r, c);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto piv = find_pivot(a, t);
      if (!piv) {
        t = steps;  // remaining block is zero
        break;
      }
      a.swap_rows(t, piv->first);
      u.swap_rows(t, piv->first);
      a.swap_cols(t, piv->second);
      v.swap_cols(t, piv->second);

      bool changed = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        if (q != 0) {
          a.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
        if (a(i, t) != 0) changed = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        if (q != 0) {
          a.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
        if (a(t, j) != 0) changed = true;
      }
      if (changed) continue;

      // Row and column are clear; force the divisibility chain.
      bool fixed = true;
      for (std::size_t i = t + 1; i < r && fixed; ++i)
        for (std::size_t j = t + 1; j < c && fixed; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, Int(1));
            u.add_row_multiple(t, i, Int(1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (t == steps) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithDecomposition out;
  out.u = std::move(u);
  out.v = std::move(v);
  out.s = std::move(a);
  for (std::size_t t = 0; t < steps; ++t)
    if (out.s(t, t) != 0) out.invariant_factors.push_back(out.s(t, t));
  return out;
}

HermiteDecomposition hnf(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(r);
  std::size_t p = 0;

  for (std::size_t j = 0; j < c && p < r; ++j) {
    for (;;) {
      std::size_t best = r;
      Int best_abs;
      for (std::size_t i = p; i < r; ++i) {
        if (a(i, j) == 0) continue;
        Int v = abs_int(a(i, j));
        if (best == r || v < best_abs) {
          best = i;
          best_abs = v;
        }
      }
      if (best == r) break;
      a.swap_rows(p, best);
      u.swap_rows(p, best);
      bool changed = false;
      for (std::size_t i = p + 1; i < r; ++i) {
        if (a(i, j) == 0) continue;
        Int q = a(i, j) / a(p, j);
        if (q != 0) {
          a.add_row_multiple(i, p, -q);
          u.add_row_multiple(i, p, -q);
        }
        if (a(i, j) != 0) changed = true;
      }
      if (!changed) break;
    }
    if (a(p, j) == 0) continue;
    if (a(p, j) < 0) {
      a.negate_row(p);
      u.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Int q = fdiv(a(i, j), a(p, j));
      if (q != 0) {
        a.add_row_multiple(i, p, -q);
        u.add_row_multiple(i, p, -q);
      }
    }
    ++p;
  }

  return HermiteDecomposition{std::move(a), std::move(u)};
}

LatticeMembership lattice_member(const std::vector<Int>& v, const IntMatrix& m) {
  if (v.size() != m.cols())
    throw parse_error("lattice_member: vector length does not match column count");
  auto hd = hnf(m);
  std::vector<Int> rest = v;
  std::vector<Int> q(m.rows(), Int(0));

  std::size_t row = 0;
  for (std::size_t j = 0; j < m.cols() && row < m.rows(); ++j) {
    if (hd.h(row, j) == 0) continue;  // no pivot in this column
    if (rest[j] % hd.h(row, j) != 0) return {};
    Int k = rest[j] / hd.h(row, j);
    if (k != 0)
      for (std::size_t col = 0; col < m.cols(); ++col) rest[col] -= k * hd.h(row, col);
    q[row] = k;
    ++row;
  }
  for (const auto& x : rest)
    if (x != 0) return {};

  LatticeMembership out;
  out.member = true;
  out.witness = mul_row_vector(q, hd.u);
  return out;
}

}  // namespace mq
