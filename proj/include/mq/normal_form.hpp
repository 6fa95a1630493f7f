#pragma once

#include <optional>
#include <vector>

#include "mq/matrix.hpp"

namespace mq {

// U * M * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ...,
// all diagonal entries nonnegative.  invariant_factors lists the nonzero
// diagonal entries in order.
struct SmithDecomposition {
  IntMatrix u, s, v;
  std::vector<Int> invariant_factors;
};

SmithDecomposition snf(const IntMatrix& m);

// U * M = H, row Hermite form: U unimodular, H upper echelon with positive
// pivots and entries above each pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix h, u;
};

HermiteDecomposition hnf(const IntMatrix& m);

// Decides membership of v in the integer row span of M.  On success the
// witness satisfies witness * M = v.
struct LatticeMembership {
  bool member = false;
  std::vector<Int> witness;
};

LatticeMembership lattice_member(const std::vector<Int>& v, const IntMatrix& m);

}  // namespace mq
