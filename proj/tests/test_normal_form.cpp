#include <doctest.h>

#include "helpers.hpp"
#include "mq/normal_form.hpp"

using namespace mq;

namespace {

bool is_diagonal(const IntMatrix& s) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  return true;
}

void check_snf_contract(const IntMatrix& m) {
  auto d = snf(m);
  CHECK(d.u * m * d.v == d.s);
  CHECK(is_diagonal(d.s));
  CHECK(abs_int(d.u.determinant()) == 1);
  CHECK(abs_int(d.v.determinant()) == 1);
  for (std::size_t i = 0; i + 1 < d.invariant_factors.size(); ++i) {
    CHECK(d.invariant_factors[i] > 0);
    CHECK(d.invariant_factors[i + 1] % d.invariant_factors[i] == 0);
  }
}

// brute-force membership with small coefficients
bool brute_lattice(const std::vector<Int>& v, const IntMatrix& m, int bound) {
  std::vector<int> c(m.rows(), -bound);
  for (;;) {
    std::vector<Int> acc(m.cols(), Int(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) acc[j] += Int(c[i]) * m(i, j);
    if (acc == v) return true;
    std::size_t k = 0;
    while (k < c.size() && c[k] == bound) c[k++] = -bound;
    if (k == c.size()) return false;
    ++c[k];
  }
}

}  // namespace

TEST_CASE("snf fixtures") {
  auto id2 = IntMatrix::identity(2);
  auto d = snf(id2);
  CHECK(d.invariant_factors == std::vector<Int>{1, 1});

  IntMatrix m(2, 2, {Int(2), Int(4), Int(6), Int(8)});
  CHECK(snf(m).invariant_factors == std::vector<Int>{2, 4});

  IntMatrix trefoil(1, 2, {Int(1), Int(-1)});
  CHECK(snf(trefoil).invariant_factors == std::vector<Int>{1});
}

TEST_CASE("snf contract on random matrices") {
  mqtest::RNG rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    auto m = mqtest::random_matrix(rng, dim(rng), dim(rng));
    check_snf_contract(m);
  }
  // full-rank square: product of factors = |det|
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 4;
    auto m = mqtest::random_matrix(rng, n, n);
    Int det = abs_int(m.determinant());
    if (det == 0) continue;
    auto d = snf(m);
    Int prod = 1;
    for (const auto& f : d.invariant_factors) prod *= f;
    CHECK(prod == det);
  }
}

TEST_CASE("invariant factor products match minor gcds") {
  mqtest::RNG rng(13);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = dim(rng), cols = dim(rng);
    auto m = mqtest::random_matrix(rng, rows, cols, 5);
    auto d = snf(m);
    // d_1 = gcd of entries
    Int g1 = 0;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) g1 = gcd_int(g1, m(i, j));
    Int p1 = d.invariant_factors.empty() ? Int(0) : d.invariant_factors[0];
    CHECK(p1 == g1);
    // d_1 * d_2 = gcd of 2x2 minors
    if (rows >= 2 && cols >= 2) {
      Int g2 = 0;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = i + 1; k < rows; ++k)
          for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t l = j + 1; l < cols; ++l)
              g2 = gcd_int(g2, m(i, j) * m(k, l) - m(i, l) * m(k, j));
      Int p2 = d.invariant_factors.size() >= 2
                   ? d.invariant_factors[0] * d.invariant_factors[1]
                   : Int(0);
      CHECK(p2 == g2);
    }
  }
}

TEST_CASE("hnf fixtures") {
  IntMatrix m(2, 1, {Int(2), Int(3)});
  auto d = hnf(m);
  CHECK(d.h(0, 0) == 1);
  CHECK(d.h(1, 0) == 0);
  CHECK(d.u * m == d.h);

  IntMatrix z(2, 3);
  auto dz = hnf(z);
  CHECK(dz.h == z);
  CHECK(dz.u == IntMatrix::identity(2));

  IntMatrix diag(2, 2, {Int(4), Int(0), Int(0), Int(6)});
  auto dd = hnf(diag);
  CHECK(dd.h(0, 0) == 4);
  CHECK(dd.h(1, 1) == 6);
  CHECK(dd.h(0, 1) == 0);
}

TEST_CASE("lattice membership fixtures") {
  IntMatrix m(1, 2, {Int(1), Int(-1)});
  auto r = lattice_member({Int(1), Int(-1)}, m);
  CHECK(r.member);
  CHECK(r.witness == std::vector<Int>{1});
  CHECK_FALSE(lattice_member({Int(1), Int(0)}, m).member);
  CHECK(lattice_member({Int(0), Int(0)}, m).member);
  CHECK_THROWS_AS(lattice_member({Int(1)}, m), parse_error);
}

TEST_CASE("lattice membership agrees with brute force and witnesses verify") {
  mqtest::RNG rng(12);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  int member_cases = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t rows = dim(rng), cols = dim(rng);
    auto m = mqtest::random_matrix(rng, rows, cols, 4);
    std::vector<Int> v(cols, Int(0));
    bool constructed_member = trial % 2 == 0;
    if (constructed_member) {
      for (std::size_t i = 0; i < rows; ++i) {
        Int c = coeff(rng);
        for (std::size_t j = 0; j < cols; ++j) v[j] += c * m(i, j);
      }
    } else {
      for (auto& x : v) x = coeff(rng);
    }
    auto r = lattice_member(v, m);
    if (constructed_member) CHECK(r.member);
    if (r.member) {
      ++member_cases;
      CHECK(mul_row_vector(r.witness, m) == v);
    }
    // the brute-force oracle can only certify membership, never refute it
    if (brute_lattice(v, m, 3)) CHECK(r.member);
  }
  CHECK(member_cases > 40);
}
