#include <doctest.h>

#include "helpers.hpp"
#include "mq/laurent.hpp"

using namespace mq;

namespace {

Laurent L(const std::string& s) { return Laurent::parse(s); }

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  CHECK((L("t - 1") * L("t + 1")).str() == "-1 + t^2");
  CHECK(L("t^2 - t + 1").evaluate_at(Int(-1)) == 3);
  CHECK((-Laurent::t_power(3) * L("t^2 - t + 1")).unit_normalized().str() ==
        "1 - t + t^2");
  CHECK(Laurent().str() == "0");
  CHECK(L("2*t^-1 + 3").str() == "2*t^-1 + 3");
  CHECK(L("1 - t + t^2").str() == "1 - t + t^2");
}

TEST_CASE("content and primitive part") {
  CHECK(L("2*t^2 + 4").content() == 2);
  CHECK(L("2*t^2 + 4").primitive_part().str() == "2 + t^2");
  CHECK(Laurent().content() == 0);
}

TEST_CASE("evaluate_at corner cases") {
  CHECK_THROWS_AS(L("t^-1").evaluate_at(Int(0)), parse_error);
  CHECK(L("t^2 + t").evaluate_at(Int(0)) == 0);
  CHECK(L("3 + t").evaluate_at(Int(0)) == 3);
  CHECK(L("t^-2 + t^2").evaluate_at(Int(-1)) == 2);
  CHECK(L("t^-1").evaluate_at(Int(-1)) == -1);
}

TEST_CASE("rational gcd") {
  CHECK(laurent_gcd_over_rationals(L("t^2 - 1"), L("t^3 - 1")).str() == "-1 + t");
  CHECK(laurent_gcd_over_rationals(L("2"), L("t + 1")).str() == "1");
  CHECK(laurent_gcd_over_rationals(L("2*t^2 + 4"), Laurent()).str() == "2 + t^2");
  CHECK_THROWS_AS(laurent_gcd_over_rationals(Laurent(), Laurent()), parse_error);
}

TEST_CASE("gcd divides both inputs over the rationals") {
  mqtest::RNG rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Laurent f = mqtest::random_laurent(rng);
    Laurent g = mqtest::random_laurent(rng);
    if (f.is_zero() && g.is_zero()) continue;
    Laurent d = laurent_gcd_over_rationals(f, g);
    // divisibility via rational pseudo-division: gcd(d, f) == normalized d
    if (!f.is_zero()) CHECK(laurent_gcd_over_rationals(d, f) == d.primitive_part().unit_normalized());
    if (!g.is_zero()) CHECK(laurent_gcd_over_rationals(d, g) == d.primitive_part().unit_normalized());
    // evaluation compatibility at t = -1 (a unit of the Laurent ring)
    if (!f.is_zero() && !g.is_zero()) {
      Int ef = f.evaluate_at(Int(-1)), eg = g.evaluate_at(Int(-1));
      Int ed = abs_int(d.evaluate_at(Int(-1)));
      if (ef != 0 || eg != 0) CHECK(gcd_int(abs_int(ef), abs_int(eg)) % ed == 0);
    }
  }
}

TEST_CASE("mod-p reduction and gcd") {
  CHECK(laurent_mod_p(L("2"), Int(2)).is_zero());
  CHECK(laurent_mod_p(L("t + 1"), Int(2)).str() == "1 + t");
  CHECK(gcd_mod_p(L("2"), L("t + 1"), Int(2)).str() == "1 + t");
  CHECK(gcd_mod_p(L("t^2 - 1"), L("t - 1"), Int(3)).str() == "2 + t");
  CHECK_THROWS_AS(laurent_mod_p(L("t"), Int(4)), parse_error);
  CHECK_THROWS_AS(gcd_mod_p(L("3"), L("6"), Int(3)), parse_error);
}

TEST_CASE("determinants: fixtures") {
  using M = std::vector<std::vector<Laurent>>;
  CHECK(laurent_matrix_det(M{{L("t + 2")}}) == L("t + 2"));
  CHECK(laurent_matrix_det(M{{L("t"), L("1")}, {L("1"), L("t")}}) == L("t^2 - 1"));
  M diag{{L("t - 1"), Laurent(), Laurent()},
         {Laurent(), L("t - 1"), Laurent()},
         {Laurent(), Laurent(), L("2")}};
  CHECK(laurent_matrix_det(diag) == L("2") * L("t - 1") * L("t - 1"));
  CHECK(laurent_matrix_det(M{}).str() == "1");
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
  mqtest::RNG rng(22);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = dim(rng);
    std::vector<std::vector<Laurent>> m(n, std::vector<Laurent>(n));
    for (auto& row : m)
      for (auto& e : row) e = mqtest::random_laurent(rng, 2, 3, 1);
    CHECK(laurent_det_bareiss(m) == laurent_det_cofactor(m));
  }
}

TEST_CASE("t-inverse substitution") {
  CHECK(L("1 - t + t^2").substitute_t_inverse().unit_normalized() == L("1 - t + t^2"));
  CHECK(L("2 + t^3").substitute_t_inverse().str() == "t^-3 + 2");
}
