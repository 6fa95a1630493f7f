#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mq/alexander.hpp"
#include "mq/engine.hpp"
#include "mq/knots.hpp"

using namespace mq;

namespace {

Word W(const char* s) { return Word::parse(s); }

Presentation trefoil_wirtinger() {
  return wirtinger_from_pd(PDCode::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")).presentation;
}

// bounded combination search: a sound "the ideal is unit" oracle
bool oracle_unit(const std::vector<Laurent>& gens, long max_deg, int max_coeff) {
  std::size_t m = gens.size();
  std::size_t slots = m * std::size_t(max_deg + 1);
  std::vector<int> c(slots, -max_coeff);
  for (;;) {
    Laurent acc;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Int> coeffs;
      for (long d = 0; d <= max_deg; ++d)
        coeffs.push_back(c[i * std::size_t(max_deg + 1) + std::size_t(d)]);
      acc = acc + Laurent(0, coeffs) * gens[i];
    }
    if (!acc.is_zero() && acc.coeffs().size() == 1 && abs_int(acc.coeffs()[0]) == 1)
      return true;
    std::size_t k = 0;
    while (k < slots && c[k] == max_coeff) c[k++] = -max_coeff;
    if (k == slots) return false;
    ++c[k];
  }
}

// sound properness certificate: evaluation at the units t = 1, t = -1
bool oracle_proper(const std::vector<Laurent>& gens) {
  for (Int point : {Int(1), Int(-1)}) {
    Int g = 0;
    for (const auto& f : gens) g = gcd_int(g, abs_int(f.evaluate_at(point)));
    if (g != 1) return true;  // includes the all-zero case (g = 0)
  }
  return false;
}

}  // namespace

TEST_CASE("infinite cyclic weights") {
  auto p = trefoil_wirtinger();
  auto w = infinite_cyclic_weights(p);
  CHECK(w == std::vector<Int>{1, 1, 1});
  CHECK_THROWS_AS(infinite_cyclic_weights(Presentation({"x"}, {W("x x")})),
                  hypothesis_error);
  // torus-knot presentation has H_1 = Z but weights (3, 2): no column to drop
  Presentation torus({"x", "y"}, {W("x x y^-1 y^-1 y^-1")});
  CHECK(infinite_cyclic_weights(torus) == std::vector<Int>{3, 2});
  CHECK_THROWS_AS(alexander_matrix(torus), hypothesis_error);
}

TEST_CASE("alexander matrix shapes and drops") {
  auto p = trefoil_wirtinger();
  auto am = alexander_matrix(p);
  CHECK(am.entries.size() == 2);
  CHECK(am.entries[0].size() == 2);
  CHECK(am.dropped_relator == std::optional<std::size_t>{2});
  CHECK(am.dropped_column == 0);

  Presentation unknot({"x"}, {});
  auto am0 = alexander_matrix(unknot);
  CHECK(am0.entries.empty());
  CHECK(alexander_polynomial(unknot).str() == "1");

  CHECK_THROWS_AS(alexander_matrix(Presentation({"x", "y", "z"}, {W("x y^-1")})),
                  hypothesis_error);
}

TEST_CASE("alexander polynomial fixtures") {
  CHECK(alexander_polynomial(trefoil_wirtinger()).str() == "1 - t + t^2");
  CHECK(knot_determinant(trefoil_wirtinger()) == 3);

  // 2-generator trefoil presentation gives the same polynomial
  Presentation t2({"x", "y"}, {W("x y x y^-1 x^-1 y^-1")});
  CHECK(alexander_polynomial(t2).str() == "1 - t + t^2");

  auto fig8 = wirtinger_from_pd(pd_from_braid(BraidWord::parse("s1 s2^-1 s1 s2^-1")));
  CHECK(alexander_polynomial(fig8.presentation).str() == "1 - 3*t + t^2");
  CHECK(knot_determinant(fig8.presentation) == 5);

  auto granny = wirtinger_from_pd(pd_from_braid(BraidWord::parse("s1 s1 s1 s2 s2 s2")));
  Laurent tre = Laurent::parse("1 - t + t^2");
  CHECK(alexander_polynomial(granny.presentation) == tre * tre);
}

TEST_CASE("alexander polynomial symmetry and evaluation at 1") {
  for (const char* braid : {"s1 s1 s1", "s1 s2^-1 s1 s2^-1", "s1 s1 s1 s2 s2 s2",
                            "s1 s1 s1 s1 s1"}) {
    auto p = wirtinger_from_pd(pd_from_braid(BraidWord::parse(braid))).presentation;
    Laurent d = alexander_polynomial(p);
    CHECK(d.substitute_t_inverse().unit_normalized() == d);
    CHECK(abs_int(d.evaluate_at(Int(1))) == 1);
  }
}

TEST_CASE("alexander polynomial is invariant under drop choices") {
  // rotating the relator list changes the dropped relator; rotating the
  // generator list changes the dropped column
  auto wp = wirtinger_from_pd(pd_from_braid(BraidWord::parse("s1 s2^-1 s1 s2^-1")));
  const auto& p = wp.presentation;
  Laurent base = alexander_polynomial(p);
  auto rel = p.relators();
  for (std::size_t rot = 1; rot < rel.size(); ++rot) {
    std::vector<Word> rotated(rel.begin() + long(rot), rel.end());
    rotated.insert(rotated.end(), rel.begin(), rel.begin() + long(rot));
    CHECK(alexander_polynomial(Presentation(p.generators(), rotated)) == base);
  }
  auto gens = p.generators();
  for (std::size_t rot = 1; rot < gens.size(); ++rot) {
    std::vector<std::string> rg(gens.begin() + long(rot), gens.end());
    rg.insert(rg.end(), gens.begin(), gens.begin() + long(rot));
    CHECK(alexander_polynomial(Presentation(rg, rel)) == base);
  }
}

TEST_CASE("ideal_is_unit fixtures") {
  auto L = [](const char* s) { return Laurent::parse(s); };

  auto d = ideal_is_unit({L("2"), L("3")});
  CHECK(d.unit);

  auto p2 = ideal_is_unit({L("2"), L("t + 1")});
  CHECK_FALSE(p2.unit);
  CHECK(p2.witness.kind == ProperWitness::Kind::prime_reduction);
  CHECK(p2.witness.prime == 2);
  CHECK(p2.witness.residue_gcd == L("1 + t"));

  CHECK(ideal_is_unit({Laurent::t_power(3), L("t^5 + 7")}).unit);
  CHECK(ideal_is_unit({Laurent::t_power(-2)}).unit);

  auto tre = ideal_is_unit({L("t^2 - t + 1")});
  CHECK_FALSE(tre.unit);
  CHECK(tre.witness.kind == ProperWitness::Kind::rational_gcd);

  auto zero = ideal_is_unit({Laurent(), Laurent()});
  CHECK_FALSE(zero.unit);
  CHECK(zero.witness.kind == ProperWitness::Kind::zero_ideal);

  CHECK_THROWS_AS(ideal_is_unit({}), parse_error);
}

TEST_CASE("ideal_is_unit agrees with bounded oracles") {
  mqtest::RNG rng(91);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> mode(0, 3);
  int unit_decided = 0, proper_decided = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Laurent> gens;
    int m = count(rng);
    for (int i = 0; i < m; ++i) gens.push_back(mqtest::random_laurent(rng, 2, 3, 1));
    int twist = mode(rng);
    if (twist == 1)
      for (auto& g : gens) g = g * Laurent::parse("t + 1");
    if (twist == 2)
      for (auto& g : gens) g = g * Laurent(Int(2));
    bool any = false;
    for (const auto& g : gens) any = any || !g.is_zero();
    if (!any) continue;

    auto decision = ideal_is_unit(gens);
    if (oracle_unit(gens, 1, 2)) {
      CHECK(decision.unit);
      ++unit_decided;
    }
    if (oracle_proper(gens)) {
      CHECK_FALSE(decision.unit);
      ++proper_decided;
    }
  }
  CHECK(unit_decided >= 10);
  CHECK(proper_decided >= 10);
}

TEST_CASE("elementary ideals on fixtures") {
  auto tre = trefoil_wirtinger();
  auto e0 = elementary_ideal(tre, 0);
  CHECK_FALSE(e0.decision.unit);
  REQUIRE(e0.generators.size() == 1);
  CHECK(e0.generators[0].unit_normalized() == Laurent::parse("1 - t + t^2"));
  auto e1 = elementary_ideal(tre, 1);
  CHECK(e1.decision.unit);
  auto e2 = elementary_ideal(tre, 2);
  CHECK(e2.decision.unit);

  auto granny =
      wirtinger_from_pd(pd_from_braid(BraidWord::parse("s1 s1 s1 s2 s2 s2"))).presentation;
  CHECK_FALSE(elementary_ideal(granny, 0).decision.unit);
  CHECK_FALSE(elementary_ideal(granny, 1).decision.unit);
  CHECK(elementary_ideal(granny, 2).decision.unit);
}

TEST_CASE("elementary ideal chain is monotone") {
  for (const char* braid : {"s1 s1 s1", "s1 s2^-1 s1 s2^-1", "s1 s1 s1 s2 s2 s2"}) {
    auto p = wirtinger_from_pd(pd_from_braid(BraidWord::parse(braid))).presentation;
    bool seen_unit = false;
    for (std::size_t k = 0; k <= p.generators().size(); ++k) {
      bool unit = elementary_ideal(p, k).decision.unit;
      if (seen_unit) CHECK(unit);
      seen_unit = seen_unit || unit;
    }
    CHECK(seen_unit);
  }
}

TEST_CASE("nakanishi lower bounds") {
  Presentation unknot({"x"}, {});
  CHECK(nakanishi_lower(unknot).value == 0);

  auto tre = nakanishi_lower(trefoil_wirtinger());
  CHECK(tre.value == 1);
  REQUIRE(tre.proper_ideal);
  CHECK(tre.proper_ideal->index == 0);
  CHECK(tre.unit_ideal.index == 1);

  auto granny =
      wirtinger_from_pd(pd_from_braid(BraidWord::parse("s1 s1 s1 s2 s2 s2"))).presentation;
  CHECK(nakanishi_lower(granny).value == 2);
}

TEST_CASE("nakanishi lower bound never exceeds the rank-bound interval") {
  for (const char* braid : {"s1 s1 s1", "s1 s2^-1 s1 s2^-1", "s1 s1 s1 s2 s2 s2",
                            "s1 s1 s1 s1 s1"}) {
    auto p = wirtinger_from_pd(pd_from_braid(BraidWord::parse(braid))).presentation;
    auto nak = nakanishi_lower(p);
    auto iv = mq_interval(p, Int(nak.value));  // throws if lower > upper
    CHECK(iv.lower == Int(nak.value));
    REQUIRE(iv.upper);
    CHECK(iv.lower <= *iv.upper);
  }
}

TEST_CASE("knot determinants") {
  CHECK(knot_determinant(trefoil_wirtinger()) == 3);
  CHECK(knot_determinant(Presentation({"x"}, {})) == 1);
  auto fig8 = wirtinger_from_pd(pd_from_braid(BraidWord::parse("s1 s2^-1 s1 s2^-1")));
  CHECK(knot_determinant(fig8.presentation) == 5);
}
