#include <doctest.h>

#include "helpers.hpp"
#include "mq/presentation.hpp"

using namespace mq;

namespace {

Word W(const char* s) { return Word::parse(s); }

Presentation trefoil2() {
  return Presentation({"x", "y"}, {W("x y x y^-1 x^-1 y^-1")});
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation({"x", "x"}, {}), parse_error);
  CHECK_THROWS_AS(Presentation({"x"}, {W("y")}), parse_error);
}

TEST_CASE("abelianization fixtures") {
  auto tre = abelianization(trefoil2());
  CHECK(tre.free_rank == 1);
  CHECK(tre.torsion.empty());
  CHECK(tre.minimal_generators == 1);

  auto hopf = abelianization(Presentation({"x", "y"}, {commutator(W("x"), W("y"))}));
  CHECK(hopf.free_rank == 2);
  CHECK(hopf.minimal_generators == 2);

  auto z5 = abelianization(Presentation({"x"}, {W("x x x x x")}));
  CHECK(z5.free_rank == 0);
  CHECK(z5.torsion == std::vector<Int>{5});
}

TEST_CASE("null homology") {
  auto p = trefoil2();
  CHECK(is_null_homologous(commutator(W("x"), W("y")), p));
  CHECK(is_null_homologous(W("x y^-1"), p));
  CHECK_FALSE(is_null_homologous(W("x"), p));
  CHECK_THROWS_AS(is_null_homologous(W("q"), p), parse_error);
}

TEST_CASE("diff splits multisets") {
  auto p = trefoil2();
  auto same = diff(p, p);
  CHECK(same.only_left.empty());
  CHECK(same.only_right.empty());
  CHECK(same.common.size() == 1);

  Presentation q({"x", "y"}, {W("x y^-1")});
  auto d = diff(p, q);
  CHECK(d.common.empty());
  CHECK(d.only_left.size() == 1);
  CHECK(d.only_right.size() == 1);

  Presentation extra({"x", "y"}, {W("x y x y^-1 x^-1 y^-1"), W("x y^-1")});
  auto e = diff(p, extra);
  CHECK(e.common.size() == 1);
  CHECK(e.only_left.empty());
  CHECK(e.only_right.size() == 1);

  CHECK_THROWS_AS(diff(p, Presentation({"y", "x"}, {})), hypothesis_error);
}

TEST_CASE("diff round-trip reassembles both inputs") {
  mqtest::RNG rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = mqtest::random_presentation(rng);
    auto q = Presentation(p.generators(),
                          {p.relators().begin(),
                           p.relators().begin() + long(p.relators().size() / 2)});
    auto d = diff(p, q);
    auto as_multiset = [](std::vector<Word> ws) {
      std::vector<std::string> keys;
      for (const auto& w : ws) keys.push_back(w.str());
      std::sort(keys.begin(), keys.end());
      return keys;
    };
    auto left = d.common;
    left.insert(left.end(), d.only_left.begin(), d.only_left.end());
    auto right = d.common;
    right.insert(right.end(), d.only_right.begin(), d.only_right.end());
    CHECK(as_multiset(left) == as_multiset(p.relators()));
    CHECK(as_multiset(right) == as_multiset(q.relators()));
  }
}

TEST_CASE("diff with cyclic matching") {
  Presentation a({"x", "y"}, {W("x y x^-1 y^-1")});
  Presentation b({"x", "y"}, {W("y x^-1 y^-1 x")});  // a rotation
  auto strict = diff(a, b);
  CHECK(strict.common.empty());
  auto loose = diff(a, b, /*up_to_cyclic=*/true);
  CHECK(loose.common.size() == 1);
}

TEST_CASE("replace_relator") {
  auto p = trefoil2();
  auto q = replace_relator(p, W("x y x y^-1 x^-1 y^-1"), W("x y^-1"), true);
  CHECK(q.relators().size() == 1);
  CHECK(q.relators()[0] == W("x y^-1"));

  // old relator not null-homologous in the result
  Presentation r({"x", "y"}, {W("x y^-1")});
  CHECK_THROWS_AS(replace_relator(r, W("x y^-1"), W("x"), true), hypothesis_error);
  CHECK_NOTHROW(replace_relator(r, W("x y^-1"), W("x"), false));

  CHECK(replace_relator(p, p.relators()[0], p.relators()[0], true) == p);
  CHECK_THROWS_AS(replace_relator(p, W("x"), W("y"), false), hypothesis_error);
}

TEST_CASE("h1_equal") {
  auto p = trefoil2();
  CHECK(h1_equal(p, p));
  CHECK(h1_equal(p, Presentation({"a"}, {})));
  CHECK_FALSE(h1_equal(Presentation({"x"}, {W("x x")}),
                       Presentation({"x"}, {W("x x x")})));
}

TEST_CASE("eliminate_generator") {
  Presentation p({"x", "y"}, {W("y x^-1 x^-1")});
  auto q = eliminate_generator(p, "y", W("y x^-1 x^-1"));
  CHECK(q.generators() == std::vector<std::string>{"x"});
  CHECK(q.relators().empty());

  Presentation two({"x", "y"}, {W("y x^-1 x^-1"), W("y y")});
  auto r = eliminate_generator(two, "y", W("y x^-1 x^-1"));
  CHECK(r.generators() == std::vector<std::string>{"x"});
  REQUIRE(r.relators().size() == 1);
  CHECK(r.relators()[0] == W("x x x x"));

  CHECK_THROWS_AS(eliminate_generator(two, "y", W("y y")), hypothesis_error);
}

TEST_CASE("eliminate_generator preserves abelianization") {
  mqtest::RNG rng(33);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 30; ++trial) {
    auto p = mqtest::random_presentation(rng);
    for (const auto& rel : p.relators()) {
      std::string gen;
      for (const auto& g : p.generators()) {
        std::size_t count = 0;
        for (const auto& l : rel.letters())
          if (l.gen == g) ++count;
        if (count == 1) {
          gen = g;
          break;
        }
      }
      if (gen.empty()) continue;
      auto before = abelianization(p);
      auto after = abelianization(eliminate_generator(p, gen, rel));
      CHECK(after.torsion == before.torsion);
      CHECK(after.free_rank == before.free_rank);
      ++done;
      break;
    }
  }
  CHECK(done >= 20);
}

TEST_CASE("tietze simplification") {
  // 3-arc trefoil Wirtinger presentation: each arc is a conjugate of the next
  Presentation wirt({"a", "b", "c"},
                    {W("b c a^-1 c^-1"), W("c a b^-1 a^-1"), W("a b c^-1 b^-1")});
  auto t = tietze_simplify(wirt);
  CHECK(t.rank_upper_bound <= 2);
  CHECK(h1_equal(t.simplified, wirt));

  Presentation killer({"x", "y"}, {W("x")});
  auto k = tietze_simplify(killer);
  CHECK(k.rank_upper_bound == 1);

  auto p = trefoil2();
  auto fixed = tietze_simplify(p);
  CHECK(fixed.simplified == p);  // nothing fires on the minimal presentation
}

TEST_CASE("abelianization invariant under null replacements and tietze") {
  mqtest::RNG rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = mqtest::random_presentation(rng);
    auto before = abelianization(p);
    auto q = mqtest::random_null_replacement(rng, p);
    CHECK(abelianization(q) == before);
    auto t = tietze_simplify(p, 200);
    CHECK(abelianization(t.simplified) == before);
  }
}

TEST_CASE("null homology matches augmented-abelianization cross-check") {
  mqtest::RNG rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = mqtest::random_presentation(rng);
    Word w = mqtest::random_word(rng, p.generators(), 6);
    auto rel = p.relators();
    rel.push_back(w);
    bool same_h1 = abelianization(Presentation(p.generators(), rel)) == abelianization(p);
    CHECK(is_null_homologous(w, p) == same_h1);
  }
}
