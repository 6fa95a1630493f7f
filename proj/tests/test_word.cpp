#include <doctest.h>

#include "helpers.hpp"
#include "mq/word.hpp"

using namespace mq;

TEST_CASE("free reduction basics") {
  CHECK(Word::parse("x x^-1").empty());
  CHECK(Word::parse("x y y^-1 x").str() == "x x");
  CHECK(Word::parse("x y x^-1 x y^-1").str() == "x");
}

TEST_CASE("products, inverses, conjugates, commutators") {
  Word x = Word::generator("x");
  Word y = Word::generator("y");
  CHECK(commutator(x, x).empty());
  CHECK(Word::parse("x y").inverse().str() == "y^-1 x^-1");
  CHECK(conjugate(y, x).str() == "x y x^-1");
  CHECK(commutator(x, y).str() == "x y x^-1 y^-1");
  CHECK((x * x.inverse()).empty());
}

TEST_CASE("exponent vectors") {
  auto v = Word::parse("x y x y^-1 x^-1 y^-1").exponent_vector({"x", "y"});
  CHECK(v == std::vector<Int>{1, -1});
  CHECK(Word().exponent_vector({"x", "y"}) == std::vector<Int>{0, 0});
  mqtest::RNG rng(7);
  for (int i = 0; i < 50; ++i) {
    Word u = mqtest::random_word(rng, {"x", "y", "z"}, 8);
    Word w = mqtest::random_word(rng, {"x", "y", "z"}, 8);
    CHECK(commutator(u, w).exponent_vector({"x", "y", "z"}) ==
          std::vector<Int>{0, 0, 0});
  }
  CHECK_THROWS_AS(Word::parse("q").exponent_vector({"x"}), parse_error);
}

TEST_CASE("reduction is idempotent and confluent against a stepwise oracle") {
  mqtest::RNG rng(42);
  std::uniform_int_distribution<std::size_t> pos_dist(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = mqtest::random_word(rng, {"x", "y", "z"}, 10);
    // insert random inverse pairs, then reduce every which way
    std::vector<Letter> raw = w.letters();
    for (int k = 0; k < 3; ++k) {
      Word g = mqtest::random_nonempty_word(rng, {"x", "y", "z"}, 1);
      Letter a = g.letters()[0];
      Letter b{a.gen, -a.sign};
      std::size_t at = pos_dist(rng) % (raw.size() + 1);
      raw.insert(raw.begin() + long(at), {a, b});
    }
    Word direct(raw);
    CHECK(direct == w);
    CHECK(mqtest::stepwise_reduce_oracle(rng, raw) == w);
  }
}

TEST_CASE("exponent vector is a homomorphism") {
  mqtest::RNG rng(43);
  auto gens = std::vector<std::string>{"x", "y", "z"};
  for (int trial = 0; trial < 100; ++trial) {
    Word u = mqtest::random_word(rng, gens, 8);
    Word v = mqtest::random_word(rng, gens, 8);
    auto eu = u.exponent_vector(gens);
    auto ev = v.exponent_vector(gens);
    auto euv = (u * v).exponent_vector(gens);
    for (std::size_t i = 0; i < gens.size(); ++i) CHECK(euv[i] == eu[i] + ev[i]);
  }
}

TEST_CASE("word text syntax round-trips") {
  for (const char* text : {"", "x", "x y^-1", "a_1 a_1 b^-1"}) {
    CHECK(Word::parse(text).str() == text);
  }
  CHECK_THROWS_AS(Word::parse("x^2"), parse_error);
  CHECK_THROWS_AS(Word::parse("x^"), parse_error);
}

TEST_CASE("powers and cyclic reduction") {
  Word x = Word::generator("x");
  Word y = Word::generator("y");
  CHECK((x * y).pow(2).str() == "x y x y");
  CHECK((x * y).pow(-1).str() == "y^-1 x^-1");
  CHECK((x * y * x.inverse()).cyclically_reduced().str() == "y");
}
