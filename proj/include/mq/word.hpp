#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mq/ints.hpp"

namespace mq {

// One signed generator occurrence.  Generator names are nonempty strings of
// alphanumerics/underscores; the sign is +1 or -1.
struct Letter {
  std::string gen;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word in the free group on named generators.  The empty
// word is the identity.  All operations return reduced words; instances are
// immutable after construction and safe to share.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> raw) : letters_(free_reduce(std::move(raw))) {}

  static Word generator(const std::string& name, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word pow(long e) const;

  // Signed occurrence counts with respect to an ordered basis.  Throws
  // parse_error naming any symbol of the word missing from the basis.
  std::vector<Int> exponent_vector(const std::vector<std::string>& basis) const;

  // Strips matching head/tail letters (w = u v u^-1 becomes v).
  Word cyclically_reduced() const;

  // Text form: whitespace-separated tokens `name` or `name^-1`; the empty
  // string is the identity.  parse/str round-trip exactly.
  static Word parse(const std::string& text);
  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  static std::vector<Letter> free_reduce(std::vector<Letter> raw);
  std::vector<Letter> letters_;
};

Word reduce(std::vector<Letter> raw);
Word multiply(const Word& u, const Word& v);
Word inverse(const Word& u);
// conjugate(u, c) = c u c^-1
Word conjugate(const Word& u, const Word& by);
// commutator(u, v) = u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);

}  // namespace mq
