#pragma once

#include <map>
#include <string>

#include "mq/laurent.hpp"
#include "mq/word.hpp"

namespace mq {

// Element of the integral group ring of the free group: a finite formal sum
// of freely reduced words with nonzero integer coefficients.
class GroupRingElement {
public:
  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, const Int& c = Int(1));

  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement operator-() const;
  friend GroupRingElement operator+(const GroupRingElement&, const GroupRingElement&);
  friend GroupRingElement operator-(const GroupRingElement&, const GroupRingElement&);
  // left/right translation by a group element
  GroupRingElement left_mul(const Word& w) const;
  GroupRingElement right_mul(const Word& w) const;
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
  void add_term(const Word& w, const Int& c);
  std::map<Word, Int> terms_;
};

// Free derivative: d(g)/dg = 1, d(g^-1)/dg = -g^-1, d(uv)/dg = du + u dv.
GroupRingElement fox_derivative(const Word& w, const std::string& g);

// Ring map to Z[t, t^-1] sending each word to t^(weighted exponent sum).
// The weights are the generator images in the infinite cyclic abelianization.
Laurent abelianize_t(const GroupRingElement& e, const std::map<std::string, Int>& weights);

}  // namespace mq
