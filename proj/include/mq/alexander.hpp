#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mq/fox.hpp"
#include "mq/laurent.hpp"
#include "mq/presentation.hpp"

namespace mq {

// Presentation matrix of the Alexander module over Z[t, t^-1], obtained from
// the Fox Jacobian of a Wirtinger-style presentation after dropping one
// redundant relator and one generator column of weight +-1.
struct AlexanderMatrix {
  std::vector<std::vector<Laurent>> entries;  // (n-1) x (n-1)
  std::optional<std::size_t> dropped_relator;
  std::size_t dropped_column = 0;
  std::vector<Int> weights;  // generator images in H_1 = Z
};

AlexanderMatrix alexander_matrix(const Presentation& p);

// Infinite-cyclic abelianization weights of the generators; errors when H_1
// is not Z (the multivariable case is out of scope).
std::vector<Int> infinite_cyclic_weights(const Presentation& p);

// Determinant of the presentation matrix, normalized to the representative
// with lowest exponent 0 and positive leading coefficient.
Laurent alexander_polynomial(const Presentation& p);

Int knot_determinant(const Presentation& p);  // |Delta(-1)|

// Witness that an ideal is proper: either the rational gcd of the generators
// has positive degree, or they share a nonunit common divisor mod p.
struct ProperWitness {
  enum class Kind { rational_gcd, prime_reduction, zero_ideal };
  Kind kind = Kind::zero_ideal;
  Laurent rational_gcd;
  Int prime = 0;
  Laurent residue_gcd;
  std::string str() const;
};

// Verified record that 1 lies in the ideal: an integer combination
// sum combination[i] * gens[i] = constant, together with the primes dividing
// the constant, each of whose residue gcds is a unit.
struct UnitCertificate {
  std::vector<Laurent> combination;
  Int constant = 1;
  std::vector<Int> primes;
};

struct IdealDecision {
  bool unit = false;
  UnitCertificate certificate;  // meaningful when unit
  ProperWitness witness;        // meaningful when proper
};

// Complete decision procedure for the unit ideal in Z[t, t^-1]: rational
// stage (extended gcd over Q[t]) followed by finite-field checks at every
// prime dividing the cleared-denominator constant.
IdealDecision ideal_is_unit(const std::vector<Laurent>& gens);

struct ElementaryIdeal {
  std::size_t index = 0;
  std::vector<Laurent> generators;
  IdealDecision decision;
};

// E_k: ideal of (n-1-k)-minors of the Alexander presentation matrix, minors
// enumerated in lexicographic row/column subset order; empty minors make the
// ideal the unit ideal by convention.
ElementaryIdeal elementary_ideal(const Presentation& p, std::size_t k);

struct NakanishiLowerBound {
  std::size_t value = 0;
  std::optional<ElementaryIdeal> proper_ideal;  // E_{value-1}, when value > 0
  ElementaryIdeal unit_ideal;                   // E_value
};

// Largest k with E_{k-1} proper: the Alexander module cannot be generated by
// fewer than k elements, so m(K) >= k.
NakanishiLowerBound nakanishi_lower(const Presentation& p);

}  // namespace mq
