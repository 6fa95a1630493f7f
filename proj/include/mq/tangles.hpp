#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mq/ints.hpp"
#include "mq/knots.hpp"

namespace mq {

// Evaluates [a_1,...,a_n] as a_n + 1/(a_{n-1} + 1/(... + 1/a_1)),
// projectively, so intermediate infinities are fine.  Returns the reduced
// pair (p, q) with q > 0, or (1, 0) for the infinity tangle.
std::pair<Int, Int> tangle_fraction(const std::vector<Int>& cf);

// Floor-Euclidean expansion; inverse of tangle_fraction up to continued
// fraction equivalence.  (1, 0) yields [0, 0].
std::vector<Int> cf_from_fraction(const Int& p, const Int& q);

// Rational two-string tangle classified by its reduced Conway fraction.
struct RationalTangle {
  std::vector<Int> cf;
  Int p = 0, q = 1;

  static RationalTangle from_fraction(const Int& p, const Int& q);
  static RationalTangle from_cf(std::vector<Int> cf);
  bool is_integer() const { return q == 1; }
  bool is_infinity() const { return q == 0; }
  std::string str() const;
  friend bool operator==(const RationalTangle&, const RationalTangle&) = default;
};

// Which boundary points a tangle's two strands connect, by fraction parity:
// p even = horizontal (NW-NE, SW-SE), q even = vertical (NW-SW, NE-SE),
// both odd = diagonal (NW-SE, NE-SW).
enum class EndpointPairing { horizontal, vertical, diagonal };
std::string to_string(EndpointPairing e);
EndpointPairing pairing(const Int& p, const Int& q);
bool is_proper_replacement(const RationalTangle& a, const RationalTangle& b);

// Unoriented Montesinos link descriptor: ordered rational tangle fractions,
// closed up as the numerator closure of their horizontal sum.
struct MontesinosDescriptor {
  std::vector<RationalTangle> tangles;

  // Grammar: `K(p1/q1, p2/q2, ...)`, integer entries allowed as `c`.
  static MontesinosDescriptor parse(const std::string& text);
  std::string str() const;
  Rational total_fraction() const;
  friend bool operator==(const MontesinosDescriptor&, const MontesinosDescriptor&) = default;
};

// Sound, incomplete equivalence: integer shifts between positions, cyclic
// rotation, reversal, decided by canonicalizing the cyclic sequence of
// fractional parts together with the preserved total fraction.  A false
// result means "not equivalent by the implemented moves".
bool montesinos_equiv(const MontesinosDescriptor& a, const MontesinosDescriptor& b);

struct TwoBridgeLink {
  Int p = 0;
  Int q = 0;
  std::string str() const;
};

enum class LinkClass { unknot, knot, two_component_link };
std::string to_string(LinkClass c);

// |p| = 1 unknot, p odd knot, p even (including 0) two-component link.
LinkClass two_bridge_classify(const TwoBridgeLink& tb);

// Closure type of a tangle list: integer entries merge additively; with at
// most two genuine (non-integer) tangles left the closure is two-bridge,
// with three or more it is certifiably not the unknot.
struct ClosureClassification {
  std::optional<TwoBridgeLink> two_bridge;
  bool definitely_not_unknot = false;
};

ClosureClassification classify_montesinos_closure(const std::vector<RationalTangle>& ts);

struct ReplaceResult {
  std::optional<MontesinosDescriptor> montesinos;
  std::optional<TwoBridgeLink> two_bridge;
};

// Replaces one tangle (pairing-compatible, else error).  A 3-entry
// descriptor with an integer replacement collapses to the two-bridge link of
// the closure; other cases stay Montesinos.
ReplaceResult replace_tangle(const MontesinosDescriptor& m, std::size_t position,
                             const RationalTangle& replacement);

// Alternating-style diagram: per continued-fraction entry a twist region
// (horizontal and vertical alternating), tangles summed horizontally,
// numerator closure.  The all-zero descriptor yields the empty code.
PDCode pd_for_montesinos(const MontesinosDescriptor& m);

// Strand-tracing oracle: builds the twist diagram of the tangle and follows
// its strands to read off the endpoint pairing directly.
EndpointPairing traced_pairing(const RationalTangle& t);

struct RationalUnknottingCertificate {
  std::size_t position = 0;
  RationalTangle replacement;
  TwoBridgeLink resulting;
  std::string trace;
};

// Deterministic scan over pairing-compatible replacement fractions with
// |p'|, q' <= bound (integer tangles first); returns the first replacement
// whose closure classifies as the unknot, establishing u_q <= 1.
std::optional<RationalUnknottingCertificate> rational_unknotting_certificate(
    const MontesinosDescriptor& m, const Int& bound);

}  // namespace mq
