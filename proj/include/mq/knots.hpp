#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mq/presentation.hpp"

namespace mq {

// Planar diagram code in the Knot Atlas convention: X[a,b,c,d] lists the
// four edges at a crossing counterclockwise starting from the incoming
// understrand edge a.  Edges are labeled 1..2n along the orientation, so the
// understrand leaves at c = a+1 (mod 2n) and the overstrand pair {b, d} is
// consecutive as well: the crossing is negative when the overstrand runs
// b -> d (d = b+1) and positive when it runs d -> b.
//
// Worked trefoil trace, X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]: at X[1,4,2,5] the
// understrand runs 1 -> 2 and the overstrand 4 -> 5, a negative crossing;
// the same pattern at the other two crossings gives the left-handed trefoil
// with writhe -3.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  std::size_t crossing_count() const { return crossings.size(); }
  int edge_count() const { return int(2 * crossings.size()); }

  // Grammar: `X[a,b,c,d]` tuples separated by whitespace and/or commas.
  static PDCode parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

// Throws parse_error unless the code is a valid single-component knot
// diagram with sequential edge labels.
void validate_knot_pd(const PDCode& pd);
int pd_crossing_sign(const PDCode& pd, std::size_t k);

struct GaussEntry {
  int id = 0;
  bool over = false;
  int sign = 1;
  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
  friend auto operator<=>(const GaussEntry&, const GaussEntry&) = default;
};

// Gauss code of a virtual or classical knot diagram; virtual crossings are
// simply absent.  Each id appears exactly once as over and once as under,
// with matching signs; ids are contiguous 1..n.
struct GaussCode {
  std::vector<GaussEntry> entries;

  std::size_t crossing_count() const;
  bool empty() const { return entries.empty(); }

  // Grammar: concatenated tokens `O<k><sign>` / `U<k><sign>`, e.g.
  // "O1+U2+O3+U1+O2+U3+".
  static GaussCode parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
  friend auto operator<=>(const GaussCode&, const GaussCode&) = default;
};

void validate_gauss(const GaussCode& gc);

// Braid word on |strands| strands; letters +i / -i stand for sigma_i^{+-1}.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  // Grammar: whitespace-separated `s<i>` / `s<i>^-1`.
  static BraidWord parse(const std::string& text);
  std::string str() const;
};

// Closure of the braid; throws unless the closure is a knot.
PDCode pd_from_braid(const BraidWord& b);

// Gauss code read off a PD code by tracing the diagram.
GaussCode gauss_from_pd(const PDCode& pd);

// Wirtinger presentation: one generator per long arc, one relator
// x_out x_over^-e x_in^-1 x_over^e per crossing, with per-crossing metadata
// so local moves can name the relator they touch.
struct WirtingerCrossing {
  std::size_t relator_index = 0;
  std::string out_arc, in_arc, over_arc;
  int sign = 1;
};

struct WirtingerPresentation {
  Presentation presentation;
  std::vector<WirtingerCrossing> crossings;
};

WirtingerPresentation wirtinger_from_pd(const PDCode& pd);
WirtingerPresentation wirtinger_from_gauss(const GaussCode& gc);

// Over/under swap at one crossing.  The PD tuple is rotated so the new
// understrand's incoming edge comes first; Gauss letters swap O/U and the
// sign flips.
PDCode crossing_change(const PDCode& pd, std::size_t index);
GaussCode crossing_change(const GaussCode& gc, int id);

// Makes the crossing virtual: its two letters disappear; remaining ids are
// compacted preserving their order.
GaussCode virtualize(const GaussCode& gc, int id);

// The induced one-relator replacement on the Wirtinger presentation, with
// null-homology verdicts for both directions.
struct RelatorDelta {
  Presentation result;
  std::size_t relator_index = 0;
  Word old_relator, new_relator;
  bool new_null_homologous_in_source = false;
  bool old_null_homologous_in_result = false;
};

RelatorDelta crossing_change_relator_delta(const WirtingerPresentation& wp,
                                           std::size_t crossing);
RelatorDelta virtualize_relator_delta(const WirtingerPresentation& wp,
                                      std::size_t crossing);

// Reidemeister I and II reductions applied to exhaustion (virtual-legal,
// planarity never assumed).
GaussCode simplify_code(GaussCode gc);

// Lexicographic minimum over all rotations, reflections and id relabelings,
// by explicit enumeration.
GaussCode canonical_code(const GaussCode& gc);

struct UnknottingMove {
  bool virtualization = false;  // else crossing change
  int id = 0;                   // id in the canonical code it applies to
};

struct UnknottabilityCertificate {
  std::vector<UnknottingMove> moves;
  std::size_t virtualizations = 0;
  std::size_t crossing_changes = 0;
};

// Breadth-first search over canonical simplified codes using virtualization
// (budget max_virt) and crossing changes (budget max_cc), cost-free R1/R2
// simplification in between.  Sound, not complete.
std::optional<UnknottabilityCertificate> unknottability_search(const GaussCode& gc,
                                                               std::size_t max_virt,
                                                               std::size_t max_cc);

// Replays a certificate against the move/simplification primitives,
// independently of the search.
bool replay_unknottability(const GaussCode& gc, const UnknottabilityCertificate& cert);

// Conservative unknot recognition for knot-group presentations: a trivial
// Alexander polynomial alone is not enough, so "unknot" is claimed only when
// the presentation also Tietze-simplifies to a free group of rank one.
enum class UnknotVerdict { unknot, unknown };
UnknotVerdict unknot_verdict(const Presentation& p, std::size_t tietze_budget = 1000);

}  // namespace mq
