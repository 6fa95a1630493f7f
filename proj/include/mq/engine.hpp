#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mq/presentation.hpp"
#include "mq/rewrite.hpp"

namespace mq {

enum class Provenance { transfer, rank_bound, user };
enum class WitnessStatus { unverified, necessary_checks_passed, verified, refuted };

std::string to_string(Provenance p);
std::string to_string(WitnessStatus s);

// A claimed normal generating set for the commutator subgroup of the
// presented group: words r_i over the generators whose images normally
// generate [G,G].  Construction enforces the necessary condition that every
// word is null-homologous; status only ever moves forward, except to refuted.
struct NormalGeneratorWitness {
  Presentation presentation;
  std::vector<Word> words;
  Provenance provenance = Provenance::user;
  WitnessStatus status = WitnessStatus::unverified;
};

NormalGeneratorWitness make_witness(Presentation p, std::vector<Word> words,
                                    Provenance prov,
                                    WitnessStatus status = WitnessStatus::unverified);

// Theorem-1 transfer: given <S|R>, <S|R'> with equal H_1 and the relators
// unique to R' null-homologous in the source group, a witness of size k for
// the source yields one of size #R_G + k for the target.
NormalGeneratorWitness transfer_ngs(const Presentation& source,
                                    const Presentation& target,
                                    const NormalGeneratorWitness& witness);

// Elementary Nielsen move on a generating tuple (and the corresponding free
// group automorphism): swap two generators, invert one, or right-multiply
// one by a power of another.
struct NielsenMove {
  enum class Kind { swap, invert, multiply };
  Kind kind;
  std::size_t i = 0, j = 0;
  Int exponent = 0;  // multiply: s_i <- s_i * s_j^exponent
};

Word apply_nielsen(const std::vector<NielsenMove>& moves, const Word& w,
                   const std::vector<std::string>& gens);
Word apply_nielsen_inverse(const std::vector<NielsenMove>& moves, const Word& w,
                           const std::vector<std::string>& gens);

// Constructive rank bound: after a Nielsen change of basis the first h
// generators map onto a generating set of H_1; the witness consists of the
// h(h-1)/2 pairwise commutators of those generators plus one expression word
// per remaining generator, all written in the original generators.  Size is
// exactly r + h(h-3)/2.
struct RankBoundCertificate {
  std::vector<NielsenMove> moves;
  std::vector<Word> transformed_generators;
  std::size_t h = 0;
  IntMatrix coefficients;  // (r-h) x h solved coefficients
  NormalGeneratorWitness witness;
};

RankBoundCertificate rank_bound_ngs(const Presentation& p);

enum class VerifyStrategy { necessary_only, bounded_search, completion };

struct VerifyOptions {
  VerifyStrategy strategy = VerifyStrategy::necessary_only;
  std::size_t depth = 2;
  std::size_t width = 3;
  RewriteLimits limits;
};

// Checks a witness as far as decidable: necessary conditions always; with
// completion, a finished Knuth-Bendix system decides the abelian quotient
// exactly (verified or refuted); with bounded search, each generator-pair
// commutator must be expressed inside the normal closure of the witness.
WitnessStatus verify_ngs(const Presentation& p, const NormalGeneratorWitness& witness,
                         const VerifyOptions& opts = {});

struct CertificateRef {
  std::string kind;
  std::string detail;
};

// Bracketing of the minimal number of normal generators of [G,G]; bare
// values are never reported, only certified intervals.
struct MQInterval {
  Int lower = 0;
  std::optional<Int> upper;
  CertificateRef lower_certificate;
  CertificateRef upper_certificate;
};

MQInterval mq_interval(const Presentation& p, std::optional<Int> nakanishi_lower = {},
                       const std::vector<NormalGeneratorWitness>& user_witnesses = {},
                       std::size_t tietze_budget = 1000);

struct DistanceBounds {
  Int lower = 0;
  Int upper = 0;
};

// |a(G)-a(G')| <= d(G,G') <= r(G)+r(G')+h(h-3); requires equal H_1.
DistanceBounds presentation_distance_bounds(const Presentation& p, const Presentation& q,
                                            const MQInterval& ip, const MQInterval& iq,
                                            std::size_t tietze_budget = 1000);

struct MoveCatalogEntry {
  std::string name;
  int tangle_strands;  // n
  int relator_cost;    // n - 1
  std::vector<std::string> applicable_objects;
};

const std::vector<MoveCatalogEntry>& move_catalog();
const MoveCatalogEntry& catalog_entry(const std::string& name);

// ceil(gap / relator_cost) where gap is the certified interval separation.
Int gordian_lower_bound(const MQInterval& a, const MQInterval& b,
                        const MoveCatalogEntry& move);

}  // namespace mq
