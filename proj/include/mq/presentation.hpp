#pragma once

#include <string>
#include <vector>

#include "mq/matrix.hpp"
#include "mq/normal_form.hpp"
#include "mq/word.hpp"

namespace mq {

// Invariants of a finitely generated abelian group: free rank plus the
// torsion chain d_1 | d_2 | ... with every d_i > 1.
struct AbelianInvariants {
  Int free_rank = 0;
  std::vector<Int> torsion;
  Int minimal_generators = 0;  // free_rank + number of torsion factors

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
  std::string str() const;
};

// Finite group presentation <S | R>.  Generators are ordered and unique;
// relators are stored as a multiset of freely reduced words over S.
// Immutable after construction.
class Presentation {
public:
  Presentation() = default;  // empty presentation of the trivial group
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  // Rows = relators, columns = generators, entry = signed occurrence count.
  IntMatrix exponent_matrix() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

AbelianInvariants abelianization(const Presentation& p);

// True iff w maps into the commutator subgroup of the presented group,
// i.e. its exponent vector lies in the row lattice of the relator matrix.
bool is_null_homologous(const Word& w, const Presentation& p);

// R_0 / R_G / R_G' multiset split of two presentations on the same ordered
// generator list.  With up_to_cyclic set, relators are matched up to cyclic
// rotation and inversion instead of exact word equality.
struct PresentationDiff {
  std::vector<Word> common;      // R_0
  std::vector<Word> only_left;   // R_G
  std::vector<Word> only_right;  // R_G'
};

PresentationDiff diff(const Presentation& left, const Presentation& right,
                      bool up_to_cyclic = false);

// <S | R \ {old_r}, new_r>.  With enforce_null_homologous set, checks that
// new_r is null-homologous in p and old_r is null-homologous in the result,
// reporting which side failed.
Presentation replace_relator(const Presentation& p, const Word& old_r, const Word& new_r,
                             bool enforce_null_homologous);

bool h1_equal(const Presentation& a, const Presentation& b);

// Removes g using a relator that contains it exactly once; every other
// relator is rewritten by the solved expression.
Presentation eliminate_generator(const Presentation& p, const std::string& g,
                                 const Word& defining);

struct TietzeResult {
  Presentation simplified;
  std::size_t rank_upper_bound;  // generator count of the simplified presentation
};

// Greedy, budgeted simplification: trivial-relator deletion, single-occurrence
// generator elimination, shorter products with existing relators, cyclic
// reduction.  Never backtracks; the bound is an upper bound only.
TietzeResult tietze_simplify(const Presentation& p, std::size_t budget = 1000);

}  // namespace mq
