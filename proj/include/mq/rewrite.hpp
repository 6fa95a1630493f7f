#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mq/presentation.hpp"
#include "mq/word.hpp"

namespace mq {

// Monoid letters over a presentation's generator list: letter 2i is
// generator i, letter 2i+1 its inverse.  Shortlex with this numbering
// orders each inverse immediately after its generator.
using LWord = std::vector<int>;

struct RewriteLimits {
  std::size_t max_rules = 256;
  std::size_t max_word_length = 64;
  std::size_t max_steps = 20000;
};

// String rewriting system over a presentation's symbols.  Every rule is a
// consequence of the relators and strictly shortlex-decreasing, so reduction
// terminates and "reduces to empty" soundly certifies triviality in the
// group even when the system is not complete.  The complete flag is set only
// when all critical pairs resolved within budget.
class RewriteSystem {
public:
  std::vector<std::string> generators;
  std::vector<std::pair<LWord, LWord>> rules;
  bool complete = false;

  LWord encode(const Word& w) const;
  Word decode(const LWord& w) const;
  LWord normal_form(LWord w) const;
  Word normal_form(const Word& w) const;
};

bool shortlex_less(const LWord& a, const LWord& b);

// Knuth-Bendix completion on shortlex.  Always returns the (sound) system
// built so far; complete == false means the budget ran out (Inconclusive).
RewriteSystem knuth_bendix(const Presentation& p, const RewriteLimits& limits = {});

// True iff w reduces to the identity; requires a complete system.
bool word_problem(const RewriteSystem& rs, const Word& w);

// target expressed as a product of conjugates c * seed^sign * c^-1.
struct ConjugateTerm {
  Word conjugator;
  std::size_t seed_index;
  int sign;
};

struct NormalClosureResult {
  bool yes = false;
  std::vector<ConjugateTerm> expression;
};

// Bounded certificate search: expresses target, modulo p's relators, as a
// product of at most `width` conjugates of seeds by conjugators of length at
// most `depth`.  Sound, not complete; exploration order is breadth-first
// shortlex, so results are deterministic.
NormalClosureResult normal_closure_member_bounded(const Presentation& p,
                                                  const Word& target,
                                                  const std::vector<Word>& seeds,
                                                  std::size_t depth, std::size_t width,
                                                  const RewriteLimits& limits = {});

}  // namespace mq
