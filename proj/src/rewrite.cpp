#include "mq/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace mq {

bool shortlex_less(const LWord& a, const LWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

LWord free_reduce(const LWord& w) {
  LWord out;
  for (int l : w) {
    if (!out.empty() && out.back() == (l ^ 1))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

LWord concat(const LWord& a, const LWord& b) {
  LWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

LWord invert(const LWord& w) {
  LWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(*it ^ 1);
  return out;
}

}  // namespace

LWord RewriteSystem::encode(const Word& w) const {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < generators.size(); ++i) index[generators[i]] = int(i);
  LWord out;
  for (const auto& l : w.letters()) {
    auto it = index.find(l.gen);
    if (it == index.end()) throw parse_error("unknown generator \"" + l.gen + "\"");
    out.push_back(2 * it->second + (l.sign < 0 ? 1 : 0));
  }
  return out;
}

Word RewriteSystem::decode(const LWord& w) const {
  std::vector<Letter> ls;
  for (int l : w) ls.push_back(Letter{generators[std::size_t(l / 2)], l % 2 ? -1 : 1});
  return Word(std::move(ls));
}

LWord RewriteSystem::normal_form(LWord w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos)
      for (const auto& [lhs, rhs] : rules) {
        if (lhs.empty() || pos + lhs.size() > w.size()) continue;
        if (!std::equal(lhs.begin(), lhs.end(), w.begin() + long(pos))) continue;
        LWord next(w.begin(), w.begin() + long(pos));
        next.insert(next.end(), rhs.begin(), rhs.end());
        next.insert(next.end(), w.begin() + long(pos + lhs.size()), w.end());
        w = std::move(next);
        changed = true;
        break;
      }
  }
  return w;
}

Word RewriteSystem::normal_form(const Word& w) const { return decode(normal_form(encode(w))); }

namespace {

struct Completion {
  RewriteSystem rs;
  std::deque<std::pair<LWord, LWord>> pending;
  RewriteLimits limits;
  std::size_t steps = 0;
  bool overflowed = false;

  bool add_equation(const LWord& a, const LWord& b) {
    LWord na = rs.normal_form(a);
    LWord nb = rs.normal_form(b);
    if (na == nb) return true;
    if (shortlex_less(na, nb)) std::swap(na, nb);
    if (na.size() > limits.max_word_length) {
      overflowed = true;
      return false;
    }
    rs.rules.emplace_back(na, nb);
    if (rs.rules.size() > limits.max_rules) {
      overflowed = true;
      return false;
    }
    std::size_t self = rs.rules.size() - 1;

    // interreduce: any older rule whose lhs the new rule touches goes back
    // to the queue; right-hand sides are just renormalized
    for (std::size_t i = 0; i + 1 < rs.rules.size(); ++i) {
      auto [l, r] = rs.rules[i];
      RewriteSystem one;
      one.rules = {rs.rules[self]};
      if (one.normal_form(l) != l) {
        rs.rules[i].second.clear();
        rs.rules[i].first.clear();  // deactivate
        pending.emplace_back(l, r);
      } else {
        rs.rules[i].second = rs.normal_form(r);
      }
    }
    // queue critical pairs of the new rule with every active rule
    for (std::size_t i = 0; i < rs.rules.size(); ++i) {
      if (rs.rules[i].first.empty()) continue;
      queue_overlaps(rs.rules[self], rs.rules[i]);
      if (i != self) queue_overlaps(rs.rules[i], rs.rules[self]);
    }
    if (pending.size() > 100000) {
      overflowed = true;
      return false;
    }
    return true;
  }

  void queue_overlaps(const std::pair<LWord, LWord>& r1, const std::pair<LWord, LWord>& r2) {
    const auto& [l1, a1] = r1;
    const auto& [l2, a2] = r2;
    // suffix of l1 meets prefix of l2
    for (std::size_t k = 1; k <= std::min(l1.size(), l2.size()); ++k) {
      if (!std::equal(l1.end() - long(k), l1.end(), l2.begin())) continue;
      // w = l1 + tail(l2); reduce the left occurrence vs the right one
      LWord left = concat(a1, LWord(l2.begin() + long(k), l2.end()));
      LWord right = concat(LWord(l1.begin(), l1.end() - long(k)), a2);
      pending.emplace_back(left, right);
    }
    // l2 inside l1
    if (l2.size() < l1.size())
      for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
        if (!std::equal(l2.begin(), l2.end(), l1.begin() + long(p))) continue;
        LWord mid(l1.begin(), l1.begin() + long(p));
        mid.insert(mid.end(), a2.begin(), a2.end());
        mid.insert(mid.end(), l1.begin() + long(p + l2.size()), l1.end());
        pending.emplace_back(a1, mid);
      }
  }
};

}  // namespace

RewriteSystem knuth_bendix(const Presentation& p, const RewriteLimits& limits) {
  Completion c;
  c.limits = limits;
  c.rs.generators = p.generators();

  // free-reduction rules: g g^-1 -> empty, g^-1 g -> empty
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    c.rs.rules.push_back({{int(2 * i), int(2 * i + 1)}, {}});
    c.rs.rules.push_back({{int(2 * i + 1), int(2 * i)}, {}});
  }
  for (std::size_t i = 0; i < c.rs.rules.size(); ++i)
    for (std::size_t j = 0; j < c.rs.rules.size(); ++j)
      c.queue_overlaps(c.rs.rules[i], c.rs.rules[j]);

  for (const auto& r : p.relators()) c.pending.emplace_back(c.rs.encode(r), LWord{});

  while (!c.pending.empty() && !c.overflowed) {
    if (++c.steps > limits.max_steps) {
      c.overflowed = true;
      break;
    }
    auto [a, b] = c.pending.front();
    c.pending.pop_front();
    if (!c.add_equation(a, b)) break;
  }

  // drop deactivated rules
  RewriteSystem out;
  out.generators = c.rs.generators;
  for (auto& rule : c.rs.rules)
    if (!rule.first.empty()) out.rules.push_back(std::move(rule));
  out.complete = !c.overflowed && c.pending.empty();
  return out;
}

bool word_problem(const RewriteSystem& rs, const Word& w) {
  if (!rs.complete)
    throw hypothesis_error("word problem requires a complete rewriting system");
  return rs.normal_form(rs.encode(w)).empty();
}

NormalClosureResult normal_closure_member_bounded(const Presentation& p,
                                                  const Word& target,
                                                  const std::vector<Word>& seeds,
                                                  std::size_t depth, std::size_t width,
                                                  const RewriteLimits& limits) {
  RewriteSystem rs = knuth_bendix(p, limits);

  LWord start = rs.normal_form(rs.encode(target));
  if (start.empty()) return NormalClosureResult{true, {}};

  // conjugators: freely reduced words of length <= depth, shortlex order
  std::vector<LWord> conjugators;
  {
    std::vector<LWord> level{{}};
    conjugators.push_back({});
    for (std::size_t d = 0; d < depth; ++d) {
      std::vector<LWord> next;
      for (const auto& c : level)
        for (int l = 0; l < int(2 * p.generators().size()); ++l) {
          if (!c.empty() && c.back() == (l ^ 1)) continue;
          LWord e = c;
          e.push_back(l);
          next.push_back(e);
          conjugators.push_back(std::move(e));
        }
      level = std::move(next);
    }
  }

  struct Move {
    std::size_t conj, seed;
    int sign;
  };
  std::map<LWord, std::pair<LWord, Move>> parent;
  std::set<LWord> visited{start};
  std::deque<std::pair<LWord, std::size_t>> frontier{{start, 0}};
  const std::size_t state_cap = 200000;

  std::vector<LWord> seed_codes;
  for (const auto& s : seeds) seed_codes.push_back(rs.encode(s));

  while (!frontier.empty()) {
    auto [w, used] = frontier.front();
    frontier.pop_front();
    if (used >= width) continue;
    for (std::size_t ci = 0; ci < conjugators.size(); ++ci)
      for (std::size_t si = 0; si < seed_codes.size(); ++si)
        for (int sign : {+1, -1}) {
          // append c * s^-sign * c^-1
          LWord delta = concat(conjugators[ci],
                               concat(sign > 0 ? invert(seed_codes[si]) : seed_codes[si],
                                      invert(conjugators[ci])));
          LWord next = rs.normal_form(free_reduce(concat(w, delta)));
          if (visited.count(next)) continue;
          if (visited.size() >= state_cap) return {};
          visited.insert(next);
          parent[next] = {w, Move{ci, si, sign}};
          if (next.empty()) {
            // reconstruct: target = (delta_1 ... delta_k)^-1 rewritten as
            // conjugates with positive exponents, outermost first
            std::vector<ConjugateTerm> terms;
            LWord cur = next;
            while (cur != start) {
              auto& [prev, mv] = parent.at(cur);
              terms.push_back(ConjugateTerm{rs.decode(conjugators[mv.conj]), mv.seed,
                                            mv.sign});
              cur = prev;
            }
            return NormalClosureResult{true, terms};
          }
          frontier.emplace_back(next, used + 1);
        }
  }
  return {};
}

}  // namespace mq
