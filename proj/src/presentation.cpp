#include "mq/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mq {

std::string AbelianInvariants::str() const {
  std::ostringstream out;
  bool first = true;
  for (Int i = 0; i < free_rank; ++i) {
    if (!first) out << " + ";
    out << "Z";
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw parse_error("empty generator name");
    if (!seen.insert(g).second) throw parse_error("duplicate generator name \"" + g + "\"");
  }
  for (const auto& r : relators_)
    for (const auto& l : r.letters())
      if (!seen.count(l.gen))
        throw parse_error("relator uses unknown generator \"" + l.gen + "\"");
}

IntMatrix Presentation::exponent_matrix() const {
  IntMatrix m(relators_.size(), generators_.size());
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    auto v = relators_[i].exponent_vector(generators_);
    for (std::size_t j = 0; j < generators_.size(); ++j) m(i, j) = v[j];
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  auto dec = snf(p.exponent_matrix());
  AbelianInvariants out;
  out.free_rank = Int(p.generators().size()) - Int(dec.invariant_factors.size());
  for (const auto& d : dec.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  out.minimal_generators = out.free_rank + Int(out.torsion.size());
  return out;
}

bool is_null_homologous(const Word& w, const Presentation& p) {
  auto v = w.exponent_vector(p.generators());
  return lattice_member(v, p.exponent_matrix()).member;
}

namespace {

// Canonical key for multiset matching; looser mode takes the minimum over
// all cyclic rotations of the cyclically reduced word and of its inverse.
std::string relator_key(const Word& w, bool up_to_cyclic) {
  if (!up_to_cyclic) return w.str();
  Word base = w.cyclically_reduced();
  std::string best;
  bool have = false;
  for (const Word& cand : {base, base.inverse()}) {
    auto ls = cand.letters();
    std::size_t n = ls.size();
    if (n == 0) return "";
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Letter> rot(ls.begin() + long(s), ls.end());
      rot.insert(rot.end(), ls.begin(), ls.begin() + long(s));
      std::string key = Word(std::move(rot)).str();
      if (!have || key < best) {
        best = std::move(key);
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

PresentationDiff diff(const Presentation& left, const Presentation& right,
                      bool up_to_cyclic) {
  if (left.generators() != right.generators())
    throw hypothesis_error("diff requires identical ordered generator lists");
  std::map<std::string, int> balance;
  for (const auto& r : right.relators()) ++balance[relator_key(r, up_to_cyclic)];

  PresentationDiff out;
  std::map<std::string, int> used = balance;
  for (const auto& r : left.relators()) {
    auto key = relator_key(r, up_to_cyclic);
    auto it = used.find(key);
    if (it != used.end() && it->second > 0) {
      --it->second;
      out.common.push_back(r);
    } else {
      out.only_left.push_back(r);
    }
  }
  // remaining right-multiplicities are R_G'
  std::map<std::string, int> remaining = used;
  for (const auto& r : right.relators()) {
    auto key = relator_key(r, up_to_cyclic);
    auto it = remaining.find(key);
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      out.only_right.push_back(r);
    }
  }
  return out;
}

Presentation replace_relator(const Presentation& p, const Word& old_r, const Word& new_r,
                             bool enforce_null_homologous) {
  auto rel = p.relators();
  auto it = std::find(rel.begin(), rel.end(), old_r);
  if (it == rel.end())
    throw hypothesis_error("relator \"" + old_r.str() + "\" not present");
  *it = new_r;
  Presentation result(p.generators(), std::move(rel));
  if (enforce_null_homologous) {
    if (!is_null_homologous(new_r, p))
      throw hypothesis_error("replacement \"" + new_r.str() +
                             "\" is not null-homologous in the source group");
    if (!is_null_homologous(old_r, result))
      throw hypothesis_error("replaced relator \"" + old_r.str() +
                             "\" is not null-homologous in the resulting group");
  }
  return result;
}

bool h1_equal(const Presentation& a, const Presentation& b) {
  return abelianization(a) == abelianization(b);
}

namespace {

std::size_t occurrence_count(const Word& w, const std::string& g) {
  std::size_t n = 0;
  for (const auto& l : w.letters())
    if (l.gen == g) ++n;
  return n;
}

Word substitute(const Word& w, const std::string& g, const Word& expr) {
  std::vector<Letter> out;
  Word inv = expr.inverse();
  for (const auto& l : w.letters()) {
    if (l.gen != g) {
      out.push_back(l);
      continue;
    }
    const Word& rep = l.sign > 0 ? expr : inv;
    out.insert(out.end(), rep.letters().begin(), rep.letters().end());
  }
  return Word(std::move(out));
}

}  // namespace

Presentation eliminate_generator(const Presentation& p, const std::string& g,
                                 const Word& defining) {
  auto rel = p.relators();
  auto it = std::find(rel.begin(), rel.end(), defining);
  if (it == rel.end()) throw hypothesis_error("defining relator not present");
  if (occurrence_count(defining, g) != 1)
    throw hypothesis_error("generator \"" + g + "\" does not occur exactly once");

  // defining = u g^e v, so g = (u^-1 v^-1)^e
  const auto& ls = defining.letters();
  std::size_t pos = 0;
  while (ls[pos].gen != g) ++pos;
  Word u(std::vector<Letter>(ls.begin(), ls.begin() + long(pos)));
  Word v(std::vector<Letter>(ls.begin() + long(pos) + 1, ls.end()));
  Word solved = u.inverse() * v.inverse();
  if (ls[pos].sign < 0) solved = solved.inverse();

  rel.erase(it);
  std::vector<Word> rewritten;
  for (const auto& r : rel) rewritten.push_back(substitute(r, g, solved));

  std::vector<std::string> gens;
  for (const auto& name : p.generators())
    if (name != g) gens.push_back(name);
  return Presentation(std::move(gens), std::move(rewritten));
}

TietzeResult tietze_simplify(const Presentation& p, std::size_t budget) {
  Presentation cur = p;
  std::size_t spent = 0;

  auto charge = [&](std::size_t n = 1) {
    spent += n;
    return spent <= budget;
  };

  bool progress = true;
  while (progress && spent < budget) {
    progress = false;

    // cyclic reduction + trivial relator deletion + duplicate removal
    {
      std::vector<Word> rel;
      std::set<std::string> seen;
      bool changed = false;
      for (const auto& r : cur.relators()) {
        Word c = r.cyclically_reduced();
        if (c != r) changed = true;
        if (c.empty()) {
          changed = true;
          continue;
        }
        auto key = relator_key(c, /*up_to_cyclic=*/true);
        if (!seen.insert(key).second) {
          changed = true;
          continue;
        }
        rel.push_back(c);
      }
      if (changed) {
        cur = Presentation(cur.generators(), std::move(rel));
        progress = true;
        if (!charge()) break;
        continue;
      }
    }

    // generator elimination: pick the shortest defining relator available
    {
      std::size_t best_rel = cur.relators().size();
      std::string best_gen;
      for (std::size_t i = 0; i < cur.relators().size(); ++i) {
        for (const auto& g : cur.generators()) {
          if (occurrence_count(cur.relators()[i], g) != 1) continue;
          if (best_rel == cur.relators().size() ||
              cur.relators()[i].length() < cur.relators()[best_rel].length()) {
            best_rel = i;
            best_gen = g;
          }
          break;
        }
      }
      if (best_rel < cur.relators().size()) {
        cur = eliminate_generator(cur, best_gen, cur.relators()[best_rel]);
        progress = true;
        if (!charge()) break;
        continue;
      }
    }

    // greedy length reduction against other relators
    {
      auto rel = cur.relators();
      bool changed = false;
      for (std::size_t i = 0; i < rel.size() && !changed; ++i)
        for (std::size_t j = 0; j < rel.size() && !changed; ++j) {
          if (i == j) continue;
          for (const Word& cand :
               {rel[i] * rel[j], rel[i] * rel[j].inverse(), rel[j] * rel[i],
                rel[j].inverse() * rel[i]}) {
            if (cand.length() < rel[i].length()) {
              rel[i] = cand;
              changed = true;
              break;
            }
          }
        }
      if (changed) {
        cur = Presentation(cur.generators(), std::move(rel));
        progress = true;
        if (!charge()) break;
        continue;
      }
    }
  }

  return TietzeResult{cur, cur.generators().size()};
}

}  // namespace mq
