#include "mq/fox.hpp"

namespace mq {

GroupRingElement::GroupRingElement(const Word& w, const Int& c) { add_term(w, c); }

void GroupRingElement::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  return a + (-b);
}

GroupRingElement GroupRingElement::left_mul(const Word& w) const {
  GroupRingElement out;
  for (const auto& [u, c] : terms_) out.add_term(w * u, c);
  return out;
}

GroupRingElement GroupRingElement::right_mul(const Word& w) const {
  GroupRingElement out;
  for (const auto& [u, c] : terms_) out.add_term(u * w, c);
  return out;
}

GroupRingElement fox_derivative(const Word& w, const std::string& g) {
  GroupRingElement out;
  Word prefix;
  for (const auto& l : w.letters()) {
    if (l.gen == g) {
      if (l.sign > 0) {
        out = out + GroupRingElement(prefix);
      } else {
        out = out - GroupRingElement(prefix * Word::generator(g, -1));
      }
    }
    prefix = prefix * Word::generator(l.gen, l.sign);
  }
  return out;
}

Laurent abelianize_t(const GroupRingElement& e, const std::map<std::string, Int>& weights) {
  Laurent out;
  for (const auto& [w, c] : e.terms()) {
    Int expo = 0;
    for (const auto& l : w.letters()) {
      auto it = weights.find(l.gen);
      if (it == weights.end())
        throw parse_error("no abelianization weight for generator \"" + l.gen + "\"");
      expo += Int(l.sign) * it->second;
    }
    if (expo > Int(1) << 30 || expo < -(Int(1) << 30))
      throw internal_error("abelianize_t: exponent out of range");
    out = out + Laurent::t_power(static_cast<long>(expo), c);
  }
  return out;
}

}  // namespace mq
