#include "mq/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mq/error.hpp"

namespace mq {

std::vector<Letter> Word::free_reduce(std::vector<Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (auto& l : raw) {
    if (l.sign != 1 && l.sign != -1) throw parse_error("letter sign must be +1 or -1");
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  return out;
}

Word Word::generator(const std::string& name, int sign) {
  return Word(std::vector<Letter>{Letter{name, sign}});
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(Letter{it->gen, -it->sign});
  Word w;
  w.letters_ = std::move(out);  // already reduced
  return w;
}

Word Word::pow(long e) const {
  Word base = e < 0 ? inverse() : *this;
  long n = e < 0 ? -e : e;
  Word acc;
  for (long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

std::vector<Int> Word::exponent_vector(const std::vector<std::string>& basis) const {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<Int> v(basis.size(), Int(0));
  for (const auto& l : letters_) {
    auto it = index.find(l.gen);
    if (it == index.end())
      throw parse_error("unknown generator symbol \"" + l.gen + "\"");
    v[it->second] += l.sign;
  }
  return v;
}

Word Word::cyclically_reduced() const {
  std::vector<Letter> ls = letters_;
  while (ls.size() >= 2 && ls.front().gen == ls.back().gen &&
         ls.front().sign == -ls.back().sign) {
    ls.erase(ls.begin());
    ls.pop_back();
  }
  Word w;
  w.letters_ = std::move(ls);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters_;
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(raw));
}

static bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<Letter> raw;
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::string name = tok;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      if (tok.substr(pos) != "^-1")
        throw parse_error("bad word token \"" + tok + "\" (expected name or name^-1)");
      name = tok.substr(0, pos);
      sign = -1;
    }
    if (!valid_name(name))
      throw parse_error("bad generator name \"" + name + "\"");
    raw.push_back(Letter{name, sign});
  }
  return Word(std::move(raw));
}

std::string Word::str() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen;
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Word reduce(std::vector<Letter> raw) { return Word(std::move(raw)); }
Word multiply(const Word& u, const Word& v) { return u * v; }
Word inverse(const Word& u) { return u.inverse(); }
Word conjugate(const Word& u, const Word& by) { return by * u * by.inverse(); }
Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

}  // namespace mq
