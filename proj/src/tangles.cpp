#include "mq/tangles.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mq/diagram.hpp"

namespace mq {

std::pair<Int, Int> tangle_fraction(const std::vector<Int>& cf) {
  if (cf.empty()) throw parse_error("empty continued fraction");
  // value as p:q, consumed innermost (a_1) outwards
  Int p = cf[0], q = 1;
  for (std::size_t i = 1; i < cf.size(); ++i) {
    // a + 1/(p/q) = (a*p + q) / p
    Int np = cf[i] * p + q;
    q = p;
    p = np;
  }
  if (p == 0 && q == 0) throw parse_error("continued fraction evaluates to 0/0");
  if (q == 0) return {1, 0};
  if (q < 0) {
    p = -p;
    q = -q;
  }
  Int g = gcd_int(abs_int(p), q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
  return {p, q};
}

std::vector<Int> cf_from_fraction(const Int& p, const Int& q) {
  if (p == 0 && q == 0) throw parse_error("fraction 0/0 is invalid");
  if (q == 0) return {Int(0), Int(0)};  // infinity tangle
  Int pp = p, qq = q;
  if (qq < 0) {
    pp = -pp;
    qq = -qq;
  }
  std::vector<Int> outer_first;
  for (;;) {
    Int a = fdiv(pp, qq);
    outer_first.push_back(a);
    Int r = pp - a * qq;
    if (r == 0) break;
    pp = qq;
    qq = r;
  }
  std::reverse(outer_first.begin(), outer_first.end());
  return outer_first;
}

RationalTangle RationalTangle::from_fraction(const Int& p, const Int& q) {
  if (p == 0 && q == 0) throw parse_error("fraction 0/0 is invalid");
  Int pp = p, qq = q;
  if (qq < 0) {
    pp = -pp;
    qq = -qq;
  }
  if (qq == 0) pp = 1;
  Int g = gcd_int(abs_int(pp), qq);
  if (g > 1) {
    pp /= g;
    qq /= g;
  }
  RationalTangle t;
  t.p = pp;
  t.q = qq;
  t.cf = cf_from_fraction(pp, qq);
  return t;
}

RationalTangle RationalTangle::from_cf(std::vector<Int> cf) {
  auto [p, q] = tangle_fraction(cf);
  RationalTangle t;
  t.cf = std::move(cf);
  t.p = p;
  t.q = q;
  return t;
}

std::string RationalTangle::str() const {
  std::ostringstream out;
  out << p << "/" << q;
  return out.str();
}

std::string to_string(EndpointPairing e) {
  switch (e) {
    case EndpointPairing::horizontal: return "horizontal";
    case EndpointPairing::vertical: return "vertical";
    case EndpointPairing::diagonal: return "diagonal";
  }
  return "?";
}

EndpointPairing pairing(const Int& p, const Int& q) {
  bool pe = fmod(p, Int(2)) == 0;
  bool qe = fmod(q, Int(2)) == 0;
  if (pe && qe) throw parse_error("pairing undefined: fraction not reduced");
  if (pe) return EndpointPairing::horizontal;
  if (qe) return EndpointPairing::vertical;
  return EndpointPairing::diagonal;
}

bool is_proper_replacement(const RationalTangle& a, const RationalTangle& b) {
  return pairing(a.p, a.q) == pairing(b.p, b.q);
}

// ---------------------------------------------------------------------------
// descriptors

MontesinosDescriptor MontesinosDescriptor::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip();
  if (i >= text.size() || text[i] != 'K') throw parse_error("Montesinos parse error: expected K(");
  ++i;
  skip();
  if (i >= text.size() || text[i] != '(') throw parse_error("Montesinos parse error: expected (");
  ++i;

  auto read_int = [&]() {
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    std::string digits;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) digits += text[i++];
    if (digits.empty()) throw parse_error("Montesinos parse error: expected integer");
    Int v(digits);
    return neg ? Int(-v) : v;
  };

  MontesinosDescriptor m;
  for (;;) {
    Int p = read_int();
    Int q = 1;
    skip();
    if (i < text.size() && text[i] == '/') {
      ++i;
      q = read_int();
    }
    if (q == 0) throw parse_error("infinity tangle not allowed in a Montesinos descriptor");
    m.tangles.push_back(RationalTangle::from_fraction(p, q));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (i >= text.size() || text[i] != ')') throw parse_error("Montesinos parse error: expected )");
  ++i;
  skip();
  if (i != text.size()) throw parse_error("Montesinos parse error: trailing input");
  if (m.tangles.empty()) throw parse_error("Montesinos descriptor needs at least one tangle");
  return m;
}

std::string MontesinosDescriptor::str() const {
  std::ostringstream out;
  out << "K(";
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    if (i) out << ", ";
    out << tangles[i].str();
  }
  out << ")";
  return out.str();
}

Rational MontesinosDescriptor::total_fraction() const {
  Rational e = 0;
  for (const auto& t : tangles) e += Rational(t.p, t.q);
  return e;
}

bool montesinos_equiv(const MontesinosDescriptor& a, const MontesinosDescriptor& b) {
  if (a.tangles.size() < 3 || b.tangles.size() < 3)
    throw hypothesis_error("montesinos_equiv requires descriptors with at least 3 tangles");
  if (a.tangles.size() != b.tangles.size()) return false;
  if (a.total_fraction() != b.total_fraction()) return false;

  // canonical dihedral form of the cyclic sequence of fractional parts
  auto parts = [](const MontesinosDescriptor& m) {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& t : m.tangles) out.emplace_back(fmod(t.p, t.q), t.q);
    return out;
  };
  auto canonical = [](std::vector<std::pair<Int, Int>> seq) {
    std::vector<std::pair<Int, Int>> best;
    bool have = false;
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t r = 0; r < seq.size(); ++r) {
        std::vector<std::pair<Int, Int>> cand(seq.begin() + long(r), seq.end());
        cand.insert(cand.end(), seq.begin(), seq.begin() + long(r));
        if (!have || cand < best) {
          best = cand;
          have = true;
        }
      }
      std::reverse(seq.begin(), seq.end());
    }
    return best;
  };
  return canonical(parts(a)) == canonical(parts(b));
}

// ---------------------------------------------------------------------------
// two-bridge closures

std::string TwoBridgeLink::str() const {
  std::ostringstream out;
  out << "b(" << p << ", " << q << ")";
  return out.str();
}

std::string to_string(LinkClass c) {
  switch (c) {
    case LinkClass::unknot: return "unknot";
    case LinkClass::knot: return "knot";
    case LinkClass::two_component_link: return "two-component link";
  }
  return "?";
}

LinkClass two_bridge_classify(const TwoBridgeLink& tb) {
  Int p = abs_int(tb.p);
  if (p == 1) return LinkClass::unknot;
  if (fmod(p, Int(2)) == 0) return LinkClass::two_component_link;
  return LinkClass::knot;
}

namespace {

TwoBridgeLink normalize_two_bridge(Int p, Int q) {
  if (p < 0) {
    p = -p;
    q = -q;
  }
  if (p == 0) return TwoBridgeLink{0, 1};
  if (p == 1) return TwoBridgeLink{1, 0};
  q = fmod(q, p);
  if (gcd_int(p, q) != 1) throw internal_error("two-bridge parameters not coprime");
  return TwoBridgeLink{p, q};
}

// extended Euclid: returns (x, y) with a*x + b*y = gcd(a, b)
std::pair<Int, Int> ext_euclid(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int t = a / b;
    Int a2 = a - t * b, x2 = x0 - t * x1, y2 = y0 - t * y1;
    a = b;
    x0 = x1;
    y0 = y1;
    b = a2;
    x1 = x2;
    y1 = y2;
  }
  return {x0, y0};
}

}  // namespace

ClosureClassification classify_montesinos_closure(const std::vector<RationalTangle>& ts) {
  Int c_total = 0;
  std::vector<const RationalTangle*> genuine;
  for (const auto& t : ts) {
    if (t.is_infinity()) throw parse_error("closure of an infinity tangle is not supported");
    if (t.is_integer())
      c_total += t.p;
    else
      genuine.push_back(&t);
  }

  ClosureClassification out;
  if (genuine.size() >= 3) {
    // double branched cover is Seifert fibered with >= 3 exceptional fibers,
    // never the 3-sphere
    out.definitely_not_unknot = true;
    return out;
  }
  if (genuine.empty()) {
    out.two_bridge = normalize_two_bridge(c_total, 1);
    return out;
  }
  if (genuine.size() == 1) {
    Int u = genuine[0]->p + c_total * genuine[0]->q;
    Int v = genuine[0]->q;
    out.two_bridge = normalize_two_bridge(u, v);
    return out;
  }
  // two genuine tangles u/v and r/s (integer part folded into the first):
  // closure is two-bridge with p = us + vr; the companion parameter comes
  // from the lens space of the double cover, via u*rho - v*sigma = 1.
  Int u = genuine[0]->p + c_total * genuine[0]->q;
  Int v = genuine[0]->q;
  Int r = genuine[1]->p;
  Int s = genuine[1]->q;
  Int bigp = u * s + v * r;
  auto [x, y] = ext_euclid(u, v);  // u*x + v*y = 1
  Int rho = x, sigma = -y;         // u*rho - v*sigma = 1
  Int bigq = s * sigma + r * rho;
  out.two_bridge = normalize_two_bridge(bigp, bigq);
  return out;
}

ReplaceResult replace_tangle(const MontesinosDescriptor& m, std::size_t position,
                             const RationalTangle& replacement) {
  if (position >= m.tangles.size()) throw parse_error("tangle position out of range");
  if (!is_proper_replacement(m.tangles[position], replacement))
    throw hypothesis_error("improper replacement: tangles connect different endpoints");
  if (replacement.is_infinity())
    throw parse_error("infinity tangle not allowed in a Montesinos descriptor");

  std::vector<RationalTangle> entries = m.tangles;
  entries[position] = replacement;

  ReplaceResult out;
  if (m.tangles.size() == 3 && replacement.is_integer()) {
    auto cc = classify_montesinos_closure(entries);
    if (!cc.two_bridge) throw internal_error("integer replacement must collapse to two-bridge");
    out.two_bridge = cc.two_bridge;
    return out;
  }
  MontesinosDescriptor md;
  md.tangles = std::move(entries);
  out.montesinos = std::move(md);
  return out;
}

// ---------------------------------------------------------------------------
// diagrams

namespace {

struct TangleEnds {
  DiagramBuilder::End nw, ne, sw, se;
};

// Twist regions alternate: odd continued-fraction slots add horizontal
// crossings on the east side, even slots add vertical crossings at the
// bottom.  A positive crossing puts the positive-slope strand on top.
struct TangleBuilder {
  DiagramBuilder& d;

  TangleEnds zero_tangle() {
    int top = d.new_joint();
    int bot = d.new_joint();
    return TangleEnds{{top, 0}, {top, 1}, {bot, 0}, {bot, 1}};
  }

  void right_twist(TangleEnds& t, bool positive) {
    // ports ccw: 0 = W-top, 1 = W-bottom, 2 = E-bottom, 3 = E-top;
    // strand (0,2) has negative slope, so positive crossings put it under
    int c = d.new_crossing(/*under_02=*/positive);
    d.connect(t.ne, {c, 0});
    d.connect(t.se, {c, 1});
    t.ne = {c, 3};
    t.se = {c, 2};
  }

  void bottom_twist(TangleEnds& t, bool positive) {
    // ports ccw: 0 = N-left, 1 = S-left, 2 = S-right, 3 = N-right;
    // strand (0,2) has negative slope, so positive crossings put it under
    int c = d.new_crossing(/*under_02=*/positive);
    d.connect(t.sw, {c, 0});
    d.connect(t.se, {c, 3});
    t.sw = {c, 1};
    t.se = {c, 2};
  }

  TangleEnds build(const RationalTangle& t) {
    if (t.is_infinity()) throw parse_error("cannot draw the infinity tangle");
    // odd-length expansion so the outermost twist region is horizontal
    std::vector<Int> cf = cf_from_fraction(t.p, t.q);
    if (cf.size() % 2 == 0) {
      std::vector<Int> fixed;
      fixed.push_back(1);
      fixed.push_back(cf[0] - 1);
      fixed.insert(fixed.end(), cf.begin() + 1, cf.end());
      cf = std::move(fixed);
    }
    TangleEnds ends = zero_tangle();
    for (std::size_t k = 0; k < cf.size(); ++k) {
      long reps = static_cast<long>(abs_int(cf[k]));
      bool positive = cf[k] > 0;
      for (long r = 0; r < reps; ++r) {
        if (k % 2 == 0)
          right_twist(ends, positive);
        else
          bottom_twist(ends, positive);
      }
    }
    return ends;
  }
};

}  // namespace

PDCode pd_for_montesinos(const MontesinosDescriptor& m) {
  for (const auto& t : m.tangles)
    if (t.is_infinity()) throw parse_error("cannot draw the infinity tangle");

  DiagramBuilder d;
  TangleBuilder tb{d};
  std::vector<TangleEnds> parts;
  for (const auto& t : m.tangles) parts.push_back(tb.build(t));

  TangleEnds sum = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    d.connect(sum.ne, parts[i].nw);
    d.connect(sum.se, parts[i].sw);
    sum.ne = parts[i].ne;
    sum.se = parts[i].se;
  }
  d.connect(sum.nw, sum.ne);
  d.connect(sum.sw, sum.se);

  if (d.crossing_count() == 0) return PDCode{};  // trivial closure
  return d.trace_knot();
}

EndpointPairing traced_pairing(const RationalTangle& t) {
  DiagramBuilder d;
  TangleBuilder tb{d};
  TangleEnds ends = tb.build(t);

  int t_nw = d.new_joint(), t_ne = d.new_joint(), t_sw = d.new_joint(), t_se = d.new_joint();
  d.connect(ends.nw, {t_nw, 1});
  d.connect(ends.ne, {t_ne, 1});
  d.connect(ends.sw, {t_sw, 1});
  d.connect(ends.se, {t_se, 1});

  int partner = d.trace_to_free_end({t_nw, 1});
  if (partner == t_ne) return EndpointPairing::horizontal;
  if (partner == t_sw) return EndpointPairing::vertical;
  if (partner == t_se) return EndpointPairing::diagonal;
  throw internal_error("tangle strand returned to its own endpoint");
}

// ---------------------------------------------------------------------------
// rational unknotting

std::optional<RationalUnknottingCertificate> rational_unknotting_certificate(
    const MontesinosDescriptor& m, const Int& bound) {
  if (m.tangles.size() != 3)
    throw hypothesis_error("rational unknotting search expects a 3-tangle descriptor");

  long b = static_cast<long>(bound);
  for (std::size_t pos = 0; pos < 3; ++pos) {
    EndpointPairing want = pairing(m.tangles[pos].p, m.tangles[pos].q);
    for (long qd = 1; qd <= b; ++qd)
      for (long pn = -b; pn <= b; ++pn) {
        if (gcd_int(abs_int(Int(pn)), Int(qd)) != 1) continue;
        if (pairing(Int(pn), Int(qd)) != want) continue;
        RationalTangle cand = RationalTangle::from_fraction(Int(pn), Int(qd));
        std::vector<RationalTangle> entries = m.tangles;
        entries[pos] = cand;
        auto cc = classify_montesinos_closure(entries);
        if (!cc.two_bridge) continue;
        if (two_bridge_classify(*cc.two_bridge) != LinkClass::unknot) continue;
        RationalUnknottingCertificate cert;
        cert.position = pos;
        cert.replacement = cand;
        cert.resulting = *cc.two_bridge;
        std::ostringstream trace;
        trace << m.str() << " -> replace position " << (pos + 1) << " (" <<
            m.tangles[pos].str() << ") by " << cand.str() << " -> closure " <<
            cc.two_bridge->str() << " = unknot";
        cert.trace = trace.str();
        return cert;
      }
  }
  return std::nullopt;
}

}  // namespace mq
