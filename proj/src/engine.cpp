#include "mq/engine.hpp"

#include <algorithm>
#include <sstream>

namespace mq {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::transfer: return "transfer";
    case Provenance::rank_bound: return "rank-bound";
    case Provenance::user: return "user";
  }
  return "?";
}

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::unverified: return "unverified";
    case WitnessStatus::necessary_checks_passed: return "necessary-checks-passed";
    case WitnessStatus::verified: return "verified";
    case WitnessStatus::refuted: return "refuted";
  }
  return "?";
}

NormalGeneratorWitness make_witness(Presentation p, std::vector<Word> words,
                                    Provenance prov, WitnessStatus status) {
  for (const auto& w : words)
    if (!is_null_homologous(w, p))
      throw hypothesis_error("witness word \"" + w.str() +
                             "\" is not null-homologous in the presentation");
  return NormalGeneratorWitness{std::move(p), std::move(words), prov, status};
}

NormalGeneratorWitness transfer_ngs(const Presentation& source,
                                    const Presentation& target,
                                    const NormalGeneratorWitness& witness) {
  if (!(witness.presentation == source))
    throw hypothesis_error("witness was built for a different presentation");
  if (source.generators() != target.generators())
    throw hypothesis_error("transfer requires identical ordered generator lists");
  if (!h1_equal(source, target))
    throw hypothesis_error("transfer requires isomorphic abelianizations");
  for (const auto& w : witness.words)
    if (!is_null_homologous(w, source))
      throw hypothesis_error("input witness word \"" + w.str() +
                             "\" is not null-homologous in the source group");
  auto d = diff(source, target);
  for (const auto& r : d.only_right)
    if (!is_null_homologous(r, source))
      throw hypothesis_error("target relator \"" + r.str() +
                             "\" is not null-homologous in the source group");

  std::vector<Word> out = d.only_left;  // R_G first, then the lifted witness
  out.insert(out.end(), witness.words.begin(), witness.words.end());
  return make_witness(target, std::move(out), Provenance::transfer,
                      WitnessStatus::necessary_checks_passed);
}

// ---------------------------------------------------------------------------
// Nielsen moves

namespace {

long to_long(const Int& v) {
  if (v > Int(1) << 40 || v < -(Int(1) << 40))
    throw internal_error("Nielsen exponent out of range");
  return static_cast<long>(v);
}

Word substitute_one(const Word& w, const NielsenMove& m,
                    const std::vector<std::string>& gens, bool inverse_move) {
  NielsenMove mv = m;
  if (inverse_move && m.kind == NielsenMove::Kind::multiply) mv.exponent = -m.exponent;
  std::vector<Letter> out;
  const std::string& gi = gens[mv.i];
  const std::string& gj = gens[mv.j];
  for (const auto& l : w.letters()) {
    switch (mv.kind) {
      case NielsenMove::Kind::swap:
        if (l.gen == gi)
          out.push_back(Letter{gj, l.sign});
        else if (l.gen == gj)
          out.push_back(Letter{gi, l.sign});
        else
          out.push_back(l);
        break;
      case NielsenMove::Kind::invert:
        if (l.gen == gi)
          out.push_back(Letter{gi, -l.sign});
        else
          out.push_back(l);
        break;
      case NielsenMove::Kind::multiply: {
        if (l.gen != gi) {
          out.push_back(l);
          break;
        }
        long e = to_long(mv.exponent);
        // s_i -> s_i s_j^e ; s_i^-1 -> s_j^-e s_i^-1
        if (l.sign > 0) {
          out.push_back(Letter{gi, 1});
          for (long k = 0; k < std::abs(e); ++k)
            out.push_back(Letter{gens[mv.j], e > 0 ? 1 : -1});
        } else {
          for (long k = 0; k < std::abs(e); ++k)
            out.push_back(Letter{gens[mv.j], e > 0 ? -1 : 1});
          out.push_back(Letter{gi, -1});
        }
        break;
      }
    }
  }
  return Word(std::move(out));
}

}  // namespace

Word apply_nielsen(const std::vector<NielsenMove>& moves, const Word& w,
                   const std::vector<std::string>& gens) {
  Word cur = w;
  for (const auto& m : moves) cur = substitute_one(cur, m, gens, false);
  return cur;
}

Word apply_nielsen_inverse(const std::vector<NielsenMove>& moves, const Word& w,
                           const std::vector<std::string>& gens) {
  Word cur = w;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it)
    cur = substitute_one(cur, *it, gens, true);
  return cur;
}

// ---------------------------------------------------------------------------
// rank bound

namespace {

struct TrackedReduction {
  IntMatrix a;
  std::vector<NielsenMove> moves;
  std::vector<Word> tuple;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    std::swap(tuple[i], tuple[j]);
    moves.push_back(NielsenMove{NielsenMove::Kind::swap, i, j, 0});
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    tuple[i] = tuple[i].inverse();
    moves.push_back(NielsenMove{NielsenMove::Kind::invert, i, i, 0});
  }
  // row_i += e * row_j  <=>  w_i <- w_i * w_j^e
  void add_multiple(std::size_t i, std::size_t j, const Int& e) {
    if (e == 0 || i == j) return;
    a.add_row_multiple(i, j, e);
    tuple[i] = tuple[i] * tuple[j].pow(to_long(e));
    moves.push_back(NielsenMove{NielsenMove::Kind::multiply, i, j, e});
  }
};

}  // namespace

RankBoundCertificate rank_bound_ngs(const Presentation& p) {
  const std::size_t r = p.generators().size();
  auto dec = snf(p.exponent_matrix());

  // diagonal entry per generator coordinate (0 beyond the matrix rank)
  std::vector<Int> d(r, Int(0));
  const std::size_t lim = std::min(dec.s.rows(), dec.s.cols());
  for (std::size_t i = 0; i < lim && i < r; ++i) d[i] = dec.s(i, i);

  std::vector<std::size_t> nontrivial, trivial;
  for (std::size_t i = 0; i < r; ++i)
    (d[i] == 1 ? trivial : nontrivial).push_back(i);
  const std::size_t h = nontrivial.size();

  // Row j of V holds the H_1 coordinates of generator j.  Reduce V to the
  // permutation matrix sending the first h generators onto the nontrivial
  // coordinates; each elementary row operation is one Nielsen move on the
  // generating tuple.
  TrackedReduction tr;
  tr.a = dec.v;
  for (const auto& g : p.generators()) tr.tuple.push_back(Word::generator(g));

  for (std::size_t c = 0; c < r; ++c) {
    for (;;) {
      std::size_t best = r;
      Int best_abs;
      for (std::size_t i = c; i < r; ++i) {
        if (tr.a(i, c) == 0) continue;
        Int v = abs_int(tr.a(i, c));
        if (best == r || v < best_abs) {
          best = i;
          best_abs = v;
        }
      }
      if (best == r) throw internal_error("rank_bound_ngs: column of unimodular matrix vanished");
      tr.swap_rows(c, best);
      bool changed = false;
      for (std::size_t i = c + 1; i < r; ++i) {
        if (tr.a(i, c) == 0) continue;
        Int q = tr.a(i, c) / tr.a(c, c);
        tr.add_multiple(i, c, -q);
        if (tr.a(i, c) != 0) changed = true;
      }
      if (!changed) break;
    }
    if (tr.a(c, c) < 0) tr.negate_row(c);
    if (tr.a(c, c) != 1) throw internal_error("rank_bound_ngs: pivot of unimodular matrix not 1");
    for (std::size_t i = 0; i < c; ++i) tr.add_multiple(i, c, -tr.a(i, c));
  }

  // permute rows: row j must carry basis vector sigma(j)
  std::vector<std::size_t> sigma(r);
  for (std::size_t j = 0; j < h; ++j) sigma[j] = nontrivial[j];
  for (std::size_t j = h; j < r; ++j) sigma[j] = trivial[j - h];
  std::vector<std::size_t> holds(r);  // holds[row] = basis index currently in that row
  for (std::size_t i = 0; i < r; ++i) holds[i] = i;
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t k = j;
    while (holds[k] != sigma[j]) ++k;
    if (k != j) {
      tr.swap_rows(j, k);
      std::swap(holds[j], holds[k]);
    }
  }

  std::vector<Word> words;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j)
      words.push_back(commutator(tr.tuple[i], tr.tuple[j]));
  for (std::size_t k = h; k < r; ++k) words.push_back(tr.tuple[k].inverse());

  RankBoundCertificate cert;
  cert.moves = std::move(tr.moves);
  cert.transformed_generators = tr.tuple;
  cert.h = h;
  cert.coefficients = IntMatrix(r - h, h);  // expression words need no correction terms
  cert.witness = make_witness(p, std::move(words), Provenance::rank_bound);
  return cert;
}

// ---------------------------------------------------------------------------
// verification

WitnessStatus verify_ngs(const Presentation& p, const NormalGeneratorWitness& witness,
                         const VerifyOptions& opts) {
  for (const auto& w : witness.words)
    if (!is_null_homologous(w, p)) return WitnessStatus::refuted;

  auto rel = p.relators();
  rel.insert(rel.end(), witness.words.begin(), witness.words.end());
  Presentation augmented(p.generators(), std::move(rel));
  if (!(abelianization(augmented) == abelianization(p))) return WitnessStatus::refuted;

  switch (opts.strategy) {
    case VerifyStrategy::necessary_only:
      return WitnessStatus::necessary_checks_passed;
    case VerifyStrategy::completion: {
      RewriteSystem rs = knuth_bendix(augmented, opts.limits);
      if (!rs.complete) return WitnessStatus::necessary_checks_passed;
      for (std::size_t i = 0; i < p.generators().size(); ++i)
        for (std::size_t j = i + 1; j < p.generators().size(); ++j) {
          Word c = commutator(Word::generator(p.generators()[i]),
                              Word::generator(p.generators()[j]));
          if (!word_problem(rs, c)) return WitnessStatus::refuted;
        }
      return WitnessStatus::verified;
    }
    case VerifyStrategy::bounded_search: {
      for (std::size_t i = 0; i < p.generators().size(); ++i)
        for (std::size_t j = i + 1; j < p.generators().size(); ++j) {
          Word c = commutator(Word::generator(p.generators()[i]),
                              Word::generator(p.generators()[j]));
          auto res = normal_closure_member_bounded(p, c, witness.words, opts.depth,
                                                   opts.width, opts.limits);
          if (!res.yes) return WitnessStatus::necessary_checks_passed;
        }
      return WitnessStatus::verified;
    }
  }
  return WitnessStatus::necessary_checks_passed;
}

// ---------------------------------------------------------------------------
// intervals and distances

MQInterval mq_interval(const Presentation& p, std::optional<Int> nakanishi_lower,
                       const std::vector<NormalGeneratorWitness>& user_witnesses,
                       std::size_t tietze_budget) {
  MQInterval out;
  if (nakanishi_lower && *nakanishi_lower > 0) {
    out.lower = *nakanishi_lower;
    out.lower_certificate = {"nakanishi-lower", "elementary ideal E_{k-1} proper"};
  } else {
    out.lower = 0;
    out.lower_certificate = {"trivial", "a(G) >= 0"};
  }

  auto consider = [&](const Int& size, CertificateRef ref) {
    if (!out.upper || size < *out.upper) {
      out.upper = size;
      out.upper_certificate = std::move(ref);
    }
  };

  auto raw = rank_bound_ngs(p);
  consider(Int(raw.witness.words.size()), {"rank-bound", "on the input presentation"});
  auto simp = tietze_simplify(p, tietze_budget);
  auto reduced = rank_bound_ngs(simp.simplified);
  {
    std::ostringstream det;
    det << "on the simplified presentation (rank upper bound " << simp.rank_upper_bound
        << ")";
    consider(Int(reduced.witness.words.size()), {"rank-bound", det.str()});
  }
  for (const auto& w : user_witnesses) {
    if (w.status != WitnessStatus::verified) continue;
    consider(Int(w.words.size()), {"user-witness", "verified user witness"});
  }

  if (out.upper && out.lower > *out.upper)
    throw inconsistency_error("certified lower bound exceeds certified upper bound");
  return out;
}

DistanceBounds presentation_distance_bounds(const Presentation& p, const Presentation& q,
                                            const MQInterval& ip, const MQInterval& iq,
                                            std::size_t tietze_budget) {
  if (!h1_equal(p, q))
    throw hypothesis_error(
        "presentation distance undefined: abelianizations are not isomorphic");
  DistanceBounds out;
  out.lower = 0;
  if (iq.upper && ip.lower - *iq.upper > out.lower) out.lower = ip.lower - *iq.upper;
  if (ip.upper && iq.lower - *ip.upper > out.lower) out.lower = iq.lower - *ip.upper;

  Int h = abelianization(p).minimal_generators;
  Int rp = Int(tietze_simplify(p, tietze_budget).rank_upper_bound);
  Int rq = Int(tietze_simplify(q, tietze_budget).rank_upper_bound);
  out.upper = rp + rq + h * (h - 3);
  return out;
}

const std::vector<MoveCatalogEntry>& move_catalog() {
  static const std::vector<MoveCatalogEntry> entries = {
      {"crossing-change", 2, 1, {"classical", "virtual", "welded"}},
      {"virtualization", 2, 1, {"virtual", "welded"}},
      {"sharp", 4, 3, {"classical"}},
      {"rational", 2, 1, {"classical"}},
  };
  return entries;
}

const MoveCatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : move_catalog())
    if (e.name == name) return e;
  throw parse_error("unknown move \"" + name + "\"");
}

Int gordian_lower_bound(const MQInterval& a, const MQInterval& b,
                        const MoveCatalogEntry& move) {
  if (move.relator_cost < 1) throw parse_error("move relator cost must be positive");
  Int gap = 0;
  if (b.upper && a.lower - *b.upper > gap) gap = a.lower - *b.upper;
  if (a.upper && b.lower - *a.upper > gap) gap = b.lower - *a.upper;
  return ceil_div(gap, Int(move.relator_cost));
}

}  // namespace mq
