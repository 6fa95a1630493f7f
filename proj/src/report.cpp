#include "mq/report.hpp"

#include <sstream>

namespace mq {

namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

WirtingerPresentation wirtinger_for_input(const std::string& format,
                                          const std::string& text) {
  if (format == "pd") return wirtinger_from_pd(PDCode::parse(text));
  if (format == "gauss") return wirtinger_from_gauss(GaussCode::parse(trimmed(text)));
  if (format == "braid") return wirtinger_from_pd(pd_from_braid(BraidWord::parse(text)));
  if (format == "montesinos")
    return wirtinger_from_pd(pd_for_montesinos(MontesinosDescriptor::parse(trimmed(text))));
  throw parse_error("unknown input format \"" + format + "\"");
}

InvariantReport build_invariant_report(const std::string& format, const std::string& text,
                                       const RunConfiguration& config) {
  InvariantReport r;
  r.input_kind = format;
  r.input_text = trimmed(text);

  std::optional<MontesinosDescriptor> descriptor;
  if (format == "montesinos") descriptor = MontesinosDescriptor::parse(r.input_text);

  WirtingerPresentation wp;
  if (format == "presentation") {
    wp.presentation = presentation_from_json(parse_json_text(text));
    r.input_text = presentation_to_json(wp.presentation).dump();
  } else {
    wp = wirtinger_for_input(format, text);
  }
  const Presentation& p = wp.presentation;
  r.crossings = wp.crossings.size();
  r.generators = p.generators().size();
  r.h1 = abelianization(p);
  r.knot_like = (r.h1.free_rank == 1) && r.h1.torsion.empty();

  std::optional<Int> nak_lower;
  if (r.knot_like) {
    // general presentation inputs may not be Wirtinger-shaped; the
    // Alexander-module block is skipped for those
    try {
      r.alexander = alexander_polynomial(p);
      r.determinant = knot_determinant(p);
      auto nak = nakanishi_lower(p);
      r.nakanishi = nak.value;
      for (std::size_t k = 0; k + 1 < nak.value; ++k)
        r.ideals.push_back({k, false, "proper"});
      if (nak.proper_ideal)
        r.ideals.push_back(
            {nak.proper_ideal->index, false, nak.proper_ideal->decision.witness.str()});
      {
        std::ostringstream d;
        d << "1 lies in the ideal (combination constant "
          << nak.unit_ideal.decision.certificate.constant << ")";
        r.ideals.push_back({nak.unit_ideal.index, true, d.str()});
      }
      nak_lower = Int(nak.value);
    } catch (const hypothesis_error&) {
      if (format != "presentation") throw;
    }
  }

  r.interval = mq_interval(p, nak_lower, {}, config.tietze_budget);

  if (descriptor && descriptor->tangles.size() == 3) {
    r.rational_certificate = rational_unknotting_certificate(*descriptor,
                                                             Int(config.rational_bound));
    if (r.rational_certificate) {
      // a(K) <= u_q(K) <= 1
      if (!r.interval->upper || *r.interval->upper > 1) {
        r.interval->upper = 1;
        r.interval->upper_certificate = {"rational-unknotting",
                                         r.rational_certificate->trace};
      }
      if (r.interval->lower > *r.interval->upper)
        throw inconsistency_error("certified lower bound exceeds certified upper bound");
    }
  }

  if (r.interval->upper && r.interval->lower == *r.interval->upper && nak_lower &&
      *nak_lower == r.interval->lower) {
    std::ostringstream c;
    c << "m = a = " << r.interval->lower;
    r.conclusion = c.str();
  }
  return r;
}

std::string render_report_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "input (" << r.input_kind << "): " << r.input_text << "\n";
  out << "crossings: " << r.crossings << ", wirtinger generators: " << r.generators
      << "\n";
  out << "H_1: " << r.h1.str() << "\n";
  if (!r.knot_like) {
    out << "H_1 is not infinite cyclic; Alexander-module invariants skipped\n";
  } else {
    out << "alexander polynomial: " << r.alexander->str() << "\n";
    out << "determinant: " << *r.determinant << "\n";
    for (const auto& line : r.ideals)
      out << "E_" << line.index << ": " << (line.unit ? "unit" : "proper") << " ("
          << line.detail << ")\n";
    out << "nakanishi lower bound: m >= " << *r.nakanishi << "\n";
  }
  if (r.interval) {
    out << "ma-qiu interval: a in [" << r.interval->lower << ", ";
    if (r.interval->upper)
      out << *r.interval->upper;
    else
      out << "unbounded";
    out << "]\n";
    out << "  lower certificate: " << r.interval->lower_certificate.kind << " ("
        << r.interval->lower_certificate.detail << ")\n";
    out << "  upper certificate: " << r.interval->upper_certificate.kind << " ("
        << r.interval->upper_certificate.detail << ")\n";
  }
  if (r.rational_certificate) {
    out << "rational unknotting: u_q <= 1 via " << r.rational_certificate->trace << "\n";
  }
  out << "chain: m <= a <= u_q <= u\n";
  if (!r.conclusion.empty()) out << "conclusion: " << r.conclusion;
  if (!r.conclusion.empty() && r.rational_certificate) out << " = u_q";
  if (!r.conclusion.empty()) out << "\n";
  return out.str();
}

ordered_json render_report_json(const InvariantReport& r) {
  ordered_json j;
  j["input_kind"] = r.input_kind;
  j["input"] = r.input_text;
  j["crossings"] = r.crossings;
  j["generators"] = r.generators;
  j["h1"] = r.h1.str();
  j["knot_like"] = r.knot_like;
  if (r.alexander) j["alexander_polynomial"] = r.alexander->str();
  if (r.determinant) j["determinant"] = r.determinant->str();
  ordered_json ideals = ordered_json::array();
  for (const auto& line : r.ideals) {
    ordered_json e;
    e["k"] = line.index;
    e["decision"] = line.unit ? "unit" : "proper";
    e["detail"] = line.detail;
    ideals.push_back(std::move(e));
  }
  j["elementary_ideals"] = std::move(ideals);
  if (r.nakanishi) j["nakanishi_lower"] = *r.nakanishi;
  if (r.interval) j["ma_qiu_interval"] = interval_to_json(*r.interval);
  if (r.rational_certificate) {
    ordered_json c;
    c["position"] = r.rational_certificate->position;
    c["replacement"] = r.rational_certificate->replacement.str();
    c["resulting"] = r.rational_certificate->resulting.str();
    c["trace"] = r.rational_certificate->trace;
    j["rational_unknotting"] = std::move(c);
  }
  j["conclusion"] = r.conclusion;
  return j;
}

}  // namespace mq
