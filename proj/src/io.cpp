#include "mq/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace mq {

ordered_json presentation_to_json(const Presentation& p) {
  ordered_json j;
  j["generators"] = p.generators();
  std::vector<std::string> rel;
  for (const auto& r : p.relators()) rel.push_back(r.str());
  j["relators"] = rel;
  return j;
}

Presentation presentation_from_json(const ordered_json& j) {
  if (!j.contains("generators") || !j.contains("relators"))
    throw parse_error("presentation file needs \"generators\" and \"relators\" fields");
  std::vector<std::string> gens = j.at("generators").get<std::vector<std::string>>();
  std::vector<Word> rel;
  for (const auto& s : j.at("relators")) rel.push_back(Word::parse(s.get<std::string>()));
  return Presentation(std::move(gens), std::move(rel));
}

namespace {

WitnessStatus status_from_string(const std::string& s) {
  if (s == "unverified") return WitnessStatus::unverified;
  if (s == "necessary-checks-passed") return WitnessStatus::necessary_checks_passed;
  if (s == "verified") return WitnessStatus::verified;
  if (s == "refuted") return WitnessStatus::refuted;
  throw parse_error("unknown witness status \"" + s + "\"");
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "transfer") return Provenance::transfer;
  if (s == "rank-bound") return Provenance::rank_bound;
  if (s == "user") return Provenance::user;
  throw parse_error("unknown witness provenance \"" + s + "\"");
}

}  // namespace

ordered_json witness_to_json(const NormalGeneratorWitness& w) {
  ordered_json j;
  j["presentation"] = presentation_to_json(w.presentation);
  std::vector<std::string> words;
  for (const auto& word : w.words) words.push_back(word.str());
  j["words"] = words;
  j["provenance"] = to_string(w.provenance);
  j["status"] = to_string(w.status);
  return j;
}

NormalGeneratorWitness witness_from_json(const ordered_json& j) {
  Presentation p = presentation_from_json(j.at("presentation"));
  std::vector<Word> words;
  for (const auto& s : j.at("words")) words.push_back(Word::parse(s.get<std::string>()));
  Provenance prov = provenance_from_string(j.value("provenance", "user"));
  WitnessStatus st = status_from_string(j.value("status", "unverified"));
  return make_witness(std::move(p), std::move(words), prov, st);
}

ordered_json rank_certificate_to_json(const RankBoundCertificate& c) {
  ordered_json j;
  ordered_json moves = ordered_json::array();
  for (const auto& m : c.moves) {
    ordered_json mj;
    switch (m.kind) {
      case NielsenMove::Kind::swap:
        mj["kind"] = "swap";
        mj["i"] = m.i;
        mj["j"] = m.j;
        break;
      case NielsenMove::Kind::invert:
        mj["kind"] = "invert";
        mj["i"] = m.i;
        break;
      case NielsenMove::Kind::multiply:
        mj["kind"] = "multiply";
        mj["i"] = m.i;
        mj["j"] = m.j;
        mj["exponent"] = m.exponent.str();
        break;
    }
    moves.push_back(std::move(mj));
  }
  j["nielsen_moves"] = std::move(moves);
  std::vector<std::string> tg;
  for (const auto& w : c.transformed_generators) tg.push_back(w.str());
  j["transformed_generators"] = tg;
  j["h"] = c.h;
  ordered_json coeff = ordered_json::array();
  for (std::size_t i = 0; i < c.coefficients.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < c.coefficients.cols(); ++k)
      row.push_back(c.coefficients(i, k).str());
    coeff.push_back(std::move(row));
  }
  j["coefficients"] = std::move(coeff);
  j["witness"] = witness_to_json(c.witness);
  return j;
}

ordered_json interval_to_json(const MQInterval& iv) {
  ordered_json j;
  j["lower"] = iv.lower.str();
  if (iv.upper)
    j["upper"] = iv.upper->str();
  else
    j["upper"] = nullptr;
  j["lower_certificate"] = {{"kind", iv.lower_certificate.kind},
                            {"detail", iv.lower_certificate.detail}};
  j["upper_certificate"] = {{"kind", iv.upper_certificate.kind},
                            {"detail", iv.upper_certificate.detail}};
  return j;
}

std::string read_input_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file \"" + path + "\"");
    buf << in.rdbuf();
  }
  std::istringstream lines(buf.str());
  std::ostringstream out;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] == '#') continue;
    out << line << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write file \"" + path + "\"");
  out << content;
}

ordered_json parse_json_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed json: ") + e.what());
  }
}

}  // namespace mq
