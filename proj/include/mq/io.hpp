#pragma once

#include <string>

#include <json.hpp>

#include "mq/engine.hpp"
#include "mq/presentation.hpp"

namespace mq {

using ordered_json = nlohmann::ordered_json;

// Presentation file format: {"generators": [names...], "relators": [word
// strings...]}; generator order is significant and preserved exactly.
ordered_json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const ordered_json& j);

// Witness files embed the presentation plus the word list, provenance and
// status; field order is stable for diffing.
ordered_json witness_to_json(const NormalGeneratorWitness& w);
NormalGeneratorWitness witness_from_json(const ordered_json& j);

ordered_json rank_certificate_to_json(const RankBoundCertificate& c);
ordered_json interval_to_json(const MQInterval& iv);

// Reads a whole file; lines starting with '#' are treated as comments and
// dropped.  "-" reads standard input.
std::string read_input_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// json parsing that reports malformed input as a parse_error
ordered_json parse_json_text(const std::string& text);

}  // namespace mq
