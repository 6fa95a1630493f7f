#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mq/alexander.hpp"
#include "mq/engine.hpp"
#include "mq/io.hpp"
#include "mq/knots.hpp"
#include "mq/tangles.hpp"

namespace mq {

// Effort budgets and determinism knobs; the seed is a fixed default and
// never wall-clock.
struct RunConfiguration {
  std::size_t tietze_budget = 1000;
  RewriteLimits kb_limits;
  std::size_t search_depth = 2;
  std::size_t search_width = 3;
  long rational_bound = 8;
  std::uint64_t seed = 1;
  bool json = false;
};

// Everything cmd_invariants prints: the invariant chain m <= a <= u_q <= u
// with each term's certificate provenance.
struct InvariantReport {
  std::string input_kind;
  std::string input_text;
  std::size_t crossings = 0;
  std::size_t generators = 0;
  AbelianInvariants h1;
  bool knot_like = false;  // H_1 infinite cyclic

  std::optional<Laurent> alexander;
  std::optional<Int> determinant;
  struct IdealLine {
    std::size_t index = 0;
    bool unit = false;
    std::string detail;
  };
  std::vector<IdealLine> ideals;
  std::optional<std::size_t> nakanishi;
  std::optional<MQInterval> interval;
  std::optional<RationalUnknottingCertificate> rational_certificate;
  std::string conclusion;  // e.g. "m = a = 1"
};

InvariantReport build_invariant_report(const std::string& format, const std::string& text,
                                       const RunConfiguration& config);

std::string render_report_text(const InvariantReport& r);
ordered_json render_report_json(const InvariantReport& r);

// Shared by the invariants pipeline: a Wirtinger presentation for any of the
// diagram input formats.
WirtingerPresentation wirtinger_for_input(const std::string& format,
                                          const std::string& text);

}  // namespace mq
