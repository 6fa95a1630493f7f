// Command-line front end: invariant reports, group-presentation operations,
// local moves, and bounded unknottability search.
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mq/alexander.hpp"
#include "mq/engine.hpp"
#include "mq/io.hpp"
#include "mq/knots.hpp"
#include "mq/report.hpp"
#include "mq/tangles.hpp"

namespace {

struct CommonOpts {
  std::string input = "-";
  std::string format = "pd";
  bool json = false;
  mq::RunConfiguration config;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--input", o.input, "input file or - for stdin");
  cmd->add_option("--format", o.format, "pd|gauss|braid|montesinos");
  cmd->add_flag("--json", o.json, "structured output");
  cmd->add_option("--budget-tietze", o.config.tietze_budget, "tietze step budget");
  cmd->add_option("--budget-kb", o.config.kb_limits.max_steps, "completion step budget");
  cmd->add_option("--search-depth", o.config.search_depth, "conjugator length bound");
  cmd->add_option("--search-width", o.config.search_width, "conjugate count bound");
  cmd->add_option("--rational-bound", o.config.rational_bound,
                  "numerator/denominator bound for rational replacement search");
  cmd->add_option("--seed", o.config.seed, "deterministic seed");
}

mq::Presentation load_presentation(const std::string& path) {
  return mq::presentation_from_json(
      mq::parse_json_text(mq::read_input_file(path)));
}

mq::VerifyOptions verify_options(const CommonOpts& o, const std::string& strategy) {
  mq::VerifyOptions vo;
  vo.depth = o.config.search_depth;
  vo.width = o.config.search_width;
  vo.limits = o.config.kb_limits;
  if (strategy == "necessary")
    vo.strategy = mq::VerifyStrategy::necessary_only;
  else if (strategy == "search")
    vo.strategy = mq::VerifyStrategy::bounded_search;
  else if (strategy == "completion")
    vo.strategy = mq::VerifyStrategy::completion;
  else
    throw mq::parse_error("unknown strategy \"" + strategy + "\"");
  return vo;
}

int run_selftest();

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relator-replacement calculus for knot groups"};
  app.require_subcommand(1);

  CommonOpts inv_opts;
  auto* inv = app.add_subcommand("invariants", "full invariant report for a diagram");
  add_common(inv, inv_opts);

  // group operations
  auto* group = app.add_subcommand("group", "finitely presented group operations");
  group->require_subcommand(1);
  CommonOpts grp_opts;
  std::string grp_word, grp_old, grp_new, grp_source, grp_target, grp_witness;
  std::string grp_output, grp_strategy = "necessary", grp_left, grp_right;
  long long grp_nak_left = -1, grp_nak_right = -1;
  bool grp_nocheck = false, grp_loose = false;

  auto* g_ab = group->add_subcommand("abelianize", "H_1 invariants of a presentation");
  add_common(g_ab, grp_opts);
  auto* g_nh = group->add_subcommand("nullhom", "null-homology test for a word");
  add_common(g_nh, grp_opts);
  g_nh->add_option("--word", grp_word, "word to test")->required();
  auto* g_rep = group->add_subcommand("replace", "replace one relator");
  add_common(g_rep, grp_opts);
  g_rep->add_option("--old", grp_old)->required();
  g_rep->add_option("--new", grp_new)->required();
  g_rep->add_flag("--no-check", grp_nocheck, "skip the null-homology checks");
  auto* g_tr = group->add_subcommand("transfer", "transfer a normal generating set");
  add_common(g_tr, grp_opts);
  g_tr->add_option("--source", grp_source)->required();
  g_tr->add_option("--target", grp_target)->required();
  g_tr->add_option("--witness", grp_witness)->required();
  g_tr->add_option("--output", grp_output, "witness output file");
  auto* g_rb = group->add_subcommand("rank-bound", "constructive witness from the rank bound");
  add_common(g_rb, grp_opts);
  g_rb->add_option("--output", grp_output, "witness output file");
  auto* g_ver = group->add_subcommand("verify", "verify a witness");
  add_common(g_ver, grp_opts);
  g_ver->add_option("--witness", grp_witness)->required();
  g_ver->add_option("--strategy", grp_strategy, "necessary|search|completion");
  auto* g_dist = group->add_subcommand("distance", "presentation distance bounds");
  add_common(g_dist, grp_opts);
  g_dist->add_option("--left", grp_left)->required();
  g_dist->add_option("--right", grp_right)->required();
  g_dist->add_option("--nakanishi-left", grp_nak_left, "certified lower bound for the left group");
  g_dist->add_option("--nakanishi-right", grp_nak_right, "certified lower bound for the right group");
  auto* g_diff = group->add_subcommand("diff", "relator multiset split of two presentations");
  add_common(g_diff, grp_opts);
  g_diff->add_option("--left", grp_left)->required();
  g_diff->add_option("--right", grp_right)->required();
  g_diff->add_flag("--cyclic", grp_loose, "match relators up to rotation and inversion");

  // moves
  auto* moves = app.add_subcommand("moves", "local moves and the move catalog");
  moves->require_subcommand(1);
  CommonOpts mv_opts;
  std::string mv_move = "cc";
  int mv_id = 1;
  auto* m_list = moves->add_subcommand("list", "catalog with relator costs");
  m_list->add_flag("--json", mv_opts.json);
  auto* m_apply = moves->add_subcommand("apply", "apply a move and report the relator delta");
  add_common(m_apply, mv_opts);
  m_apply->add_option("--move", mv_move, "cc|virt");
  m_apply->add_option("--id", mv_id, "crossing id (1-based)");

  // search
  auto* search = app.add_subcommand("search", "bounded unknottability search");
  CommonOpts se_opts;
  std::size_t se_virt = 0, se_cc = 0;
  add_common(search, se_opts);
  search->add_option("--max-virt", se_virt, "virtualization budget");
  search->add_option("--max-cc", se_cc, "crossing change budget");

  auto* selftest = app.add_subcommand("selftest", "run the built-in fixtures");
  (void)selftest;

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) {
      auto report = mq::build_invariant_report(inv_opts.format,
                                               mq::read_input_file(inv_opts.input),
                                               inv_opts.config);
      if (inv_opts.json)
        std::cout << mq::render_report_json(report).dump(2) << "\n";
      else
        std::cout << mq::render_report_text(report);
      return 0;
    }

    if (group->parsed()) {
      if (g_ab->parsed()) {
        auto p = load_presentation(grp_opts.input);
        auto ab = mq::abelianization(p);
        if (grp_opts.json) {
          mq::ordered_json j;
          j["h1"] = ab.str();
          j["free_rank"] = ab.free_rank.str();
          std::vector<std::string> tor;
          for (const auto& d : ab.torsion) tor.push_back(d.str());
          j["torsion"] = tor;
          j["minimal_generators"] = ab.minimal_generators.str();
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "H_1 = " << ab.str() << " (minimal generators "
                    << ab.minimal_generators << ")\n";
        }
      } else if (g_nh->parsed()) {
        auto p = load_presentation(grp_opts.input);
        bool nh = mq::is_null_homologous(mq::Word::parse(grp_word), p);
        std::cout << (nh ? "null-homologous" : "not null-homologous") << "\n";
      } else if (g_rep->parsed()) {
        auto p = load_presentation(grp_opts.input);
        auto q = mq::replace_relator(p, mq::Word::parse(grp_old), mq::Word::parse(grp_new),
                                     !grp_nocheck);
        std::cout << mq::presentation_to_json(q).dump(2) << "\n";
      } else if (g_tr->parsed()) {
        auto src = load_presentation(grp_source);
        auto tgt = load_presentation(grp_target);
        auto w = mq::witness_from_json(
            mq::parse_json_text(mq::read_input_file(grp_witness)));
        auto out = mq::transfer_ngs(src, tgt, w);
        auto j = mq::witness_to_json(out);
        if (!grp_output.empty()) mq::write_file(grp_output, j.dump(2) + "\n");
        std::cout << j.dump(2) << "\n";
      } else if (g_rb->parsed()) {
        auto p = load_presentation(grp_opts.input);
        auto cert = mq::rank_bound_ngs(p);
        auto j = mq::rank_certificate_to_json(cert);
        if (!grp_output.empty())
          mq::write_file(grp_output, mq::witness_to_json(cert.witness).dump(2) + "\n");
        std::cout << j.dump(2) << "\n";
      } else if (g_ver->parsed()) {
        auto p = load_presentation(grp_opts.input);
        auto w = mq::witness_from_json(
            mq::parse_json_text(mq::read_input_file(grp_witness)));
        auto status = mq::verify_ngs(p, w, verify_options(grp_opts, grp_strategy));
        std::cout << mq::to_string(status) << "\n";
        if (status == mq::WitnessStatus::refuted) return 4;
      } else if (g_dist->parsed()) {
        auto left = load_presentation(grp_left);
        auto right = load_presentation(grp_right);
        std::optional<mq::Int> nl, nr;
        if (grp_nak_left >= 0) nl = mq::Int(grp_nak_left);
        if (grp_nak_right >= 0) nr = mq::Int(grp_nak_right);
        auto il = mq::mq_interval(left, nl, {}, grp_opts.config.tietze_budget);
        auto ir = mq::mq_interval(right, nr, {}, grp_opts.config.tietze_budget);
        auto d = mq::presentation_distance_bounds(left, right, il, ir,
                                                  grp_opts.config.tietze_budget);
        std::cout << "presentation distance: lower " << d.lower << ", upper " << d.upper
                  << "\n";
      } else if (g_diff->parsed()) {
        auto left = load_presentation(grp_left);
        auto right = load_presentation(grp_right);
        auto d = mq::diff(left, right, grp_loose);
        std::cout << "common: " << d.common.size() << ", only-left: "
                  << d.only_left.size() << ", only-right: " << d.only_right.size() << "\n";
        for (const auto& r : d.only_left) std::cout << "  left  " << r.str() << "\n";
        for (const auto& r : d.only_right) std::cout << "  right " << r.str() << "\n";
      }
      return 0;
    }

    if (moves->parsed()) {
      if (m_list->parsed()) {
        if (mv_opts.json) {
          mq::ordered_json j = mq::ordered_json::array();
          for (const auto& e : mq::move_catalog()) {
            mq::ordered_json entry;
            entry["name"] = e.name;
            entry["tangle_strands"] = e.tangle_strands;
            entry["relator_cost"] = e.relator_cost;
            entry["applicable"] = e.applicable_objects;
            j.push_back(std::move(entry));
          }
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& e : mq::move_catalog()) {
            std::cout << e.name << ": " << e.tangle_strands << "-tangle replacement, "
                      << "relator cost " << e.relator_cost << " (";
            for (std::size_t i = 0; i < e.applicable_objects.size(); ++i)
              std::cout << (i ? ", " : "") << e.applicable_objects[i];
            std::cout << ")\n";
          }
        }
        return 0;
      }
      // apply
      std::string text = mq::read_input_file(mv_opts.input);
      if (mv_opts.format != "gauss" && mv_opts.format != "pd")
        throw mq::parse_error("moves apply supports pd and gauss formats");
      mq::WirtingerPresentation wp, moved;
      std::string new_code;
      if (mv_opts.format == "gauss") {
        auto gc = mq::GaussCode::parse(text);
        if (gc.empty()) throw mq::parse_error("empty code has no crossings to move");
        wp = mq::wirtinger_from_gauss(gc);
        auto next = mv_move == "virt" ? mq::virtualize(gc, mv_id)
                                      : mq::crossing_change(gc, mv_id);
        new_code = next.str();
        moved = mq::wirtinger_from_gauss(next);
      } else {
        auto pd = mq::PDCode::parse(text);
        if (pd.crossing_count() == 0)
          throw mq::parse_error("empty code has no crossings to move");
        wp = mq::wirtinger_from_pd(pd);
        if (mv_move == "virt")
          throw mq::parse_error("virtualization needs a gauss code input");
        auto next = mq::crossing_change(pd, std::size_t(mv_id - 1));
        new_code = next.str();
        moved = mq::wirtinger_from_pd(next);
      }
      auto delta = mv_move == "virt"
                       ? mq::virtualize_relator_delta(wp, std::size_t(mv_id - 1))
                       : mq::crossing_change_relator_delta(wp, std::size_t(mv_id - 1));
      std::cout << "new code: " << new_code << "\n";
      std::cout << "relator " << (delta.relator_index + 1) << ": \""
                << delta.old_relator.str() << "\" -> \"" << delta.new_relator.str()
                << "\"\n";
      std::cout << "null-homologous (new in source): "
                << (delta.new_null_homologous_in_source ? "yes" : "no") << "\n";
      std::cout << "null-homologous (old in result): "
                << (delta.old_null_homologous_in_result ? "yes" : "no") << "\n";
      if (mq::unknot_verdict(moved.presentation) == mq::UnknotVerdict::unknot)
        std::cout << "resulting diagram: unknot (trivial alexander polynomial and "
                     "free rank-1 simplification)\n";
      return 0;
    }

    if (search->parsed()) {
      auto gc = mq::GaussCode::parse(mq::read_input_file(se_opts.input));
      auto cert = mq::unknottability_search(gc, se_virt, se_cc);
      std::size_t nak = 0;
      if (!gc.empty()) {
        auto wp = mq::wirtinger_from_gauss(gc);
        auto ab = mq::abelianization(wp.presentation);
        if (ab.free_rank == 1 && ab.torsion.empty())
          nak = mq::nakanishi_lower(wp.presentation).value;
      }
      std::cout << "nakanishi lower bound: m >= " << nak << "\n";
      if (!cert) {
        std::cout << "no certificate within budgets (" << se_virt << " virtualizations, "
                  << se_cc << " crossing changes)\n";
        return 0;
      }
      bool ok = mq::replay_unknottability(gc, *cert);
      std::cout << "certificate: " << cert->virtualizations << " virtualizations + "
                << cert->crossing_changes << " crossing changes\n";
      for (const auto& mv : cert->moves)
        std::cout << "  " << (mv.virtualization ? "virtualize" : "crossing-change")
                  << " @ " << mv.id << "\n";
      std::cout << "replay: " << (ok ? "valid" : "INVALID") << "\n";
      std::cout << "implied bound: a(K) <= "
                << (cert->virtualizations + cert->crossing_changes) << "\n";
      if (!ok) return 3;
      if (nak > cert->virtualizations + cert->crossing_changes) return 3;
      return 0;
    }

    if (selftest->parsed()) return run_selftest();
  } catch (const mq::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return int(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// selftest fixtures

namespace {

int run_selftest() {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[pass] " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  try {
    {
      auto wp = mq::wirtinger_from_pd(
          mq::PDCode::parse("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
      check("trefoil-pd: alexander polynomial",
            mq::alexander_polynomial(wp.presentation).str() == "1 - t + t^2");
      check("trefoil-pd: determinant",
            mq::knot_determinant(wp.presentation) == 3);
      check("trefoil-pd: nakanishi", mq::nakanishi_lower(wp.presentation).value == 1);
    }
    {
      auto a = mq::MontesinosDescriptor::parse("K(2/3, 1/3, 12/5)");
      auto b = mq::MontesinosDescriptor::parse("K(2/3, 10/3, -3/5)");
      check("montesinos identity 12a_504", mq::montesinos_equiv(a, b));
      auto c = mq::MontesinosDescriptor::parse("K(1/3, 3/4, 2/7)");
      auto d = mq::MontesinosDescriptor::parse("K(4/3, -1/4, 2/7)");
      check("montesinos identity 12a_642", mq::montesinos_equiv(c, d));
    }
    {
      auto m = mq::MontesinosDescriptor::parse("K(2/3, 10/3, -3/5)");
      auto cert = mq::rational_unknotting_certificate(m, mq::Int(8));
      check("12a_504: rational unknotting certificate", cert.has_value());
      if (cert) check("12a_504: certificate is the zero tangle",
                      cert->replacement.p == 0 && cert->replacement.q == 1);
      mq::RunConfiguration cfg;
      auto report = mq::build_invariant_report("montesinos", "K(2/3, 10/3, -3/5)", cfg);
      check("12a_504: report concludes m = a = 1", report.conclusion == "m = a = 1");
    }
    {
      auto gc = mq::GaussCode::parse("O1+U2+O3+U1+O2+U3+");
      auto cert = mq::unknottability_search(gc, 0, 1);
      check("trefoil-gauss: one crossing change unknots",
            cert.has_value() && mq::replay_unknottability(gc, *cert));
    }
  } catch (const std::exception& e) {
    std::cout << "[FAIL] selftest aborted: " << e.what() << "\n";
    return 1;
  }
  std::cout << (failures ? "selftest FAILED\n" : "selftest passed\n");
  return failures ? 1 : 0;
}

}  // namespace
