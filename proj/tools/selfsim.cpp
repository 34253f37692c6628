// selfsim: command-line front end for self-similar set embeddings.
//
// Exit codes: 0 included / pass, 1 excluded / fail, 2 parse or input error,
// 3 budget exceeded, 4 unknown at the configured depths.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "selfsim/cover.hpp"
#include "selfsim/embedding.hpp"
#include "selfsim/io.hpp"
#include "selfsim/verify.hpp"

namespace {

using namespace selfsim;

enum Exit : int { kIncluded = 0, kExcluded = 1, kParse = 2, kBudget = 3, kUnknown = 4 };

struct Common {
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  EngineDepths depths;
};

std::uint64_t resolve_budget(const Common& c) {
  if (c.budget) return *c.budget;
  if (const char* env = std::getenv("SELFSIM_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("SELFSIM_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultCylinderBudget;
}

EngineDepths resolve_depths(const Common& c) {
  EngineDepths d = c.depths;
  d.budget = resolve_budget(c);
  return d;
}

int verdict_exit(const EmbeddingVerdict& v) {
  if (is_included(v)) return kIncluded;
  if (is_excluded(v)) return kExcluded;
  return kUnknown;
}

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "record"}));
  cmd->add_option("--budget", c.budget, "Cylinder budget (overrides SELFSIM_BUDGET)");
}

void add_engine_depths(CLI::App* cmd, Common& c) {
  cmd->add_option("--point-depth", c.depths.point_depth, "Depth of certified attractor points")->capture_default_str();
  cmd->add_option("--cover-depth", c.depths.cover_depth, "Depth of the outer cover")->capture_default_str();
  cmd->add_option("--branch-depth", c.depths.branch_depth, "Depth of the cylinder branch search")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact self-embeddings of one-dimensional self-similar sets"};
  app.require_subcommand(1);

  Common common;
  std::string ifs_path;
  std::string map_text;
  std::string ratio_text;
  int depth = kDefaultCoverDepth;
  std::string svg_path;
  std::string only;
  bool inject = false;

  auto* cover_cmd = app.add_subcommand("cover", "Print the depth-n cover of the attractor");
  cover_cmd->add_option("ifs", ifs_path, "IFS spec file")->required();
  cover_cmd->add_option("--depth", depth, "Cover depth")->capture_default_str();
  cover_cmd->add_option("--svg", svg_path, "Write a strip diagram of depths 0..n");
  add_format(cover_cmd, common);

  auto* check_cmd = app.add_subcommand("check", "Decide whether f(K) is contained in K");
  check_cmd->add_option("ifs", ifs_path, "IFS spec file")->required();
  check_cmd->add_option("--map", map_text, "The map as \"ratio offset\"")->required();
  add_engine_depths(check_cmd, common);
  add_format(check_cmd, common);

  auto* decompose_cmd = app.add_subcommand("decompose", "Write an embedding as a (reflected) word map");
  decompose_cmd->add_option("ifs", ifs_path, "IFS spec file")->required();
  decompose_cmd->add_option("--map", map_text, "The map as \"ratio offset\"")->required();
  decompose_cmd->add_option("--max-steps", common.depths.max_steps, "Descent step budget")->capture_default_str();
  add_engine_depths(decompose_cmd, common);
  add_format(decompose_cmd, common);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all embeddings with a given signed ratio");
  enumerate_cmd->add_option("ifs", ifs_path, "IFS spec file")->required();
  enumerate_cmd->add_option("--ratio", ratio_text, "Signed ratio p/q with 0 < |p/q| < 1")->required();
  add_engine_depths(enumerate_cmd, common);
  add_format(enumerate_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the reference characterization suite");
  verify_cmd->add_option("--only", only, "three-map, three-map-words, three-map-symmetric, equal-gap, two-map, grid, four-map");
  verify_cmd->add_flag("--inject-wrong-expectation", inject, "Test mode: corrupt one expected inventory");
  add_engine_depths(verify_cmd, common);
  add_format(verify_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  const bool record = common.format == "record";
  try {
    if (*cover_cmd) {
      const Ifs ifs = read_ifs_file(ifs_path);
      const std::uint64_t budget = resolve_budget(common);
      const CoverReport report = selfsim::cover(ifs, depth, budget);
      if (record) {
        std::cout << to_record(report).dump(2) << "\n";
      } else {
        std::cout << format_ifs(ifs) << format_cover(report);
      }
      if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) throw Error(ErrorKind::ParseError, "cannot write " + svg_path);
        out << render_cover_svg(ifs, depth, budget);
      }
      return kIncluded;
    }
    if (*check_cmd) {
      const Ifs ifs = read_ifs_file(ifs_path);
      const Similitude f = parse_map(map_text);
      const EmbeddingEngine engine(ifs, resolve_depths(common));
      const EmbeddingVerdict v = engine.check(f);
      if (record) {
        std::cout << to_record(v).dump(2) << "\n";
      } else {
        std::cout << "map " << f << "\n" << format_verdict(v) << "\n";
      }
      return verdict_exit(v);
    }
    if (*decompose_cmd) {
      const Ifs ifs = read_ifs_file(ifs_path);
      const Similitude f = parse_map(map_text);
      const EmbeddingEngine engine(ifs, resolve_depths(common));
      const Decomposition d = engine.decompose(f);
      if (record) {
        std::cout << to_record(d).dump(2) << "\n";
      } else {
        std::cout << format_decomposition(d, f);
      }
      return verdict_exit(d.verdict);
    }
    if (*enumerate_cmd) {
      const Ifs ifs = read_ifs_file(ifs_path);
      const Rational ratio = Rational::parse(ratio_text);
      const EmbeddingEngine engine(ifs, resolve_depths(common));
      const EnumerationResult r = engine.enumerate(ratio);
      if (record) {
        std::cout << to_record(r).dump(2) << "\n";
      } else {
        std::cout << format_enumeration(r);
      }
      return r.candidates.empty() ? kIncluded : kUnknown;
    }
    if (*verify_cmd) {
      std::vector<TheoremId> filter;
      if (!only.empty()) {
        auto parsed = parse_theorem_filter(only);
        if (!parsed) throw Error(ErrorKind::ParseError, "unknown --only value \"" + only + "\"");
        filter = *parsed;
      }
      VerifyOptions options;
      options.depths = resolve_depths(common);
      options.inject_wrong_expectation = inject;
      const auto reports = run_reference_suite(filter, options);
      bool all = true;
      nlohmann::json records = nlohmann::json::array();
      for (const auto& r : reports) {
        all = all && r.pass;
        if (record) {
          records.push_back(to_record(r));
        } else {
          std::cout << format_report(r);
        }
      }
      if (record) {
        std::cout << nlohmann::json{{"reports", records}, {"pass", all}}.dump(2) << "\n";
      } else {
        std::cout << (all ? "all " : "not all ") << reports.size() << " reports pass\n";
      }
      return all ? kIncluded : kExcluded;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::BudgetExceeded:
      case ErrorKind::StepBudgetExceeded:
        return kBudget;
      default:
        return kParse;
    }
  }
  return kParse;
}
