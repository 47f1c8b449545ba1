#include "cantor/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace cantor::cli {

namespace {

enum Flag : unsigned {
  kSource = 1u << 0,
  kSequenceFile = 1u << 1,
  kStart = 1u << 2,
  kDepth = 1u << 3,
  kBudget = 1u << 4,
  kK = 1u << 5,
  kRule = 1u << 6,
  kN = 1u << 7,
  kSteps = 1u << 8,
  kScene = 1u << 9,
  kEps = 1u << 10,
  kSvgOut = 1u << 11,
};

void add_flags(CLI::App& sub, unsigned flags, RunConfig& cfg) {
  if (flags & kSource) sub.add_option("--source", cfg.source, "Input family");
  if (flags & kSequenceFile) sub.add_option("--sequence-file", cfg.sequence_file, "Rationals, one per line, '#' comments");
  if (flags & kStart) sub.add_option("--start", cfg.start, "Start interval \"lo,hi\"");
  if (flags & kDepth) sub.add_option("--depth", cfg.depth, "Depth")->capture_default_str();
  if (flags & kBudget) sub.add_option("--budget", cfg.budget, "Index scan budget")->capture_default_str();
  if (flags & kK) sub.add_option("--k", cfg.k, "Number of diagonal places")->capture_default_str();
  if (flags & kRule) sub.add_option("--rule", cfg.rule, "\"standard\" or ten replacement digits")->capture_default_str();
  if (flags & kN) sub.add_option("--n", cfg.n, "Ground set size, 1..4")->capture_default_str();
  if (flags & kSteps) sub.add_option("--steps", cfg.steps, "Oscillation trace length")->capture_default_str();
  if (flags & kScene) sub.add_option("--scene", cfg.scene, "Scene JSON file")->required();
  if (flags & kEps) sub.add_option("--eps", cfg.eps, "Deviation bound for every query");
  if (flags & kSvgOut) sub.add_option("--svg-out", cfg.svg_out, "Write the SVG drawing here");
  sub.add_option("--format", cfg.format, "json, text or svg")->capture_default_str();
  sub.add_option("--output", cfg.output, "Report file (default stdout)");
  sub.add_flag("--timestamp", cfg.timestamp, "Add a generated_at field");
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

}  // namespace

int run(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Nested intervals, diagonals, power-set mappings and punctured-plane paths with exact arithmetic"};
  app.require_subcommand(1);
  struct Spec {
    const char* name;
    const char* help;
    unsigned flags;
  };
  const Spec specs[] = {
      {"first-proof", "Nested intervals over a sequence", kSource | kSequenceFile | kStart | kDepth | kBudget},
      {"diagonal", "Digit diagonal of a list of reals", kSource | kSequenceFile | kK | kRule},
      {"table2", "Diagonal of the list 0.0, 0.1, 0.11, ... and its limit 1/9", kK},
      {"func-diagonal", "Diagonal function and its self-referential constraint system", kDepth},
      {"powerset", "Exhaustive check that M is not in the range of s", kN | kSteps},
      {"paths", "Axis-parallel paths in a punctured space", kScene | kEps | kSvgOut},
      {"circle", "Circle arcs avoiding a finite excluded set", kScene | kSvgOut},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_flags(*sub, s.flags, cfg);
    sub->callback([&cfg, name = std::string(s.name)] { cfg.subcommand = name; });
  }
  if (argc > 0) app.name(argv[0]);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  const RunResult result = dispatch(cfg);
  if (cfg.svg_out && result.svg && result.exit_code != kInputError) {
    if (!write_file(*cfg.svg_out, *result.svg)) {
      std::cerr << "error: cannot write --svg-out '" << *cfg.svg_out << "'\n";
      return kInputError;
    }
  }
  if (cfg.output) {
    if (!write_file(*cfg.output, result.report)) {
      std::cerr << "error: cannot write --output '" << *cfg.output << "'\n";
      return kInputError;
    }
  } else {
    std::cout << result.report;
  }
  if (result.error) std::cerr << "error: " << *result.error << '\n';
  return result.exit_code;
}

}  // namespace cantor::cli
