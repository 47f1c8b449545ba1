#pragma once

#include "cantor/geometry.hpp"
#include "cantor/svg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cantor::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

struct RunConfig {
  std::string subcommand;
  std::string source;                        // first-proof: harmonic|rationals|file; diagonal: table2|file
  std::optional<std::string> sequence_file;  // rationals, one per line
  std::optional<std::string> start;          // "lo,hi"
  std::uint64_t depth = 10;
  std::uint64_t budget = 1000000;
  std::uint64_t k = 100;
  std::string rule = "standard";
  unsigned n = 4;
  std::uint64_t steps = 100;
  std::optional<std::string> scene;
  std::optional<std::string> eps;
  std::optional<std::string> svg_out;
  std::string format = "json";  // json | text | svg
  std::optional<std::string> output;
  bool timestamp = false;
};

struct RunResult {
  int exit_code = kOk;
  std::string report;              // in the requested format
  std::optional<std::string> svg;  // paths and circle only
  std::optional<std::string> error;  // input error message, exit code 2
};

/// Runs one subcommand.  Input errors become exit code 2 with the message in
/// the report; they are never thrown.
RunResult dispatch(const RunConfig& cfg);

/// A query of a scene file: endpoints by point index, plus optional
/// overrides and, for arc chains, intermediate point indices.
struct SceneQuery {
  std::size_t from = 0;
  std::size_t to = 0;
  std::optional<Rational> eps;
  std::optional<BigInt> m;
  std::vector<std::size_t> via;
};

struct Scene {
  std::size_t dim = 2;
  std::vector<Point> points;
  PunctureSpec puncture = PunctureSpec::purely_algebraic;
  std::vector<SceneQuery> queries;
  std::vector<RationalPoint2> excluded;
  std::optional<SceneBounds> bounds;
};

Scene parse_scene(const std::string& json_text);
Scene load_scene(const std::string& path);

/// Full command line: parses flags, dispatches, writes the report to
/// --output or stdout and the SVG to --svg-out.  Returns the exit code.
int run(int argc, const char* const* argv);

}  // namespace cantor::cli
