#include "cantor/cli.hpp"

#include "cantor/diagonal.hpp"
#include "cantor/errors.hpp"
#include "cantor/function_family.hpp"
#include "cantor/nested.hpp"
#include "cantor/powerset.hpp"
#include "cantor/sequence.hpp"
#include "json_io.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <random>
#include <sstream>
#include <thread>

namespace cantor::cli {

namespace {

struct Outcome {
  int exit_code = kOk;
  Json report;
  std::optional<std::string> svg;
};

Json optional_json(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

// ---------------------------------------------------------------- first-proof

Outcome first_proof(const RunConfig& cfg) {
  if (cfg.depth < 1) throw OutOfRange("--depth must be at least 1");
  if (cfg.budget < 1) throw OutOfRange("--budget must be at least 1");
  const std::string source = cfg.source.empty() ? "harmonic" : cfg.source;

  std::optional<SequenceSource> seq;
  std::string default_start;
  if (source == "harmonic") {
    seq = SequenceSource::harmonic();
    default_start = "-1,1/2";
  } else if (source == "rationals") {
    default_start = "0,1";
  } else if (source == "file") {
    if (!cfg.sequence_file) throw ParseError("--source file needs --sequence-file");
    seq = SequenceSource::from_file(*cfg.sequence_file);
  } else {
    throw ParseError("--source must be harmonic, rationals or file for first-proof");
  }
  if (!cfg.start && default_start.empty()) throw ParseError("--start is required for --source file");
  const Interval start = Interval::parse(cfg.start.value_or(default_start));
  if (!seq) seq = SequenceSource::rationals_in(start);

  const NestedRun run = run_nested(*seq, start, cfg.depth, cfg.budget);
  const AuditReport audit = audit_members_outside(run, *seq);

  bool nested_ok = true;
  Json steps = Json::array();
  const Interval* previous = &run.start;
  for (const auto& step : run.steps) {
    nested_ok = nested_ok && step.interval.strictly_inside(*previous);
    previous = &step.interval;
    Json s = to_json(step.interval);
    s["consumed"] = Json::array({step.consumed.first, step.consumed.second});
    steps.push_back(std::move(s));
  }

  Outcome out;
  Json& r = out.report;
  r["command"] = "first-proof";
  r["construction"] = "nested intervals from the first two unused members";
  r["source"] = seq->describe();
  r["start"] = to_json(run.start);
  r["depth"] = cfg.depth;
  r["budget"] = cfg.budget;
  r["steps"] = std::move(steps);
  r["outcome"] = std::string(to_string(run.outcome));
  r["bounds"] = run.bounds() ? to_json(*run.bounds()) : Json(nullptr);
  r["last_interval"] = to_json(run.last_interval());
  r["eta"] = run.eta ? Json(run.eta->str()) : Json(nullptr);
  r["witnesses_found"] = run.witnesses_found;
  r["witness_index"] = optional_json(run.witness_index);
  r["nesting_holds"] = nested_ok;
  r["audit"] = Json{{"checked_through", audit.checked_through},
                    {"violations", audit.violations},
                    {"clean", audit.clean()}};
  out.exit_code = nested_ok && audit.clean() ? kOk : kViolation;
  return out;
}

// ------------------------------------------------------------------- diagonal

Json verdict(std::string_view check, std::uint64_t n_or_k, bool result, Json witness) {
  return Json{{"check", check}, {"n_or_k", n_or_k}, {"result", result}, {"witness", std::move(witness)}};
}

std::string digits_str(const std::vector<int>& digits) {
  std::string s = "0.";
  for (int d : digits) s += static_cast<char>('0' + d);
  return s;
}

Outcome diagonal(const RunConfig& cfg) {
  if (cfg.k < 1) throw OutOfRange("--k must be at least 1");
  const std::string source = cfg.source.empty() ? "table2" : cfg.source;
  ListView list = [&] {
    if (source == "table2") return ListView::ones_list();
    if (source == "file") {
      if (!cfg.sequence_file) throw ParseError("--source file needs --sequence-file");
      return ListView::from_file(*cfg.sequence_file);
    }
    throw ParseError("--source must be table2 or file for diagonal");
  }();
  const ReplacementRule rule = ReplacementRule::parse(cfg.rule);
  const std::vector<int> digits = build_diagonal(list, rule, cfg.k);

  Json in_range_witness = nullptr;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 1 || digits[i] > 8) {
      in_range_witness = Json{{"place", i + 1}, {"digit", digits[i]}};
      break;
    }
  }
  std::vector<std::uint64_t> escapes;
  Json escape_witness = nullptr;
  for (std::uint64_t n = 1; n <= cfg.k; ++n) {
    try {
      const std::uint64_t pos = locate_escape(list, digits, n);
      escapes.push_back(pos);
      if (pos > n && escape_witness.is_null()) escape_witness = Json{{"row", n}, {"position", pos}};
    } catch (const NoDifferenceWithinPrefix&) {
      escape_witness = Json{{"row", n}, {"position", nullptr}};
      break;
    }
  }

  Outcome out;
  Json& r = out.report;
  r["command"] = "diagonal";
  r["construction"] = "digit diagonal with replacement rule";
  r["list"] = list.name();
  r["rule"] = rule.str();
  r["k"] = cfg.k;
  r["diagonal"] = digits_str(digits);
  r["escape_positions"] = escapes;
  r["verdicts"] = Json::array({verdict("digits_in_1_to_8", cfg.k, in_range_witness.is_null(), in_range_witness),
                               verdict("row_n_differs_by_place_n", cfg.k, escape_witness.is_null(), escape_witness)});
  out.exit_code = in_range_witness.is_null() && escape_witness.is_null() ? kOk : kViolation;
  return out;
}

Outcome table2(const RunConfig& cfg) {
  if (cfg.k < 1) throw OutOfRange("--k must be at least 1");
  Json prefix_witness = nullptr;
  for (std::uint64_t n = 1; n <= cfg.k; ++n) {
    const PrefixIdentityVerdict v = ones_list_prefix_identity(n);
    if (!v.holds) {
      prefix_witness = Json{{"n", n}, {"agreeing_places", v.agreeing_places}, {"divergence", optional_json(v.divergence)}};
      break;
    }
  }
  const LimitVerdict limit = ones_list_limit_check(cfg.k);
  Json escape_witness = nullptr;
  for (std::size_t i = 0; i < limit.escape_positions.size(); ++i) {
    if (limit.escape_positions[i] != i + 1) {
      escape_witness = Json{{"row", i + 1}, {"position", limit.escape_positions[i]}};
      break;
    }
  }
  const bool prefix_ok = prefix_witness.is_null();

  Outcome out;
  Json& r = out.report;
  r["command"] = "table2";
  r["construction"] = "diagonal of the list 0.1, 0.11, 0.111, ... under the standard rule";
  r["rule"] = ReplacementRule::standard().str();
  r["k"] = cfg.k;
  r["limit"] = "1/9";
  r["distance"] = limit.distance.str();
  r["escape_positions"] = limit.escape_positions;
  r["verdicts"] = Json::array({
      verdict("prefix_identity_all_n", cfg.k, prefix_ok, prefix_witness),
      verdict("escape_at_place_n", cfg.k, limit.all_escape_at_diagonal, escape_witness),
      verdict("distance_to_limit_at_most_10^-k", cfg.k, limit.bound_holds,
              limit.bound_holds ? Json(nullptr) : Json(limit.distance.str())),
  });
  out.exit_code = prefix_ok && limit.all_escape_at_diagonal && limit.bound_holds ? kOk : kViolation;
  return out;
}

// -------------------------------------------------------------- func-diagonal

constexpr unsigned kMaxFunctionDepth = 10;

Outcome func_diagonal(const RunConfig& cfg) {
  if (cfg.depth < 1 || cfg.depth > kMaxFunctionDepth) {
    throw OutOfRange("--depth must be in 1.." + std::to_string(kMaxFunctionDepth) + " for func-diagonal");
  }
  const auto depth = static_cast<unsigned>(cfg.depth);
  const FunctionFamily family(FunctionFamily::dyadic_grid(depth), [](std::size_t y, std::size_t x) {
    return static_cast<std::int64_t>((3 * y + 5 * x) % 10);
  });
  const auto g = build_escape_function(family);
  const EscapeVerdict escape = verify_escape(family, g);
  const SelfReferenceVerdict with = self_reference_check(depth, true);
  const SelfReferenceVerdict without = self_reference_check(depth, false);

  auto system_json = [](const SelfReferenceVerdict& v) {
    Json j{{"satisfiable", v.satisfiable}, {"variables", v.variables}, {"constraints", v.constraints}};
    if (v.witness) {
      j["witness"] = Json{{"y", v.witness->y.str()},
                          {"y_image", v.witness->y_image.str()},
                          {"chain", v.witness->chain},
                          {"forced", v.witness->forced}};
    } else {
      j["witness"] = nullptr;
    }
    return j;
  };

  Outcome out;
  Json& r = out.report;
  r["command"] = "func-diagonal";
  r["construction"] = "diagonal function g(y) = f_y(y) + 1 on a dyadic grid";
  r["depth"] = depth;
  r["grid_points"] = family.size();
  r["sample_family"] = "f_y(x) = (3 i_y + 5 i_x) mod 10";
  r["escape"] = Json{{"escapes_everywhere", escape.escapes_everywhere},
                     {"first_failure", escape.first_failure ? Json(family.grid()[*escape.first_failure].str())
                                                            : Json(nullptr)}};
  r["with_self_reference"] = system_json(with);
  r["without_self_reference"] = system_json(without);
  const bool ok = escape.escapes_everywhere && !with.satisfiable && with.witness && without.satisfiable;
  out.exit_code = ok ? kOk : kViolation;
  return out;
}

// ------------------------------------------------------------------- powerset

Outcome powerset(const RunConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxGroundSize) throw OutOfRange("--n must be in 1.." + std::to_string(kMaxGroundSize));
  if (cfg.steps < 1) throw OutOfRange("--steps must be at least 1");
  const PowersetAudit audit = exhaustive_audit(cfg.n, std::thread::hardware_concurrency());

  Json failures = Json::array();
  if (audit.counterexample) {
    const RangeVerdict v = verify_M_not_in_range(*audit.counterexample);
    failures.push_back(Json{{"mapping", audit.counterexample->str()}, {"M", subset_str(v.M, cfg.n)}});
  }

  std::mt19937_64 rng(20240601);
  const std::uint64_t total = std::uint64_t{1} << (cfg.n * cfg.n);
  Json traces = Json::array();
  bool periodic = true;
  for (int sample = 0; sample < 3; ++sample) {
    const MappingTable s = MappingTable::from_index(cfg.n, rng() % total);
    const auto m = static_cast<unsigned>(1 + rng() % cfg.n);
    const std::vector<bool> trace = oscillation_trace(s, m, cfg.steps);
    std::string bits;
    bool alternates = true;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      bits += trace[i] ? '1' : '0';
      if (i > 0 && trace[i] == trace[i - 1]) alternates = false;
    }
    periodic = periodic && alternates;
    traces.push_back(Json{{"mapping", s.str()}, {"m", m}, {"trace", bits}, {"period", alternates && trace.size() > 1 ? Json(2) : Json(nullptr)}});
  }

  Outcome out;
  Json& r = out.report;
  r["command"] = "powerset";
  r["construction"] = "M = {i : i not in s(i)} over every mapping s";
  r["n"] = cfg.n;
  r["mappings_checked"] = audit.mappings_checked;
  r["failures"] = std::move(failures);
  r["steps"] = cfg.steps;
  r["sample_traces"] = std::move(traces);
  out.exit_code = !audit.counterexample && periodic ? kOk : kViolation;
  return out;
}

// -------------------------------------------------------------- paths, circle

Json plan_json(const PathPlan& plan, const PathVerdict& v) {
  Json waypoints = Json::array();
  for (const auto& w : plan.waypoints) waypoints.push_back(to_json(w));
  Json segments = Json::array();
  for (const auto& seg : plan.segments) {
    if (const auto* a = std::get_if<AxisSegment>(&seg)) {
      segments.push_back(Json{{"kind", "axis"},
                              {"moving", a->moving + 1},
                              {"fixed", a->fixed + 1},
                              {"fixed_value", to_json(a->fixed_value)}});
    } else {
      const auto& arc = std::get<CircleArc>(seg);
      Json forbidden = Json::array();
      for (const auto& t : arc.forbidden_parameters) forbidden.push_back(t.str());
      segments.push_back(Json{{"kind", "arc"},
                              {"center", to_json(arc.center)},
                              {"radius_squared", arc.radius_squared.str()},
                              {"from", to_json(arc.from)},
                              {"to", to_json(arc.to)},
                              {"parameter", arc.parameter.str()},
                              {"forbidden_parameters", std::move(forbidden)},
                              {"orientation", arc.counterclockwise ? "counterclockwise" : "clockwise"}});
    }
  }
  Json j{{"method", plan.method},
         {"pieces", plan.pieces},
         {"segment_count", plan.segments.size()},
         {"waypoints", std::move(waypoints)},
         {"segments", std::move(segments)},
         {"valid", v.valid}};
  if (v.violation) {
    j["violation"] = Json{{"segment", v.violation->segment},
                          {"reason", v.violation->reason},
                          {"witness", v.violation->witness ? to_json(*v.violation->witness) : Json(nullptr)}};
  } else {
    j["violation"] = nullptr;
  }
  j["notes"] = v.segment_notes;
  return j;
}

Outcome paths_or_circle(const RunConfig& cfg, bool arcs) {
  if (!cfg.scene) throw ParseError("--scene is required");
  const Scene scene = load_scene(*cfg.scene);
  std::optional<Rational> global_eps;
  if (cfg.eps) {
    global_eps = Rational::parse(*cfg.eps);
    if (global_eps->sign() <= 0) throw OutOfRange("--eps must be positive");
  }

  std::vector<PathPlan> plans;
  Json queries = Json::array();
  bool all_valid = true;
  for (const auto& q : scene.queries) {
    const Point& from = scene.points[q.from];
    const Point& to = scene.points[q.to];
    Json jq{{"from", q.from}, {"to", q.to}};
    PathPlan plan;
    if (arcs) {
      std::vector<RationalPoint2> chain{to_rational_point(from)};
      for (std::size_t v : q.via) chain.push_back(to_rational_point(scene.points[v]));
      chain.push_back(to_rational_point(to));
      plan = plan_arc_chain(chain, scene.excluded);
      // Same values; keep the endpoint tags as given in the scene.
      plan.waypoints.front() = from;
      plan.waypoints.back() = to;
    } else {
      const std::optional<Rational> eps = q.eps ? q.eps : global_eps;
      if (eps) {
        plan = plan_path_bounded_deviation(from, to, *eps, scene.puncture);
        jq["eps"] = eps->str();
        const Rational dev2 = max_deviation_squared(plan, from, to);
        jq["max_deviation_squared"] = dev2.str();
        jq["within_eps"] = dev2 <= *eps * *eps;
        all_valid = all_valid && dev2 <= *eps * *eps;
      } else if (q.m && scene.puncture == PunctureSpec::purely_non_natural) {
        plan = plan_path_natural_grid(from, to, *q.m);
      } else {
        plan = plan_path(from, to, scene.puncture);
      }
    }
    const PathVerdict v = validate_path(plan, arcs ? PunctureSpec::purely_algebraic : scene.puncture);
    all_valid = all_valid && v.valid && plan.waypoints.front() == from && plan.waypoints.back() == to;
    jq["plan"] = plan_json(plan, v);
    queries.push_back(std::move(jq));
    plans.push_back(std::move(plan));
  }

  Outcome out;
  Json& r = out.report;
  r["command"] = arcs ? "circle" : "paths";
  r["construction"] = arcs ? "circle arcs through rational points avoiding an excluded set"
                           : "axis-parallel paths holding an exempt coordinate";
  r["scene"] = std::filesystem::path(*cfg.scene).filename().string();
  r["dim"] = scene.dim;
  r["puncture"] = std::string(to_string(arcs ? PunctureSpec::purely_algebraic : scene.puncture));
  if (arcs) {
    Json excluded = Json::array();
    for (const auto& e : scene.excluded) excluded.push_back(to_json(e));
    r["excluded"] = std::move(excluded);
  }
  r["queries"] = std::move(queries);
  r["all_valid"] = all_valid;
  out.exit_code = all_valid ? kOk : kViolation;
  if (scene.dim == 2 && (cfg.format == "svg" || cfg.svg_out)) out.svg = emit_svg(plans, scene.bounds);
  return out;
}

// ----------------------------------------------------------------- rendering

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunResult dispatch(const RunConfig& cfg) {
  Outcome out;
  try {
    if (cfg.format != "json" && cfg.format != "text" && cfg.format != "svg") {
      throw ParseError("--format must be json, text or svg");
    }
    const bool draws = cfg.subcommand == "paths" || cfg.subcommand == "circle";
    if (cfg.format == "svg" && !draws) throw ParseError("--format svg is only available for paths and circle");
    if (cfg.svg_out && !draws) throw ParseError("--svg-out is only available for paths and circle");

    if (cfg.subcommand == "first-proof") out = first_proof(cfg);
    else if (cfg.subcommand == "diagonal") out = diagonal(cfg);
    else if (cfg.subcommand == "table2") out = table2(cfg);
    else if (cfg.subcommand == "func-diagonal") out = func_diagonal(cfg);
    else if (cfg.subcommand == "powerset") out = powerset(cfg);
    else if (cfg.subcommand == "paths") out = paths_or_circle(cfg, false);
    else if (cfg.subcommand == "circle") out = paths_or_circle(cfg, true);
    else throw ParseError("unknown subcommand '" + cfg.subcommand + "'");
    if (cfg.format == "svg" && !out.svg) throw ParseError("SVG output needs a plane scene");
  } catch (const Error& e) {
    out = Outcome{};
    out.report = Json{{"command", cfg.subcommand}, {"error", e.what()}};
    out.exit_code = kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    out = Outcome{};
    out.report = Json{{"command", cfg.subcommand}, {"error", e.what()}};
    out.exit_code = kInputError;
  }
  out.report["exit_code"] = out.exit_code;
  if (cfg.timestamp) out.report["generated_at"] = utc_now();

  RunResult result;
  result.exit_code = out.exit_code;
  if (out.report.contains("error")) result.error = out.report["error"].get<std::string>();
  result.svg = std::move(out.svg);
  if (cfg.format == "svg" && result.svg && out.exit_code != kInputError) {
    result.report = *result.svg;
  } else if (cfg.format == "text") {
    std::ostringstream text;
    flatten(out.report, "", text);
    result.report = text.str();
  } else {
    result.report = out.report.dump(2) + "\n";
  }
  return result;
}

}  // namespace cantor::cli
