#include "cantor/cli.hpp"
#include "cantor/errors.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace cantor;
using namespace cantor::cli;
using Json = nlohmann::json;

namespace {

RunConfig config(std::string subcommand) {
  RunConfig cfg;
  cfg.subcommand = std::move(subcommand);
  return cfg;
}

Json report(const RunResult& r) { return Json::parse(r.report); }

const char* kFigureScene = R"({
  "dim": 2, "puncture": "AA",
  "points": [
    {"coords": [{"class": "rational", "offset": "1/2"}, {"class": "transcendental", "symbol": "pi", "scale": "1/10", "offset": 0}]},
    {"coords": [{"class": "transcendental", "symbol": "e", "scale": "1/10", "offset": 1}, {"class": "rational", "offset": "3/2"}]},
    {"coords": [{"class": "rational", "offset": "5/2"}, {"class": "transcendental", "symbol": "e", "scale": "1/10", "offset": 1}]}
  ],
  "queries": [{"from": 0, "to": 1}, {"from": 0, "to": 2}, {"from": 0, "to": 1, "eps": "1/8"}]
})";

}  // namespace

TEST_CASE("cli: first-proof on the harmonic sequence") {
  auto cfg = config("first-proof");
  cfg.source = "harmonic";
  cfg.start = "-1,1/2";
  cfg.depth = 50;
  auto r = dispatch(cfg);
  CHECK(r.exit_code == kOk);
  Json j = report(r);
  CHECK(j["bounds"]["lo"] == "-1/99");
  CHECK(j["bounds"]["hi"] == "1/100");
  CHECK(j["steps"][0]["lo"] == "-1/3");
  CHECK(j["steps"][0]["hi"] == "1/4");
  CHECK(j["steps"][0]["consumed"] == Json::array({3, 4}));
  CHECK(j["outcome"] == "converged");
  CHECK(j["audit"]["clean"] == true);
  CHECK_FALSE(j.contains("generated_at"));
}

TEST_CASE("cli: first-proof on a file and on the rational walk") {
  test::TempFile file("cli_two.txt", "0\n1\n");
  auto cfg = config("first-proof");
  cfg.source = "file";
  cfg.sequence_file = file.str();
  cfg.start = "-1,2";
  cfg.depth = 5;
  Json j = report(dispatch(cfg));
  CHECK(j["outcome"] == "finite_case_within_budget");
  CHECK(j["eta"] == "1/2");
  CHECK(j["exit_code"] == 0);

  auto walk = config("first-proof");
  walk.source = "rationals";
  walk.depth = 4;
  Json w = report(dispatch(walk));
  CHECK(w["start"]["lo"] == "0");
  CHECK(w["steps"].size() == 3);
}

TEST_CASE("cli: powerset and table2 examples") {
  auto p = config("powerset");
  p.n = 4;
  auto pr = dispatch(p);
  CHECK(pr.exit_code == kOk);
  Json pj = report(pr);
  CHECK(pj["mappings_checked"] == 65536);
  CHECK(pj["failures"].empty());
  for (const auto& t : pj["sample_traces"]) CHECK(t["period"] == 2);

  auto t = config("table2");
  t.k = 1000;
  auto tr = dispatch(t);
  CHECK(tr.exit_code == kOk);
  Json tj = report(tr);
  CHECK(tj["escape_positions"].size() == 1000);
  CHECK(tj["escape_positions"][999] == 1000);
  for (const auto& v : tj["verdicts"]) CHECK(v["result"] == true);
}

TEST_CASE("cli: diagonal and func-diagonal") {
  test::TempFile rows("cli_rows.txt", "0.1\n0.21\n1/3\n");
  auto d = config("diagonal");
  d.source = "file";
  d.sequence_file = rows.str();
  d.k = 3;
  Json dj = report(dispatch(d));
  CHECK(dj["diagonal"] == "0.221");
  CHECK(dj["escape_positions"] == Json::array({1, 2, 1}));
  CHECK(dj["exit_code"] == 0);

  auto f = config("func-diagonal");
  f.depth = 1;
  Json fj = report(dispatch(f));
  CHECK(fj["with_self_reference"]["satisfiable"] == false);
  CHECK(fj["with_self_reference"]["witness"]["forced"] == "g(1/2) = g(1/2) + 1");
  CHECK(fj["without_self_reference"]["satisfiable"] == true);
  CHECK(fj["exit_code"] == 0);
}

TEST_CASE("cli: paths and circle scenes") {
  test::TempFile scene("cli_scene.json", kFigureScene);
  auto cfg = config("paths");
  cfg.scene = scene.str();
  auto r = dispatch(cfg);
  CHECK(r.exit_code == kOk);
  Json j = report(r);
  CHECK(j["queries"][0]["plan"]["segment_count"] == 2);
  CHECK(j["queries"][1]["plan"]["segment_count"] == 3);
  CHECK(j["queries"][2]["within_eps"] == true);
  CHECK(j["all_valid"] == true);
  CHECK_FALSE(r.svg.has_value());

  cfg.format = "svg";
  auto s = dispatch(cfg);
  CHECK(s.report.rfind("<?xml", 0) == 0);
  CHECK(s.report == *s.svg);

  test::TempFile circle("cli_circle.json", R"({"points": [[0, 0], [2, 0]], "excluded": [[1, 1]], "queries": [{"from": 0, "to": 1}]})");
  auto c = config("circle");
  c.scene = circle.str();
  Json cj = report(dispatch(c));
  const auto& seg = cj["queries"][0]["plan"]["segments"][0];
  CHECK(seg["center"] == Json::array({"1", "1"}));
  CHECK(seg["radius_squared"] == "2");
  CHECK(seg["forbidden_parameters"] == Json::array({"0"}));
  CHECK(cj["all_valid"] == true);
}

TEST_CASE("cli: text format and timestamp") {
  auto cfg = config("powerset");
  cfg.n = 2;
  cfg.format = "text";
  auto r = dispatch(cfg);
  CHECK(r.report.find("mappings_checked: 16\n") != std::string::npos);
  cfg.format = "json";
  cfg.timestamp = true;
  CHECK(report(dispatch(cfg)).contains("generated_at"));
}

TEST_CASE("cli: input errors exit with 2") {
  auto expect_input_error = [](RunConfig cfg) {
    auto r = dispatch(cfg);
    CHECK(r.exit_code == kInputError);
    CHECK(r.error.has_value());
    CHECK(report(r).contains("error"));
  };
  auto fp = config("first-proof");
  fp.start = "1,0";
  expect_input_error(fp);
  fp.start = "-1,1/2";
  fp.depth = 0;
  expect_input_error(fp);
  fp.depth = 3;
  fp.source = "file";
  expect_input_error(fp);
  fp.source = "primes";
  expect_input_error(fp);

  auto p = config("powerset");
  p.n = 5;
  expect_input_error(p);
  p.n = 2;
  p.format = "svg";
  expect_input_error(p);
  p.format = "yaml";
  expect_input_error(p);

  auto d = config("diagonal");
  d.rule = "0123456789";
  expect_input_error(d);
  auto t = config("table2");
  t.k = 0;
  expect_input_error(t);
  auto f = config("func-diagonal");
  f.depth = 11;
  expect_input_error(f);

  auto paths = config("paths");
  expect_input_error(paths);
  paths.scene = "/nonexistent/scene.json";
  expect_input_error(paths);
  test::TempFile bad_class("cli_bad.json", R"({"points": [[{"class": "rational", "symbol": "pi"}, 1]], "queries": []})");
  paths.scene = bad_class.str();
  expect_input_error(paths);
  test::TempFile bad_json("cli_badjson.json", "{points:");
  paths.scene = bad_json.str();
  expect_input_error(paths);
  test::TempFile bad_index("cli_index.json", R"({"points": [[1, 2]], "queries": [{"from": 0, "to": 4}]})");
  paths.scene = bad_index.str();
  expect_input_error(paths);
  test::TempFile no_exempt("cli_aa.json", R"({"puncture": "AA", "points": [[1, 2], [3, 4]], "queries": [{"from": 0, "to": 1}]})");
  paths.scene = no_exempt.str();
  expect_input_error(paths);
  expect_input_error(config("sing"));
}

TEST_CASE("cli: scene parsing") {
  Scene s = parse_scene(R"({"dim": 3, "puncture": "non_natural",
    "points": [{"coords": [2, "1/2", {"class": "algebraic_irrational", "symbol": "sqrt2", "scale": -1, "offset": 3}]}],
    "bounds": {"xmin": 0, "xmax": 4, "ymin": -1, "ymax": 1}})");
  CHECK(s.dim == 3);
  CHECK(s.puncture == PunctureSpec::purely_non_natural);
  REQUIRE(s.points.size() == 1);
  CHECK(s.points[0].coords[0].number_class() == NumberClass::natural);
  CHECK(s.points[0].coords[1].number_class() == NumberClass::rational);
  CHECK(s.points[0].coords[2].number_class() == NumberClass::algebraic_irrational);
  CHECK(s.points[0].coords[2].scale() == Rational(-1));
  REQUIRE(s.bounds);
  CHECK(s.bounds->ymin == Rational(-1));
  CHECK_THROWS_AS(parse_scene(R"({"dim": 3, "points": [[1, 2]]})"), ParseError);
  CHECK_THROWS_AS(parse_scene(R"({"points": [[{"class": "natural", "offset": "1/2"}, 1]]})"), InvalidTag);
  CHECK_THROWS_AS(parse_scene(R"({"points": [[{"class": "transcendental", "symbol": "sqrt2"}, 1]]})"), InvalidTag);
  CHECK_THROWS_AS(parse_scene(R"({"points": [], "bounds": {"xmin": 1, "xmax": 1, "ymin": 0, "ymax": 1}})"), OutOfRange);
}

TEST_CASE("cli: command-line parsing") {
  const char* help[] = {"cantor", "--help"};
  CHECK(run(2, help) == kOk);
  const char* missing[] = {"cantor"};
  CHECK(run(1, missing) == kInputError);
  const char* unknown_flag[] = {"cantor", "powerset", "--bogus"};
  CHECK(run(3, unknown_flag) == kInputError);
  const char* bad_value[] = {"cantor", "powerset", "--n", "four"};
  CHECK(run(4, bad_value) == kInputError);
  const char* wrong_flag[] = {"cantor", "table2", "--scene", "x.json"};
  CHECK(run(4, wrong_flag) == kInputError);
  test::TempFile out("cli_out.json", "");
  const std::string out_path = out.str();
  const char* to_file[] = {"cantor", "powerset", "--n", "1", "--output", out_path.c_str()};
  CHECK(run(6, to_file) == kOk);
  std::ifstream in(out_path);
  Json j = Json::parse(in);
  CHECK(j["mappings_checked"] == 2);
}
