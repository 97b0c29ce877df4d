#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "conesum/cli.hpp"
#include "conesum/config.hpp"

using namespace conesum;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "conesum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(CONESUM_CONFIG_DIR) + "/" + name; }

}  // namespace

TEST_CASE("converge emits csv rows and succeeds") {
  auto r = run({"converge", config("sqrt3.json")});
  CHECK(r.code == kOk);
  CHECK(r.out.rfind("N,partial_sum_decimal,target_decimal,abs_error\n", 0) == 0);
  CHECK(r.out.find("\n1,undefined,") != std::string::npos);
  CHECK(r.out.find("1.66666666666666666667e-01") != std::string::npos);
}

TEST_CASE("converge json carries exact strings") {
  auto r = run({"converge", config("sqrt3.json"), "--format", "json", "--N-max", "4"});
  CHECK(r.code == kPropertyFailure);  // N = 4 is far from the tolerance
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["target"] == "1/6");
  CHECK(j["rows"].size() == 4);
  CHECK(j["rows"][2]["partial_sum"] == "(5/8)/√12");
}

TEST_CASE("flag overrides") {
  auto r = run({"converge", config("sqrt3.json"), "--x0", "1,0", "--tol", "1e-3"});
  CHECK(r.code == kOk);
  auto bad = run({"converge", config("sqrt3.json"), "--x0", "1,1"});
  CHECK(bad.code == kConfigError);
  auto j = nlohmann::json::parse(bad.err);
  CHECK(j["error"] == "NotTotallyPositive");
}

TEST_CASE("output is deterministic") {
  CHECK(run({"converge", config("sqrt2.json")}).out == run({"converge", config("sqrt2.json")}).out);
  CHECK(run({"verify", "lemma1", "--seed", "7"}).out == run({"verify", "lemma1", "--seed", "7"}).out);
}

TEST_CASE("verify reports in the documented json shape") {
  auto r = run({"verify", "satake", "--format", "json"});
  CHECK(r.code == kOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "satake");
  CHECK(j["seed"] == 1);
  CHECK(j["results"].size() >= 3);
  for (const auto& c : j["results"]) CHECK(c["pass"] == true);
}

TEST_CASE("verify with a config") {
  auto r = run({"verify", "goodfan", config("sqrt3.json")});
  CHECK(r.code == kOk);
  CHECK(r.out.rfind("# suite=goodfan seed=1\n", 0) == 0);
}

TEST_CASE("usage and config errors") {
  CHECK(run({"verify", "nosuchsuite"}).code == kConfigError);
  CHECK(run({}).code == kConfigError);
  CHECK(run({"converge", "/nonexistent.json"}).code == kConfigError);
  CHECK(run({"converge", config("sqrt3.json"), "--format", "xml"}).code == kConfigError);
}

TEST_CASE("unitsearch exit codes") {
  auto ok = run({"unitsearch", config("cubic.json")});
  CHECK(ok.code == kOk);
  CHECK(ok.out.find("exponents=(-3,6);(7,-1);(-5,-3)") != std::string::npos);
  CHECK(run({"unitsearch", config("cubic.json"), "--radius", "0"}).code == kNotFound);
  CHECK(run({"unitsearch", "--field", "-3,0,1"}).code == kConfigError);
  CHECK(run({"unitsearch", "--field", "1,-2,-1,1", "--a", "2", "--b", "9"}).code == kOk);
}

TEST_CASE("config schema validation") {
  auto parse = [](const char* s) { return parse_config(nlohmann::json::parse(s)); };
  CHECK_THROWS_AS(parse(R"({"field": {"min_poly": [-3, 0, 1]}, "bogus": 1})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"field": {"min_poly": [-3, 0, 1]}, "x0": [1.5, 0]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"field": {"min_poly": [-3, 0, 1]}, "x0": [1]})"), ConfigError);
  CHECK_THROWS_AS(parse(R"({"x0": [1, 0]})"), ConfigError);
  auto c = parse(R"({"field": {"min_poly": [-3, 0, 1]}, "x0": ["3/2", 1], "module": {"units": [[2, 1]]}})");
  CHECK((*c.x0)[0] == Rational(3, 2));
  CHECK(c.basis.size() == 2);
  auto i = parse(R"J({"field": {"min_poly": [-3, 0, 1]}, "intersections": {"entries": {"(2,0)": -2, "(0,2)": "-3", "(1,1)": 2}}})J");
  CHECK(i.intersections->entries.size() == 3);
  CHECK(i.intersections->r == 2);
}
