#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace radgen;
using namespace radgen::cli;

namespace {

Outcome run_json(const char* text) { return run_safely(parse_job(Json::parse(text))); }

int invoke(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  args.insert(args.begin(), "radgen");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("job parsing") {
  const JobSpec job = parse_job(Json::parse(R"({"command": "chain", "ring": ["x1"], "t": 3, "a": [1, 2], "p": 7})"));
  CHECK(job.command == "chain");
  CHECK(job.t == 3u);
  CHECK(job.a == std::vector<std::size_t>{1, 2});
  CHECK(job.field.prime() == 7);
  CHECK_THROWS_AS(parse_job(Json::parse(R"({"ring": "x1"})")), InvalidInput);
  CHECK_THROWS_AS(parse_job(Json::parse(R"({"ideals": [["x1", 3]]})")), InvalidInput);
  CHECK_THROWS_AS(parse_job(Json::parse(R"({"s": "two"})")), InvalidInput);
  CHECK_THROWS_AS(parse_job(Json::parse(R"({"p": 32001})")), InvalidInput);
  CHECK_THROWS_AS(parse_job(Json::parse("[1, 2]")), InvalidInput);
}

TEST_CASE("construct lists the four gammas") {
  const Outcome o = run_json(R"({"command": "construct", "ring": ["x1","x2","x3","x4","x5","x6"],
      "ideals": [["x1*x4","x5","x6"], ["x1","x2","x3"]], "s": 1})");
  CHECK(o.exit_code == kOk);
  CHECK(o.report["gammas"] == Json::parse(R"(["x1*x5", "x2*x5 + x1*x6", "x1*x4 + x3*x5 + x2*x6", "x3*x6"])"));
  CHECK(o.report["r"] == 4);
  CHECK(o.report["verdict"] == "true");
  CHECK(o.report["provenance"][2]["mu_index"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(run_json(R"({"command": "verify", "ring": ["x"], "ideals": [["x"], ["x^2"]]})").exit_code == kOk);
  const Outcome no = run_json(R"({"command": "verify", "ring": ["x","y"], "ideals": [["x"], ["x*y"]]})");
  CHECK(no.exit_code == kFalse);
  CHECK(no.report["failures"][0]["generator"] == "x");
  CHECK(run_json(R"({"command": "minimal-primes", "ring": ["x"], "ideals": [["x^2"]]})").exit_code == kInputError);
  CHECK(run_json(R"({"command": "construct", "ring": ["x"], "ideals": [["x"], ["x"]], "s": 1})").exit_code ==
        kInputError);
  const Outcome bad_poly = run_json(R"({"command": "verify", "ring": ["x"], "ideals": [["x"], ["x + + 1"]]})");
  CHECK(bad_poly.exit_code == kInputError);
  CHECK(bad_poly.report["error"].get<std::string>().find("ideals[1][0]") != std::string::npos);

  JobSpec tight = parse_job(Json::parse(R"({"command": "verify", "ring": ["x","y"],
      "ideals": [["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"], ["x^2", "x*y", "y^2 - 1/2*x"]]})"));
  CHECK(run_safely(tight).exit_code == kOk);
  tight.max_steps = 1;
  const Outcome budget = run_safely(tight);
  CHECK(budget.exit_code == kBudget);
  CHECK(budget.report["verdict"] == "inconclusive");
}

TEST_CASE("monomial commands") {
  const Outcome i = run_json(R"({"command": "intersect", "ring": ["x1","x4","x5","x6"],
      "ideals": [["x1","x5","x6"], ["x4","x5","x6"]]})");
  CHECK(i.report["generators"] == Json::parse(R"(["x1*x4", "x5", "x6"])"));
  const Outcome h = run_json(R"({"command": "height", "ring": ["a","b","c"], "ideals": [["a*b","a*c"]]})");
  CHECK(h.report["height"] == 1);
  CHECK(h.report["pure"] == false);
  CHECK(h.report["minimal_primes"] == Json::parse(R"([["a"], ["b","c"]])"));
}

TEST_CASE("chain and stci commands") {
  const Outcome c = run_json(R"({"command": "chain", "t": 3, "h": 1, "a": [2]})");
  CHECK(c.exit_code == kOk);
  CHECK(c.report["generators"] == Json::parse(R"(["x1*y1", "x2*y1 + x1*y2", "x2*y2", "x3"])"));
  CHECK(run_json(R"({"command": "chain", "t": 3, "h": 2, "a": [2]})").exit_code == kInputError);
  const Outcome s = run_json(R"({"command": "stci", "t": 2})");
  CHECK(s.report["ara"] == 2);
}

TEST_CASE("sv-combine command") {
  const Outcome ok = run_json(R"({"command": "sv-combine", "ring": ["a","b","c","d"],
      "ideals": [["a*d"], ["a*b","c*d"]], "e": [[1], [2, 1]]})");
  CHECK(ok.exit_code == kOk);
  CHECK(ok.report["combined"] == Json::parse(R"(["a*d", "a^2*b^2 + c*d"])"));
  const Outcome bad = run_json(R"({"command": "sv-combine", "ring": ["a","b"], "ideals": [["a","b"]]})");
  CHECK(bad.exit_code == kFalse);
  CHECK(bad.report["single_first_part"] == false);
}

TEST_CASE("reproduce targets") {
  JobSpec job;
  job.command = "reproduce";
  const Outcome e1 = reproduce("example1", job);
  CHECK(e1.exit_code == kOk);
  CHECK(e1.report["ara"] == 3);
  CHECK(e1.report["generators"] ==
        Json::parse(R"(["x3*x4*x5 + x5^2*x6", "x2*x3*x4 + x2*x5*x6 + x1*x5", "x3*x4*x7 + x5*x6*x7 + x1*x2 + x3*x5"])"));
  job.t = 1;
  const Outcome c1 = reproduce("corollary2", job);
  CHECK(c1.report["generators"] == Json::parse(R"(["x1*y1"])"));
  CHECK(c1.report["verdict"] == "true");
  job.t = 5;
  CHECK_THROWS_AS(reproduce("corollary2", job), InvalidInput);
  job.max_t = 5;
  CHECK(reproduce("corollary2", job).exit_code == kOk);
  CHECK_THROWS_AS(reproduce("example9", job), InvalidInput);
}

TEST_CASE("command line") {
  std::string out, err;
  CHECK(invoke({"frobnicate"}, &out, &err) == kInputError);
  CHECK(err.find("Usage") != std::string::npos);
  CHECK(invoke({"verify"}, &out, &err) == kInputError);
  CHECK(invoke({"verify", "--input", std::string(RADGEN_TEST_DATA) + "/verify_power.json"}, &out) == kOk);
  CHECK(Json::parse(out)["verdict"] == "true");
  CHECK(invoke({"construct", "--input", std::string(RADGEN_TEST_DATA) + "/verify_power.json"}, &out, &err) ==
        kInputError);
  CHECK(invoke({"verify", "--input", std::string(RADGEN_TEST_DATA) + "/malformed.json"}, &out, &err) == kInputError);
  CHECK(err.find("byte") != std::string::npos);
  CHECK(invoke({"reproduce", "example2", "--field", "mod:32003"}, &out) == kOk);
  CHECK(Json::parse(out)["field"] == "mod:32003");
  CHECK(invoke({"reproduce", "example2", "--field", "mod:4"}, &out, &err) == kInputError);
  CHECK(invoke({"--help"}, &out) == kOk);
}

TEST_CASE("reports are byte-identical across runs and match the golden file") {
  std::string first, second;
  REQUIRE(invoke({"reproduce", "example2"}, &first) == kOk);
  REQUIRE(invoke({"reproduce", "example2"}, &second) == kOk);
  CHECK(first == second);
  CHECK(first == slurp(std::string(RADGEN_TEST_DATA) + "/example2.golden.json"));
  std::string timed;
  invoke({"reproduce", "example2", "--timing"}, &timed);
  CHECK(Json::parse(timed).contains("timing_seconds"));
  CHECK_FALSE(Json::parse(first).contains("timing_seconds"));
}
