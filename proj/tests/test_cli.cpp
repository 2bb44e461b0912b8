#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "locpoly/cli.hpp"

using namespace locpoly;
namespace fs = std::filesystem;

namespace {

std::string env(const char* name) {
  const char* v = std::getenv(name);
  return v ? v : "";
}

std::string scenario(const std::string& file) { return env("LOCPOLY_SCENARIOS") + "/" + file; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / ("locpoly-test-" + name);
  std::ofstream(p) << text;
  return p;
}

int shell_status(const std::string& cmd) {
  int s = std::system(cmd.c_str());
  return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

}  // namespace

TEST_CASE("every shipped scenario passes") {
  REQUIRE_FALSE(env("LOCPOLY_SCENARIOS").empty());
  const std::vector<std::pair<std::string, std::string>> runs{
      {"verify-axioms", "axioms_s3.json"}, {"verify-axioms", "axioms_partial.json"}, {"vf", "z3units_vf.json"},
      {"poly-check", "z3_poly.json"},      {"poly-check", "z3units_poly.json"},      {"poly-check", "z3_whole_poly.json"},
      {"decompose", "decompose_q3.json"},  {"decompose", "decompose_units.json"},    {"isotypic", "s3.json"},
      {"isotypic", "z3_isotypic.json"},    {"convolve", "convolve_z3.json"},         {"local-unit", "local_unit_shifted.json"}};
  for (const auto& [cmd, file] : runs) {
    Run r = run({cmd, scenario(file)});
    INFO(cmd << " " << file << ": " << r.err);
    CHECK(r.code == kExitOk);
    Json j = Json::parse(r.out);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["command"] == cmd);
    CHECK(j["ok"] == true);
    CHECK(j.contains("property"));
  }
}

TEST_CASE("schema problems exit with 2") {
  CHECK(run({"vf", "/nonexistent/scenario.json"}).code == kExitSchema);
  fs::path bad = temp_file("bad.json", "{\"schema_version\": 9, \"name\": \"x\"}");
  CHECK(run({"vf", bad.string()}).code == kExitSchema);
  fs::path junk = temp_file("junk.json", "not json");
  CHECK(run({"poly-check", junk.string()}).code == kExitSchema);
  fs::path cell = temp_file("cell.json",
                            R"({"schema_version": 1, "name": "c", "group": {"padic_add": {"p": 3}},
                                "f": {"terms": [{"cell": {"center": "1/0", "level": 0}, "value": "1/1"}]},
                                "g": {"terms": []}})");
  CHECK(run({"convolve", cell.string()}).code == kExitSchema);
  CHECK(run({"no-such-command"}).code == kExitSchema);
  CHECK(run({"suite", "--family", "mystery"}).code == kExitSchema);
  CHECK(run({}).code == kExitSchema);
}

TEST_CASE("violations exit with 1") {
  // a table that is not a partial action: 1.1 = 2 but 0.(1*1) = 2 while (0.1).1 = 0
  fs::path p = temp_file("broken.json", R"({"schema_version": 1, "name": "broken",
    "action": {"table": {"points": 3, "group": {"catalog": "Z/3"}, "table": [[0,1,2],[1,0,2],[2,0,1]]}}})");
  Run r = run({"verify-axioms", p.string()});
  CHECK(r.code == kExitViolation);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK_FALSE(j["axioms"]["violations"].empty());

  fs::path wrong = temp_file("wrongvf.json", R"({"schema_version": 1, "name": "w",
    "action": {"right_translation": {"padic_add": {"p": 3}}},
    "functions": {"f": {"terms": [{"cell": {"center": "0/1", "level": 0}, "value": "1/1"}]}},
    "expect_Vf": {"cells": [{"center": "0/1", "level": 1}]}})");
  CHECK(run({"vf", wrong.string()}).code == kExitViolation);
}

TEST_CASE("--out and --format text") {
  fs::path out = fs::temp_directory_path() / "locpoly-test-out.json";
  fs::remove(out);
  Run r = run({"--out", out.string(), "convolve", scenario("convolve_z3.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(out);
  Json j = Json::parse(in);
  CHECK(j["ok"] == true);
  Run t = run({"--format", "text", "poly-check", scenario("z3_poly.json")});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("ok: true") != std::string::npos);
  CHECK_FALSE(Json::accept(t.out));
}

TEST_CASE("suite reports are deterministic and sorted") {
  Run a = run({"--seed", "5", "suite", "--family", "all", "--count", "3"});
  Run b = run({"--seed", "5", "suite", "--family", "all", "--count", "3"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j["instances"].size() == 9);
  std::vector<std::string> names;
  for (const Json& i : j["instances"]) names.push_back(i["name"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(suite_report("finite", 6, 5, Exec::Serial) == suite_report("finite", 6, 5, Exec::Parallel));
  CHECK(run({"--seed", "6", "suite", "--family", "finite", "--count", "3"}).out != run({"--seed", "5", "suite", "--family", "finite", "--count", "3"}).out);
}

TEST_CASE("the installed binary matches the library") {
  const std::string bin = env("LOCPOLY_BIN");
  REQUIRE_FALSE(bin.empty());
  fs::path out = fs::temp_directory_path() / "locpoly-test-bin.json";
  CHECK(shell_status("'" + bin + "' --out '" + out.string() + "' isotypic '" + scenario("s3.json") + "'") == 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run({"isotypic", scenario("s3.json")}).out);
  CHECK(shell_status("'" + bin + "' vf /nonexistent.json 2>/dev/null") == 2);
  CHECK(shell_status("'" + bin + "' --help > /dev/null") == 0);
}
