#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + SPLINEQUAD_CLI + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run run_stdout(const std::string& args) {
  const std::string cmd = std::string("\"") + SPLINEQUAD_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string scratch(const std::string& name) { return std::string(SPLINEQUAD_SCRATCH) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

const std::string kTable1 = "gen --continuity 0 --degree 4 --knots 0,1,2,3,4 --middle 3";
const std::string kTable5 = "gen --continuity 1 --degree 7 --knots 0,1,3,7,9 --middle 3";

}  // namespace

TEST_CASE("gen writes rule documents") {
  const Run t1 = run_stdout(kTable1);
  CHECK(t1.code == 0);
  CHECK(contains(t1.out, "\"schema_version\": 1"));
  CHECK(contains(t1.out, "\"omega_policy\": \"node-left\""));
  CHECK(contains(t1.out, "\"omega\": 1.4"));

  const Run t5 = run_stdout(kTable5);
  CHECK(t5.code == 0);
  CHECK(contains(t5.out, "\"continuity\": 1"));
  CHECK(contains(t5.out, "\"kind\": \"M\""));
}

TEST_CASE("gen errors and warnings") {
  const Run half = run("gen --continuity 1 --degree 6 --knots 0,1,2,3");
  CHECK(half.code == 1);
  CHECK(contains(half.out, "1/2-rule unsupported"));

  const Run bad_knots = run("gen --continuity 0 --degree 4 --knots 0,2,1");
  CHECK(bad_knots.code == 1);

  const Run bad_flag = run("gen --continuity 3 --degree 4 --knots 0,1");
  CHECK(bad_flag.code == 1);

  const Run warned = run("gen --continuity 1 --degree 5 --knots 0,1,2,3,4,5 --middle 1");
  CHECK(warned.code == 2);
  CHECK(contains(warned.out, "warning: "));
}

TEST_CASE("gen csv") {
  const Run csv = run_stdout(kTable1 + " --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("subinterval,node,weight\n", 0) == 0);
}

TEST_CASE("gen then verify") {
  const std::string path = scratch("cli_table1.json");
  REQUIRE(run(kTable1 + " --out \"" + path + "\"").code == 0);
  const Run ok = run_stdout("verify \"" + path + "\" --tol 1e-10");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "\"pass\": true"));

  const Run mismatch = run("verify \"" + path + "\" --degree 6");
  CHECK(mismatch.code == 1);
  CHECK(contains(mismatch.out, "space mismatch"));

  // bend one weight
  std::string doc = slurp(path);
  const auto at = doc.find("\"weights\": [");
  REQUIRE(at != std::string::npos);
  const auto digit = doc.find_first_of("123456789", at + 12);
  doc[digit] = doc[digit] == '9' ? '8' : static_cast<char>(doc[digit] + 1);
  const std::string bent = scratch("cli_bent.json");
  std::ofstream(bent) << doc;
  const Run fail = run("verify \"" + bent + "\"");
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "\"worst_index\""));
  CHECK(contains(fail.out, "fail: basis function"));

  const std::string junk = scratch("cli_junk.json");
  std::ofstream(junk) << "{\"schema_version\": 1";
  const Run malformed = run("verify \"" + junk + "\"");
  CHECK(malformed.code == 1);
  CHECK(contains(malformed.out, "malformed document"));

  CHECK(run("verify \"" + scratch("does_not_exist.json") + "\"").code == 1);
}

TEST_CASE("table command") {
  const Run t3 = run_stdout("table 3");
  CHECK(t3.code == 0);
  CHECK(contains(t3.out, "\"pass\": true"));
  CHECK(run("table 6").code == 1);
}

TEST_CASE("output is deterministic") {
  CHECK(run_stdout(kTable5).out == run_stdout(kTable5).out);
  const Run a = run_stdout("props --seed 42");
  const Run b = run_stdout("props --seed 42");
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  CHECK(contains(a.out, "\"seed\": 42"));
}
