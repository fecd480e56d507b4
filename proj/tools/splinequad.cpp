// splinequad: generate, verify and inspect Gaussian quadrature rules for
// C0 and C1 splines.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "splinequad/document.hpp"
#include "splinequad/error.hpp"
#include "splinequad/properties.hpp"
#include "splinequad/rulegen.hpp"
#include "splinequad/verify.hpp"

namespace sq = splinequad;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kWarnings = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sq::Error(sq::ErrorKind::InvalidArgument, "cannot open output file " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sq::Error(sq::ErrorKind::MalformedDocument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GenOptions {
  int continuity = 0;
  int degree = 0;
  std::vector<double> knots;
  std::optional<int> middle;
  std::string omega_policy;
  std::string format = "json";
  std::string out;
};

int run_gen(const GenOptions& o) {
  const sq::Partition partition(o.knots);
  const int middle = o.middle.value_or(sq::default_middle_index(partition.subinterval_count()));
  const sq::OmegaPolicy policy =
      o.omega_policy.empty() ? sq::OmegaPolicy::default_for(o.continuity) : sq::OmegaPolicy::parse(o.omega_policy);
  const sq::QuadratureRule rule = sq::generate(partition, o.continuity, o.degree, middle, policy);
  const sq::DefectReport report = sq::verify_exactness(rule, sq::SplineSpace(partition, o.degree, o.continuity));
  const sq::RuleDocument doc = sq::make_document(rule, report);
  write_output(o.format == "csv" ? sq::emit_csv(doc) : sq::emit_json(doc), o.out);
  for (const auto& w : rule.warnings) std::cerr << "warning: " << w.message << "\n";
  return rule.warnings.empty() ? kOk : kWarnings;
}

struct VerifyOptions {
  std::string file;
  double tol = 1e-10;
  std::optional<int> degree;
  std::optional<int> continuity;
  std::string out;
};

int run_verify(const VerifyOptions& o) {
  const sq::RuleDocument doc = sq::parse_json(read_file(o.file));
  const sq::QuadratureRule rule = sq::to_rule(doc);
  if ((o.degree && *o.degree != rule.degree) || (o.continuity && *o.continuity != rule.continuity)) {
    std::ostringstream os;
    os << "space mismatch: document holds a C^" << rule.continuity << " degree " << rule.degree << " rule";
    throw sq::Error(sq::ErrorKind::SpaceMismatch, os.str());
  }
  const sq::SplineSpace space(rule.partition, rule.degree, rule.continuity);
  const sq::DefectReport report = sq::verify_exactness(rule, space, o.tol);
  write_output(sq::to_json(report), o.out);
  if (!report.pass)
    std::cerr << "fail: basis function " << report.worst_index << " has defect " << report.max_abs_defect << "\n";
  return report.pass ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian quadrature rules for C0 and C1 polynomial splines"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a rule");
  gen_cmd->add_option("--continuity", gen.continuity, "continuity class")->required()->check(CLI::IsMember({0, 1}));
  gen_cmd->add_option("--degree", gen.degree, "spline degree")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--knots", gen.knots, "comma separated knots")->required()->delimiter(',');
  gen_cmd->add_option("--middle", gen.middle, "index of the middle subinterval (default ceil(s/2))");
  gen_cmd->add_option("--omega-policy", gen.omega_policy, "node-left | zero | value=<x>");
  gen_cmd->add_option("--format", gen.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

  VerifyOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "check a rule document against its B-spline basis");
  verify_cmd->add_option("file", ver.file, "rule document (JSON)")->required();
  verify_cmd->add_option("--tol", ver.tol, "relative defect tolerance");
  verify_cmd->add_option("--degree", ver.degree, "degree of the target space");
  verify_cmd->add_option("--continuity", ver.continuity, "continuity of the target space");
  verify_cmd->add_option("--out", ver.out, "output path (default stdout)");

  int table_id = 0;
  std::string table_out;
  auto* table_cmd = app.add_subcommand("table", "rebuild a reference rule and compare with stored values");
  table_cmd->add_option("id", table_id, "table number")->required()->check(CLI::Range(1, 5));
  table_cmd->add_option("--out", table_out, "output path (default stdout)");

  std::uint64_t seed = 42;
  std::string props_out;
  auto* props_cmd = app.add_subcommand("props", "run the seeded property suites");
  props_cmd->add_option("--seed", seed, "random seed");
  props_cmd->add_option("--out", props_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (verify_cmd->parsed()) return run_verify(ver);
    if (table_cmd->parsed()) {
      const sq::TableReport report = sq::reproduce_table(table_id);
      write_output(sq::to_json(report), table_out);
      return report.pass() ? kOk : kFailure;
    }
    if (props_cmd->parsed()) {
      const auto results = sq::run_property_suite(seed);
      write_output(sq::to_json(results, seed), props_out);
      for (const auto& r : results)
        if (!r.passed) return kFailure;
      return kOk;
    }
  } catch (const sq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
