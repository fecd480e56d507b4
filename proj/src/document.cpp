#include "splinequad/document.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "splinequad/error.hpp"

namespace splinequad {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// nlohmann prints the shortest round-trip form; the documents use a fixed
// 17-digit form instead, so the writer is done by hand.
void write(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        write(out, value, indent + 2);
      }
      out << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      if (flat) {
        out << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out << ", ";
          write(out, j[i], indent);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write(out, j[i], indent + 2);
      }
      out << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float:
      out << format_double(j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

std::string render(const Json& j) {
  std::ostringstream out;
  write(out, j, 0);
  out << "\n";
  return out.str();
}

Json optional_vector(const std::optional<std::vector<double>>& v) {
  if (!v) return nullptr;
  return Json(*v);
}

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedDocument, "malformed document: " + what); }

std::vector<double> number_array(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& e : j) {
    if (!e.is_number()) malformed(std::string(what) + " must contain numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) malformed(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

double number_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) malformed(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) malformed(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::vector<double>> optional_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return number_array(v, key);
}

}  // namespace

RuleDocument make_document(const QuadratureRule& rule, const DefectReport& report) {
  RuleDocument doc;
  doc.continuity = rule.continuity;
  doc.degree = rule.degree;
  doc.knots.assign(rule.partition.knots().begin(), rule.partition.knots().end());
  doc.middle_index = rule.middle_index;
  doc.omega_policy = rule.omega_policy;
  doc.omega = rule.omega;
  for (const auto& sub : rule.subintervals) {
    SubintervalRecord rec;
    rec.index = sub.plan.index;
    rec.lo = sub.plan.lo;
    rec.hi = sub.plan.hi;
    rec.kind = sub.plan.kind;
    if (sub.plan.dirac_left)
      rec.dirac_left = std::vector<double>(sub.plan.dirac_left->entries().begin(), sub.plan.dirac_left->entries().end());
    if (sub.plan.dirac_right)
      rec.dirac_right =
          std::vector<double>(sub.plan.dirac_right->entries().begin(), sub.plan.dirac_right->entries().end());
    rec.nodes = sub.nodes;
    rec.weights = sub.weights;
    doc.subintervals.push_back(std::move(rec));
  }
  doc.checks.weight_sum = rule.weight_sum();
  doc.checks.max_defect = report.max_abs_defect;
  for (const auto& w : rule.warnings) doc.checks.warnings.push_back({w.subinterval, to_string(w.kind), w.message});
  return doc;
}

QuadratureRule to_rule(const RuleDocument& doc) {
  if (doc.schema_version != kSchemaVersion) malformed("unsupported schema_version " + std::to_string(doc.schema_version));
  if (doc.continuity != 0 && doc.continuity != 1) malformed("continuity must be 0 or 1");

  QuadratureRule rule;
  rule.continuity = doc.continuity;
  rule.degree = doc.degree;
  try {
    rule.partition = Partition(doc.knots);
  } catch (const Error& e) {
    malformed(e.what());
  }
  const int s = rule.partition.subinterval_count();
  if (doc.middle_index < 1 || doc.middle_index > s) malformed("middle_index out of range");
  if (static_cast<int>(doc.subintervals.size()) != s) malformed("one subinterval record per knot span expected");
  rule.middle_index = doc.middle_index;
  rule.omega_policy = doc.omega_policy;
  rule.omega = doc.omega;

  const auto dirac = [&](const std::optional<std::vector<double>>& v) -> std::optional<DiracVector> {
    if (!v) return std::nullopt;
    try {
      return DiracVector(doc.continuity, *v);
    } catch (const Error& e) {
      malformed(e.what());
    }
  };

  for (int k = 1; k <= s; ++k) {
    const SubintervalRecord& rec = doc.subintervals[k - 1];
    const auto [lo, hi] = rule.partition.span(k);
    if (rec.index != k || rec.lo != lo || rec.hi != hi) malformed("subinterval " + std::to_string(k) + " span mismatch");
    if (rec.nodes.size() != rec.weights.size()) malformed("nodes and weights differ in length");
    for (std::size_t i = 0; i < rec.nodes.size(); ++i) {
      if (!std::isfinite(rec.nodes[i]) || !std::isfinite(rec.weights[i])) malformed("non-finite node or weight");
      if (i && rec.nodes[i] < rec.nodes[i - 1]) malformed("nodes must be ascending");
    }
    SubintervalRule sub;
    sub.plan.index = k;
    sub.plan.lo = lo;
    sub.plan.hi = hi;
    sub.plan.kind = rec.kind;
    sub.plan.node_count = static_cast<int>(rec.nodes.size());
    sub.plan.dirac_left = dirac(rec.dirac_left);
    sub.plan.dirac_right = dirac(rec.dirac_right);
    if (rec.kind == SubintervalKind::M) sub.plan.omega = doc.omega;
    sub.nodes = rec.nodes;
    sub.weights = rec.weights;
    rule.subintervals.push_back(std::move(sub));
  }
  for (const auto& w : doc.checks.warnings) {
    const WarningKind kind = w.kind == to_string(WarningKind::NonRealRoots) ? WarningKind::NonRealRoots
                                                                            : WarningKind::NodeOutsideSpan;
    rule.warnings.push_back({w.subinterval, kind, w.message});
  }
  return rule;
}

std::string emit_json(const RuleDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["continuity"] = doc.continuity;
  j["degree"] = doc.degree;
  j["knots"] = doc.knots;
  j["middle_index"] = doc.middle_index;
  j["omega_policy"] = doc.omega_policy.to_string();
  j["omega"] = doc.omega;
  j["subintervals"] = Json::array();
  for (const auto& rec : doc.subintervals) {
    Json r;
    r["index"] = rec.index;
    r["span"] = {rec.lo, rec.hi};
    r["kind"] = to_string(rec.kind);
    r["dirac_left"] = optional_vector(rec.dirac_left);
    r["dirac_right"] = optional_vector(rec.dirac_right);
    r["nodes"] = rec.nodes;
    r["weights"] = rec.weights;
    j["subintervals"].push_back(std::move(r));
  }
  Json checks;
  checks["weight_sum"] = doc.checks.weight_sum;
  checks["max_defect"] = doc.checks.max_defect;
  checks["warnings"] = Json::array();
  for (const auto& w : doc.checks.warnings)
    checks["warnings"].push_back({{"subinterval", w.subinterval}, {"kind", w.kind}, {"message", w.message}});
  j["checks"] = std::move(checks);
  return render(j);
}

RuleDocument parse_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
  RuleDocument doc;
  doc.schema_version = int_field(j, "schema_version");
  doc.continuity = int_field(j, "continuity");
  doc.degree = int_field(j, "degree");
  doc.knots = number_array(field(j, "knots"), "knots");
  doc.middle_index = int_field(j, "middle_index");
  try {
    doc.omega_policy = OmegaPolicy::parse(string_field(j, "omega_policy"));
    doc.omega = number_field(j, "omega");
    const Json& subs = field(j, "subintervals");
    if (!subs.is_array()) malformed("subintervals must be an array");
    for (const auto& s : subs) {
      SubintervalRecord rec;
      rec.index = int_field(s, "index");
      const auto span = number_array(field(s, "span"), "span");
      if (span.size() != 2) malformed("span must have two entries");
      rec.lo = span[0];
      rec.hi = span[1];
      rec.kind = subinterval_kind_from_string(string_field(s, "kind"));
      rec.dirac_left = optional_field(s, "dirac_left");
      rec.dirac_right = optional_field(s, "dirac_right");
      rec.nodes = number_array(field(s, "nodes"), "nodes");
      rec.weights = number_array(field(s, "weights"), "weights");
      doc.subintervals.push_back(std::move(rec));
    }
    const Json& checks = field(j, "checks");
    doc.checks.weight_sum = number_field(checks, "weight_sum");
    doc.checks.max_defect = field(checks, "max_defect").is_null() ? std::nan("") : number_field(checks, "max_defect");
    const Json& warnings = field(checks, "warnings");
    if (!warnings.is_array()) malformed("warnings must be an array");
    for (const auto& w : warnings)
      doc.checks.warnings.push_back({int_field(w, "subinterval"), string_field(w, "kind"), string_field(w, "message")});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedDocument) throw;
    malformed(e.what());
  }
  return doc;
}

std::string emit_csv(const RuleDocument& doc) {
  std::ostringstream out;
  out << "subinterval,node,weight\n";
  for (const auto& rec : doc.subintervals)
    for (std::size_t i = 0; i < rec.nodes.size(); ++i)
      out << rec.index << ',' << format_double(rec.nodes[i]) << ',' << format_double(rec.weights[i]) << '\n';
  return out.str();
}

std::string to_json(const DefectReport& report) {
  Json j;
  j["pass"] = report.pass;
  j["max_abs_defect"] = report.max_abs_defect;
  j["worst_index"] = report.worst_index;
  j["tolerance"] = report.tolerance;
  j["weight_sum"] = report.weight_sum;
  j["interval_length"] = report.interval_length;
  j["defects"] = report.defects;
  j["warnings"] = report.warnings;
  return render(j);
}

std::string to_json(const TableReport& report) {
  Json j;
  j["table"] = report.id;
  j["title"] = report.title;
  j["pass"] = report.pass();
  j["entries"] = Json::array();
  for (const auto& e : report.entries)
    j["entries"].push_back({{"label", e.label},
                            {"expected", e.expected},
                            {"actual", e.actual},
                            {"tolerance", e.tolerance},
                            {"pass", e.pass}});
  return render(j);
}

std::string to_json(const std::vector<PropertyResult>& results, std::uint64_t seed) {
  Json j;
  j["seed"] = seed;
  j["pass"] = std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
  j["properties"] = Json::array();
  for (const auto& r : results)
    j["properties"].push_back({{"name", r.name},
                               {"pass", r.passed},
                               {"trials", r.trials},
                               {"worst", r.worst},
                               {"tolerance", r.tolerance},
                               {"detail", r.detail}});
  return render(j);
}

}  // namespace splinequad
