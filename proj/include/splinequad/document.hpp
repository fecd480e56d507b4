#ifndef SPLINEQUAD_DOCUMENT_HPP
#define SPLINEQUAD_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "splinequad/properties.hpp"
#include "splinequad/rulegen.hpp"
#include "splinequad/verify.hpp"

namespace splinequad {

inline constexpr int kSchemaVersion = 1;

struct SubintervalRecord {
  int index = 0;
  double lo = 0.0;
  double hi = 0.0;
  SubintervalKind kind = SubintervalKind::Q;
  std::optional<std::vector<double>> dirac_left;
  std::optional<std::vector<double>> dirac_right;
  std::vector<double> nodes;
  std::vector<double> weights;

  bool operator==(const SubintervalRecord&) const = default;
};

struct WarningRecord {
  int subinterval = 0;
  std::string kind;
  std::string message;

  bool operator==(const WarningRecord&) const = default;
};

struct RuleChecks {
  double weight_sum = 0.0;
  double max_defect = 0.0;
  std::vector<WarningRecord> warnings;

  bool operator==(const RuleChecks&) const = default;
};

/// Serializable form of a generated rule.
struct RuleDocument {
  int schema_version = kSchemaVersion;
  int continuity = 0;
  int degree = 0;
  std::vector<double> knots;
  int middle_index = 1;
  OmegaPolicy omega_policy;
  double omega = 0.0;
  std::vector<SubintervalRecord> subintervals;
  RuleChecks checks;

  bool operator==(const RuleDocument&) const = default;
};

RuleDocument make_document(const QuadratureRule& rule, const DefectReport& report);

/// Rebuilds the rule, validating structure. Throws MalformedDocument.
QuadratureRule to_rule(const RuleDocument& doc);

/// JSON with every floating-point number printed to 17 significant digits.
std::string emit_json(const RuleDocument& doc);
RuleDocument parse_json(const std::string& text);

/// Rows "subinterval,node,weight".
std::string emit_csv(const RuleDocument& doc);

std::string to_json(const DefectReport& report);
std::string to_json(const TableReport& report);
std::string to_json(const std::vector<PropertyResult>& results, std::uint64_t seed);

}  // namespace splinequad

#endif  // SPLINEQUAD_DOCUMENT_HPP
