#ifndef SPLINEQUAD_RULEGEN_HPP
#define SPLINEQUAD_RULEGEN_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "splinequad/semiclassical.hpp"

namespace splinequad {

/// Knots t_0 < t_1 < ... < t_s of a closed interval. Subintervals are
/// numbered 1..s; subinterval k is [t_{k-1}, t_k].
class Partition {
 public:
  explicit Partition(std::vector<double> knots);

  int subinterval_count() const noexcept { return static_cast<int>(knots_.size()) - 1; }
  std::span<const double> knots() const noexcept { return knots_; }
  double front() const noexcept { return knots_.front(); }
  double back() const noexcept { return knots_.back(); }
  double length(int k) const;
  std::pair<double, double> span(int k) const;

  /// Mirror image under x -> t_0 + t_s - x.
  Partition reflected() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<double> knots_;
};

enum class SubintervalKind { Q, QReflected, M };

std::string to_string(SubintervalKind kind);
SubintervalKind subinterval_kind_from_string(const std::string& s);

struct OmegaPolicy {
  enum class Kind { NodeLeft, Zero, Value };
  Kind kind = Kind::Zero;
  double value = 0.0;

  /// node-left for c = 0, zero for c = 1.
  static OmegaPolicy default_for(int c);
  /// Accepts "node-left", "zero" and "value=<x>".
  static OmegaPolicy parse(const std::string& text);
  std::string to_string() const;

  bool operator==(const OmegaPolicy&) const = default;
};

struct SubintervalPlan {
  int index = 0;  ///< 1-based
  double lo = 0.0;
  double hi = 0.0;
  SubintervalKind kind = SubintervalKind::Q;
  int node_count = 0;
  std::optional<DiracVector> dirac_left;
  std::optional<DiracVector> dirac_right;
  double omega = 0.0;  ///< M only
};

/// Half degree n of the rule: d = 2n for c = 0, d = 2n + 1 for c = 1.
/// Throws for the parity cases that need alternating node counts.
int half_degree(int c, int d);

/// ceil(s / 2)
int default_middle_index(int s);

/// Kinds and node counts [n, ..., n, n + 1, n, ..., n]. Dirac vectors are
/// left empty; omega is filled in for the zero and value policies.
std::vector<SubintervalPlan> plan(const Partition& partition, int c, int d, int middle_index,
                                  const OmegaPolicy& omega_policy);

/// Fills the Dirac vectors by marching from both boundaries (zero vectors
/// there) to the middle subinterval.
std::vector<SubintervalPlan> march(std::vector<SubintervalPlan> plans, const Partition& partition, int c, int n);

/// omega such that M_{n_mid} + omega M_{n_mid - 1} vanishes at the local point x0.
double omega_for_node_at(int c, int n_mid, const DiracVector& l, const DiracVector& r, double x0);

/// Maps nodes/weights from [-1, 1] to [a, b].
std::pair<std::vector<double>, std::vector<double>> scale_to_interval(std::span<const double> nodes,
                                                                      std::span<const double> weights, double a,
                                                                      double b);

enum class WarningKind { NodeOutsideSpan, NonRealRoots };

std::string to_string(WarningKind kind);

struct RuleWarning {
  int subinterval = 0;
  WarningKind kind = WarningKind::NodeOutsideSpan;
  std::string message;
};

struct SubintervalRule {
  SubintervalPlan plan;
  std::vector<double> nodes;  ///< global coordinates, ascending
  std::vector<double> weights;
};

struct QuadratureRule {
  int continuity = 0;
  int degree = 0;
  Partition partition{{0.0, 1.0}};
  int middle_index = 1;
  OmegaPolicy omega_policy;
  double omega = 0.0;
  std::vector<SubintervalRule> subintervals;
  std::vector<RuleWarning> warnings;

  std::vector<double> all_nodes() const;
  std::vector<double> all_weights() const;
  double weight_sum() const;
  std::size_t node_count() const;
  bool has_warning(WarningKind kind) const;
};

/// Builds the rule. Non-real roots and nodes outside their subinterval are
/// reported as warnings on the result.
QuadratureRule generate(const Partition& partition, int c, int d, int middle_index, const OmegaPolicy& omega_policy);

}  // namespace splinequad

#endif  // SPLINEQUAD_RULEGEN_HPP
