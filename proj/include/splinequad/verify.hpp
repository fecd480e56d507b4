#ifndef SPLINEQUAD_VERIFY_HPP
#define SPLINEQUAD_VERIFY_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "splinequad/rulegen.hpp"

namespace splinequad {

/// Splines of degree d, C^c at the interior knots of a partition, in the
/// normalized B-spline basis over the open knot vector (boundary knots
/// repeated d + 1 times, interior knots d - c times). c = -1 gives
/// discontinuous piecewise polynomials.
class SplineSpace {
 public:
  SplineSpace(Partition partition, int degree, int continuity);

  const Partition& partition() const noexcept { return partition_; }
  int degree() const noexcept { return degree_; }
  int continuity() const noexcept { return continuity_; }
  std::span<const double> knot_vector() const noexcept { return knots_; }
  /// s (d - c) + c + 1
  int dimension() const noexcept { return static_cast<int>(knots_.size()) - degree_ - 1; }

  /// The d + 1 basis functions that can be nonzero at x, starting at index
  /// `first`, differentiated k times. Empty outside [t_0, t_s].
  struct LocalBasis {
    int first = 0;
    std::vector<double> values;
  };
  LocalBasis local_basis(double x, int k = 0) const;

 private:
  int find_span(double x) const;

  Partition partition_;
  int degree_;
  int continuity_;
  std::vector<double> knots_;
};

/// k-th derivative of basis function i at x in [t_0, t_s].
double bspline_eval(const SplineSpace& space, int i, double x, int k = 0);

/// Exact integral (t_{i+d+1} - t_i) / (d + 1).
double bspline_integral(const SplineSpace& space, int i);

/// sum w_i f(x_i) - exact_integral
double defect(const QuadratureRule& rule, const std::function<double(double)>& f, double exact_integral);

struct DefectReport {
  std::vector<double> defects;  ///< one per basis function
  double max_abs_defect = 0.0;
  int worst_index = -1;
  double weight_sum = 0.0;
  double interval_length = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> warnings;
};

/// Defect of every basis function. Passes iff the largest is at most
/// tol_factor * (1 + max |integral B_i|). The space may have another degree
/// or continuity than the rule; a different partition throws SpaceMismatch.
DefectReport verify_exactness(const QuadratureRule& rule, const SplineSpace& space, double tol_factor = 1e-10);

struct TableEntry {
  std::string label;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct TableReport {
  int id = 0;
  std::string title;
  std::vector<TableEntry> entries;

  bool pass() const;
};

/// Rebuilds one of the five reference rules (id 1..5) and compares nodes,
/// weights, Dirac coefficients and omega with stored values.
TableReport reproduce_table(int id);

}  // namespace splinequad

#endif  // SPLINEQUAD_VERIFY_HPP
