#include <algorithm>
#include <cmath>
#include <sstream>

#include "splinequad/error.hpp"
#include "splinequad/verify.hpp"

namespace splinequad {

double defect(const QuadratureRule& rule, const std::function<double(double)>& f, double exact_integral) {
  double acc = 0.0;
  for (const auto& s : rule.subintervals)
    for (std::size_t i = 0; i < s.nodes.size(); ++i) acc += s.weights[i] * f(s.nodes[i]);
  return acc - exact_integral;
}

DefectReport verify_exactness(const QuadratureRule& rule, const SplineSpace& space, double tol_factor) {
  // A different degree or continuity is a legitimate question (is the rule
  // exact on a larger space?); a different partition is not.
  if (!(rule.partition == space.partition())) {
    std::ostringstream os;
    os << "space mismatch: the rule and the spline space use different partitions";
    throw Error(ErrorKind::SpaceMismatch, os.str());
  }

  const int dim = space.dimension();
  std::vector<double> sums(dim, 0.0);
  for (const auto& s : rule.subintervals) {
    for (std::size_t q = 0; q < s.nodes.size(); ++q) {
      const auto local = space.local_basis(s.nodes[q]);
      for (std::size_t j = 0; j < local.values.size(); ++j) sums[local.first + j] += s.weights[q] * local.values[j];
    }
  }

  DefectReport report;
  report.defects.resize(dim);
  double max_integral = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double exact = bspline_integral(space, i);
    max_integral = std::max(max_integral, std::abs(exact));
    report.defects[i] = sums[i] - exact;
    if (std::abs(report.defects[i]) > report.max_abs_defect || report.worst_index < 0) {
      report.max_abs_defect = std::abs(report.defects[i]);
      report.worst_index = i;
    }
  }
  report.weight_sum = rule.weight_sum();
  report.interval_length = rule.partition.back() - rule.partition.front();
  report.tolerance = tol_factor * (1.0 + max_integral);
  report.pass = report.max_abs_defect <= report.tolerance;
  for (const auto& w : rule.warnings) report.warnings.push_back(w.message);
  return report;
}

bool TableReport::pass() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

}  // namespace splinequad
