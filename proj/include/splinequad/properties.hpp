#ifndef SPLINEQUAD_PROPERTIES_HPP
#define SPLINEQUAD_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "splinequad/semiclassical.hpp"

namespace splinequad {

/// Outcome of one seeded randomized check. `worst` is the largest observed
/// error measure, compared against `tolerance`.
struct PropertyResult {
  std::string name;
  bool passed = false;
  int trials = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Map invariants; l drawn from [-0.3, 0.3]^{c+1}, c in {0, 1}, n in 2..8.
PropertyResult check_connection_involution(std::uint64_t seed, int draws = 100);
PropertyResult check_reflection_involution(std::uint64_t seed, int draws = 100);
PropertyResult check_reflect_j_involution(std::uint64_t seed, int draws = 100);
PropertyResult check_connection_j_involution(std::uint64_t seed, int draws = 100);
PropertyResult check_commuting_diagram(std::uint64_t seed, int draws = 100);
PropertyResult check_root_reflection(std::uint64_t seed, int draws = 100);

// Defect identities of the one- and two-sided rules.
PropertyResult check_q_defect_identity(std::uint64_t seed, int draws = 100);
PropertyResult check_m_defect_identity(std::uint64_t seed, int draws = 100);
PropertyResult check_omega_degree_drop(std::uint64_t seed, int draws = 100);

/// Random partitions (s in 3..6, lengths in [0.5, 2]); configurations that
/// raise errors or warnings are skipped until `configs` have been checked.
PropertyResult check_random_exactness(std::uint64_t seed, int configs = 20, int max_attempts = 500);

/// Random splines (basis coefficients in [-1, 1]) on random valid rules.
PropertyResult check_random_splines(std::uint64_t seed, int splines = 100);

struct AttractorFit {
  int n = 0;
  DiracVector fixed = DiracVector::zero(1);
  double residual = 0.0;     ///< |Rec(l_F) - l_F|
  double l1_error = 0.0;     ///< against 1 / (3 n (n+1) (n+2) (n+3))
  double K = 0.0;            ///< max e_{k+1} / e_k^2 over e_k < 0.1
  int ratios = 0;            ///< number of steps used for K
  std::vector<double> errors;
};

/// Fixed point of the c = 1 recursion and the error sequence of iteration from (0, 0).
AttractorFit fit_attractor(int n);

PropertyResult check_fixed_point_attractor();

/// All of the above.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed);

}  // namespace splinequad

#endif  // SPLINEQUAD_PROPERTIES_HPP
