#ifndef SPLINEQUAD_MAPS_HPP
#define SPLINEQUAD_MAPS_HPP

#include <span>
#include <vector>

#include "splinequad/semiclassical.hpp"

namespace splinequad {

/// Point of the projective space of Gegenbauer coefficients (j_0 : ... : j_{c+1})
/// of Q_n, j_i multiplying C_{n-i}. Stored with the largest-magnitude entry equal to +1.
class JacobiCoefficientVector {
 public:
  JacobiCoefficientVector(int continuity, std::vector<double> entries);

  int continuity() const noexcept { return continuity_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  int continuity_;
  std::vector<double> entries_;
};

/// Max-norm distance between two projective points, both scaled to agree on
/// the pivot entry of `a`.
double projective_distance(const JacobiCoefficientVector& a, const JacobiCoefficientVector& b);

/// Gamma for c = 0; G_0, G_1, Gamma for c = 1 (G_0 = G_1 = 0 for c = 0).
struct RecursionCoefficients {
  double g0 = 0.0;
  double g1 = 0.0;
  double gamma = 0.0;
};

RecursionCoefficients recursion_coefficients(int c, double n, const DiracVector& l);

/// l_i -> (-1)^{i+1} l_i
DiracVector connection(const DiracVector& l);

/// l_i -> l_i / lambda^{i+1}
DiracVector stretch(const DiracVector& l, double lambda);

/// Dirac vector of the next subinterval so that splines supported on both
/// are integrated exactly. n is real, outside {-1} (c = 0) or {-1, -2} (c = 1).
DiracVector recursion(int c, double n, const DiracVector& l);

DiracVector recursion_stretch(int c, double n, const DiracVector& l, double lambda);

/// l_R with Q_n(l, -x) proportional to Q_n(l_R, x).
DiracVector reflection(int c, double n, const DiracVector& l);

JacobiCoefficientVector f_map(int c, double n, const DiracVector& l);

/// Connection map conjugated into coefficient space: linear for c = 0,
/// the quadratic involution for c = 1.
JacobiCoefficientVector connection_j(int c, double n, const JacobiCoefficientVector& j);

/// j_i -> (-1)^i j_i
JacobiCoefficientVector reflect_j(const JacobiCoefficientVector& j);

/// Fixed point of recursion(c, n, .) by damped Newton from `seed`.
DiracVector fixed_point(int c, double n, const DiracVector& seed);

}  // namespace splinequad

#endif  // SPLINEQUAD_MAPS_HPP
