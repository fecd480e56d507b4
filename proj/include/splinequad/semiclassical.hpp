#ifndef SPLINEQUAD_SEMICLASSICAL_HPP
#define SPLINEQUAD_SEMICLASSICAL_HPP

#include <optional>
#include <span>
#include <vector>

#include "splinequad/orthopoly.hpp"

namespace splinequad {

/// Coefficients of delta, delta', ..., delta^(c) attached to one end of a
/// subinterval. Holds c + 1 finite entries.
class DiracVector {
 public:
  DiracVector(int continuity, std::vector<double> entries);

  static DiracVector zero(int continuity);

  int continuity() const noexcept { return continuity_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> entries() const noexcept { return entries_; }

  bool operator==(const DiracVector&) const = default;

 private:
  int continuity_;
  std::vector<double> entries_;
};

/// Max-norm distance; vectors must share the continuity class.
double distance(const DiracVector& a, const DiracVector& b);

/// Throws UnsupportedContinuity unless c is 0 or 1.
void require_supported_continuity(int c);

/// Scale between the stored Dirac coefficients and the distributional
/// weight: the weight carries kappa_i * l_i * delta^(i). 1 for c = 0, (2, 24) for c = 1.
double dirac_scale(int c, int i);

/// Scalar helper terms of the closed-form polynomials and maps. `n` is real
/// so the maps can be swept over non-integer parameters.
namespace terms {
namespace c0 {
double F(double n, const DiracVector& l);
double H(double n, const DiracVector& l, const DiracVector& r);
double Gamma(double n, const DiracVector& l);
}  // namespace c0

namespace c1 {
double E(double n, const DiracVector& l);
double F(double n, const DiracVector& l);
double G0(double n, const DiracVector& l);
double G1(double n, const DiracVector& l);
double Gamma(double n, const DiracVector& l);
double Ha(double n, const DiracVector& d);
double H(double n, const DiracVector& l, const DiracVector& r);
double J0(double n, const DiracVector& d);
double J1(double n, const DiracVector& d);
double J(double n, const DiracVector& l, const DiracVector& r);
double D(double n, const DiracVector& l, const DiracVector& r);
double D1(double n, const DiracVector& l, const DiracVector& r);
double D3(double n, const DiracVector& l, const DiracVector& r);
double F13(double n, const DiracVector& l, const DiracVector& r);

/// Extended-precision forms used by the recursion map, whose update cancels
/// against its input.
namespace extended {
long double E(long double n, long double l0, long double l1);
long double G0(long double n, long double l0, long double l1);
long double G1(long double n, long double l1);
long double Gamma(long double n, long double l0, long double l1);
}  // namespace extended
}  // namespace c1
}  // namespace terms

enum class WeightSide { OneSided, TwoSided };

/// Weight (1-x)^{c+1} with left Dirac terms, or 1 with Dirac terms at both ends.
struct WeightSpec {
  int continuity = 0;
  WeightSide side = WeightSide::OneSided;
  DiracVector dirac_left = DiracVector::zero(0);
  std::optional<DiracVector> dirac_right;

  static WeightSpec one_sided(const DiracVector& l);
  static WeightSpec two_sided(const DiracVector& l, const DiracVector& r);
};

/// Gegenbauer parameter of the closed forms: c + 3/2.
double basis_alpha(int c);

/// One-sided polynomial Q_n(l, x); Q_n(0, x) = P_n^{(c+1,0)}(x).
GegenbauerSeries q_poly(int c, int n, const DiracVector& l);

/// Two-sided polynomial M_n(l, r, x); M_n(0, 0, x) = P_n(x).
GegenbauerSeries m_poly(int c, int n, const DiracVector& l, const DiracVector& r);

/// M_n + omega M_{n-1}.
GegenbauerSeries m_poly_omega(int c, int n, const DiracVector& l, const DiracVector& r, double omega);

/// Weights at the roots of q_poly(c, n, l), in the same order.
std::vector<double> q_weights(int c, int n, const DiracVector& l, std::span<const double> roots);

/// Weights at the roots of m_poly_omega(c, n, l, r, omega), in the same order.
std::vector<double> m_weights(int c, int n, const DiracVector& l, const DiracVector& r,
                              std::span<const double> roots, double omega);

/// Scalar product of p and q under the distributional weight.
double inner_product(const WeightSpec& spec, const GegenbauerSeries& p, const GegenbauerSeries& q);

/// Same terms as inner_product, summed in absolute value. Natural scale for
/// judging cancellation in an orthogonality check.
double inner_product_magnitude(const WeightSpec& spec, const GegenbauerSeries& p, const GegenbauerSeries& q);

}  // namespace splinequad

#endif  // SPLINEQUAD_SEMICLASSICAL_HPP
