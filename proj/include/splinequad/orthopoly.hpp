#ifndef SPLINEQUAD_ORTHOPOLY_HPP
#define SPLINEQUAD_ORTHOPOLY_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace splinequad {

/// Gegenbauer polynomial C_n^{(alpha)}(x) by the three-term recurrence.
/// Negative degrees evaluate to zero.
double gegenbauer(int n, double alpha, double x);

/// Polynomial in a Gegenbauer basis: sum_k a_k C_k^{(alpha)}(x).
///
/// The coefficient sequence is kept canonical: trailing coefficients below
/// 1e-14 of the largest magnitude are dropped, so `degree()` is the true
/// degree and the zero polynomial has an empty coefficient list.
class GegenbauerSeries {
 public:
  GegenbauerSeries(double alpha, std::vector<double> coeffs);

  /// Zero polynomial in the given basis.
  explicit GegenbauerSeries(double alpha) : GegenbauerSeries(alpha, {}) {}

  double alpha() const noexcept { return alpha_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Largest coefficient magnitude; 0 for the zero polynomial.
  double max_coeff() const noexcept;

  /// Clenshaw evaluation.
  double operator()(double x) const;

  /// k-th derivative. The result lives in the basis alpha + k.
  GegenbauerSeries derivative(int k = 1) const;

  /// p(-x), same basis.
  GegenbauerSeries reflected() const;

  /// Coefficients c_0..c_N of the same polynomial in the monomial basis.
  std::vector<double> to_monomial() const;

  GegenbauerSeries& operator+=(const GegenbauerSeries& other);
  GegenbauerSeries& operator*=(double s);

  friend GegenbauerSeries operator+(GegenbauerSeries a, const GegenbauerSeries& b) { return a += b; }
  friend GegenbauerSeries operator*(double s, GegenbauerSeries p) { return p *= s; }

 private:
  void trim();

  double alpha_;
  std::vector<double> coeffs_;
};

/// Real roots of a Gegenbauer series.
struct RootSet {
  std::vector<double> roots;  ///< all real roots, ascending, repeated by multiplicity
  std::size_t nonreal = 0;    ///< number of eigenvalues rejected as non-real

  bool complete() const noexcept { return nonreal == 0; }
};

/// Roots via a balanced companion matrix of the monomial form, each real
/// candidate Newton-polished against the Gegenbauer evaluation.
/// Requires degree >= 1.
RootSet real_roots(const GegenbauerSeries& p);

/// Helpers on dense monomial coefficient vectors (c_0 first).
namespace monomial {

double eval(std::span<const double> c, double x);
std::vector<double> multiply(std::span<const double> a, std::span<const double> b);
std::vector<double> derivative(std::span<const double> c, int k = 1);
/// (1 - x)^m
std::vector<double> one_minus_x_pow(int m);

}  // namespace monomial

/// n-point Gauss-Legendre rule on [-1, 1]: nodes ascending, weights.
/// Exact for polynomials of degree <= 2n - 1.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

}  // namespace splinequad

#endif  // SPLINEQUAD_ORTHOPOLY_HPP
