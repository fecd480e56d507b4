#include "splinequad/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "splinequad/error.hpp"

namespace splinequad {

namespace {

constexpr double kTrimRelative = 1e-14;

// C_{k+1} = a(k) C_k + b(k) C_{k-1}, valid for k >= 1.
double rec_a(int k, double alpha, double x) { return 2.0 * (k + alpha) * x / (k + 1); }
double rec_b(int k, double alpha) { return -(k + 2.0 * alpha - 1.0) / (k + 1); }

// sum |a_k| |C_k(x)|, the natural scale for the rounding error of p(x).
double abs_eval(std::span<const double> a, double alpha, double x) {
  double prev = 1.0;
  double cur = 2.0 * alpha * x;
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == 0) {
      acc += std::abs(a[0]);
    } else if (k == 1) {
      acc += std::abs(a[1] * cur);
    } else {
      const int m = static_cast<int>(k) - 1;
      const double next = rec_a(m, alpha, x) * cur + rec_b(m, alpha) * prev;
      prev = cur;
      cur = next;
      acc += std::abs(a[k] * cur);
    }
  }
  return acc;
}

}  // namespace

double gegenbauer(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * alpha * x;
  for (int k = 1; k < n; ++k) {
    const double next = rec_a(k, alpha, x) * cur + rec_b(k, alpha) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

GegenbauerSeries::GegenbauerSeries(double alpha, std::vector<double> coeffs)
    : alpha_(alpha), coeffs_(std::move(coeffs)) {
  if (!(alpha_ > 0.0)) throw Error(ErrorKind::InvalidArgument, "Gegenbauer parameter must be positive");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw Error(ErrorKind::InvalidArgument, "non-finite series coefficient");
  trim();
}

void GegenbauerSeries::trim() {
  const double cut = kTrimRelative * max_coeff();
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
}

double GegenbauerSeries::max_coeff() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double GegenbauerSeries::operator()(double x) const {
  const int n = degree();
  if (n < 0) return 0.0;
  if (n == 0) return coeffs_[0];
  // Clenshaw: b_k = a_k + A_k b_{k+1} + B_{k+1} b_{k+2}
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = n; k >= 1; --k) {
    const double bk = coeffs_[k] + rec_a(k, alpha_, x) * b1 + rec_b(k + 1, alpha_) * b2;
    b2 = b1;
    b1 = bk;
  }
  return coeffs_[0] + 2.0 * alpha_ * x * b1 + rec_b(1, alpha_) * b2;
}

GegenbauerSeries GegenbauerSeries::derivative(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative derivative order");
  GegenbauerSeries out = *this;
  for (int step = 0; step < k; ++step) {
    // d/dx C_n^{(a)} = 2a C_{n-1}^{(a+1)}
    std::vector<double> next;
    for (std::size_t j = 1; j < out.coeffs_.size(); ++j) next.push_back(2.0 * out.alpha_ * out.coeffs_[j]);
    out = GegenbauerSeries(out.alpha_ + 1.0, std::move(next));
  }
  return out;
}

GegenbauerSeries GegenbauerSeries::reflected() const {
  std::vector<double> c = coeffs_;
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return GegenbauerSeries(alpha_, std::move(c));
}

std::vector<double> GegenbauerSeries::to_monomial() const {
  std::vector<double> out(coeffs_.size(), 0.0);
  if (coeffs_.empty()) return out;
  std::vector<double> prev{1.0};
  std::vector<double> cur{0.0, 2.0 * alpha_};
  out[0] += coeffs_[0];
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (k >= 2) {
      const int m = static_cast<int>(k) - 1;
      const double a = 2.0 * (m + alpha_) / (m + 1);
      const double b = rec_b(m, alpha_);
      std::vector<double> next(k + 1, 0.0);
      for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += a * cur[j];
      for (std::size_t j = 0; j < prev.size(); ++j) next[j] += b * prev[j];
      prev = std::move(cur);
      cur = std::move(next);
    }
    for (std::size_t j = 0; j < cur.size(); ++j) out[j] += coeffs_[k] * cur[j];
  }
  return out;
}

GegenbauerSeries& GegenbauerSeries::operator+=(const GegenbauerSeries& other) {
  if (other.alpha_ != alpha_) throw Error(ErrorKind::InvalidArgument, "adding series in different bases");
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

GegenbauerSeries& GegenbauerSeries::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

RootSet real_roots(const GegenbauerSeries& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "root finding needs degree >= 1");

  const std::vector<double> mono = p.to_monomial();
  std::vector<std::complex<double>> candidates;
  if (n == 1) {
    candidates.emplace_back(-mono[0] / mono[1], 0.0);
  } else {
    Eigen::VectorXd c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = mono[k];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
    for (Eigen::Index k = 0; k < solver.roots().size(); ++k) candidates.push_back(solver.roots()[k]);
  }

  const GegenbauerSeries dp = p.derivative();
  RootSet out;
  for (const auto& z : candidates) {
    if (std::abs(z.imag()) > 1e-5 * std::max(1.0, std::abs(z))) {
      ++out.nonreal;
      continue;
    }
    double x = z.real();
    double best_x = x;
    double best_res = std::abs(p(x));
    for (int it = 0; it < 50; ++it) {
      const double d = dp(x);
      if (d == 0.0) break;
      const double step = p(x) / d;
      x -= step;
      const double res = std::abs(p(x));
      if (res < best_res) {
        best_res = res;
        best_x = x;
      }
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) break;
    }
    // A near-real conjugate pair polishes to a point with a large residual.
    if (best_res > 1e-9 * std::max(abs_eval(p.coeffs(), p.alpha(), best_x), p.max_coeff())) {
      ++out.nonreal;
      continue;
    }
    out.roots.push_back(best_x);
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

namespace monomial {

double eval(std::span<const double> c, double x) {
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

std::vector<double> multiply(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<double> derivative(std::span<const double> c, int k) {
  std::vector<double> out(c.begin(), c.end());
  for (int step = 0; step < k; ++step) {
    if (out.empty()) break;
    for (std::size_t j = 1; j < out.size(); ++j) out[j - 1] = static_cast<double>(j) * out[j];
    out.pop_back();
  }
  return out;
}

std::vector<double> one_minus_x_pow(int m) {
  std::vector<double> out{1.0};
  const std::vector<double> factor{1.0, -1.0};
  for (int i = 0; i < m; ++i) out = multiply(out, factor);
  return out;
}

}  // namespace monomial

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Gauss-Legendre needs at least one point");
  std::vector<double> x(n);
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    double z = -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // recompute P_n' at the converged node
    double p0 = 1.0;
    double p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

}  // namespace splinequad
