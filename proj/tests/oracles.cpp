#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace oracle {

double gegenbauer_sum(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  double s = 0.0;
  for (int k = 0; 2 * k <= n; ++k) {
    const double term = std::tgamma(n - k + alpha) / (std::tgamma(alpha) * std::tgamma(k + 1.0) * std::tgamma(n - 2 * k + 1.0));
    s += (k % 2 ? -1.0 : 1.0) * term * std::pow(2 * x, n - 2 * k);
  }
  return s;
}

double jacobi(int n, double a, double b, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (a - b) / 2 + (a + b + 2) * x / 2;
  for (int k = 2; k <= n; ++k) {
    const double c = 2 * k + a + b;
    const double a1 = 2 * k * (k + a + b) * (c - 2);
    const double a2 = (c - 1) * (a * a - b * b);
    const double a3 = (c - 2) * (c - 1) * c;
    const double a4 = 2 * (k + a - 1) * (k + b - 1) * c;
    const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double legendre(int n, double x) { return jacobi(n, 0.0, 0.0, x); }

std::pair<std::vector<double>, std::vector<double>> golub_welsch(int n) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    t(k, k - 1) = t(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    x[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    w[i] = 2.0 * v * v;
  }
  return {x, w};
}

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
  const auto [x, w] = golub_welsch(n);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += w[i] * f((a + b) / 2 + (b - a) / 2 * x[i]);
  return s * (b - a) / 2;
}

double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace oracle
