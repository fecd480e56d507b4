#include "splinequad/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "splinequad/error.hpp"

namespace splinequad {

namespace {

constexpr double kPoleRelative = 1e-12;

std::size_t pivot_index(std::span<const double> v) {
  std::size_t p = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[p])) p = i;
  return p;
}

void check_n(int c, double n) {
  require_supported_continuity(c);
  if (!std::isfinite(n)) throw Error(ErrorKind::InvalidArgument, "map parameter n must be finite");
  if (std::abs(n + 1.0) < 1e-12 || (c == 1 && std::abs(n + 2.0) < 1e-12)) {
    std::ostringstream os;
    os << "map parameter n = " << n << " is in the excluded set";
    throw Error(ErrorKind::RecursionPole, os.str());
  }
}

void check_dirac(int c, const DiracVector& l) {
  if (l.continuity() != c) throw Error(ErrorKind::InvalidArgument, "Dirac vector has the wrong continuity class");
}

double sign_pow(int i) { return i % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

JacobiCoefficientVector::JacobiCoefficientVector(int continuity, std::vector<double> entries)
    : continuity_(continuity), entries_(std::move(entries)) {
  if (continuity_ < 0 || entries_.size() != static_cast<std::size_t>(continuity_) + 2)
    throw Error(ErrorKind::InvalidArgument, "coefficient vector needs c + 2 entries");
  for (double v : entries_)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "non-finite coefficient entry");
  const double top = entries_[pivot_index(entries_)];
  if (top == 0.0) throw Error(ErrorKind::Indeterminate, "zero vector is not a projective point");
  for (double& v : entries_) v /= top;
}

double projective_distance(const JacobiCoefficientVector& a, const JacobiCoefficientVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "continuity mismatch");
  const std::size_t p = pivot_index(a.entries());
  if (b[p] == 0.0) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i] / b[p]));
  return d;
}

RecursionCoefficients recursion_coefficients(int c, double n, const DiracVector& l) {
  check_n(c, n);
  check_dirac(c, l);
  if (c == 0) return {0.0, 0.0, terms::c0::Gamma(n, l)};
  return {terms::c1::G0(n, l), terms::c1::G1(n, l), terms::c1::Gamma(n, l)};
}

DiracVector connection(const DiracVector& l) {
  std::vector<double> out(l.entries().begin(), l.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= -sign_pow(static_cast<int>(i));
  return DiracVector(l.continuity(), std::move(out));
}

DiracVector stretch(const DiracVector& l, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw Error(ErrorKind::InvalidArgument, "stretching factor must be positive and finite");
  std::vector<double> out(l.entries().begin(), l.entries().end());
  double f = lambda;
  for (double& v : out) {
    v /= f;
    f *= lambda;
  }
  return DiracVector(l.continuity(), std::move(out));
}

DiracVector recursion(int c, double n, const DiracVector& l) {
  check_n(c, n);
  check_dirac(c, l);
  if (c == 0) {
    // Gamma = (n+1)^2 (1 + n(n+2)/2 l0)
    const double t = n * (n + 2) / 2 * l[0];
    if (std::abs(1.0 + t) < kPoleRelative * (1.0 + std::abs(t)))
      throw Error(ErrorKind::RecursionPole, "recursion map pole (Gamma = 0)");
    const double gamma = terms::c0::Gamma(n, l);
    return DiracVector(0, {(2.0 + (n + 1) * (n + 1) * l[0]) / gamma});
  }
  const double l0 = l[0], l1 = l[1];
  const double t1 = n * (n + 3) * l0;
  const double t2 = 6 * n * (n + 3) * (n * n + 3 * n - 1) * l1;
  const double t3 = 3 * (n * n - 1) * n * n * (n + 2) * (n + 3) * (n + 3) * (n + 4) * l1 * l1;
  if (std::abs(1.0 + t1 + t2 - t3) <
      kPoleRelative * (1.0 + std::abs(t1) + std::abs(t2) + std::abs(t3)))
    throw Error(ErrorKind::RecursionPole, "recursion map pole (Gamma = 0)");
  namespace ext = terms::c1::extended;
  const long double m = n;
  const long double gamma = ext::Gamma(m, l0, l1);
  const long double e = ext::E(m, l0, l1);
  return DiracVector(1, {static_cast<double>(-l0 + e * ext::G0(m, l0, l1) / (3 * gamma * gamma)),
                         static_cast<double>(l1 + e * ext::G1(m, l1) / (3 * (m + 1) * (m + 2) * gamma))});
}

DiracVector recursion_stretch(int c, double n, const DiracVector& l, double lambda) {
  return stretch(recursion(c, n, l), lambda);
}

DiracVector reflection(int c, double n, const DiracVector& l) { return connection(recursion(c, n, l)); }

JacobiCoefficientVector f_map(int c, double n, const DiracVector& l) {
  check_n(c, n);
  check_dirac(c, l);
  if (c == 0) {
    return JacobiCoefficientVector(0, {terms::c0::F(n, l) / (n + 1), terms::c0::F(n + 1, l) / (n + 1)});
  }
  return JacobiCoefficientVector(1, {6 * terms::c1::F(n, l) / ((n + 2) * (2 * n + 3)),
                                     6 * terms::c1::E(n, l) / ((n + 1) * (n + 2)),
                                     6 * terms::c1::F(n + 1, l) / ((n + 1) * (2 * n + 3))});
}

JacobiCoefficientVector connection_j(int c, double n, const JacobiCoefficientVector& j) {
  check_n(c, n);
  if (j.continuity() != c) throw Error(ErrorKind::InvalidArgument, "coefficient vector has the wrong continuity class");
  std::vector<double> out;
  if (c == 0) {
    out = {(n + 1) * j[0] - n * j[1], (n + 2) * j[0] - (n + 1) * j[1]};
  } else {
    const double j0 = j[0], j1 = j[1], j2 = j[2];
    const double n2 = n * n, n3 = n2 * n, n4 = n3 * n;
    const double b = -(n + 3) * j0 + n * j2;
    const double delta = (n + 3) * (2 * n4 + 18 * n3 + 49 * n2 + 48 * n + 18) * j0 * j0 +
                         n2 * (n + 3) * (2 * n2 + 6 * n + 1) * j1 * j1 +
                         n2 * (n - 1) * (2 * n2 + 2 * n - 3) * j2 * j2 -
                         2 * n * (n + 2) * (n + 3) * (2 * n2 + 8 * n + 3) * j0 * j1 +
                         2 * n * (2 * n4 + 12 * n3 + 25 * n2 + 15 * n - 9) * j0 * j2 -
                         2 * n2 * (n + 1) * (2 * n2 + 4 * n - 3) * j1 * j2;
    out = {n * delta, (2 * n + 3) * (delta + 6 * b * ((2 * n + 3) * j0 - n * j1)),
           (n + 3) * delta - 6 * (2 * n + 3) * b * b};
  }
  double mag = 0.0;
  for (double v : out) mag = std::max(mag, std::abs(v));
  if (mag == 0.0) throw Error(ErrorKind::Indeterminate, "connection map indeterminate at this point");
  return JacobiCoefficientVector(c, std::move(out));
}

JacobiCoefficientVector reflect_j(const JacobiCoefficientVector& j) {
  std::vector<double> out(j.entries().begin(), j.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= sign_pow(static_cast<int>(i));
  return JacobiCoefficientVector(j.continuity(), std::move(out));
}

DiracVector fixed_point(int c, double n, const DiracVector& seed) {
  check_n(c, n);
  check_dirac(c, seed);
  const int dim = c + 1;
  using Vec = Eigen::VectorXd;

  auto residual = [&](const Vec& l, Vec& g) -> bool {
    try {
      const DiracVector next = recursion(c, n, DiracVector(c, std::vector<double>(l.data(), l.data() + dim)));
      g.resize(dim);
      for (int i = 0; i < dim; ++i) g[i] = next[i] - l[i];
      return g.allFinite();
    } catch (const Error&) {
      return false;
    }
  };

  Vec l(dim);
  for (int i = 0; i < dim; ++i) l[i] = seed[i];
  Vec g;
  if (!residual(l, g)) throw Error(ErrorKind::RecursionPole, "fixed point seed is a pole of the recursion map");

  for (int it = 0; it < 100; ++it) {
    if (g.lpNorm<Eigen::Infinity>() <= 1e-14 * std::max(1.0, l.lpNorm<Eigen::Infinity>()))
      return DiracVector(c, std::vector<double>(l.data(), l.data() + dim));

    Eigen::MatrixXd jac(dim, dim);
    for (int k = 0; k < dim; ++k) {
      const double h = 1e-7 * std::max(1e-3, std::abs(l[k]));
      Vec lp = l, lm = l, gp, gm;
      lp[k] += h;
      lm[k] -= h;
      if (!residual(lp, gp) || !residual(lm, gm)) throw Error(ErrorKind::NoConvergence, "fixed point search hit a pole");
      jac.col(k) = (gp - gm) / (2 * h);
    }
    const Vec step = jac.fullPivLu().solve(-g);
    double t = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, t *= 0.5) {
      Vec trial = l + t * step;
      Vec gt;
      if (residual(trial, gt) && gt.lpNorm<Eigen::Infinity>() < g.lpNorm<Eigen::Infinity>()) {
        l = trial;
        g = gt;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  const double res = g.lpNorm<Eigen::Infinity>();
  if (res <= 1e-12) return DiracVector(c, std::vector<double>(l.data(), l.data() + dim));
  std::ostringstream os;
  os << "fixed point iteration did not converge (residual " << res << ")";
  throw Error(ErrorKind::NoConvergence, os.str());
}

}  // namespace splinequad
