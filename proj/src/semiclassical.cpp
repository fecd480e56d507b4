#include "splinequad/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splinequad/error.hpp"

namespace splinequad {

DiracVector::DiracVector(int continuity, std::vector<double> entries)
    : continuity_(continuity), entries_(std::move(entries)) {
  if (continuity_ < 0) throw Error(ErrorKind::InvalidArgument, "continuity class must be >= 0");
  if (entries_.size() != static_cast<std::size_t>(continuity_) + 1)
    throw Error(ErrorKind::InvalidArgument, "Dirac vector for continuity " + std::to_string(continuity_) +
                                                " needs " + std::to_string(continuity_ + 1) + " entries");
  for (double v : entries_)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "non-finite Dirac coefficient");
}

DiracVector DiracVector::zero(int continuity) {
  return DiracVector(continuity, std::vector<double>(static_cast<std::size_t>(std::max(continuity, 0)) + 1, 0.0));
}

double distance(const DiracVector& a, const DiracVector& b) {
  if (a.continuity() != b.continuity()) throw Error(ErrorKind::InvalidArgument, "continuity mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

void require_supported_continuity(int c) {
  if (c != 0 && c != 1)
    throw Error(ErrorKind::UnsupportedContinuity, "continuity class not implemented (only c = 0 and c = 1)");
}

double dirac_scale(int c, int i) {
  require_supported_continuity(c);
  if (i < 0 || i > c) throw Error(ErrorKind::InvalidArgument, "Dirac index out of range");
  if (c == 0) return 1.0;
  return i == 0 ? 2.0 : 24.0;
}

WeightSpec WeightSpec::one_sided(const DiracVector& l) {
  return WeightSpec{l.continuity(), WeightSide::OneSided, l, std::nullopt};
}

WeightSpec WeightSpec::two_sided(const DiracVector& l, const DiracVector& r) {
  if (l.continuity() != r.continuity()) throw Error(ErrorKind::InvalidArgument, "continuity mismatch");
  return WeightSpec{l.continuity(), WeightSide::TwoSided, l, r};
}

double basis_alpha(int c) { return c + 1.5; }

namespace terms {
namespace c0 {

double F(double n, const DiracVector& l) { return 1.0 + n * (n + 1.0) / 2.0 * l[0]; }

double H(double n, const DiracVector& l, const DiracVector& r) {
  return 1.0 + n * n / 2.0 * (l[0] + r[0] + (n - 1.0) * (n + 1.0) / 2.0 * l[0] * r[0]);
}

double Gamma(double n, const DiracVector& l) { return (n + 1.0) * (n + 1.0) * (1.0 + n * (n + 2.0) / 2.0 * l[0]); }

}  // namespace c0

namespace c1 {

namespace {

// The c = 1 terms cancel heavily near the image of the recursion map;
// evaluate them in extended precision and round once.
using ext = long double;

ext e_term(ext n, ext l0, ext l1) {
  return 1 + (n + 1) * (n + 2) * (l0 + 3 * n * (n + 3) * (2 - (n - 1) * (n + 1) * (n + 2) * (n + 4) * l1) * l1);
}

ext f_term(ext n, ext l0, ext l1) {
  return 1 + n * (n + 2) * (l0 + 6 * (n * n + 2 * n - 1) * l1 - 3 * (n - 1) * n * (n + 1) * (n + 1) * (n + 2) * (n + 3) * l1 * l1);
}

ext ha_term(ext n, ext d0, ext d1) {
  return 1 + (n - 1) * n * (d0 + (n - 2) * (n + 1) * (6 - 3 * (n - 3) * (n - 1) * n * (n + 2) * d1) * d1);
}

ext j0_term(ext n, ext d0, ext d1) {
  return 1 + (n * n + n + 3) * d0 + 6 * (n * n * n * n + 2 * n * n * n + n * n + 6) * d1 -
         3 * (n * n - 9) * (n * n - 4) * (n * n - 1) * n * (n + 4) * d1 * d1;
}

ext j1_term(ext n, ext d0, ext d1) {
  return 1 + n * (n + 1) * (d0 + 3 * (n - 1) * (n + 2) * (2 - (n - 2) * n * (n + 1) * (n + 3) * d1) * d1);
}

ext d_term(ext n, const DiracVector& l, const DiracVector& r) {
  return (ext{l[0]} - r[0]) * (2 - 3 * (n * n - 1) * n * (n + 2) * (ext{l[1]} + r[1]));
}

}  // namespace

double E(double n, const DiracVector& l) { return static_cast<double>(e_term(n, l[0], l[1])); }

double F(double n, const DiracVector& l) { return static_cast<double>(f_term(n, l[0], l[1])); }

long double extended::E(long double n, long double l0, long double l1) { return e_term(n, l0, l1); }

long double extended::G0(long double n, long double l0, long double l1) {
  const ext inner = 4 * (n + 1) * (n + 2) * (2 * n * n + 6 * n - 5) * l1 * l1 +
                    3 * (n * n - 1) * n * (n + 2) * (n + 3) * (n + 4) * l0 * l1 * l1 -
                    6 * (n * n + 3 * n - 2) * l0 * l1 - l0 * l0;
  return 4 * (2 * n * n + 6 * n + 3) +
         n * (n + 3) *
             ((11 * n * n + 33 * n + 16) * l0 + 24 * (2 * n * n * n * n + 12 * n * n * n + 17 * n * n - 3 * n - 4) * l1 -
              3 * n * (n + 1) * (n + 2) * (n + 3) * inner);
}

long double extended::G1(long double n, long double l1) { return 1 - 3 * n * (n + 1) * (n + 2) * (n + 3) * l1; }

long double extended::Gamma(long double n, long double l0, long double l1) {
  return (n + 1) * (n + 2) *
         (1 + n * (n + 3) * l0 + 6 * n * (n + 3) * (n * n + 3 * n - 1) * l1 -
          3 * (n * n - 1) * n * n * (n + 2) * (n + 3) * (n + 3) * (n + 4) * l1 * l1);
}

double G0(double n, const DiracVector& l) { return static_cast<double>(extended::G0(n, l[0], l[1])); }

double G1(double n, const DiracVector& l) { return static_cast<double>(extended::G1(n, l[1])); }

double Gamma(double n, const DiracVector& l) { return static_cast<double>(extended::Gamma(n, l[0], l[1])); }

double Ha(double n, const DiracVector& d) { return static_cast<double>(ha_term(n, d[0], d[1])); }

double H(double nd, const DiracVector& l, const DiracVector& r) {
  const ext n = nd;
  const ext dl = ext{l[1]} - r[1];
  return static_cast<double>(
      (ha_term(n, l[0], l[1]) * ha_term(n + 1, r[0], r[1]) + ha_term(n, r[0], r[1]) * ha_term(n + 1, l[0], l[1])) / 2 -
      36 * (n * n - 1) * n * n * dl * dl);
}

double J0(double n, const DiracVector& d) { return static_cast<double>(j0_term(n, d[0], d[1])); }

double J1(double n, const DiracVector& d) { return static_cast<double>(j1_term(n, d[0], d[1])); }

double J(double nd, const DiracVector& l, const DiracVector& r) {
  const ext n = nd;
  const ext dl = ext{l[1]} - r[1];
  return static_cast<double>(
      (j0_term(n, l[0], l[1]) * j1_term(n, r[0], r[1]) + j0_term(n, r[0], r[1]) * j1_term(n, l[0], l[1])) / 2 +
      108 * (n * n - 1) * n * (n + 2) * dl * dl);
}

double D(double n, const DiracVector& l, const DiracVector& r) { return static_cast<double>(d_term(n, l, r)); }

double D1(double nd, const DiracVector& l, const DiracVector& r) {
  const ext n = nd;
  return static_cast<double>(d_term(n, l, r) * (2 - 3 * (n - 2) * (n * n - 1) * n * (ext{l[1]} + r[1])));
}

double D3(double nd, const DiracVector& l, const DiracVector& r) {
  const ext n = nd;
  return static_cast<double>(d_term(n, l, r) * (2 - 3 * n * (n + 1) * (n + 2) * (n + 3) * (ext{l[1]} + r[1])));
}

double F13(double nd, const DiracVector& l, const DiracVector& r) {
  const ext n = nd, l0 = l[0], l1 = l[1], r0 = r[0], r1 = r[1];
  const ext m = n * n - 1;
  return static_cast<double>(
      3 * (l1 - r1) * n * n *
      (16 + 4 * m * (l0 + r0 - 4 * m * (l1 + r1)) -
       3 * (n * n - 4) * m * m * (3 * l0 * r1 + 3 * l1 * r0 + l0 * l1 + r0 * r1 + 16 * (n * n - 6) * l1 * r1)));
}

}  // namespace c1
}  // namespace terms

namespace {

void check_dirac(int c, const DiracVector& v) {
  require_supported_continuity(c);
  if (v.continuity() != c) throw Error(ErrorKind::InvalidArgument, "Dirac vector has the wrong continuity class");
}

// Adds `value` at basis index k; negative indices are dropped.
void put(std::vector<double>& coeffs, int k, double value) {
  if (k < 0) return;
  if (static_cast<std::size_t>(k) >= coeffs.size()) coeffs.resize(k + 1, 0.0);
  coeffs[k] += value;
}

}  // namespace

GegenbauerSeries q_poly(int c, int n, const DiracVector& l) {
  check_dirac(c, l);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "polynomial degree must be >= 0");
  const double m = n;
  std::vector<double> a;
  if (c == 0) {
    put(a, n, terms::c0::F(m, l) / (m + 1));
    put(a, n - 1, terms::c0::F(m + 1, l) / (m + 1));
  } else {
    put(a, n, 6 * terms::c1::F(m, l) / ((m + 2) * (2 * m + 3)));
    put(a, n - 1, 6 * terms::c1::E(m, l) / ((m + 1) * (m + 2)));
    put(a, n - 2, 6 * terms::c1::F(m + 1, l) / ((m + 1) * (2 * m + 3)));
  }
  return GegenbauerSeries(basis_alpha(c), std::move(a));
}

GegenbauerSeries m_poly(int c, int n, const DiracVector& l, const DiracVector& r) {
  check_dirac(c, l);
  check_dirac(c, r);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "polynomial degree must be >= 0");
  const double m = n;
  std::vector<double> a;
  if (c == 0) {
    put(a, n, terms::c0::H(m, l, r) / (2 * m + 1));
    put(a, n - 2, -terms::c0::H(m + 1, l, r) / (2 * m + 1));
    put(a, n - 1, (l[0] - r[0]) / 2);
  } else {
    using namespace terms::c1;
    put(a, n, 3 * H(m, l, r) / ((2 * m + 1) * (2 * m + 3)));
    put(a, n - 2, -6 * J(m, l, r) / ((2 * m - 1) * (2 * m + 3)));
    put(a, n - 4, 3 * H(m + 1, l, r) / ((2 * m - 1) * (2 * m + 1)));
    put(a, n - 1, 0.75 * (D1(m, l, r) + F13(m, l, r)) / (2 * m + 1));
    put(a, n - 3, -0.75 * (D3(m, l, r) + F13(m + 1, l, r)) / (2 * m + 1));
  }
  return GegenbauerSeries(basis_alpha(c), std::move(a));
}

GegenbauerSeries m_poly_omega(int c, int n, const DiracVector& l, const DiracVector& r, double omega) {
  GegenbauerSeries p = m_poly(c, n, l, r);
  if (omega == 0.0) return p;
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "M_{n,omega} with omega != 0 needs n >= 2");
  return p + omega * m_poly(c, n - 1, l, r);
}

std::vector<double> q_weights(int c, int n, const DiracVector& l, std::span<const double> roots) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Q weights need n >= 1");
  const GegenbauerSeries q = q_poly(c, n, l);
  const GegenbauerSeries dq = q.derivative();
  const GegenbauerSeries q_prev = q_poly(c, n - 1, l);
  const double m = n;
  double numer;
  if (c == 0) {
    const double f = terms::c0::F(m, l);
    numer = 2 * (2 * m + 1) * f * f / (m * (m + 1));
  } else {
    const double f = terms::c1::F(m, l);
    numer = 8 * (m + 1) * f * f / (m * (m + 2));
  }
  const double scale = dq.max_coeff() * q_prev.max_coeff();
  std::vector<double> w;
  w.reserve(roots.size());
  for (double x : roots) {
    if (std::abs(1.0 - x) < 1e-10)
      throw Error(ErrorKind::SingularDenominator, "Q weight singular: node at +1");
    const double den = dq(x) * q_prev(x) * std::pow(1.0 - x, c + 1);
    if (std::abs(den) < 1e-12 * scale) throw Error(ErrorKind::SingularDenominator, "Q weight denominator vanishes");
    w.push_back(numer / den);
  }
  return w;
}

std::vector<double> m_weights(int c, int n, const DiracVector& l, const DiracVector& r,
                              std::span<const double> roots, double omega) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "M weights need n >= 1");
  const GegenbauerSeries dm = m_poly_omega(c, n, l, r, omega).derivative();
  const GegenbauerSeries m_prev = m_poly(c, n - 1, l, r);
  const double h = c == 0 ? terms::c0::H(n, l, r) : terms::c1::H(n, l, r);
  const double numer = 2 * h * h / n;
  const double scale = dm.max_coeff() * m_prev.max_coeff();
  std::vector<double> w;
  w.reserve(roots.size());
  for (double x : roots) {
    const double den = dm(x) * m_prev(x);
    if (std::abs(den) < 1e-12 * scale) throw Error(ErrorKind::SingularDenominator, "M weight denominator vanishes");
    w.push_back(numer / den);
  }
  return w;
}

namespace {

template <bool Absolute>
double scalar_product(const WeightSpec& spec, const GegenbauerSeries& p, const GegenbauerSeries& q) {
  const int c = spec.continuity;
  check_dirac(c, spec.dirac_left);
  const bool two_sided = spec.side == WeightSide::TwoSided;
  if (two_sided && !spec.dirac_right) throw Error(ErrorKind::InvalidArgument, "two-sided weight needs a right Dirac vector");
  if (!two_sided && spec.dirac_right) throw Error(ErrorKind::InvalidArgument, "one-sided weight has no right Dirac vector");

  const std::vector<double> w = two_sided ? std::vector<double>{1.0} : monomial::one_minus_x_pow(c + 1);
  const int total = std::max(p.degree(), 0) + std::max(q.degree(), 0) + static_cast<int>(w.size()) - 1;
  const auto [xs, ws] = gauss_legendre((total + 5) / 2);

  auto term = [](double v) { return Absolute ? std::abs(v) : v; };
  double acc = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) acc += ws[k] * term(monomial::eval(w, xs[k]) * p(xs[k]) * q(xs[k]));

  // d^i/dx^i [w p q] at an endpoint by the Leibniz rule; monomial products lose digits at high degree
  auto endpoint_derivative = [&](int i, double x) {
    double sum = 0.0;
    for (int a = 0; a <= i; ++a) {
      for (int b = 0; a + b <= i; ++b) {
        const int e = i - a - b;
        const double multinomial = std::tgamma(i + 1.0) / (std::tgamma(a + 1.0) * std::tgamma(b + 1.0) * std::tgamma(e + 1.0));
        sum += multinomial * p.derivative(a)(x) * q.derivative(b)(x) * monomial::eval(monomial::derivative(w, e), x);
      }
    }
    return sum;
  };
  for (int i = 0; i <= c; ++i) {
    const double kappa = dirac_scale(c, i);
    acc += term(kappa * spec.dirac_left[i] * (i % 2 == 0 ? 1.0 : -1.0) * endpoint_derivative(i, -1.0));
    if (two_sided) acc += term(kappa * (*spec.dirac_right)[i] * endpoint_derivative(i, 1.0));
  }
  return acc;
}

}  // namespace

double inner_product(const WeightSpec& spec, const GegenbauerSeries& p, const GegenbauerSeries& q) {
  return scalar_product<false>(spec, p, q);
}

double inner_product_magnitude(const WeightSpec& spec, const GegenbauerSeries& p, const GegenbauerSeries& q) {
  return scalar_product<true>(spec, p, q);
}

}  // namespace splinequad
