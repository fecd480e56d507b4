#include "splinequad/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>

#include "splinequad/error.hpp"
#include "splinequad/maps.hpp"
#include "splinequad/rulegen.hpp"
#include "splinequad/verify.hpp"

namespace splinequad {

namespace {

constexpr double kMapTol = 1e-10;
constexpr double kBox = 0.3;
constexpr int kMaxRejections = 10000;

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream) : rng_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

  DiracVector dirac(int c) {
    std::vector<double> e(static_cast<std::size_t>(c + 1));
    for (auto& v : e) v = uniform(-kBox, kBox);
    return DiracVector(c, std::move(e));
  }

  std::vector<double> poly(int degree) {
    std::vector<double> p(static_cast<std::size_t>(degree + 1));
    for (auto& v : p) v = uniform(-1.0, 1.0);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

PropertyResult finish(std::string name, int trials, double worst, double tol, std::string detail = {}) {
  PropertyResult r;
  r.name = std::move(name);
  r.trials = trials;
  r.worst = worst;
  r.tolerance = tol;
  r.passed = trials > 0 && worst <= tol;
  r.detail = std::move(detail);
  return r;
}

// Draws (c, n) with c in {0, 1} and n in 2..8 and records the error of `trial`.
PropertyResult map_check(const char* name, std::uint64_t seed, std::uint64_t stream, int draws,
                         const std::function<double(Sampler&, int c, int n)>& trial) {
  Sampler rng(seed, stream);
  double worst_by_c[2] = {0.0, 0.0};
  int done = 0;
  int rejected = 0;
  while (done < draws) {
    const int c = rng.integer(0, 1);
    const int n = rng.integer(2, 8);
    try {
      worst_by_c[c] = std::max(worst_by_c[c], trial(rng, c, n));
      ++done;
    } catch (const Error&) {
      // pole, base locus or non-real roots
      if (++rejected > kMaxRejections) break;
    }
  }
  return finish(name, done, std::max(worst_by_c[0], worst_by_c[1]), kMapTol,
                "worst c=0: " + fmt(worst_by_c[0]) + ", worst c=1: " + fmt(worst_by_c[1]) +
                    ", rejected draws: " + std::to_string(rejected));
}

// g^{(k)}(x) for k = 0..1 and a known degree
struct Integrand {
  int degree = 0;
  std::function<double(int k, double x)> eval;
};

Integrand from_monomial(std::vector<double> g) {
  const int degree = static_cast<int>(g.size()) - 1;
  return {degree, [g = std::move(g)](int k, double x) {
            return k == 0 ? monomial::eval(g, x) : monomial::eval(monomial::derivative(g, k), x);
          }};
}

// p q by the product rule, without leaving the Gegenbauer bases
Integrand from_product(const GegenbauerSeries& p, const GegenbauerSeries& q) {
  return {p.degree() + q.degree(), [p, q, dp = p.derivative(), dq = q.derivative()](int k, double x) {
            return k == 0 ? p(x) * q(x) : dp(x) * q(x) + p(x) * dq(x);
          }};
}

struct DefectSample {
  double residual = 0.0;
  double scale = 1.0;
};

// Defect of a node/weight set on g minus the predicted Dirac contribution.
DefectSample defect_residual(std::span<const double> x, std::span<const double> w, const Integrand& g,
                             const DiracVector& l, const std::optional<DiracVector>& r) {
  const int c = l.continuity();
  double sum = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = w[i] * g.eval(0, x[i]);
    sum += t;
    scale += std::abs(t);
  }
  const auto [gx, gw] = gauss_legendre(g.degree / 2 + 2);
  double exact = 0.0;
  for (std::size_t i = 0; i < gx.size(); ++i) exact += gw[i] * g.eval(0, gx[i]);
  double predicted = 0.0;
  for (int i = 0; i <= c; ++i) {
    const double sign = i % 2 ? -1.0 : 1.0;
    predicted += sign * dirac_scale(c, i) * l[static_cast<std::size_t>(i)] * g.eval(i, -1.0);
    if (r) predicted += dirac_scale(c, i) * (*r)[static_cast<std::size_t>(i)] * g.eval(i, 1.0);
  }
  scale += std::abs(exact) + std::abs(predicted);
  return {sum - exact - predicted, 1.0 + scale};
}

std::vector<double> complete_roots(const GegenbauerSeries& p, int expected) {
  RootSet rs = real_roots(p);
  if (!rs.complete() || static_cast<int>(rs.roots.size()) != expected)
    throw Error(ErrorKind::Indeterminate, "incomplete real root set");
  return rs.roots;
}

}  // namespace

PropertyResult check_connection_involution(std::uint64_t seed, int draws) {
  return map_check("connection involution", seed, 1, draws, [](Sampler& rng, int c, int) {
    const DiracVector l = rng.dirac(c);
    return distance(connection(connection(l)), l);
  });
}

PropertyResult check_reflection_involution(std::uint64_t seed, int draws) {
  return map_check("reflection involution", seed, 2, draws, [](Sampler& rng, int c, int n) {
    const DiracVector l = rng.dirac(c);
    return distance(reflection(c, n, reflection(c, n, l)), l);
  });
}

PropertyResult check_reflect_j_involution(std::uint64_t seed, int draws) {
  return map_check("reflect_j involution", seed, 3, draws, [](Sampler& rng, int c, int n) {
    const JacobiCoefficientVector j = f_map(c, n, rng.dirac(c));
    return projective_distance(reflect_j(reflect_j(j)), j);
  });
}

PropertyResult check_connection_j_involution(std::uint64_t seed, int draws) {
  return map_check("connection_j involution", seed, 4, draws, [](Sampler& rng, int c, int n) {
    const JacobiCoefficientVector j = f_map(c, n, rng.dirac(c));
    return projective_distance(connection_j(c, n, connection_j(c, n, j)), j);
  });
}

PropertyResult check_commuting_diagram(std::uint64_t seed, int draws) {
  return map_check("commuting diagram", seed, 5, draws, [](Sampler& rng, int c, int n) {
    const DiracVector l = rng.dirac(c);
    const JacobiCoefficientVector lhs = f_map(c, n, recursion(c, n, l));
    const JacobiCoefficientVector rhs = connection_j(c, n, reflect_j(f_map(c, n, l)));
    return projective_distance(lhs, rhs);
  });
}

PropertyResult check_root_reflection(std::uint64_t seed, int draws) {
  return map_check("root reflection", seed, 6, draws, [](Sampler& rng, int c, int n) {
    const DiracVector l = rng.dirac(c);
    const RootSet a = real_roots(q_poly(c, n, l));
    const RootSet b = real_roots(q_poly(c, n, reflection(c, n, l)));
    if (a.roots.size() != b.roots.size()) return std::numeric_limits<double>::infinity();
    double err = 0.0;
    const std::size_t m = a.roots.size();
    for (std::size_t i = 0; i < m; ++i) {
      const double x = -a.roots[m - 1 - i];
      err = std::max(err, std::abs(b.roots[i] - x) / std::max(1.0, std::abs(x)));
    }
    return err;
  });
}

PropertyResult check_q_defect_identity(std::uint64_t seed, int draws) {
  return map_check("Q defect identity", seed, 7, draws, [](Sampler& rng, int c, int n) {
    const DiracVector l = rng.dirac(c);
    const auto x = complete_roots(q_poly(c, n, l), n);
    const auto w = q_weights(c, n, l, x);
    // deg g = 2n + c, divisible by (1 - x)^{c+1}
    const auto g = monomial::multiply(monomial::one_minus_x_pow(c + 1), rng.poly(2 * n - 1));
    const DefectSample d = defect_residual(x, w, from_monomial(g), l, std::nullopt);
    return std::abs(d.residual) / d.scale;
  });
}

PropertyResult check_m_defect_identity(std::uint64_t seed, int draws) {
  return map_check("M defect identity", seed, 8, draws, [](Sampler& rng, int c, int n) {
    const DiracVector l = rng.dirac(c);
    const DiracVector r = rng.dirac(c);
    const auto x = complete_roots(m_poly(c, n, l, r), n);
    const auto w = m_weights(c, n, l, r, x, 0.0);
    const auto g = rng.poly(2 * n - 1);
    const DefectSample d = defect_residual(x, w, from_monomial(g), l, r);
    return std::abs(d.residual) / d.scale;
  });
}

PropertyResult check_omega_degree_drop(std::uint64_t seed, int draws) {
  // Exact through degree 2n - 2. For g = M_{n,omega} M_{n-1} of degree 2n - 1
  // the rule sees zero while the functional gives omega <M_{n-1}, M_{n-1}>.
  Sampler rng(seed, 9);
  double worst = 0.0;
  double break_error = 0.0;
  int done = 0;
  int rejected = 0;
  while (done < draws && rejected <= kMaxRejections) {
    const int c = rng.integer(0, 1);
    const int n = rng.integer(2, 8);
    try {
      const DiracVector l = rng.dirac(c);
      const DiracVector r = rng.dirac(c);
      const double omega = rng.uniform(0.2, 1.0) * (rng.integer(0, 1) ? 1.0 : -1.0);
      const GegenbauerSeries m = m_poly_omega(c, n, l, r, omega);
      const GegenbauerSeries prev = m_poly(c, n - 1, l, r);
      const auto x = complete_roots(m, n);
      const auto w = m_weights(c, n, l, r, x, omega);
      const DefectSample ok = defect_residual(x, w, from_monomial(rng.poly(2 * n - 2)), l, r);
      const DefectSample broken = defect_residual(x, w, from_product(m, prev), l, r);
      const WeightSpec spec = WeightSpec::two_sided(l, r);
      const double norm = inner_product(spec, prev, prev);
      worst = std::max(worst, std::abs(ok.residual) / ok.scale);
      // predicted defect -omega <M_{n-1}, M_{n-1}>
      break_error = std::max(break_error, std::abs(broken.residual + omega * norm) /
                                              (broken.scale + inner_product_magnitude(spec, prev, prev)));
      ++done;
    } catch (const Error&) {
      ++rejected;
    }
  }
  PropertyResult res = finish("omega degree drop", done, std::max(worst, break_error), kMapTol,
                              "degree 2n-2 residual: " + fmt(worst) + ", degree 2n-1 defect vs -omega|M_{n-1}|^2: " +
                                  fmt(break_error) + ", rejected draws: " + std::to_string(rejected));
  return res;
}

namespace {

struct RandomConfig {
  int c = 0;
  int d = 0;
  std::vector<double> knots;
};

RandomConfig random_config(Sampler& rng) {
  RandomConfig cfg;
  cfg.c = rng.integer(0, 1);
  // valid degrees up to 7: 2, 4, 6 for c = 0 and 3, 5, 7 for c = 1
  cfg.d = 2 * rng.integer(1, 3) + cfg.c;
  const int s = rng.integer(3, 6);
  cfg.knots.push_back(0.0);
  for (int k = 0; k < s; ++k) cfg.knots.push_back(cfg.knots.back() + rng.uniform(0.5, 2.0));
  return cfg;
}

}  // namespace

PropertyResult check_random_exactness(std::uint64_t seed, int configs, int max_attempts) {
  Sampler rng(seed, 10);
  double worst = 0.0;
  int done = 0;
  int skipped = 0;
  int attempts = 0;
  bool all_pass = true;
  while (done < configs && attempts < max_attempts) {
    ++attempts;
    const RandomConfig cfg = random_config(rng);
    const Partition partition(cfg.knots);
    QuadratureRule rule;
    try {
      rule = generate(partition, cfg.c, cfg.d, default_middle_index(partition.subinterval_count()),
                      OmegaPolicy::default_for(cfg.c));
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    if (!rule.warnings.empty()) {
      ++skipped;
      continue;
    }
    const DefectReport report = verify_exactness(rule, SplineSpace(partition, cfg.d, cfg.c));
    const double sum_err = std::abs(rule.weight_sum() - (partition.back() - partition.front()));
    all_pass = all_pass && report.pass && sum_err <= 1e-10;
    worst = std::max({worst, report.max_abs_defect / (report.tolerance / 1e-10), sum_err});
    ++done;
  }
  PropertyResult r = finish("random configuration exactness", done, worst, 1e-10,
                            "skipped (error or warning): " + std::to_string(skipped) + " of " +
                                std::to_string(attempts) + " attempts");
  r.passed = r.passed && all_pass && done == configs;
  return r;
}

PropertyResult check_random_splines(std::uint64_t seed, int splines) {
  Sampler rng(seed, 11);
  double worst = 0.0;
  int done = 0;
  int attempts = 0;
  while (done < splines && attempts < 50 * splines) {
    ++attempts;
    const RandomConfig cfg = random_config(rng);
    const Partition partition(cfg.knots);
    QuadratureRule rule;
    try {
      rule = generate(partition, cfg.c, cfg.d, default_middle_index(partition.subinterval_count()),
                      OmegaPolicy::default_for(cfg.c));
    } catch (const Error&) {
      continue;
    }
    if (!rule.warnings.empty()) continue;
    const SplineSpace space(partition, cfg.d, cfg.c);
    std::vector<double> coef(static_cast<std::size_t>(space.dimension()));
    double exact = 0.0;
    double mass = 0.0;
    for (int i = 0; i < space.dimension(); ++i) {
      coef[i] = rng.uniform(-1.0, 1.0);
      exact += coef[i] * bspline_integral(space, i);
      mass += std::abs(coef[i]);
    }
    const auto spline = [&](double x) {
      const auto b = space.local_basis(x);
      double v = 0.0;
      for (std::size_t k = 0; k < b.values.size(); ++k) v += coef[b.first + k] * b.values[k];
      return v;
    };
    worst = std::max(worst, std::abs(defect(rule, spline, exact)) / mass);
    ++done;
  }
  return finish("random spline exactness", done, worst, 1e-9);
}

AttractorFit fit_attractor(int n) {
  AttractorFit fit;
  fit.n = n;
  fit.fixed = fixed_point(1, n, DiracVector::zero(1));
  fit.residual = distance(recursion(1, n, fit.fixed), fit.fixed);
  fit.l1_error = std::abs(fit.fixed[1] - 1.0 / (3.0 * n * (n + 1) * (n + 2) * (n + 3)));

  constexpr double kFloor = 1e-13;
  DiracVector l = DiracVector::zero(1);
  for (int k = 0; k < 60; ++k) {
    const double e = distance(l, fit.fixed);
    fit.errors.push_back(e);
    if (e <= kFloor) break;
    l = recursion(1, n, l);
  }
  for (std::size_t k = 0; k + 1 < fit.errors.size(); ++k) {
    const double e = fit.errors[k];
    const double next = fit.errors[k + 1];
    // below the floor the ratio only measures roundoff
    if (e < 0.1 && next > kFloor) {
      fit.K = std::max(fit.K, next / (e * e));
      ++fit.ratios;
    }
  }
  return fit;
}

PropertyResult check_fixed_point_attractor() {
  double worst = 0.0;
  bool ok = true;
  std::string detail;
  int trials = 0;
  for (int n = 2; n <= 5; ++n) {
    try {
      const AttractorFit fit = fit_attractor(n);
      worst = std::max({worst, fit.residual, fit.l1_error});
      const bool converged = !fit.errors.empty() && fit.errors.back() <= 1e-12;
      ok = ok && converged && fit.ratios > 0 && std::isfinite(fit.K);
      detail += "n=" + std::to_string(n) + " K=" + fmt(fit.K) + " (" + std::to_string(fit.ratios) + " steps); ";
      ++trials;
    } catch (const Error& e) {
      ok = false;
      detail += "n=" + std::to_string(n) + " error: " + e.what() + "; ";
    }
  }
  for (int n = 2; n <= 8; ++n) {
    try {
      const DiracVector f = fixed_point(0, n, DiracVector::zero(0));
      worst = std::max(worst, distance(recursion(0, n, f), f));
      worst = std::max(worst, std::abs(f[0] * f[0] - 4.0 / (n * (n + 1.0) * (n + 1.0) * (n + 2.0))));
      ++trials;
    } catch (const Error& e) {
      ok = false;
      detail += "c=0 n=" + std::to_string(n) + " error: " + e.what() + "; ";
    }
  }
  PropertyResult r = finish("fixed point and quadratic attractor", trials, worst, 1e-12, detail);
  r.passed = r.passed && ok;
  return r;
}

std::vector<PropertyResult> run_property_suite(std::uint64_t seed) {
  return {check_connection_involution(seed),   check_reflection_involution(seed),
          check_reflect_j_involution(seed),    check_connection_j_involution(seed),
          check_commuting_diagram(seed),       check_root_reflection(seed),
          check_q_defect_identity(seed),       check_m_defect_identity(seed),
          check_omega_degree_drop(seed),       check_random_exactness(seed),
          check_random_splines(seed),          check_fixed_point_attractor()};
}

}  // namespace splinequad
