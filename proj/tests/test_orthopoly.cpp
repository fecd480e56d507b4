#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "splinequad/error.hpp"
#include "splinequad/orthopoly.hpp"

using namespace splinequad;

TEST_CASE("gegenbauer values at low degree") {
  CHECK(gegenbauer(0, 1.5, 0.3) == 1.0);
  CHECK(gegenbauer(1, 1.5, 0.5) == doctest::Approx(1.5).epsilon(1e-15));
  // binom(n + 2 alpha - 1, n) at x = 1
  CHECK(gegenbauer(2, 1.5, 1.0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(gegenbauer(-1, 1.5, 0.2) == 0.0);
}

TEST_CASE("gegenbauer recurrence agrees with the explicit sum") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double alpha : {1.5, 2.5, 3.5}) {
    for (int n = 0; n <= 12; ++n) {
      // |C_n(x)| <= C_n(1) on [-1, 1]
      const double scale = std::max(1.0, oracle::gegenbauer_sum(n, alpha, 1.0));
      for (int t = 0; t < 20; ++t) {
        const double x = u(rng);
        CHECK(std::abs(gegenbauer(n, alpha, x) - oracle::gegenbauer_sum(n, alpha, x)) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("series evaluation") {
  CHECK(GegenbauerSeries(2.5, {1.0})(0.7) == 1.0);
  CHECK(GegenbauerSeries(1.5, {0.0, 1.0})(0.5) == doctest::Approx(1.5));
  // (3x + 1) / 2
  const GegenbauerSeries q1(1.5, {0.5, 0.5});
  CHECK(q1(1.0) == doctest::Approx(2.0));
  CHECK(q1(-1.0 / 3.0) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("series canonical form") {
  const GegenbauerSeries p(1.5, {1.0, 2.0, 1e-20});
  CHECK(p.degree() == 1);
  const GegenbauerSeries z(1.5, {0.0, 0.0});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z(0.3) == 0.0);
  CHECK_THROWS_AS(GegenbauerSeries(0.0, {1.0}), Error);
  CHECK_THROWS_AS(GegenbauerSeries(1.5, {1.0, NAN}), Error);
}

TEST_CASE("series derivative") {
  CHECK(GegenbauerSeries(1.5, {4.0}).derivative().is_zero());

  const GegenbauerSeries d = GegenbauerSeries(1.5, {0.0, 1.0}).derivative();
  CHECK(d.alpha() == 2.5);
  REQUIRE(d.coeffs().size() == 1);
  CHECK(d.coeffs()[0] == doctest::Approx(3.0));

  const GegenbauerSeries p(1.5, {0.3, -1.0, 2.0});
  const GegenbauerSeries same = p.derivative(0);
  CHECK(std::equal(same.coeffs().begin(), same.coeffs().end(), p.coeffs().begin(), p.coeffs().end()));
  CHECK(same.alpha() == p.alpha());

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const int deg = 1 + t % 8;
    std::vector<double> c(deg + 1);
    for (auto& v : c) v = u(rng);
    const GegenbauerSeries q(t % 2 ? 2.5 : 1.5, c);
    const GegenbauerSeries dq = q.derivative();
    const double x = 0.9 * u(rng);
    CHECK(std::abs(dq(x) - oracle::central_difference(q, x, 1e-6)) <= 1e-6);
  }
}

TEST_CASE("monomial conversion matches evaluation") {
  const GegenbauerSeries p(2.5, {0.2, -0.7, 1.1, 0.4, -0.3});
  const auto m = p.to_monomial();
  for (double x : {-1.0, -0.4, 0.0, 0.35, 1.0}) CHECK(monomial::eval(m, x) == doctest::Approx(p(x)).epsilon(1e-13));
}

TEST_CASE("real roots of simple series") {
  // (C_2 + C_1) / 3 with alpha = 3/2 is (5x^2 + 2x - 1) / 2
  const RootSet q = real_roots(GegenbauerSeries(1.5, {0.0, 1.0 / 3, 1.0 / 3}));
  REQUIRE(q.roots.size() == 2);
  CHECK(q.complete());
  CHECK(q.roots[0] == doctest::Approx((-1 - std::sqrt(6.0)) / 5).epsilon(1e-14));
  CHECK(q.roots[1] == doctest::Approx((-1 + std::sqrt(6.0)) / 5).epsilon(1e-14));

  const RootSet odd = real_roots(GegenbauerSeries(2.5, {0.0, 1.0}));
  REQUIRE(odd.roots.size() == 1);
  CHECK(odd.roots[0] == 0.0);

  // x^2 + 1 has no real roots
  const RootSet none = real_roots(GegenbauerSeries(0.5, {2.0 / 3 + 1.0, 0.0, 2.0 / 3}));
  CHECK(none.roots.empty());
  CHECK(none.nonreal == 2);
}

TEST_CASE("real roots: residual and reflection") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const int deg = 1 + t % 10;
    std::vector<double> c(deg + 1);
    for (auto& v : c) v = u(rng);
    const GegenbauerSeries p(t % 2 ? 2.5 : 1.5, c);
    const RootSet rs = real_roots(p);
    CHECK(std::is_sorted(rs.roots.begin(), rs.roots.end()));
    CHECK(rs.roots.size() + rs.nonreal == static_cast<std::size_t>(p.degree()));
    for (double x : rs.roots) {
      if (std::abs(x) <= 1.0 + 1e-8) CHECK(std::abs(p(x)) <= 1e-12 * p.max_coeff() * std::max(1.0, oracle::gegenbauer_sum(deg, p.alpha(), 1.0) / 100));
    }
    const RootSet mirrored = real_roots(p.reflected());
    REQUIRE(mirrored.roots.size() == rs.roots.size());
    const std::size_t m = rs.roots.size();
    for (std::size_t i = 0; i < m; ++i)
      CHECK(mirrored.roots[i] == doctest::Approx(-rs.roots[m - 1 - i]).epsilon(1e-10));
  }
}

TEST_CASE("monomial helpers") {
  const std::vector<double> a{1.0, 2.0};
  const std::vector<double> b{-1.0, 0.0, 3.0};
  const auto ab = monomial::multiply(a, b);
  CHECK(ab == std::vector<double>{-1.0, -2.0, 3.0, 6.0});
  CHECK(monomial::derivative(ab, 2) == std::vector<double>{6.0, 36.0});
  CHECK(monomial::one_minus_x_pow(2) == std::vector<double>{1.0, -2.0, 1.0});
  CHECK(monomial::eval(b, 2.0) == 11.0);
}

TEST_CASE("gauss-legendre rule") {
  for (int n = 1; n <= 12; ++n) {
    const auto [x, w] = gauss_legendre(n);
    const auto [xr, wr] = oracle::golub_welsch(n);
    REQUIRE(x.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      CHECK(x[i] == doctest::Approx(xr[i]).epsilon(1e-13));
      CHECK(w[i] == doctest::Approx(wr[i]).epsilon(1e-12));
    }
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += w[i] * std::pow(x[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(s - exact) <= 1e-14 * 4);
    }
  }
}
