#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "splinequad/error.hpp"
#include "splinequad/verify.hpp"

using namespace splinequad;

TEST_CASE("spline space dimension") {
  for (int s = 1; s <= 5; ++s) {
    std::vector<double> knots(s + 1);
    for (int k = 0; k <= s; ++k) knots[k] = k * 1.5;
    for (int c : {0, 1}) {
      for (int d = c + 1; d <= 7; ++d) {
        const SplineSpace space(Partition(knots), d, c);
        CHECK(space.dimension() == (d + 1) * s - (c + 1) * (s - 1));
      }
    }
  }
  CHECK_THROWS_AS(SplineSpace(Partition({0, 1}), 1, 1), Error);
}

TEST_CASE("degree zero basis is an indicator") {
  const SplineSpace space(Partition({0, 1, 3}), 0, -1);
  CHECK(bspline_eval(space, 0, 0.5) == 1.0);
  CHECK(bspline_eval(space, 0, 2.0) == 0.0);
  CHECK(bspline_eval(space, 1, 2.0) == 1.0);
}

TEST_CASE("partition of unity and nonnegativity") {
  const Partition p({0, 1, 3, 7, 9});
  for (int c : {0, 1}) {
    for (int d : {3, 4, 7}) {
      const SplineSpace space(p, d, c);
      for (double x = 0.0; x <= 9.0; x += 0.173) {
        double sum = 0.0;
        for (int i = 0; i < space.dimension(); ++i) {
          const double v = bspline_eval(space, i, x);
          CHECK(v >= -1e-15);
          sum += v;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("C^1 basis has continuous first derivatives at interior knots") {
  const Partition p({0, 1, 3, 7, 9});
  const SplineSpace space(p, 5, 1);
  const double h = 1e-5;
  for (int i = 0; i < space.dimension(); ++i) {
    for (double t : {1.0, 3.0, 7.0}) {
      // one-sided second-order differences from each side
      const double left = (3 * bspline_eval(space, i, t - 1e-13) - 4 * bspline_eval(space, i, t - h) + bspline_eval(space, i, t - 2 * h)) / (2 * h);
      const double right = (-3 * bspline_eval(space, i, t + 1e-13) + 4 * bspline_eval(space, i, t + h) - bspline_eval(space, i, t + 2 * h)) / (2 * h);
      CHECK(std::abs(left - right) <= 1e-6 * std::max(1.0, std::abs(left)));
      CHECK(bspline_eval(space, i, t, 1) == doctest::Approx(left).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("basis integrals") {
  const SplineSpace indicator(Partition({0, 1, 2}), 0, -1);
  CHECK(bspline_integral(indicator, 0) == 1.0);

  const Partition p({0, 1, 3, 7, 9});
  for (int c : {0, 1}) {
    for (int d = c + 1; d <= 7; ++d) {
      const SplineSpace space(p, d, c);
      double sum = 0.0;
      for (int i = 0; i < space.dimension(); ++i) {
        const double exact = bspline_integral(space, i);
        double ref = 0.0;
        for (int k = 1; k <= 4; ++k) {
          const auto [lo, hi] = p.span(k);
          ref += oracle::integrate([&](double x) { return bspline_eval(space, i, x); }, lo, hi, d / 2 + 2);
        }
        CHECK(exact == doctest::Approx(ref).epsilon(1e-13));
        sum += exact;
      }
      CHECK(sum == doctest::Approx(9.0).epsilon(1e-14));
    }
  }

  // interior cubic on a uniform grid with simple knots integrates to h
  const SplineSpace cubic(Partition({0, 0.5, 1, 1.5, 2, 2.5}), 3, 2);
  CHECK(bspline_integral(cubic, 3) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("basis evaluation errors") {
  const SplineSpace space(Partition({0, 1, 2}), 2, 0);
  CHECK_THROWS_AS(bspline_eval(space, -1, 0.5), Error);
  CHECK_THROWS_AS(bspline_eval(space, space.dimension(), 0.5), Error);
  CHECK_THROWS_AS(bspline_eval(space, 0, 5.0), Error);
}

TEST_CASE("defect of constants and basis functions") {
  const QuadratureRule rule = generate(Partition({0, 1, 2, 3, 4}), 0, 4, 3, OmegaPolicy::default_for(0));
  CHECK(std::abs(defect(rule, [](double) { return 1.0; }, 4.0)) <= 1e-12);
  const SplineSpace space(rule.partition, 4, 0);
  for (int i = 0; i < space.dimension(); ++i)
    CHECK(std::abs(defect(rule, [&](double x) { return bspline_eval(space, i, x); }, bspline_integral(space, i))) <= 1e-13);

  QuadratureRule bent = rule;
  bent.subintervals[1].weights[0] += 1e-4;
  const DefectReport report = verify_exactness(bent, space);
  CHECK_FALSE(report.pass);
  CHECK(report.max_abs_defect >= 1e-5);
}

TEST_CASE("verify exactness of generated rules") {
  const QuadratureRule t1 = generate(Partition({0, 1, 2, 3, 4}), 0, 4, 3, OmegaPolicy::default_for(0));
  const DefectReport ok = verify_exactness(t1, SplineSpace(t1.partition, 4, 0));
  CHECK(ok.pass);
  CHECK(ok.max_abs_defect <= 1e-12);
  CHECK(ok.weight_sum == doctest::Approx(4.0));
  CHECK(ok.interval_length == 4.0);

  const QuadratureRule t5 = generate(Partition({0, 1, 3, 7, 9}), 1, 7, 3, OmegaPolicy::default_for(1));
  CHECK(verify_exactness(t5, SplineSpace(t5.partition, 7, 1)).pass);

  const DefectReport high = verify_exactness(t1, SplineSpace(t1.partition, 6, 0));
  CHECK_FALSE(high.pass);
  CHECK(high.max_abs_defect > 1e3 * high.tolerance);
  CHECK(high.worst_index >= 0);

  try {
    verify_exactness(t1, SplineSpace(Partition({0, 1, 2, 3, 5}), 4, 0));
    FAIL("expected a mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpaceMismatch);
  }
}

TEST_CASE("table reproduction") {
  for (int id = 1; id <= 5; ++id) {
    const TableReport report = reproduce_table(id);
    CHECK(report.id == id);
    CHECK_FALSE(report.entries.empty());
    for (const auto& e : report.entries) {
      INFO("table ", id, " ", e.label, " expected ", e.expected, " actual ", e.actual);
      CHECK(e.pass);
    }
    CHECK(report.pass());
  }
  CHECK_THROWS_AS(reproduce_table(0), Error);
  CHECK_THROWS_AS(reproduce_table(6), Error);
}
