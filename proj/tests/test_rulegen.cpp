#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "splinequad/error.hpp"
#include "splinequad/rulegen.hpp"
#include "splinequad/verify.hpp"

using namespace splinequad;

namespace {

const Partition kUniform4({0, 1, 2, 3, 4});
const Partition kTable3({0, 1, 3, 7, 15});
const Partition kTable5({0, 1, 3, 7, 9});

}  // namespace

TEST_CASE("partition") {
  CHECK_THROWS_AS(Partition({1.0}), Error);
  CHECK_THROWS_AS(Partition({0.0, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(Partition({0.0, INFINITY}), Error);
  CHECK(kTable5.subinterval_count() == 4);
  CHECK(kTable5.length(3) == 4.0);
  CHECK(kTable5.span(4) == std::pair<double, double>{7.0, 9.0});
  CHECK(kTable5.reflected() == Partition({0, 2, 6, 8, 9}));
}

TEST_CASE("half degree") {
  CHECK(half_degree(0, 4) == 2);
  CHECK(half_degree(1, 7) == 3);
  try {
    half_degree(1, 6);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HalfRuleUnsupported);
    CHECK(std::string(e.what()).rfind("1/2-rule unsupported", 0) == 0);
  }
  CHECK_THROWS_AS(half_degree(0, 3), Error);
  CHECK_THROWS_AS(half_degree(2, 5), Error);
  CHECK(default_middle_index(4) == 2);
  CHECK(default_middle_index(5) == 3);
  CHECK(default_middle_index(1) == 1);
}

TEST_CASE("plan") {
  auto counts = [](const std::vector<SubintervalPlan>& plans) {
    std::vector<int> out;
    for (const auto& p : plans) out.push_back(p.node_count);
    return out;
  };
  const auto t1 = plan(kUniform4, 0, 4, 3, OmegaPolicy::default_for(0));
  CHECK(counts(t1) == std::vector<int>{2, 2, 3, 2});
  CHECK(t1[0].kind == SubintervalKind::Q);
  CHECK(t1[1].kind == SubintervalKind::Q);
  CHECK(t1[2].kind == SubintervalKind::M);
  CHECK(t1[3].kind == SubintervalKind::QReflected);
  CHECK(counts(plan(kTable5, 1, 7, 3, OmegaPolicy::default_for(1))) == std::vector<int>{3, 3, 4, 3});
  CHECK_THROWS_AS(plan(kUniform4, 0, 4, 5, OmegaPolicy{}), Error);
  CHECK_THROWS_AS(plan(kUniform4, 0, 4, 0, OmegaPolicy{}), Error);
}

TEST_CASE("omega policy text") {
  CHECK(OmegaPolicy::parse("node-left").kind == OmegaPolicy::Kind::NodeLeft);
  CHECK(OmegaPolicy::parse("zero").kind == OmegaPolicy::Kind::Zero);
  const OmegaPolicy v = OmegaPolicy::parse("value=1.25");
  CHECK(v.kind == OmegaPolicy::Kind::Value);
  CHECK(v.value == 1.25);
  CHECK(OmegaPolicy::parse(v.to_string()) == v);
  CHECK_THROWS_AS(OmegaPolicy::parse("value=abc"), Error);
  CHECK_THROWS_AS(OmegaPolicy::parse("left"), Error);
  CHECK(OmegaPolicy::default_for(0).kind == OmegaPolicy::Kind::NodeLeft);
  CHECK(OmegaPolicy::default_for(1).kind == OmegaPolicy::Kind::Zero);
  CHECK(subinterval_kind_from_string(to_string(SubintervalKind::QReflected)) == SubintervalKind::QReflected);
}

TEST_CASE("march") {
  const auto t1 = march(plan(kUniform4, 0, 4, 3, OmegaPolicy::default_for(0)), kUniform4, 0, 2);
  CHECK((*t1[0].dirac_left)[0] == 0.0);
  CHECK((*t1[1].dirac_left)[0] == doctest::Approx(2.0 / 9).epsilon(1e-15));
  CHECK((*t1[2].dirac_left)[0] == doctest::Approx(4.0 / 17).epsilon(1e-15));
  CHECK((*t1[2].dirac_right)[0] == doctest::Approx(2.0 / 9).epsilon(1e-15));
  CHECK((*t1[3].dirac_right)[0] == 0.0);

  const auto t3 = march(plan(kTable3, 0, 4, 4, OmegaPolicy::default_for(0)), kTable3, 0, 2);
  CHECK((*t3[1].dirac_left)[0] == doctest::Approx(1.0 / 9).epsilon(1e-15));
  CHECK((*t3[2].dirac_left)[0] == doctest::Approx(3.0 / 26).epsilon(1e-15));
  CHECK((*t3[3].dirac_left)[0] == doctest::Approx(79.0 / 684).epsilon(1e-15));
  CHECK((*t3[3].dirac_right)[0] == 0.0);

  const auto t5 = march(plan(kTable5, 1, 7, 3, OmegaPolicy::default_for(1)), kTable5, 1, 3);
  CHECK((*t5[3].dirac_right)[0] == 0.0);
  CHECK((*t5[2].dirac_right)[0] == doctest::Approx(13.0 / 200).epsilon(1e-15));
  CHECK((*t5[2].dirac_right)[1] == doctest::Approx(1.0 / 4800).epsilon(1e-15));
}

TEST_CASE("omega placement") {
  const DiracVector l(0, {4.0 / 17}), r(0, {2.0 / 9});
  CHECK(omega_for_node_at(0, 3, l, r, -1.0) == doctest::Approx(7.0 / 5).epsilon(1e-14));
  CHECK(omega_for_node_at(0, 4, DiracVector(0, {0}), DiracVector(0, {63.0 / 488}), -1.0) ==
        doctest::Approx(559.0 / 433).epsilon(1e-14));
  CHECK(omega_for_node_at(0, 3, DiracVector(0, {79.0 / 684}), DiracVector(0, {0}), -1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const double omega = omega_for_node_at(0, 3, l, r, 0.2);
  CHECK(std::abs(m_poly_omega(0, 3, l, r, omega)(0.2)) <= 1e-14);
}

TEST_CASE("scale to interval") {
  const std::vector<double> x{-1.0, 0.0, 0.5}, w{0.5, 1.0, 0.5};
  const auto [same_x, same_w] = scale_to_interval(x, w, -1, 1);
  CHECK(same_x == x);
  CHECK(same_w == w);
  const auto [gx, gw] = scale_to_interval(x, w, 2, 3);
  CHECK(gx[0] == 2.0);
  CHECK(gx[1] == 2.5);
  CHECK(gw[1] == 0.5);
}

TEST_CASE("generate reproduces the uniform c=0 rule") {
  const QuadratureRule rule = generate(kUniform4, 0, 4, 3, OmegaPolicy::default_for(0));
  CHECK(rule.node_count() == 9);
  CHECK(rule.warnings.empty());
  CHECK(rule.omega == doctest::Approx(7.0 / 5).epsilon(1e-14));
  const auto x = rule.all_nodes();
  const auto w = rule.all_weights();
  CHECK(std::is_sorted(x.begin(), x.end()));
  CHECK(rule.weight_sum() == doctest::Approx(4.0).epsilon(1e-14));
  const double s6 = std::sqrt(6.0), s174 = std::sqrt(174.0);
  CHECK(x[0] == doctest::Approx((4 - s6) / 10).epsilon(1e-14));
  CHECK(w[0] == doctest::Approx(4.0 / 9 - s6 / 36).epsilon(1e-14));
  CHECK(x[2] == doctest::Approx(34.0 / 25 - s174 / 50).epsilon(1e-14));
  CHECK(x[4] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(w[4] == doctest::Approx(4.0 / 17).epsilon(1e-14));
  // last subinterval mirrors the first
  CHECK(x[8] == doctest::Approx(4 - x[0]).epsilon(1e-14));
  CHECK(w[8] == doctest::Approx(w[0]).epsilon(1e-14));
}

TEST_CASE("generate: non-uniform c=0 rule places a node at the middle's left end") {
  const QuadratureRule rule = generate(kTable3, 0, 4, 4, OmegaPolicy::default_for(0));
  const auto& mid = rule.subintervals[3];
  CHECK(mid.nodes[0] == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(mid.weights[0] == doctest::Approx(77.0 / 57).epsilon(1e-13));
  CHECK(rule.weight_sum() == doctest::Approx(15.0).epsilon(1e-13));
  CHECK(verify_exactness(rule, SplineSpace(kTable3, 4, 0)).pass);
}

TEST_CASE("generate: symmetric c=1 rule") {
  const Partition p({0, 1, 2, 3, 4, 5});
  const QuadratureRule rule = generate(p, 1, 5, 3, OmegaPolicy::default_for(1));
  const auto x = rule.all_nodes();
  const auto w = rule.all_weights();
  REQUIRE(x.size() == 11);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(x[i] + x[x.size() - 1 - i] - 5.0) <= 1e-10);
    CHECK(std::abs(w[i] - w[x.size() - 1 - i]) <= 1e-10);
  }
}

TEST_CASE("generate on the reflected partition mirrors the rule") {
  const QuadratureRule a = generate(kTable5, 1, 7, 3, OmegaPolicy::default_for(1));
  const QuadratureRule b = generate(kTable5.reflected(), 1, 7, 2, OmegaPolicy::default_for(1));
  const auto xa = a.all_nodes(), wa = a.all_weights();
  const auto xb = b.all_nodes(), wb = b.all_weights();
  REQUIRE(xa.size() == 13);
  REQUIRE(xb.size() == 13);
  for (std::size_t i = 0; i < xa.size(); ++i) {
    CHECK(std::abs(xb[i] - (9.0 - xa[12 - i])) <= 1e-10);
    CHECK(std::abs(wb[i] - wa[12 - i]) <= 1e-10);
  }
}

TEST_CASE("generate warns instead of failing") {
  const QuadratureRule rule = generate(Partition({0, 1, 2, 3, 4, 5}), 1, 5, 1, OmegaPolicy::default_for(1));
  CHECK_FALSE(rule.warnings.empty());
  for (const auto& w : rule.warnings) CHECK_FALSE(w.message.empty());
}

TEST_CASE("generate rejects unsupported requests") {
  CHECK_THROWS_AS(generate(kUniform4, 1, 6, 2, OmegaPolicy{}), Error);
  CHECK_THROWS_AS(generate(kUniform4, 2, 5, 2, OmegaPolicy{}), Error);
}

TEST_CASE("explicit omega value") {
  const QuadratureRule rule = generate(kUniform4, 0, 4, 3, OmegaPolicy{OmegaPolicy::Kind::Value, 0.0});
  CHECK(rule.omega == 0.0);
  CHECK(rule.subintervals[2].nodes.size() == 3);
  CHECK(rule.weight_sum() == doctest::Approx(4.0).epsilon(1e-13));
}
