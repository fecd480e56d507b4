#include "splinequad/rulegen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

#include "splinequad/error.hpp"
#include "splinequad/maps.hpp"

namespace splinequad {

namespace {

// Local-coordinate slack before a node counts as outside [-1, 1].
constexpr double kSpanSlack = 1e-8;

}  // namespace

Partition::Partition(std::vector<double> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw Error(ErrorKind::InvalidArgument, "partition needs at least two knots");
  for (double t : knots_)
    if (!std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "non-finite knot");
  for (std::size_t k = 1; k < knots_.size(); ++k)
    if (!(knots_[k] > knots_[k - 1])) throw Error(ErrorKind::InvalidArgument, "knots must be strictly increasing");
}

double Partition::length(int k) const {
  const auto [lo, hi] = span(k);
  return hi - lo;
}

std::pair<double, double> Partition::span(int k) const {
  if (k < 1 || k > subinterval_count()) throw Error(ErrorKind::InvalidArgument, "subinterval index out of range");
  return {knots_[k - 1], knots_[k]};
}

Partition Partition::reflected() const {
  const double sum = knots_.front() + knots_.back();
  std::vector<double> out(knots_.rbegin(), knots_.rend());
  for (double& t : out) t = sum - t;
  return Partition(std::move(out));
}

std::string to_string(SubintervalKind kind) {
  switch (kind) {
    case SubintervalKind::Q:
      return "Q";
    case SubintervalKind::QReflected:
      return "Q-reflected";
    case SubintervalKind::M:
      return "M";
  }
  return "?";
}

SubintervalKind subinterval_kind_from_string(const std::string& s) {
  if (s == "Q") return SubintervalKind::Q;
  if (s == "Q-reflected") return SubintervalKind::QReflected;
  if (s == "M") return SubintervalKind::M;
  throw Error(ErrorKind::InvalidArgument, "unknown subinterval kind '" + s + "'");
}

OmegaPolicy OmegaPolicy::default_for(int c) { return c == 0 ? OmegaPolicy{Kind::NodeLeft, 0.0} : OmegaPolicy{}; }

OmegaPolicy OmegaPolicy::parse(const std::string& text) {
  if (text == "node-left") return {Kind::NodeLeft, 0.0};
  if (text == "zero") return {Kind::Zero, 0.0};
  if (text.rfind("value=", 0) == 0) {
    const std::string num = text.substr(6);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size() || !std::isfinite(v))
      throw Error(ErrorKind::InvalidArgument, "bad omega value '" + num + "'");
    return {Kind::Value, v};
  }
  throw Error(ErrorKind::InvalidArgument, "omega policy must be node-left, zero or value=<x>");
}

std::string OmegaPolicy::to_string() const {
  switch (kind) {
    case Kind::NodeLeft:
      return "node-left";
    case Kind::Zero:
      return "zero";
    case Kind::Value: {
      std::ostringstream os;
      os.precision(17);
      os << "value=" << value;
      return os.str();
    }
  }
  return "?";
}

int half_degree(int c, int d) {
  if (c < 0) throw Error(ErrorKind::InvalidArgument, "continuity class must be >= 0");
  require_supported_continuity(c);
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "spline degree must be >= 1");
  if ((c == 0 && d % 2 != 0) || (c == 1 && d % 2 == 0)) {
    std::ostringstream os;
    os << "1/2-rule unsupported: continuity " << c << " with degree " << d
       << " needs alternating node counts";
    throw Error(ErrorKind::HalfRuleUnsupported, os.str());
  }
  const int n = c == 0 ? d / 2 : (d - 1) / 2;
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "spline degree too small for this continuity class");
  return n;
}

int default_middle_index(int s) { return (s + 1) / 2; }

std::vector<SubintervalPlan> plan(const Partition& partition, int c, int d, int middle_index,
                                  const OmegaPolicy& omega_policy) {
  const int n = half_degree(c, d);
  const int s = partition.subinterval_count();
  if (middle_index < 1 || middle_index > s)
    throw Error(ErrorKind::InvalidArgument, "middle index must lie in 1.." + std::to_string(s));

  std::vector<SubintervalPlan> plans;
  plans.reserve(s);
  for (int k = 1; k <= s; ++k) {
    SubintervalPlan p;
    p.index = k;
    std::tie(p.lo, p.hi) = partition.span(k);
    if (k < middle_index) {
      p.kind = SubintervalKind::Q;
      p.node_count = n;
    } else if (k > middle_index) {
      p.kind = SubintervalKind::QReflected;
      p.node_count = n;
    } else {
      p.kind = SubintervalKind::M;
      p.node_count = n + 1;
      if (omega_policy.kind == OmegaPolicy::Kind::Value) p.omega = omega_policy.value;
    }
    plans.push_back(std::move(p));
  }
  return plans;
}

std::vector<SubintervalPlan> march(std::vector<SubintervalPlan> plans, const Partition& partition, int c, int n) {
  const int s = partition.subinterval_count();
  if (static_cast<int>(plans.size()) != s) throw Error(ErrorKind::InvalidArgument, "plan does not match partition");
  const auto mid_it = std::find_if(plans.begin(), plans.end(), [](const auto& p) { return p.kind == SubintervalKind::M; });
  if (mid_it == plans.end()) throw Error(ErrorKind::InvalidArgument, "plan has no middle subinterval");
  const int middle = mid_it->index;

  auto step = [&](const DiracVector& v, int from, int to) {
    try {
      return recursion_stretch(c, n, v, partition.length(to) / partition.length(from));
    } catch (const Error& e) {
      std::ostringstream os;
      os << "marching into subinterval " << to << ": " << e.what();
      throw Error(e.kind(), os.str());
    }
  };

  DiracVector left = DiracVector::zero(c);
  for (int k = 1; k <= middle; ++k) {
    if (k > 1) left = step(left, k - 1, k);
    plans[k - 1].dirac_left = left;
  }
  DiracVector right = DiracVector::zero(c);
  for (int k = s; k >= middle; --k) {
    if (k < s) right = step(right, k + 1, k);
    plans[k - 1].dirac_right = right;
  }
  // Q subintervals only use the left vector, reflected ones only the right.
  for (auto& p : plans) {
    if (p.kind == SubintervalKind::Q) p.dirac_right.reset();
    if (p.kind == SubintervalKind::QReflected) p.dirac_left.reset();
  }
  return plans;
}

double omega_for_node_at(int c, int n_mid, const DiracVector& l, const DiracVector& r, double x0) {
  if (n_mid < 2) throw Error(ErrorKind::InvalidArgument, "node placement needs a middle degree >= 2");
  const GegenbauerSeries top = m_poly(c, n_mid, l, r);
  const GegenbauerSeries below = m_poly(c, n_mid - 1, l, r);
  const double den = below(x0);
  if (std::abs(den) < 1e-12 * std::max(below.max_coeff(), 1e-300))
    throw Error(ErrorKind::SingularDenominator, "cannot place a node there: M_{n-1} vanishes at the point");
  return -top(x0) / den;
}

std::pair<std::vector<double>, std::vector<double>> scale_to_interval(std::span<const double> nodes,
                                                                      std::span<const double> weights, double a,
                                                                      double b) {
  if (!(b > a)) throw Error(ErrorKind::InvalidArgument, "interval must have b > a");
  if (nodes.size() != weights.size()) throw Error(ErrorKind::InvalidArgument, "node/weight count mismatch");
  std::vector<double> x(nodes.size());
  std::vector<double> w(weights.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    x[i] = (nodes[i] * (b - a) + (a + b)) / 2;
    w[i] = weights[i] * (b - a) / 2;
  }
  return {x, w};
}

std::string to_string(WarningKind kind) {
  return kind == WarningKind::NodeOutsideSpan ? "node-outside-span" : "nonreal-roots";
}

std::vector<double> QuadratureRule::all_nodes() const {
  std::vector<double> out;
  for (const auto& s : subintervals) out.insert(out.end(), s.nodes.begin(), s.nodes.end());
  return out;
}

std::vector<double> QuadratureRule::all_weights() const {
  std::vector<double> out;
  for (const auto& s : subintervals) out.insert(out.end(), s.weights.begin(), s.weights.end());
  return out;
}

double QuadratureRule::weight_sum() const {
  double acc = 0.0;
  for (const auto& s : subintervals) acc = std::accumulate(s.weights.begin(), s.weights.end(), acc);
  return acc;
}

std::size_t QuadratureRule::node_count() const {
  std::size_t n = 0;
  for (const auto& s : subintervals) n += s.nodes.size();
  return n;
}

bool QuadratureRule::has_warning(WarningKind kind) const {
  return std::any_of(warnings.begin(), warnings.end(), [&](const auto& w) { return w.kind == kind; });
}

QuadratureRule generate(const Partition& partition, int c, int d, int middle_index, const OmegaPolicy& omega_policy) {
  const int n = half_degree(c, d);
  std::vector<SubintervalPlan> plans = march(plan(partition, c, d, middle_index, omega_policy), partition, c, n);

  QuadratureRule rule;
  rule.continuity = c;
  rule.degree = d;
  rule.partition = partition;
  rule.middle_index = middle_index;
  rule.omega_policy = omega_policy;

  for (auto& p : plans) {
    std::vector<double> local_x;
    std::vector<double> local_w;
    std::size_t nonreal = 0;
    switch (p.kind) {
      case SubintervalKind::Q: {
        RootSet rs = real_roots(q_poly(c, n, *p.dirac_left));
        local_w = q_weights(c, n, *p.dirac_left, rs.roots);
        local_x = std::move(rs.roots);
        nonreal = rs.nonreal;
        break;
      }
      case SubintervalKind::QReflected: {
        // Solve as a left-sided problem in the mirrored subinterval, then flip back.
        RootSet rs = real_roots(q_poly(c, n, *p.dirac_right));
        std::vector<double> w = q_weights(c, n, *p.dirac_right, rs.roots);
        for (std::size_t i = rs.roots.size(); i-- > 0;) {
          local_x.push_back(-rs.roots[i]);
          local_w.push_back(w[i]);
        }
        nonreal = rs.nonreal;
        break;
      }
      case SubintervalKind::M: {
        const int n_mid = n + 1;
        if (omega_policy.kind == OmegaPolicy::Kind::NodeLeft)
          p.omega = omega_for_node_at(c, n_mid, *p.dirac_left, *p.dirac_right, -1.0);
        rule.omega = p.omega;
        RootSet rs = real_roots(m_poly_omega(c, n_mid, *p.dirac_left, *p.dirac_right, p.omega));
        local_w = m_weights(c, n_mid, *p.dirac_left, *p.dirac_right, rs.roots, p.omega);
        local_x = std::move(rs.roots);
        nonreal = rs.nonreal;
        break;
      }
    }

    if (nonreal > 0) {
      std::ostringstream os;
      os << "subinterval " << p.index << ": " << nonreal << " of " << p.node_count << " roots are not real";
      rule.warnings.push_back({p.index, WarningKind::NonRealRoots, os.str()});
    }
    for (double x : local_x) {
      if (x < -1.0 - kSpanSlack || x > 1.0 + kSpanSlack) {
        std::ostringstream os;
        os.precision(17);
        os << "subinterval " << p.index << ": node at local coordinate " << x << " lies outside [-1, 1]";
        rule.warnings.push_back({p.index, WarningKind::NodeOutsideSpan, os.str()});
      }
    }

    auto [gx, gw] = scale_to_interval(local_x, local_w, p.lo, p.hi);
    rule.subintervals.push_back(SubintervalRule{p, std::move(gx), std::move(gw)});
  }
  return rule;
}

}  // namespace splinequad
