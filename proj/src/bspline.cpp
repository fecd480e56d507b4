#include <algorithm>
#include <cmath>

#include "splinequad/error.hpp"
#include "splinequad/verify.hpp"

namespace splinequad {

SplineSpace::SplineSpace(Partition partition, int degree, int continuity)
    : partition_(std::move(partition)), degree_(degree), continuity_(continuity) {
  if (degree_ < 0) throw Error(ErrorKind::InvalidArgument, "spline degree must be >= 0");
  if (continuity_ < -1 || continuity_ >= degree_)
    throw Error(ErrorKind::InvalidArgument, "continuity must satisfy -1 <= c < d");
  const auto t = partition_.knots();
  knots_.assign(degree_ + 1, t.front());
  for (std::size_t k = 1; k + 1 < t.size(); ++k) knots_.insert(knots_.end(), degree_ - continuity_, t[k]);
  knots_.insert(knots_.end(), degree_ + 1, t.back());
}

int SplineSpace::find_span(double x) const {
  const int n = dimension();
  if (x >= knots_[n]) return n - 1;
  // largest mu with knots_[mu] <= x, restricted to [degree, n - 1]
  const auto it = std::upper_bound(knots_.begin() + degree_, knots_.begin() + n, x);
  return static_cast<int>(it - knots_.begin()) - 1;
}

SplineSpace::LocalBasis SplineSpace::local_basis(double x, int k) const {
  LocalBasis out;
  if (x < knots_.front() || x > knots_.back()) return out;
  const int p = degree_;
  const int span = find_span(x);
  out.first = span - p;
  if (k > p) {
    out.values.assign(p + 1, 0.0);
    return out;
  }

  // Piegl & Tiller, derivatives of the nonzero basis functions.
  std::vector<std::vector<double>> ndu(p + 1, std::vector<double>(p + 1, 0.0));
  std::vector<double> left(p + 1), right(p + 1);
  ndu[0][0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = x - knots_[span + 1 - j];
    right[j] = knots_[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      ndu[j][r] = right[r + 1] + left[j - r];
      const double temp = ndu[r][j - 1] / ndu[j][r];
      ndu[r][j] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu[j][j] = saved;
  }
  if (k == 0) {
    out.values.resize(p + 1);
    for (int j = 0; j <= p; ++j) out.values[j] = ndu[j][p];
    return out;
  }

  std::vector<std::vector<double>> a(2, std::vector<double>(p + 1, 0.0));
  out.values.assign(p + 1, 0.0);
  for (int r = 0; r <= p; ++r) {
    int s1 = 0, s2 = 1;
    a[0][0] = 1.0;
    double d = 0.0;
    for (int kk = 1; kk <= k; ++kk) {
      d = 0.0;
      const int rk = r - kk;
      const int pk = p - kk;
      if (r >= kk) {
        a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
        d = a[s2][0] * ndu[rk][pk];
      }
      const int j1 = rk >= -1 ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? kk - 1 : p - r;
      for (int j = j1; j <= j2; ++j) {
        a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
        d += a[s2][j] * ndu[rk + j][pk];
      }
      if (r <= pk) {
        a[s2][kk] = -a[s1][kk - 1] / ndu[pk + 1][r];
        d += a[s2][kk] * ndu[r][pk];
      }
      std::swap(s1, s2);
    }
    out.values[r] = d;
  }
  double factor = p;
  for (int kk = 1; kk < k; ++kk) factor *= (p - kk);
  for (double& v : out.values) v *= factor;
  return out;
}

double bspline_eval(const SplineSpace& space, int i, double x, int k) {
  if (i < 0 || i >= space.dimension()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative derivative order");
  if (x < space.partition().front() || x > space.partition().back())
    throw Error(ErrorKind::InvalidArgument, "evaluation point outside the partition");
  const auto local = space.local_basis(x, k);
  const int j = i - local.first;
  if (j < 0 || j >= static_cast<int>(local.values.size())) return 0.0;
  return local.values[j];
}

double bspline_integral(const SplineSpace& space, int i) {
  if (i < 0 || i >= space.dimension()) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  const auto t = space.knot_vector();
  const int d = space.degree();
  return (t[i + d + 1] - t[i]) / (d + 1);
}

}  // namespace splinequad
