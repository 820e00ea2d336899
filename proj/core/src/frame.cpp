#include "mixed3geo/frame.hpp"

#include <cmath>

#include "mixed3geo/errors.hpp"

namespace mixed3geo {

namespace {

constexpr double kPivotTol = 1e-8;

// Projects v against the first `built` frame columns, normalizes, appends.
// Returns false if the projected vector is too close to null.
bool push_vector(const MatD& g0, Frame& f, int& built, VecD v) {
  for (int k = 0; k < built; ++k) {
    const VecD e = f.vectors.col(k);
    v -= f.signs[k] * (e.dot(g0 * v)) * e;
  }
  const double q = v.dot(g0 * v);
  if (std::abs(q) < kPivotTol) return false;
  f.signs[built] = q > 0 ? 1.0 : -1.0;
  f.vectors.col(built) = v / std::sqrt(std::abs(q));
  ++built;
  return true;
}

}  // namespace

Frame orthonormal_frame(const MatD& g0, const std::vector<VecD>& seeds) {
  const int d = static_cast<int>(g0.rows());
  if (std::abs(g0.determinant()) < 1e-10)
    throw DegenerateMetric("orthonormal_frame: |det g| below 1e-10");

  Frame out;
  out.vectors = MatD::Zero(d, d);
  out.signs = VecD::Zero(d);
  int built = 0;

  // seed vectors are consumed in order, so the frame stays adapted to them
  for (const VecD& s : seeds)
    if (!push_vector(g0, out, built, s))
      throw NullPivot("orthonormal_frame: seed vector projects to a null vector");

  // pivoted fill: take the coordinate direction maximizing |g(v,v)| after
  // projection, to keep clear of null pivots in the indefinite case
  while (built < d) {
    int best = -1;
    double best_norm = -1.0;
    for (int i = 0; i < d; ++i) {
      VecD v = VecD::Unit(d, i);
      for (int k = 0; k < built; ++k) {
        const VecD e = out.vectors.col(k);
        v -= out.signs[k] * (e.dot(g0 * v)) * e;
      }
      const double n = std::abs(v.dot(g0 * v));
      if (n > best_norm) {
        best_norm = n;
        best = i;
      }
    }
    if (best_norm < kPivotTol || !push_vector(g0, out, built, VecD::Unit(d, best)))
      throw NullPivot("orthonormal_frame: no pivot with |g(v,v)| above threshold");
  }
  return out;
}

Frame orthonormal_frame(const MetricField& g, const Point& p,
                        const std::vector<VecD>& seeds) {
  return orthonormal_frame(g.values(p), seeds);
}

std::pair<int, int> metric_signature(const MatD& g0) {
  Eigen::SelfAdjointEigenSolver<MatD> es(g0);
  int minus = 0, plus = 0;
  for (int i = 0; i < g0.rows(); ++i) {
    if (es.eigenvalues()[i] < 0)
      ++minus;
    else
      ++plus;
  }
  return {minus, plus};
}

}  // namespace mixed3geo
