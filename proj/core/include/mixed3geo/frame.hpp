#pragma once

#include "mixed3geo/fields.hpp"

namespace mixed3geo {

// Pointwise orthonormal frame for an indefinite metric: columns E_i with
// g(E_i, E_j) = signs[i] * delta_ij.
struct Frame {
  MatD vectors;  // columns
  VecD signs;    // +1 / -1

  int dim() const { return static_cast<int>(signs.size()); }
};

// Indefinite Gram-Schmidt with pivoting: at each step the remaining
// candidate maximizing |g(v,v)| after projection is taken. Candidates are
// the seed vectors (orthonormalized first, in order) followed by the
// coordinate basis. Throws NullPivot below threshold 1e-8.
Frame orthonormal_frame(const MatD& g0, const std::vector<VecD>& seeds = {});
Frame orthonormal_frame(const MetricField& g, const Point& p,
                        const std::vector<VecD>& seeds = {});

// Signature as (num_minus, num_plus) by eigenvalues of the symmetric matrix.
std::pair<int, int> metric_signature(const MatD& g0);

}  // namespace mixed3geo
