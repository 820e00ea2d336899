#include "mixed3geo/exterior.hpp"

#include <cmath>

#include "mixed3geo/errors.hpp"

namespace mixed3geo {

VecD lie_bracket(const VectorField& X, const VectorField& Y, const Point& p) {
  const int d = X.dim();
  auto xj = X.jets(p);
  auto yj = Y.jets(p);
  VecD out = VecD::Zero(d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      out[k] += xj[j].val * yj[k].grad[j] - yj[j].val * xj[k].grad[j];
  return out;
}

TwoFormValue d_oneform(const OneForm& eta, const Point& p) {
  const int d = eta.dim();
  auto ej = eta.jets(p);
  TwoFormValue out(d);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k)
      out.packed(j, k) = 0.5 * (ej[k].grad[j] - ej[j].grad[k]);
  return out;
}

ThreeFormValue d_twoform(const TwoFormField& omega, const Point& p) {
  const int d = omega.dim();
  // gradient of each packed component
  std::vector<VecD> grads(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) grads[i * d + j] = omega.packed(i, j)(p).grad;
  auto dcomp = [&](int m, int i, int j) -> double {
    // d_m Omega_{ij}, any index order
    if (i == j) return 0.0;
    return i < j ? grads[i * d + j][m] : -grads[j * d + i][m];
  };
  ThreeFormValue out(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        out.packed(i, j, k) =
            (dcomp(i, j, k) + dcomp(j, k, i) + dcomp(k, i, j)) / 3.0;
  return out;
}

ThreeFormValue wedge_1_2(const VecD& omega, const TwoFormValue& Omega) {
  const int d = Omega.dim();
  ThreeFormValue out(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        out.packed(i, j, k) = (omega[i] * Omega(j, k) + omega[j] * Omega(k, i) +
                               omega[k] * Omega(i, j)) /
                              3.0;
  return out;
}

VecD nijenhuis(const EndoField& T, const VectorField& X, const VectorField& Y,
               const Point& p) {
  VectorField TX = apply(T, X);
  VectorField TY = apply(T, Y);
  const MatD T0 = T.values(p);
  const VecD b = lie_bracket(X, Y, p);
  return T0 * (T0 * b) + lie_bracket(TX, TY, p) - T0 * lie_bracket(TX, Y, p) -
         T0 * lie_bracket(X, TY, p);
}

TwoFormValue fundamental_2form(const MetricField& g, const EndoField& phi,
                               const Point& p) {
  const MatD a = g.values(p) * phi.values(p);
  const double skew = (a + a.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-8)
    throw NotSkewAdjoint("fundamental_2form: phi is not g-skew-adjoint, residual " +
                         std::to_string(skew));
  return TwoFormValue::from_matrix(a);
}

TwoFormField fundamental_2form_field(const MetricField& g, const EndoField& phi) {
  const int d = g.dim();
  TwoFormField out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      ScalarField a_ij = g.component(i, 0) * phi.component(0, j);
      ScalarField a_ji = g.component(j, 0) * phi.component(0, i);
      for (int l = 1; l < d; ++l) {
        a_ij = a_ij + g.component(i, l) * phi.component(l, j);
        a_ji = a_ji + g.component(j, l) * phi.component(l, i);
      }
      out.packed(i, j) = 0.5 * (a_ij - a_ji);
    }
  }
  return out;
}

double killing_residual(const MetricField& g, const VectorField& xi,
                        const Point& p) {
  const int d = g.dim();
  auto gj = g.jets(p);
  auto xj = xi.jets(p);
  double worst = 0.0;
  for (int j = 0; j < d; ++j) {
    for (int k = j; k < d; ++k) {
      double lie = 0.0;
      for (int i = 0; i < d; ++i) {
        lie += xj[i].val * gj[j * d + k].grad[i];
        lie += gj[i * d + k].val * xj[i].grad[j];
        lie += gj[j * d + i].val * xj[i].grad[k];
      }
      worst = std::max(worst, std::abs(lie));
    }
  }
  return worst;
}

}  // namespace mixed3geo
