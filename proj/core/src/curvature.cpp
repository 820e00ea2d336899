#include "mixed3geo/curvature.hpp"

#include <cmath>

#include "mixed3geo/errors.hpp"

namespace mixed3geo {

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

namespace {

struct MetricJets {
  MatD g;                  // values
  MatD ginv;
  std::vector<MatD> dg;    // dg[k](i,j) = d_k g_ij
  std::vector<MatD> d2g;   // d2g[k*d+l](i,j) = d_k d_l g_ij
};

MetricJets metric_jets(const MetricField& g, const Point& p) {
  const int d = g.dim();
  auto jets = g.jets(p);
  MetricJets out;
  out.g = MatD::Zero(d, d);
  out.dg.assign(d, MatD::Zero(d, d));
  out.d2g.assign(static_cast<size_t>(d) * d, MatD::Zero(d, d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Jet2& jij = jets[i * d + j];
      out.g(i, j) = jij.val;
      for (int k = 0; k < d; ++k) {
        out.dg[k](i, j) = jij.grad[k];
        for (int l = 0; l < d; ++l) out.d2g[k * d + l](i, j) = jij.hess(k, l);
      }
    }
  }
  if (std::abs(out.g.determinant()) < 1e-10)
    throw DegenerateMetric("metric is degenerate at evaluation point");
  out.ginv = out.g.inverse();
  return out;
}

Tensor3 christoffel_from(const MetricJets& mj) {
  const int d = static_cast<int>(mj.g.rows());
  Tensor3 gamma(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        double s = 0.0;
        for (int l = 0; l < d; ++l)
          s += mj.ginv(k, l) *
               (mj.dg[i](j, l) + mj.dg[j](i, l) - mj.dg[l](i, j));
        gamma(k, i, j) = 0.5 * s;
        gamma(k, j, i) = gamma(k, i, j);
      }
  return gamma;
}

}  // namespace

Tensor3 christoffel(const MetricField& g, const Point& p) {
  return christoffel_from(metric_jets(g, p));
}

CurvaturePack riemann(const MetricField& g, const Point& p) {
  const MetricJets mj = metric_jets(g, p);
  const int d = static_cast<int>(mj.g.rows());
  CurvaturePack pack{mj.g, mj.ginv, christoffel_from(mj), Tensor4(d),
                     MatD::Zero(d, d), 0.0};

  // d_m g^{kl} = -(ginv dg[m] ginv)^{kl}
  std::vector<MatD> dginv(d);
  for (int m = 0; m < d; ++m) dginv[m] = -mj.ginv * mj.dg[m] * mj.ginv;

  // dgamma(m,k,i,j) = d_m Gamma^k_ij; built on demand into a Tensor4
  Tensor4 dgamma(d);
  for (int m = 0; m < d; ++m)
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          double s = 0.0;
          for (int l = 0; l < d; ++l) {
            s += dginv[m](k, l) *
                 (mj.dg[i](j, l) + mj.dg[j](i, l) - mj.dg[l](i, j));
            s += mj.ginv(k, l) * (mj.d2g[m * d + i](j, l) +
                                  mj.d2g[m * d + j](i, l) -
                                  mj.d2g[m * d + l](i, j));
          }
          dgamma(m, k, i, j) = 0.5 * s;
          dgamma(m, k, j, i) = dgamma(m, k, i, j);
        }

  // R^l_kij = d_i Gamma^l_jk - d_j Gamma^l_ik
  //         + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik
  for (int l = 0; l < d; ++l)
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double s = dgamma(i, l, j, k) - dgamma(j, l, i, k);
          for (int m = 0; m < d; ++m)
            s += pack.gamma(l, i, m) * pack.gamma(m, j, k) -
                 pack.gamma(l, j, m) * pack.gamma(m, i, k);
          pack.riemann13(l, k, i, j) = s;
        }

  // coordinate-trace Ricci: rho_jk = R^i_kij
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      double s = 0.0;
      for (int i = 0; i < d; ++i) s += pack.riemann13(i, k, i, j);
      pack.ricci(j, k) = s;
    }

  pack.scalar = (pack.ginv * pack.ricci).trace();
  return pack;
}

VecD riemann_apply(const CurvaturePack& pack, const VecD& X, const VecD& Y,
                   const VecD& Z) {
  const int d = static_cast<int>(X.size());
  VecD out = VecD::Zero(d);
  for (int l = 0; l < d; ++l) {
    double s = 0.0;
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          s += pack.riemann13(l, k, i, j) * Z[k] * X[i] * Y[j];
    out[l] = s;
  }
  return out;
}

double riemann_0_4(const CurvaturePack& pack, const VecD& X, const VecD& Y,
                   const VecD& Z, const VecD& W) {
  return X.dot(pack.g0 * riemann_apply(pack, Z, W, Y));
}

MatD ricci_frame(const CurvaturePack& pack, const Frame& frame) {
  const int d = frame.dim();
  MatD out = MatD::Zero(d, d);
  // rho(d_j, d_k) = sum_i eps_i g(R(E_i, d_j) d_k, E_i)
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      double s = 0.0;
      for (int i = 0; i < d; ++i) {
        const VecD E = frame.vectors.col(i);
        const VecD v = riemann_apply(pack, E, VecD::Unit(d, j), VecD::Unit(d, k));
        s += frame.signs[i] * E.dot(pack.g0 * v);
      }
      out(j, k) = s;
    }
  return out;
}

double scalar_curvature(const CurvaturePack& pack) { return pack.scalar; }

double sectional(const CurvaturePack& pack, const VecD& X, const VecD& Y) {
  const double gxx = X.dot(pack.g0 * X);
  const double gyy = Y.dot(pack.g0 * Y);
  const double gxy = X.dot(pack.g0 * Y);
  const double gram = gxx * gyy - gxy * gxy;
  if (std::abs(gram) < 1e-8)
    throw DegeneratePlane("sectional: plane Gram determinant below threshold");
  const VecD v = riemann_apply(pack, X, Y, Y);
  return X.dot(pack.g0 * v) / gram;
}

VecD covariant_deriv_vector(const MetricField& g, const VectorField& X,
                            const VectorField& Y, const Point& p) {
  const int d = g.dim();
  const Tensor3 gamma = christoffel(g, p);
  const VecD x0 = X.values(p);
  auto yj = Y.jets(p);
  VecD out = VecD::Zero(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) {
      double s = yj[k].grad[i];
      for (int m = 0; m < d; ++m) s += gamma(k, i, m) * yj[m].val;
      out[k] += x0[i] * s;
    }
  return out;
}

VecD covariant_deriv_endo(const MetricField& g, const EndoField& phi,
                          const VectorField& X, const VectorField& Y,
                          const Point& p) {
  const int d = g.dim();
  const Tensor3 gamma = christoffel(g, p);
  const Tensor3 dphi = covariant_deriv_endo_full(gamma, phi, p);
  const VecD x0 = X.values(p);
  const VecD y0 = Y.values(p);
  VecD out = VecD::Zero(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out[k] += x0[i] * dphi(i, k, j) * y0[j];
  return out;
}

MatD covariant_deriv_vector_full(const Tensor3& gamma, const VectorField& xi,
                                 const Point& p) {
  const int d = gamma.dim();
  auto xj = xi.jets(p);
  MatD out = MatD::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      double s = xj[k].grad[i];
      for (int m = 0; m < d; ++m) s += gamma(k, i, m) * xj[m].val;
      out(i, k) = s;
    }
  return out;
}

Tensor3 covariant_deriv_endo_full(const Tensor3& gamma, const EndoField& phi,
                                  const Point& p) {
  const int d = gamma.dim();
  auto pj = phi.jets(p);
  Tensor3 out(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j) {
        double s = pj[k * d + j].grad[i];
        for (int m = 0; m < d; ++m)
          s += gamma(k, i, m) * pj[m * d + j].val -
               gamma(m, i, j) * pj[k * d + m].val;
        out(i, k, j) = s;
      }
  return out;
}

double metric_compat_residual(const MetricField& g, const Point& p) {
  const int d = g.dim();
  auto gj = g.jets(p);
  const Tensor3 gamma = christoffel(g, p);
  double worst = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = j; k < d; ++k) {
        double s = gj[j * d + k].grad[i];
        for (int m = 0; m < d; ++m)
          s -= gamma(m, i, j) * gj[m * d + k].val +
               gamma(m, i, k) * gj[j * d + m].val;
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

double p_tensor(const TwoFormValue& deta, const MatD& g0, const VecD& X,
                const VecD& Y, const VecD& Z, const VecD& W) {
  auto g = [&](const VecD& a, const VecD& b) { return a.dot(g0 * b); };
  return deta.apply(X, Z) * g(Y, W) - deta.apply(X, W) * g(Y, Z) -
         deta.apply(Y, Z) * g(X, W) + deta.apply(Y, W) * g(X, Z);
}

double p_tensor(const MetricField& g, const OneForm& eta, const Point& p,
                const VecD& X, const VecD& Y, const VecD& Z, const VecD& W) {
  return p_tensor(d_oneform(eta, p), g.values(p), X, Y, Z, W);
}

double lemma_curvature_phi_residual(const CurvaturePack& pack,
                                    const TwoFormValue& deta, const MatD& phi0,
                                    double r, double eps, const VecD& X,
                                    const VecD& Y, const VecD& Z, const VecD& W) {
  auto g = [&](const VecD& a, const VecD& b) { return a.dot(pack.g0 * b); };
  const double lhs = g(riemann_apply(pack, X, Y, Z), phi0 * W) +
                     g(riemann_apply(pack, X, Y, phi0 * Z), W);
  return std::abs(lhs + r * eps * p_tensor(deta, pack.g0, X, Y, Z, W));
}

double q_tensor(const CurvaturePack& pack, const MatD& phi3, double sigma,
                const VecD& X, const VecD& Y) {
  const int d = static_cast<int>(X.size());
  const int n = (d - 3) / 4;
  auto rho = [&](const VecD& a, const VecD& b) { return a.dot(pack.ricci * b); };
  return rho(X, phi3 * Y) - rho(Y, phi3 * X) +
         2.0 * sigma * (4 * n + 1) * X.dot(pack.g0 * (phi3 * Y));
}

double q_tensor_frame_sum(const CurvaturePack& pack, const MatD& phi3,
                          const Frame& frame, const VecD& X, const VecD& Y) {
  double s = 0.0;
  for (int i = 0; i < frame.dim(); ++i) {
    const VecD e = frame.vectors.col(i);
    s += frame.signs[i] * riemann_apply(pack, X, Y, e).dot(pack.g0 * (phi3 * e));
  }
  return s;
}

}  // namespace mixed3geo
