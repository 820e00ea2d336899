#pragma once

#include "mixed3geo/exterior.hpp"
#include "mixed3geo/frame.hpp"

namespace mixed3geo {

class Tensor3 {
 public:
  explicit Tensor3(int d) : d_(d), v_(static_cast<size_t>(d) * d * d, 0.0) {}
  double& operator()(int i, int j, int k) { return v_[(static_cast<size_t>(i) * d_ + j) * d_ + k]; }
  double operator()(int i, int j, int k) const { return v_[(static_cast<size_t>(i) * d_ + j) * d_ + k]; }
  int dim() const { return d_; }
  double max_abs() const;

 private:
  int d_;
  std::vector<double> v_;
};

class Tensor4 {
 public:
  explicit Tensor4(int d) : d_(d), v_(static_cast<size_t>(d) * d * d * d, 0.0) {}
  double& operator()(int i, int j, int k, int l) {
    return v_[((static_cast<size_t>(i) * d_ + j) * d_ + k) * d_ + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return v_[((static_cast<size_t>(i) * d_ + j) * d_ + k) * d_ + l];
  }
  int dim() const { return d_; }

 private:
  int d_;
  std::vector<double> v_;
};

// Curvature quantities at a point. Conventions:
//   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
//   riemann13(l,k,i,j) = component l of R(d_i, d_j) d_k
//   ricci(j,k) = trace of Z -> R(Z, d_j) d_k
//   R(X,Y,Z,W) = g(R(Z,W)Y, X)      (the (0,4) accessor below)
struct CurvaturePack {
  MatD g0;
  MatD ginv;
  Tensor3 gamma;      // gamma(k,i,j) = Gamma^k_ij
  Tensor4 riemann13;  // see above
  MatD ricci;
  double scalar = 0.0;
};

// Gamma^k_ij = g^{kl} (d_i g_jl + d_j g_il - d_l g_ij) / 2.
// Throws DegenerateMetric if |det g| < 1e-10.
Tensor3 christoffel(const MetricField& g, const Point& p);

CurvaturePack riemann(const MetricField& g, const Point& p);

// R(X,Y,Z,W) = g(R(Z,W)Y, X)
double riemann_0_4(const CurvaturePack& pack, const VecD& X, const VecD& Y,
                   const VecD& Z, const VecD& W);

// R(X,Y)Z as a vector
VecD riemann_apply(const CurvaturePack& pack, const VecD& X, const VecD& Y,
                   const VecD& Z);

// Ricci by the frame trace rho(X,Y) = sum_i eps_i g(R(E_i,X)Y, E_i) - the
// independent second route to pack.ricci.
MatD ricci_frame(const CurvaturePack& pack, const Frame& frame);

double scalar_curvature(const CurvaturePack& pack);

// Sectional curvature of span(X,Y); throws DegeneratePlane when the plane
// Gram determinant is below 1e-8.
double sectional(const CurvaturePack& pack, const VecD& X, const VecD& Y);

// nabla_X Y at p
VecD covariant_deriv_vector(const MetricField& g, const VectorField& X,
                            const VectorField& Y, const Point& p);

// (nabla_X phi)(Y) = nabla_X(phi Y) - phi(nabla_X Y) at p
VecD covariant_deriv_endo(const MetricField& g, const EndoField& phi,
                          const VectorField& X, const VectorField& Y,
                          const Point& p);

// full tensors in coordinate directions, for validator assembly
// dxi(i,k): component k of nabla_{d_i} xi
MatD covariant_deriv_vector_full(const Tensor3& gamma, const VectorField& xi,
                                 const Point& p);
// dphi(i,k,j): component k of (nabla_{d_i} phi)(d_j)
Tensor3 covariant_deriv_endo_full(const Tensor3& gamma, const EndoField& phi,
                                  const Point& p);

// max |nabla_i g_jk| - metric compatibility residual of the assembled
// Christoffels, used as a self-check
double metric_compat_residual(const MetricField& g, const Point& p);

// P(X,Y,Z,W) = d eta(X,Z) g(Y,W) - d eta(X,W) g(Y,Z)
//            - d eta(Y,Z) g(X,W) + d eta(Y,W) g(X,Z)
double p_tensor(const TwoFormValue& deta, const MatD& g0, const VecD& X,
                const VecD& Y, const VecD& Z, const VecD& W);
double p_tensor(const MetricField& g, const OneForm& eta, const Point& p,
                const VecD& X, const VecD& Y, const VecD& Z, const VecD& W);

// |g(R(X,Y)Z, phi W) + g(R(X,Y) phi Z, W) + r * eps * P(X,Y,Z,W)|
double lemma_curvature_phi_residual(const CurvaturePack& pack,
                                    const TwoFormValue& deta, const MatD& phi0,
                                    double r, double eps, const VecD& X,
                                    const VecD& Y, const VecD& Z, const VecD& W);

// Q(X,Y) = rho(X, phi3 Y) - rho(Y, phi3 X) + 2 sigma (4n+1) g(X, phi3 Y),
// with 4n+3 the manifold dimension.
double q_tensor(const CurvaturePack& pack, const MatD& phi3, double sigma,
                const VecD& X, const VecD& Y);

// The frame-sum route to Q: sum_i eps_i g(R(X,Y) e_i, phi3 e_i).
double q_tensor_frame_sum(const CurvaturePack& pack, const MatD& phi3,
                          const Frame& frame, const VecD& X, const VecD& Y);

}  // namespace mixed3geo
