#pragma once

#include "mixed3geo/fields.hpp"

namespace mixed3geo {

// [X,Y]^k = X^j d_j Y^k - Y^j d_j X^k
VecD lie_bracket(const VectorField& X, const VectorField& Y, const Point& p);

// Exterior derivatives use the 1/(p+1)-weighted convention:
//   (d eta)_{jk} = (d_j eta_k - d_k eta_j) / 2
//   (d Omega)_{ijk} = (d_i Omega_{jk} + d_j Omega_{ki} + d_k Omega_{ij}) / 3
// so that d eta(X,Y) = (X eta(Y) - Y eta(X) - eta([X,Y])) / 2.
TwoFormValue d_oneform(const OneForm& eta, const Point& p);
ThreeFormValue d_twoform(const TwoFormField& omega, const Point& p);

// Wedge of a (constant-coefficient) 1-form value with a 2-form value, in the
// same 1/(p+1) convention: (w ^ O)_{ijk} = (w_i O_{jk} + w_j O_{ki} + w_k O_{ij}) / 3.
ThreeFormValue wedge_1_2(const VecD& omega, const TwoFormValue& Omega);

// N_T(X,Y) = T^2[X,Y] + [TX,TY] - T[TX,Y] - T[X,TY]
VecD nijenhuis(const EndoField& T, const VectorField& X, const VectorField& Y,
               const Point& p);

// Phi(X,Y) = g(X, phi Y); throws NotSkewAdjoint if phi is not g-skew at p
// beyond 1e-8.
TwoFormValue fundamental_2form(const MetricField& g, const EndoField& phi,
                               const Point& p);

// Same 2-form as a field of scalar components (antisymmetrized g*phi), for
// exterior differentiation.
TwoFormField fundamental_2form_field(const MetricField& g, const EndoField& phi);

// Max-norm of the Lie derivative (L_xi g) at p; zero iff xi is Killing there.
double killing_residual(const MetricField& g, const VectorField& xi,
                        const Point& p);

}  // namespace mixed3geo
