#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "mixed3geo/errors.hpp"

namespace mixed3geo {

using VecD = Eigen::VectorXd;
using MatD = Eigen::MatrixXd;

// Order-2 jet: value, gradient and Hessian of a scalar with respect to the
// chart coordinates. The Hessian stays exactly symmetric because every rule
// below only ever adds symmetric terms.
struct Jet2 {
  double val = 0.0;
  VecD grad;
  MatD hess;

  Jet2() = default;
  Jet2(double v, VecD g, MatD h) : val(v), grad(std::move(g)), hess(std::move(h)) {}

  int dim() const { return static_cast<int>(grad.size()); }

  static Jet2 constant(double v, int dim) {
    return Jet2{v, VecD::Zero(dim), MatD::Zero(dim, dim)};
  }

  // Seed for the i-th chart coordinate at value v.
  static Jet2 coordinate(double v, int dim, int index) {
    Jet2 j = constant(v, dim);
    j.grad[index] = 1.0;
    return j;
  }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return Jet2{a.val + b.val, a.grad + b.grad, a.hess + b.hess};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return Jet2{a.val - b.val, a.grad - b.grad, a.hess - b.hess};
}

inline Jet2 operator-(const Jet2& a) { return Jet2{-a.val, -a.grad, -a.hess}; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  MatD outer = a.grad * b.grad.transpose();
  return Jet2{a.val * b.val, a.val * b.grad + b.val * a.grad,
              a.val * b.hess + b.val * a.hess + outer + outer.transpose()};
}

inline Jet2 operator*(double c, const Jet2& a) {
  return Jet2{c * a.val, c * a.grad, c * a.hess};
}

inline Jet2 operator*(const Jet2& a, double c) { return c * a; }

inline Jet2 operator+(const Jet2& a, double c) {
  return Jet2{a.val + c, a.grad, a.hess};
}

inline Jet2 operator+(double c, const Jet2& a) { return a + c; }

inline Jet2 operator-(const Jet2& a, double c) { return a + (-c); }

inline Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }

inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (b.val == 0.0) throw DegenerateValue("jet division by zero value");
  const double q = a.val / b.val;
  VecD qg = (a.grad - q * b.grad) / b.val;
  MatD cross = qg * b.grad.transpose();
  MatD qh = (a.hess - q * b.hess - cross - cross.transpose()) / b.val;
  return Jet2{q, std::move(qg), std::move(qh)};
}

inline Jet2 operator/(const Jet2& a, double c) { return (1.0 / c) * a; }

inline Jet2 sqrt(const Jet2& a) {
  if (!(a.val > 0.0)) throw DegenerateValue("jet sqrt of nonpositive value");
  const double s = std::sqrt(a.val);
  VecD sg = a.grad / (2.0 * s);
  MatD sh = (0.5 * a.hess - sg * sg.transpose()) / s;
  return Jet2{s, std::move(sg), std::move(sh)};
}

enum class JetOp { add, sub, mul, div };

inline Jet2 jet_arith(const Jet2& a, const Jet2& b, JetOp op) {
  switch (op) {
    case JetOp::add: return a + b;
    case JetOp::sub: return a - b;
    case JetOp::mul: return a * b;
    case JetOp::div: return a / b;
  }
  throw Error("unknown jet op");
}

}  // namespace mixed3geo
