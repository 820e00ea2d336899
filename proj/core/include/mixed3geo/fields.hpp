#pragma once

#include <array>
#include <vector>

#include "mixed3geo/chart.hpp"

namespace mixed3geo {

// Contravariant vector field in chart components.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<ScalarField> components);
  static VectorField constant(int dim, const VecD& v);

  int dim() const { return static_cast<int>(comps_.size()); }
  const ScalarField& component(int i) const { return comps_[i]; }

  VecD values(const Point& p) const;
  std::vector<Jet2> jets(const Point& p) const;

 private:
  std::vector<ScalarField> comps_;
};

// Covariant 1-form in chart components.
class OneForm {
 public:
  OneForm() = default;
  explicit OneForm(std::vector<ScalarField> components);
  static OneForm constant(int dim, const VecD& v);

  int dim() const { return static_cast<int>(comps_.size()); }
  const ScalarField& component(int i) const { return comps_[i]; }

  VecD values(const Point& p) const;
  std::vector<Jet2> jets(const Point& p) const;

  double apply(const Point& p, const VecD& X) const { return values(p).dot(X); }

 private:
  std::vector<ScalarField> comps_;
};

// Mixed (1,1) tensor field; component(i,j) is row i (output), column j (input).
class EndoField {
 public:
  EndoField() = default;
  EndoField(int dim, std::vector<ScalarField> components);  // row-major dim*dim
  static EndoField constant(int dim, const MatD& m);

  int dim() const { return dim_; }
  const ScalarField& component(int i, int j) const { return comps_[i * dim_ + j]; }

  MatD values(const Point& p) const;
  std::vector<Jet2> jets(const Point& p) const;  // row-major

 private:
  int dim_ = 0;
  std::vector<ScalarField> comps_;
};

// Applies an endomorphism field to a vector field, yielding a vector field
// whose components still carry exact jets.
VectorField apply(const EndoField& T, const VectorField& X);

// Scales a vector field by a scalar field.
VectorField scale(const ScalarField& f, const VectorField& X);

// Symmetric (0,2) metric tensor field.
class MetricField {
 public:
  MetricField() = default;
  MetricField(int dim, std::vector<ScalarField> components);  // row-major, symmetric
  static MetricField constant(int dim, const MatD& m);

  int dim() const { return dim_; }
  const ScalarField& component(int i, int j) const { return comps_[i * dim_ + j]; }

  MatD values(const Point& p) const;
  std::vector<Jet2> jets(const Point& p) const;  // row-major

  double inner(const Point& p, const VecD& X, const VecD& Y) const {
    return X.dot(values(p) * Y);
  }

 private:
  int dim_ = 0;
  std::vector<ScalarField> comps_;
};

// Antisymmetric 2-form value at a point, stored on strictly increasing index
// pairs; the full matrix is derived, never stored.
class TwoFormValue {
 public:
  explicit TwoFormValue(int dim);
  static TwoFormValue from_matrix(const MatD& a);  // antisymmetrizes

  int dim() const { return dim_; }
  double operator()(int i, int j) const;
  double& packed(int i, int j);  // requires i < j
  double apply(const VecD& X, const VecD& Y) const;
  MatD full() const;
  double max_abs() const;

  TwoFormValue operator-(const TwoFormValue& o) const;
  TwoFormValue operator*(double c) const;

 private:
  int dim_;
  std::vector<double> v_;  // (i,j), i<j, lexicographic
  int idx(int i, int j) const;
};

// Fully antisymmetric 3-form value, stored on strictly increasing triples.
class ThreeFormValue {
 public:
  explicit ThreeFormValue(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j, int k) const;  // any index order
  double& packed(int i, int j, int k);           // requires i < j < k
  double apply(const VecD& X, const VecD& Y, const VecD& Z) const;
  double max_abs() const;

  ThreeFormValue operator-(const ThreeFormValue& o) const;

 private:
  int dim_;
  std::vector<double> v_;
  int idx(int i, int j, int k) const;
};

// 2-form with scalar-field components on increasing pairs, so its exterior
// derivative can be taken through the jets.
class TwoFormField {
 public:
  TwoFormField() = default;
  explicit TwoFormField(int dim);

  int dim() const { return dim_; }
  ScalarField& packed(int i, int j);  // requires i < j
  const ScalarField& packed(int i, int j) const;

  TwoFormValue eval(const Point& p) const;
  std::vector<Jet2> jets(const Point& p) const;  // packed order

 private:
  int dim_ = 0;
  std::vector<ScalarField> comps_;
  int idx(int i, int j) const;
};

}  // namespace mixed3geo
