#include "mixed3geo/fields.hpp"

#include <cmath>

#include "mixed3geo/errors.hpp"

namespace mixed3geo {

VectorField::VectorField(std::vector<ScalarField> components)
    : comps_(std::move(components)) {}

VectorField VectorField::constant(int dim, const VecD& v) {
  std::vector<ScalarField> c;
  c.reserve(dim);
  for (int i = 0; i < dim; ++i) c.push_back(ScalarField::constant(dim, v[i]));
  return VectorField(std::move(c));
}

VecD VectorField::values(const Point& p) const {
  VecD out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = comps_[i].value(p);
  return out;
}

std::vector<Jet2> VectorField::jets(const Point& p) const {
  std::vector<Jet2> out;
  out.reserve(dim());
  for (const auto& c : comps_) out.push_back(c(p));
  return out;
}

OneForm::OneForm(std::vector<ScalarField> components)
    : comps_(std::move(components)) {}

OneForm OneForm::constant(int dim, const VecD& v) {
  std::vector<ScalarField> c;
  c.reserve(dim);
  for (int i = 0; i < dim; ++i) c.push_back(ScalarField::constant(dim, v[i]));
  return OneForm(std::move(c));
}

VecD OneForm::values(const Point& p) const {
  VecD out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = comps_[i].value(p);
  return out;
}

std::vector<Jet2> OneForm::jets(const Point& p) const {
  std::vector<Jet2> out;
  out.reserve(dim());
  for (const auto& c : comps_) out.push_back(c(p));
  return out;
}

EndoField::EndoField(int dim, std::vector<ScalarField> components)
    : dim_(dim), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != dim * dim)
    throw DimensionError("EndoField: wrong number of components");
}

EndoField EndoField::constant(int dim, const MatD& m) {
  std::vector<ScalarField> c;
  c.reserve(dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) c.push_back(ScalarField::constant(dim, m(i, j)));
  return EndoField(dim, std::move(c));
}

MatD EndoField::values(const Point& p) const {
  MatD out(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = component(i, j).value(p);
  return out;
}

std::vector<Jet2> EndoField::jets(const Point& p) const {
  std::vector<Jet2> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c(p));
  return out;
}

VectorField apply(const EndoField& T, const VectorField& X) {
  const int d = T.dim();
  std::vector<ScalarField> comps;
  comps.reserve(d);
  for (int i = 0; i < d; ++i) {
    ScalarField acc = T.component(i, 0) * X.component(0);
    for (int j = 1; j < d; ++j) acc = acc + T.component(i, j) * X.component(j);
    comps.push_back(acc);
  }
  return VectorField(std::move(comps));
}

VectorField scale(const ScalarField& f, const VectorField& X) {
  std::vector<ScalarField> comps;
  comps.reserve(X.dim());
  for (int i = 0; i < X.dim(); ++i) comps.push_back(f * X.component(i));
  return VectorField(std::move(comps));
}

MetricField::MetricField(int dim, std::vector<ScalarField> components)
    : dim_(dim), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != dim * dim)
    throw DimensionError("MetricField: wrong number of components");
}

MetricField MetricField::constant(int dim, const MatD& m) {
  std::vector<ScalarField> c;
  c.reserve(dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) c.push_back(ScalarField::constant(dim, m(i, j)));
  return MetricField(dim, std::move(c));
}

MatD MetricField::values(const Point& p) const {
  MatD out(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = component(i, j).value(p);
  return out;
}

std::vector<Jet2> MetricField::jets(const Point& p) const {
  std::vector<Jet2> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c(p));
  return out;
}

TwoFormValue::TwoFormValue(int dim) : dim_(dim), v_(dim * (dim - 1) / 2, 0.0) {}

int TwoFormValue::idx(int i, int j) const {
  // lexicographic over i<j
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

TwoFormValue TwoFormValue::from_matrix(const MatD& a) {
  TwoFormValue out(static_cast<int>(a.rows()));
  for (int i = 0; i < out.dim_; ++i)
    for (int j = i + 1; j < out.dim_; ++j)
      out.v_[out.idx(i, j)] = 0.5 * (a(i, j) - a(j, i));
  return out;
}

double TwoFormValue::operator()(int i, int j) const {
  if (i == j) return 0.0;
  return i < j ? v_[idx(i, j)] : -v_[idx(j, i)];
}

double& TwoFormValue::packed(int i, int j) { return v_[idx(i, j)]; }

double TwoFormValue::apply(const VecD& X, const VecD& Y) const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      s += v_[idx(i, j)] * (X[i] * Y[j] - X[j] * Y[i]);
  return s;
}

MatD TwoFormValue::full() const {
  MatD out = MatD::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      out(i, j) = v_[idx(i, j)];
      out(j, i) = -v_[idx(i, j)];
    }
  return out;
}

double TwoFormValue::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

TwoFormValue TwoFormValue::operator-(const TwoFormValue& o) const {
  TwoFormValue out(dim_);
  for (size_t i = 0; i < v_.size(); ++i) out.v_[i] = v_[i] - o.v_[i];
  return out;
}

TwoFormValue TwoFormValue::operator*(double c) const {
  TwoFormValue out(dim_);
  for (size_t i = 0; i < v_.size(); ++i) out.v_[i] = c * v_[i];
  return out;
}

ThreeFormValue::ThreeFormValue(int dim)
    : dim_(dim), v_(dim * (dim - 1) * (dim - 2) / 6, 0.0) {}

int ThreeFormValue::idx(int i, int j, int k) const {
  // rank of (i,j,k), i<j<k, in lexicographic order
  int r = 0;
  for (int a = 0; a < i; ++a) r += (dim_ - 1 - a) * (dim_ - 2 - a) / 2;
  for (int b = i + 1; b < j; ++b) r += dim_ - 1 - b;
  return r + (k - j - 1);
}

double ThreeFormValue::operator()(int i, int j, int k) const {
  if (i == j || j == k || i == k) return 0.0;
  int a = i, b = j, c = k;
  double sign = 1.0;
  if (a > b) { std::swap(a, b); sign = -sign; }
  if (b > c) { std::swap(b, c); sign = -sign; }
  if (a > b) { std::swap(a, b); sign = -sign; }
  return sign * v_[idx(a, b, c)];
}

double& ThreeFormValue::packed(int i, int j, int k) { return v_[idx(i, j, k)]; }

double ThreeFormValue::apply(const VecD& X, const VecD& Y, const VecD& Z) const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        const double det = X[i] * (Y[j] * Z[k] - Y[k] * Z[j]) -
                           X[j] * (Y[i] * Z[k] - Y[k] * Z[i]) +
                           X[k] * (Y[i] * Z[j] - Y[j] * Z[i]);
        s += v_[idx(i, j, k)] * det;
      }
  return s;
}

double ThreeFormValue::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

ThreeFormValue ThreeFormValue::operator-(const ThreeFormValue& o) const {
  ThreeFormValue out(dim_);
  for (size_t i = 0; i < v_.size(); ++i) out.v_[i] = v_[i] - o.v_[i];
  return out;
}

TwoFormField::TwoFormField(int dim)
    : dim_(dim), comps_(dim * (dim - 1) / 2) {}

int TwoFormField::idx(int i, int j) const {
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

ScalarField& TwoFormField::packed(int i, int j) { return comps_[idx(i, j)]; }

const ScalarField& TwoFormField::packed(int i, int j) const {
  return comps_[idx(i, j)];
}

TwoFormValue TwoFormField::eval(const Point& p) const {
  TwoFormValue out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) out.packed(i, j) = comps_[idx(i, j)].value(p);
  return out;
}

std::vector<Jet2> TwoFormField::jets(const Point& p) const {
  std::vector<Jet2> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c(p));
  return out;
}

}  // namespace mixed3geo
