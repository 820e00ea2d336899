#include "mixed3geo/chart.hpp"

#include <algorithm>
#include <limits>

#include "mixed3geo/errors.hpp"
#include "mixed3geo/rng.hpp"

namespace mixed3geo {

Chart::Chart(std::string id, std::vector<std::string> coord_names, VecD lo,
             VecD hi, std::vector<Constraint> constraints)
    : id_(std::move(id)),
      coord_names_(std::move(coord_names)),
      lo_(std::move(lo)),
      hi_(std::move(hi)),
      constraints_(std::move(constraints)) {
  if (dim() < 1) throw DimensionError("chart dimension must be >= 1");
  if (static_cast<int>(coord_names_.size()) != dim())
    throw DimensionError("coord_names length does not match dim");
}

bool Chart::contains(const VecD& coords) const { return margin(coords) > 0.0; }

double Chart::margin(const VecD& coords) const {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dim(); ++i) {
    m = std::min(m, coords[i] - lo_[i]);
    m = std::min(m, hi_[i] - coords[i]);
  }
  for (const auto& c : constraints_) m = std::min(m, c.fn(coords));
  return m;
}

ScalarField ScalarField::constant(int dim, double v) {
  return ScalarField(dim, [v, dim](const Point&) { return Jet2::constant(v, dim); });
}

ScalarField ScalarField::coordinate(int dim, int index) {
  return ScalarField(dim, [dim, index](const Point& p) {
    return Jet2::coordinate(p.coords[index], dim, index);
  });
}

ScalarField ScalarField::from_expr(
    int dim, std::function<Jet2(const std::vector<Jet2>&)> f) {
  return ScalarField(dim, [f = std::move(f)](const Point& p) {
    return f(coordinate_jets(p));
  });
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return ScalarField(a.dim(), [a, b](const Point& p) { return a(p) + b(p); });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return ScalarField(a.dim(), [a, b](const Point& p) { return a(p) - b(p); });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return ScalarField(a.dim(), [a, b](const Point& p) { return a(p) * b(p); });
}

ScalarField operator*(double c, const ScalarField& a) {
  return ScalarField(a.dim(), [c, a](const Point& p) { return c * a(p); });
}

ScalarField operator-(const ScalarField& a) { return -1.0 * a; }

std::vector<Jet2> coordinate_jets(const Point& p) {
  const int d = p.dim();
  std::vector<Jet2> jets;
  jets.reserve(d);
  for (int i = 0; i < d; ++i) jets.push_back(Jet2::coordinate(p.coords[i], d, i));
  return jets;
}

std::vector<Point> sample_points(const ChartPtr& chart, int count,
                                 std::uint64_t seed) {
  if (count < 1) throw ConfigError("sample_points: count must be >= 1");
  constexpr double kMargin = 0.05;
  SplitMix64 rng(seed);
  const int d = chart->dim();
  std::vector<Point> out;
  out.reserve(count);
  const long budget = 10000L * count;
  long draws = 0;
  VecD coords(d);
  while (static_cast<int>(out.size()) < count) {
    if (draws >= budget)
      throw SamplingExhausted("sample_points: rejection budget exhausted on chart " +
                              chart->id());
    ++draws;
    for (int i = 0; i < d; ++i)
      coords[i] = rng.uniform(chart->lo()[i], chart->hi()[i]);
    if (chart->margin(coords) > kMargin) out.push_back(Point{chart, coords});
  }
  return out;
}

Jet2 fd_oracle(const ScalarField& f, const Point& p, double h) {
  const int d = p.dim();
  auto shifted = [&](int i, double si, int j, double sj) {
    VecD c = p.coords;
    c[i] += si * h;
    if (j >= 0) c[j] += sj * h;
    if (!p.chart->contains(c))
      throw StencilOutOfDomain("fd_oracle: stencil exits chart domain");
    return f.value(Point{p.chart, c});
  };

  Jet2 out = Jet2::constant(f.value(p), d);
  for (int i = 0; i < d; ++i) {
    const double fp = shifted(i, +1, -1, 0), fm = shifted(i, -1, -1, 0);
    out.grad[i] = (fp - fm) / (2.0 * h);
    out.hess(i, i) = (fp - 2.0 * out.val + fm) / (h * h);
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double v = (shifted(i, +1, j, +1) - shifted(i, +1, j, -1) -
                        shifted(i, -1, j, +1) + shifted(i, -1, j, -1)) /
                       (4.0 * h * h);
      out.hess(i, j) = v;
      out.hess(j, i) = v;
    }
  }
  return out;
}

}  // namespace mixed3geo
