#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mixed3geo/jet.hpp"

namespace mixed3geo {

// Open inequality constraint fn(coords) > 0 on chart coordinates.
struct Constraint {
  std::string name;
  std::function<double(const VecD&)> fn;
};

// A single coordinate chart: box-bounded coordinates plus open domain
// constraints. Immutable after construction.
class Chart {
 public:
  Chart(std::string id, std::vector<std::string> coord_names, VecD lo, VecD hi,
        std::vector<Constraint> constraints = {});

  int dim() const { return static_cast<int>(lo_.size()); }
  const std::string& id() const { return id_; }
  const std::vector<std::string>& coord_names() const { return coord_names_; }
  const VecD& lo() const { return lo_; }
  const VecD& hi() const { return hi_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  // Strictly inside the box and all constraints strictly positive.
  bool contains(const VecD& coords) const;

  // Distance-to-boundary proxy used by rejection sampling: smallest of the
  // box wall gaps and constraint values.
  double margin(const VecD& coords) const;

 private:
  std::string id_;
  std::vector<std::string> coord_names_;
  VecD lo_, hi_;
  std::vector<Constraint> constraints_;
};

using ChartPtr = std::shared_ptr<const Chart>;

struct Point {
  ChartPtr chart;
  VecD coords;

  const std::string& chart_id() const { return chart->id(); }
  int dim() const { return static_cast<int>(coords.size()); }
};

// A scalar component function evaluated as an order-2 jet. Deterministic and
// side-effect free; safe to evaluate concurrently.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(int dim, std::function<Jet2(const Point&)> eval)
      : dim_(dim), eval_(std::move(eval)) {}

  static ScalarField constant(int dim, double v);
  static ScalarField coordinate(int dim, int index);

  // Builds a field from a closed-form expression in the coordinate jets.
  static ScalarField from_expr(int dim,
                               std::function<Jet2(const std::vector<Jet2>&)> f);

  Jet2 operator()(const Point& p) const { return eval_(p); }
  double value(const Point& p) const { return eval_(p).val; }
  int dim() const { return dim_; }
  bool valid() const { return static_cast<bool>(eval_); }

 private:
  int dim_ = 0;
  std::function<Jet2(const Point&)> eval_;
};

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double c, const ScalarField& a);
ScalarField operator-(const ScalarField& a);

// Coordinate jets seeded at p: (coords[i], e_i, 0).
std::vector<Jet2> coordinate_jets(const Point& p);

// Deterministic rejection sampling, margin 0.05 from every boundary.
// Pure function of (chart, count, seed); throws SamplingExhausted after
// 10^4 * count rejected draws.
std::vector<Point> sample_points(const ChartPtr& chart, int count,
                                 std::uint64_t seed);

// Central-difference gradient and Hessian from field values only. The
// independent oracle for every jet-computed derivative in the library.
Jet2 fd_oracle(const ScalarField& f, const Point& p, double h = 1e-3);

}  // namespace mixed3geo
