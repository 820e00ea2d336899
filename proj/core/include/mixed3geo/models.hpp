#pragma once

#include <cstdint>
#include <memory>
#include <variant>

#include "mixed3geo/structures.hpp"

namespace mixed3geo {

// Flat paraquaternionic ambient space R^{4(m+1)} with neutral metric and the
// three constant block structures J_a.
struct AmbientModel {
  int m = 0;
  ChartPtr chart;
  MatD G0;
  std::array<MatD, 3> J0;
  MetricField G;
  std::array<EndoField, 3> J;
};

// Level set {G(x,x) = s} realized as a local graph chart, carrying the
// induced mixed metric 3-structure of sign sigma = -s.
struct HypersurfaceModel {
  int m = 1;
  int s = +1;
  double sigma = -1.0;
  ChartPtr chart;             // dim 4m+3
  MixedThreeStructure S;

  // ambient data
  MatD G0;
  std::array<MatD, 3> J0;
  int solve_index = 0;        // ambient coordinate solved by the graph
  double solve_sign = 1.0;
  std::vector<int> amb;       // chart index -> ambient index
  VecD seed_ambient;

  VecD embed(const Point& p) const;
  std::vector<Jet2> embed_jets(const Point& p) const;  // ambient components
};

// M x R with J_a(X, f d/dt) = (phi_a X - tau_a f xi_a, eta^a(X) d/dt) and
// G = g - sigma dt^2; t is the last chart coordinate.
struct ProductModel {
  std::shared_ptr<const HypersurfaceModel> base;
  ChartPtr chart;             // dim 4m+4
  double sigma = -1.0;
  MetricField G;
  std::array<EndoField, 3> J;
  std::array<TwoFormField, 3> Omega;
};

// Flat R^{4m+3} with constant mixed metric 3-structure tensors: the algebra
// holds but d eta^a = 0, so contact-type validators must fail. Negative
// control.
struct FlatMixedModel {
  int m = 1;
  ChartPtr chart;
  MixedThreeStructure S;
};

AmbientModel flat_paraquaternionic(int m);

HypersurfaceModel pseudo_sphere(int m, int s, std::uint64_t seed);
// Explicit seed point variant; throws BadSeedPoint if no ambient coordinate
// with matching metric sign has |x_i| >= 0.1, or if G(x,x) != s.
HypersurfaceModel pseudo_sphere_at(int m, int s, const VecD& ambient_point);

ProductModel product_with_line(std::shared_ptr<const HypersurfaceModel> base);

FlatMixedModel flat_mixed(int m);

using Model = std::variant<AmbientModel, HypersurfaceModel, ProductModel, FlatMixedModel>;

// Registry keys: "flat-pq:m", "pseudo-sphere:m:+1", "pseudo-sphere:m:-1",
// "product:pseudo-sphere:m:s", "flat-mixed:m". Hypersurface chart placement
// is keyed by `seed`. Throws ConfigError on unknown keys.
Model make_model(const std::string& key, std::uint64_t seed = 42);

// sorted (key, description) pairs for the shipped desk-scale models
std::vector<std::pair<std::string, std::string>> model_registry();

const Chart& model_chart(const Model& model);
ChartPtr model_chart_ptr(const Model& model);

}  // namespace mixed3geo
