#pragma once

#include <array>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mixed3geo/curvature.hpp"

namespace mixed3geo {

// The bundle (phi_a, xi_a, eta^a, g) with its sign bookkeeping:
// tau = (-1,-1,+1) fixed; epsilon_a = g(xi_a, xi_a); sigma = epsilon_1.
struct MixedThreeStructure {
  std::array<EndoField, 3> phi;
  std::array<VectorField, 3> xi;
  std::array<OneForm, 3> eta;
  MetricField g;
  double sigma = 0.0;
  std::array<double, 3> epsilon{};
  static constexpr std::array<double, 3> tau{-1.0, -1.0, +1.0};
  // r_a assignment for the [r]-Sasakian constituents, fixed to match tau
  static constexpr std::array<double, 3> r{-1.0, -1.0, +1.0};

  int dim() const { return g.dim(); }
};

struct AxiomResult {
  std::string id;
  double max_residual = 0.0;
  VecD worst_point;
  double tol = 0.0;
  bool pass = false;
};

// Per-axiom residual report. Validators never short-circuit: every axiom is
// evaluated even after a failure, so a broken identity is localized.
struct StructureReport {
  std::vector<AxiomResult> axioms;
  bool overall = true;
  double tolerance = 0.0;

  void add(const std::string& id, double residual, const VecD& worst, double tol);
  const AxiomResult* find(const std::string& id) const;
  nlohmann::ordered_json to_json() const;
};

// Default tolerances by derivative order of the axiom being checked.
struct Tolerances {
  double algebraic = 1e-8;
  double one_deriv = 1e-7;
  double two_deriv = 1e-6;
};

// Def of almost hyper paraHermitian structure: (J_a)^2 = -tau_a I,
// J_a J_b = tau_c J_c = -J_b J_a (cyclic), and g-skewness of each J_a.
// Requires dim divisible by 4 and neutral signature.
StructureReport validate_hyper_parahermitian(const std::array<EndoField, 3>& J,
                                             const MetricField& G,
                                             const std::vector<Point>& samples,
                                             const Tolerances& tol = {});

// Almost paracontact metric axioms: phi^2 = I - eta (x) xi, eta(xi) = 1,
// g(phi X, phi Y) = -g(X,Y) + eps eta(X) eta(Y), plus the derived identities
// phi(xi) = 0, eta o phi = 0, skewness, and eta = eps g(., xi).
StructureReport validate_almost_paracontact_metric(const EndoField& phi,
                                                   const VectorField& xi,
                                                   const OneForm& eta,
                                                   const MetricField& g,
                                                   const std::vector<Point>& samples,
                                                   const Tolerances& tol = {});

// Unified [r] variant: phi^2 = r(-I + eta (x) xi) and
// g(phi X, phi Y) = r(g(X,Y) - eps eta(X) eta(Y)); r=-1 is the paracontact
// case above, r=+1 the indefinite almost contact case.
StructureReport validate_almost_contact_like(const EndoField& phi,
                                             const VectorField& xi,
                                             const OneForm& eta,
                                             const MetricField& g, double r,
                                             const std::vector<Point>& samples,
                                             const Tolerances& tol = {});

struct ContactClassification {
  StructureReport report;
  bool paracontact_metric = false;  // d eta = Phi
  bool para_k_contact = false;      // + xi Killing
  bool r_sasakian = false;          // + (nabla phi) identity for declared r
};

ContactClassification classify_contact_class(const EndoField& phi,
                                             const VectorField& xi,
                                             const OneForm& eta,
                                             const MetricField& g, double r,
                                             const std::vector<Point>& samples,
                                             const Tolerances& tol = {});

// All cyclic-permutation identities (both orders), metric compatibility per
// a, the epsilon bookkeeping eps_1 = eps_2 = -eps_3, and the signature
// claim. Throws DimensionError unless dim = 4m+3.
StructureReport validate_mixed_3_structure(const MixedThreeStructure& S,
                                           const std::vector<Point>& samples,
                                           const Tolerances& tol = {});

// d eta^a = Phi_a for each a.
StructureReport validate_mixed_3_contact(const MixedThreeStructure& S,
                                         const std::vector<Point>& samples,
                                         const Tolerances& tol = {});

// (nabla_X phi_a)(Y) = tau_a (g(X,Y) xi_a - eps_a eta^a(Y) X) for each a.
StructureReport validate_mixed_3_sasakian(const MixedThreeStructure& S,
                                          const std::vector<Point>& samples,
                                          const Tolerances& tol = {});

// g-orthogonal decomposition of v into H = cap ker(eta^a) and
// V = span(xi_1, xi_2, xi_3), by solving the 3x3 Gram system.
struct HVSplit {
  VecD h;
  VecD v;
};
HVSplit hv_split(const MixedThreeStructure& S, const Point& p, const VecD& vec);

// epsilon_a read off from g(xi_a, xi_a); throws if the pattern is not
// (+1,+1,-1) or (-1,-1,+1) within tolerance.
std::array<double, 3> read_epsilons(const MixedThreeStructure& S, const Point& p);

}  // namespace mixed3geo
