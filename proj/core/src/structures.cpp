#include "mixed3geo/structures.hpp"

#include <cmath>

#include "mixed3geo/errors.hpp"

namespace mixed3geo {

void StructureReport::add(const std::string& id, double residual,
                          const VecD& worst, double tol) {
  const bool pass = residual <= tol;
  axioms.push_back(AxiomResult{id, residual, worst, tol, pass});
  overall = overall && pass;
}

const AxiomResult* StructureReport::find(const std::string& id) const {
  for (const auto& a : axioms)
    if (a.id == id) return &a;
  return nullptr;
}

nlohmann::ordered_json StructureReport::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& a : axioms) {
    nlohmann::ordered_json worst = nlohmann::ordered_json::array();
    for (int i = 0; i < a.worst_point.size(); ++i) worst.push_back(a.worst_point[i]);
    arr.push_back({{"id", a.id},
                   {"residual", a.max_residual},
                   {"tol", a.tol},
                   {"pass", a.pass},
                   {"worst_point", worst}});
  }
  return {{"axioms", arr}, {"pass", overall}};
}

namespace {

// Tracks the maximum residual over samples together with the worst point.
struct MaxTracker {
  double value = 0.0;
  VecD worst;

  void update(double r, const Point& p) {
    if (r >= value) {
      value = r;
      worst = p.coords;
    }
  }
};

template <class Derived>
double maxabs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace

StructureReport validate_hyper_parahermitian(const std::array<EndoField, 3>& J,
                                             const MetricField& G,
                                             const std::vector<Point>& samples,
                                             const Tolerances& tol) {
  const int d = G.dim();
  if (d % 4 != 0)
    throw DimensionError("hyper paraHermitian structure needs dim divisible by 4");
  constexpr std::array<double, 3> tau{-1.0, -1.0, +1.0};

  StructureReport rep;
  rep.tolerance = tol.algebraic;
  MaxTracker square, quaternion, skew;
  for (const auto& p : samples) {
    const MatD g0 = G.values(p);
    std::array<MatD, 3> j0{J[0].values(p), J[1].values(p), J[2].values(p)};
    for (int a = 0; a < 3; ++a) {
      square.update(maxabs(j0[a] * j0[a] + tau[a] * MatD::Identity(d, d)), p);
      skew.update(maxabs(j0[a].transpose() * g0 + g0 * j0[a]), p);
      const int b = (a + 1) % 3, c = (a + 2) % 3;
      quaternion.update(maxabs(j0[a] * j0[b] - tau[c] * j0[c]), p);
      quaternion.update(maxabs(j0[b] * j0[a] + tau[c] * j0[c]), p);
    }
  }
  // neutral signature, checked once (constant-rank assumption)
  const auto sig = metric_signature(G.values(samples.front()));
  rep.add("J-square", square.value, square.worst, tol.algebraic);
  rep.add("J-quaternion-relations", quaternion.value, quaternion.worst,
          tol.algebraic);
  rep.add("J-skew-adjoint", skew.value, skew.worst, tol.algebraic);
  rep.add("G-neutral-signature", std::abs(sig.first - sig.second),
          samples.front().coords, 0.5);
  return rep;
}

StructureReport validate_almost_contact_like(const EndoField& phi,
                                             const VectorField& xi,
                                             const OneForm& eta,
                                             const MetricField& g, double r,
                                             const std::vector<Point>& samples,
                                             const Tolerances& tol) {
  const int d = g.dim();
  if (d % 2 == 0)
    throw DimensionError("almost (para)contact structure needs odd dimension");

  StructureReport rep;
  rep.tolerance = tol.algebraic;
  MaxTracker sq, etaxi, compat, phixi, etaphi, skew, duality;
  double eps = 0.0;
  for (const auto& p : samples) {
    const MatD g0 = g.values(p);
    const MatD f0 = phi.values(p);
    const VecD x0 = xi.values(p);
    const VecD e0 = eta.values(p);
    eps = x0.dot(g0 * x0) > 0 ? 1.0 : -1.0;
    // phi^2 = r(-I + eta (x) xi)
    sq.update(maxabs(f0 * f0 - r * (x0 * e0.transpose() - MatD::Identity(d, d))), p);
    etaxi.update(std::abs(e0.dot(x0) - 1.0), p);
    // g(phi X, phi Y) = r (g(X,Y) - eps eta(X) eta(Y))
    compat.update(
        maxabs(f0.transpose() * g0 * f0 - r * (g0 - eps * e0 * e0.transpose())), p);
    phixi.update(maxabs(VecD(f0 * x0)), p);
    etaphi.update(maxabs(VecD(f0.transpose() * e0)), p);
    skew.update(maxabs(f0.transpose() * g0 + g0 * f0), p);
    duality.update(maxabs(VecD(e0 - eps * g0 * x0)), p);
  }
  rep.add("phi-square", sq.value, sq.worst, tol.algebraic);
  rep.add("eta-xi-pairing", etaxi.value, etaxi.worst, tol.algebraic);
  rep.add("metric-compatibility", compat.value, compat.worst, tol.algebraic);
  rep.add("phi-kills-xi", phixi.value, phixi.worst, tol.algebraic);
  rep.add("eta-kills-phi", etaphi.value, etaphi.worst, tol.algebraic);
  rep.add("phi-skew-adjoint", skew.value, skew.worst, tol.algebraic);
  rep.add("eta-duality", duality.value, duality.worst, tol.algebraic);
  return rep;
}

StructureReport validate_almost_paracontact_metric(const EndoField& phi,
                                                   const VectorField& xi,
                                                   const OneForm& eta,
                                                   const MetricField& g,
                                                   const std::vector<Point>& samples,
                                                   const Tolerances& tol) {
  return validate_almost_contact_like(phi, xi, eta, g, -1.0, samples, tol);
}

ContactClassification classify_contact_class(const EndoField& phi,
                                             const VectorField& xi,
                                             const OneForm& eta,
                                             const MetricField& g, double r,
                                             const std::vector<Point>& samples,
                                             const Tolerances& tol) {
  ContactClassification out;
  out.report.tolerance = tol.one_deriv;
  MaxTracker contact, killing, nablaphi;
  for (const auto& p : samples) {
    const int d = g.dim();
    const MatD g0 = g.values(p);
    const VecD x0 = xi.values(p);
    const VecD e0 = eta.values(p);
    const double eps = x0.dot(g0 * x0) > 0 ? 1.0 : -1.0;

    contact.update((d_oneform(eta, p) - fundamental_2form(g, phi, p)).max_abs(), p);
    killing.update(killing_residual(g, xi, p), p);

    // (nabla_{d_i} phi)(d_j) = r (g_ij xi - eps eta_j d_i)
    const Tensor3 gamma = christoffel(g, p);
    const Tensor3 dphi = covariant_deriv_endo_full(gamma, phi, p);
    double worst = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          const double expect =
              r * (g0(i, j) * x0[k] - eps * e0[j] * (k == i ? 1.0 : 0.0));
          worst = std::max(worst, std::abs(dphi(i, k, j) - expect));
        }
    nablaphi.update(worst, p);
  }
  out.report.add("contact-deta-eq-Phi", contact.value, contact.worst, tol.one_deriv);
  out.report.add("xi-killing", killing.value, killing.worst, tol.one_deriv);
  out.report.add("nabla-phi-r-sasakian", nablaphi.value, nablaphi.worst,
                 tol.one_deriv);
  out.paracontact_metric = out.report.axioms[0].pass;
  out.para_k_contact = out.paracontact_metric && out.report.axioms[1].pass;
  out.r_sasakian = out.paracontact_metric && out.report.axioms[2].pass;
  return out;
}

std::array<double, 3> read_epsilons(const MixedThreeStructure& S, const Point& p) {
  const MatD g0 = S.g.values(p);
  std::array<double, 3> eps{};
  for (int a = 0; a < 3; ++a) {
    const VecD x = S.xi[a].values(p);
    eps[a] = x.dot(g0 * x) > 0 ? 1.0 : -1.0;
  }
  const bool pos = eps[0] == 1 && eps[1] == 1 && eps[2] == -1;
  const bool neg = eps[0] == -1 && eps[1] == -1 && eps[2] == 1;
  if (!pos && !neg)
    throw Error("epsilon pattern is neither (+1,+1,-1) nor (-1,-1,+1)");
  return eps;
}

StructureReport validate_mixed_3_structure(const MixedThreeStructure& S,
                                           const std::vector<Point>& samples,
                                           const Tolerances& tol) {
  const int d = S.dim();
  if (d < 7 || (d - 3) % 4 != 0)
    throw DimensionError("mixed metric 3-structure needs dim = 4m+3, got " +
                         std::to_string(d));
  const auto& tau = MixedThreeStructure::tau;

  StructureReport rep;
  rep.tolerance = tol.algebraic;
  MaxTracker phiphi, etaphi, phixi, compat, etapair;
  std::array<double, 3> eps{};
  for (const auto& p : samples) {
    const MatD g0 = S.g.values(p);
    std::array<MatD, 3> f0;
    std::array<VecD, 3> x0, e0;
    for (int a = 0; a < 3; ++a) {
      f0[a] = S.phi[a].values(p);
      x0[a] = S.xi[a].values(p);
      e0[a] = S.eta[a].values(p);
    }
    eps = read_epsilons(S, p);
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3, c = (a + 2) % 3;
      // phi_a phi_b - tau_a eta^b (x) xi_a = tau_c phi_c
      phiphi.update(
          maxabs(f0[a] * f0[b] - tau[a] * x0[a] * e0[b].transpose() - tau[c] * f0[c]),
          p);
      // -phi_b phi_a + tau_b eta^a (x) xi_b = tau_c phi_c
      phiphi.update(
          maxabs(-f0[b] * f0[a] + tau[b] * x0[b] * e0[a].transpose() - tau[c] * f0[c]),
          p);
      // eta^a o phi_b = tau_c eta^c = -eta^b o phi_a
      etaphi.update(maxabs(VecD(f0[b].transpose() * e0[a] - tau[c] * e0[c])), p);
      etaphi.update(maxabs(VecD(f0[a].transpose() * e0[b] + tau[c] * e0[c])), p);
      // phi_a(xi_b) = tau_b xi_c, phi_b(xi_a) = -tau_a xi_c
      phixi.update(maxabs(VecD(f0[a] * x0[b] - tau[b] * x0[c])), p);
      phixi.update(maxabs(VecD(f0[b] * x0[a] + tau[a] * x0[c])), p);
      // g(phi_a X, phi_a Y) = tau_a (g(X,Y) - eps_a eta^a(X) eta^a(Y))
      compat.update(
          maxabs(f0[a].transpose() * g0 * f0[a] -
                 tau[a] * (g0 - eps[a] * e0[a] * e0[a].transpose())),
          p);
      etapair.update(std::abs(e0[a].dot(x0[a]) - 1.0), p);
    }
  }
  rep.add("phi-cyclic-products", phiphi.value, phiphi.worst, tol.algebraic);
  rep.add("eta-cyclic-products", etaphi.value, etaphi.worst, tol.algebraic);
  rep.add("phi-xi-cyclic", phixi.value, phixi.worst, tol.algebraic);
  rep.add("metric-compatibility", compat.value, compat.worst, tol.algebraic);
  rep.add("eta-xi-pairing", etapair.value, etapair.worst, tol.algebraic);

  // sign bookkeeping and signature (constant over the chart)
  const double sigma = eps[0];
  const auto sig = metric_signature(S.g.values(samples.front()));
  const int m = (d - 3) / 4;
  const int want_minus = sigma < 0 ? 2 * m + 2 : 2 * m + 1;
  rep.add("epsilon-pattern",
          std::abs(eps[0] - eps[1]) + std::abs(eps[0] + eps[2]),
          samples.front().coords, tol.algebraic);
  rep.add("metric-signature", std::abs(sig.first - want_minus),
          samples.front().coords, 0.5);
  return rep;
}

StructureReport validate_mixed_3_contact(const MixedThreeStructure& S,
                                         const std::vector<Point>& samples,
                                         const Tolerances& tol) {
  StructureReport rep;
  rep.tolerance = tol.one_deriv;
  for (int a = 0; a < 3; ++a) {
    MaxTracker t;
    for (const auto& p : samples)
      t.update((d_oneform(S.eta[a], p) - fundamental_2form(S.g, S.phi[a], p)).max_abs(),
               p);
    rep.add("deta-eq-Phi-" + std::to_string(a + 1), t.value, t.worst, tol.one_deriv);
  }
  return rep;
}

StructureReport validate_mixed_3_sasakian(const MixedThreeStructure& S,
                                          const std::vector<Point>& samples,
                                          const Tolerances& tol) {
  const int d = S.dim();
  const auto& tau = MixedThreeStructure::tau;
  StructureReport rep;
  rep.tolerance = tol.one_deriv;
  std::array<MaxTracker, 3> track;
  for (const auto& p : samples) {
    const MatD g0 = S.g.values(p);
    const Tensor3 gamma = christoffel(S.g, p);
    const auto eps = read_epsilons(S, p);
    for (int a = 0; a < 3; ++a) {
      const VecD x0 = S.xi[a].values(p);
      const VecD e0 = S.eta[a].values(p);
      const Tensor3 dphi = covariant_deriv_endo_full(gamma, S.phi[a], p);
      double worst = 0.0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k) {
            const double expect =
                tau[a] * (g0(i, j) * x0[k] - eps[a] * e0[j] * (k == i ? 1.0 : 0.0));
            worst = std::max(worst, std::abs(dphi(i, k, j) - expect));
          }
      track[a].update(worst, p);
    }
  }
  for (int a = 0; a < 3; ++a)
    rep.add("nabla-phi-sasakian-" + std::to_string(a + 1), track[a].value,
            track[a].worst, tol.one_deriv);
  return rep;
}

HVSplit hv_split(const MixedThreeStructure& S, const Point& p, const VecD& vec) {
  const MatD g0 = S.g.values(p);
  MatD gram(3, 3);
  Eigen::Matrix<double, Eigen::Dynamic, 3> xis(S.dim(), 3);
  for (int a = 0; a < 3; ++a) xis.col(a) = S.xi[a].values(p);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) gram(a, b) = xis.col(a).dot(g0 * xis.col(b));
  if (std::abs(gram.determinant()) < 1e-10)
    throw DegenerateVertical("hv_split: Gram matrix of (xi_a) is singular");
  VecD rhs(3);
  for (int a = 0; a < 3; ++a) rhs[a] = xis.col(a).dot(g0 * vec);
  const VecD coef = gram.fullPivLu().solve(rhs);
  HVSplit out;
  out.v = xis * coef;
  out.h = vec - out.v;
  return out;
}

}  // namespace mixed3geo
