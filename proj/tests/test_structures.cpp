#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixed3geo/models.hpp"
#include "mixed3geo/rng.hpp"

using namespace mixed3geo;

namespace {

MixedThreeStructure perturbed(const MixedThreeStructure& S, int which) {
  MixedThreeStructure out = S;
  const int d = S.dim();
  ScalarField bump = ScalarField::constant(d, 1e-3);
  switch (which) {
    case 0:  // phi_1 component
      {
        std::vector<ScalarField> comps;
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) comps.push_back(S.phi[0].component(i, j));
        comps[1] = comps[1] + bump;
        out.phi[0] = EndoField(d, comps);
      }
      break;
    case 1:  // xi_2 component
      {
        std::vector<ScalarField> comps;
        for (int i = 0; i < d; ++i) comps.push_back(S.xi[1].component(i));
        comps[0] = comps[0] + bump;
        out.xi[1] = VectorField(comps);
      }
      break;
    case 2:  // eta^3 component
      {
        std::vector<ScalarField> comps;
        for (int i = 0; i < d; ++i) comps.push_back(S.eta[2].component(i));
        comps[0] = comps[0] + bump;
        out.eta[2] = OneForm(comps);
      }
      break;
    default:  // metric component
      {
        std::vector<ScalarField> comps;
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) comps.push_back(S.g.component(i, j));
        comps[0] = comps[0] + bump;
        out.g = MetricField(d, comps);
      }
  }
  return out;
}

}  // namespace

TEST_CASE("flat paraquaternionic block model satisfies all algebra") {
  auto m = flat_paraquaternionic(1);
  auto pts = sample_points(m.chart, 8, 3);
  auto rep = validate_hyper_parahermitian(m.J, m.G, pts);
  CHECK(rep.overall);
  for (const auto& ax : rep.axioms)
    if (ax.id != "G-neutral-signature") CHECK(ax.max_residual <= 1e-12);
}

TEST_CASE("flipping J2 breaks the quaternion relations") {
  auto m = flat_paraquaternionic(0);
  auto pts = sample_points(m.chart, 4, 3);
  std::array<EndoField, 3> J = m.J;
  J[1] = EndoField::constant(4, -m.J0[1]);
  auto rep = validate_hyper_parahermitian(J, m.G, pts);
  CHECK_FALSE(rep.overall);
  CHECK_FALSE(rep.find("J-quaternion-relations")->pass);
  CHECK(rep.find("J-square")->pass);
}

TEST_CASE("dimension guards") {
  auto m5 = flat_paraquaternionic(1);
  auto pts = sample_points(m5.chart, 2, 3);
  CHECK_THROWS_AS(validate_mixed_3_structure(
                      MixedThreeStructure{{m5.J[0], m5.J[1], m5.J[2]},
                                          {VectorField::constant(8, VecD::Zero(8)),
                                           VectorField::constant(8, VecD::Zero(8)),
                                           VectorField::constant(8, VecD::Zero(8))},
                                          {OneForm::constant(8, VecD::Zero(8)),
                                           OneForm::constant(8, VecD::Zero(8)),
                                           OneForm::constant(8, VecD::Zero(8))},
                                          m5.G, -1.0, {-1, -1, 1}},
                      pts),
                  DimensionError);
}

TEST_CASE("hypersurface structure validates as mixed 3-structure and per-a paracontact") {
  auto m = pseudo_sphere(1, +1, 42);
  auto pts = sample_points(m.chart, 16, 7);
  auto rep = validate_mixed_3_structure(m.S, pts);
  CHECK(rep.overall);
  CHECK(rep.find("epsilon-pattern")->pass);

  auto pc = validate_almost_paracontact_metric(m.S.phi[0], m.S.xi[0], m.S.eta[0],
                                               m.S.g, pts);
  CHECK(pc.overall);
  for (const auto& ax : pc.axioms) CHECK(ax.max_residual <= 1e-9);
}

TEST_CASE("scaled eta breaks the pairing axiom") {
  auto m = pseudo_sphere(1, +1, 42);
  auto pts = sample_points(m.chart, 4, 7);
  std::vector<ScalarField> comps;
  for (int i = 0; i < 7; ++i) comps.push_back(2.0 * m.S.eta[0].component(i));
  auto rep = validate_almost_paracontact_metric(m.S.phi[0], m.S.xi[0],
                                                OneForm(comps), m.S.g, pts);
  CHECK_FALSE(rep.find("eta-xi-pairing")->pass);
}

TEST_CASE("contact classification ladder on the a=3 structure") {
  auto m = pseudo_sphere(1, +1, 42);
  auto pts = sample_points(m.chart, 8, 7);
  auto cls = classify_contact_class(m.S.phi[2], m.S.xi[2], m.S.eta[2], m.S.g,
                                    +1.0, pts);
  CHECK(cls.paracontact_metric);
  CHECK(cls.para_k_contact);
  CHECK(cls.r_sasakian);

  // wrong r declares the wrong covariant-derivative sign
  auto bad = classify_contact_class(m.S.phi[2], m.S.xi[2], m.S.eta[2], m.S.g,
                                    -1.0, pts);
  CHECK_FALSE(bad.r_sasakian);
}

TEST_CASE("flat mixed model: algebra passes, every contact validator fails") {
  auto m = flat_mixed(1);
  auto pts = sample_points(m.chart, 8, 11);
  CHECK(validate_mixed_3_structure(m.S, pts).overall);
  auto contact = validate_mixed_3_contact(m.S, pts);
  CHECK_FALSE(contact.overall);
  for (const auto& ax : contact.axioms) CHECK_FALSE(ax.pass);
  CHECK_FALSE(validate_mixed_3_sasakian(m.S, pts).overall);
  auto cls = classify_contact_class(m.S.phi[0], m.S.xi[0], m.S.eta[0], m.S.g,
                                    -1.0, pts);
  CHECK_FALSE(cls.paracontact_metric);
}

TEST_CASE("scaling g breaks 3-contact but not the eta/xi pairing") {
  auto m = flat_mixed(1);
  auto pts = sample_points(m.chart, 4, 11);
  std::vector<ScalarField> comps;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) comps.push_back(4.0 * m.S.g.component(i, j));
  MixedThreeStructure scaled = m.S;
  scaled.g = MetricField(7, comps);
  auto contact = validate_mixed_3_contact(scaled, pts);
  CHECK_FALSE(contact.overall);
}

TEST_CASE("1e-3 perturbation of any tensor fails the axioms") {
  auto m = pseudo_sphere(1, +1, 42);
  auto pts = sample_points(m.chart, 8, 13);
  for (int which = 0; which < 4; ++which) {
    auto rep = validate_mixed_3_structure(perturbed(m.S, which), pts);
    CHECK_FALSE(rep.overall);
  }
}

TEST_CASE("hv split is g-orthogonal and reproducing") {
  auto m = pseudo_sphere(1, +1, 42);
  SplitMix64 rng(17);
  for (const auto& p : sample_points(m.chart, 8, 17)) {
    VecD v(7);
    for (int i = 0; i < 7; ++i) v[i] = rng.uniform(-1.0, 1.0);
    auto split = hv_split(m.S, p, v);
    CHECK((split.h + split.v - v).lpNorm<Eigen::Infinity>() <= 1e-9);
    for (int a = 0; a < 3; ++a) {
      CHECK(std::abs(m.S.eta[a].apply(p, split.h)) <= 1e-9);
      CHECK(std::abs(m.S.g.inner(p, split.h, m.S.xi[a].values(p))) <= 1e-9);
    }
    // xi_2 itself is purely vertical
    auto sx = hv_split(m.S, p, m.S.xi[1].values(p));
    CHECK(sx.h.lpNorm<Eigen::Infinity>() <= 1e-9);
  }
}

TEST_CASE("H-restriction of the phis behaves hyper paraHermitian") {
  auto m = pseudo_sphere(1, +1, 42);
  SplitMix64 rng(19);
  constexpr std::array<double, 3> tau{-1.0, -1.0, +1.0};
  for (const auto& p : sample_points(m.chart, 8, 19)) {
    VecD v(7);
    for (int i = 0; i < 7; ++i) v[i] = rng.uniform(-1.0, 1.0);
    VecD h = hv_split(m.S, p, v).h;
    std::array<MatD, 3> phi0{m.S.phi[0].values(p), m.S.phi[1].values(p),
                             m.S.phi[2].values(p)};
    for (int a = 0; a < 3; ++a) {
      // phi_a^2 = -tau_a I on H
      CHECK((phi0[a] * (phi0[a] * h) + tau[a] * h).lpNorm<Eigen::Infinity>() <=
            1e-9);
      const int b = (a + 1) % 3, c = (a + 2) % 3;
      CHECK((phi0[a] * (phi0[b] * h) - tau[c] * (phi0[c] * h))
                .lpNorm<Eigen::Infinity>() <= 1e-9);
      // skew-adjointness on H
      VecD w(7);
      for (int i = 0; i < 7; ++i) w[i] = rng.uniform(-1.0, 1.0);
      VecD hw = hv_split(m.S, p, w).h;
      CHECK(std::abs(m.S.g.inner(p, phi0[a] * h, hw) +
                     m.S.g.inner(p, h, phi0[a] * hw)) <= 1e-9);
    }
  }
}

TEST_CASE("epsilon pattern reader") {
  auto mp = pseudo_sphere(1, +1, 42);
  auto pts = sample_points(mp.chart, 1, 23);
  auto eps = read_epsilons(mp.S, pts[0]);
  CHECK(eps[0] == -1.0);
  CHECK(eps[1] == -1.0);
  CHECK(eps[2] == +1.0);
  auto mh = pseudo_sphere(1, -1, 42);
  auto hpts = sample_points(mh.chart, 1, 23);
  auto heps = read_epsilons(mh.S, hpts[0]);
  CHECK(heps[0] == +1.0);
  CHECK(heps[2] == -1.0);
}
