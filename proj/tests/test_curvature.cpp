#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixed3geo/curvature.hpp"
#include "mixed3geo/models.hpp"
#include "mixed3geo/rng.hpp"

using namespace mixed3geo;

namespace {

// Round 2-sphere as the graph chart z = sqrt(1 - u^2 - v^2).
struct Sphere2 {
  ChartPtr chart;
  MetricField g;

  Sphere2() {
    Constraint rad{"radicand",
                   [](const VecD& u) { return 1.0 - u.squaredNorm(); }};
    chart = std::make_shared<Chart>("s2", std::vector<std::string>{"u", "v"},
                                    VecD::Constant(2, -0.7), VecD::Constant(2, 0.7),
                                    std::vector<Constraint>{rad});
    std::vector<ScalarField> comps(4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        comps[a * 2 + b] = ScalarField::from_expr(2, [a, b](const std::vector<Jet2>& u) {
          // g_ab = delta_ab + u_a u_b / (1 - |u|^2)
          Jet2 denom = 1.0 - (u[0] * u[0] + u[1] * u[1]);
          Jet2 out = (u[a] * u[b]) / denom;
          if (a == b) out = out + 1.0;
          return out;
        });
    g = MetricField(2, comps);
  }
};

VecD rand_vec(SplitMix64& rng, int d) {
  VecD v(d);
  for (int i = 0; i < d; ++i) v[i] = rng.uniform(-1.0, 1.0);
  return v;
}

}  // namespace

TEST_CASE("constant metric has zero Christoffels and curvature") {
  auto chart = std::make_shared<Chart>("flat", std::vector<std::string>{"x", "y"},
                                       VecD::Constant(2, -1.0), VecD::Constant(2, 1.0));
  MatD g0(2, 2);
  g0 << 2, 0.5, 0.5, -1;
  MetricField g = MetricField::constant(2, g0);
  Point p{chart, (VecD(2) << 0.3, -0.4).finished()};
  CHECK(christoffel(g, p).max_abs() == 0.0);
  auto pack = riemann(g, p);
  CHECK(pack.ricci.norm() == 0.0);
  CHECK(pack.scalar == 0.0);
}

TEST_CASE("degenerate metric is rejected") {
  auto chart = std::make_shared<Chart>("dg", std::vector<std::string>{"x"},
                                       VecD::Constant(1, -1.0), VecD::Constant(1, 1.0));
  MetricField g = MetricField::constant(1, MatD::Zero(1, 1));
  Point p{chart, VecD::Zero(1)};
  CHECK_THROWS_AS(christoffel(g, p), DegenerateMetric);
}

TEST_CASE("round 2-sphere: Christoffels match the closed formula") {
  Sphere2 s;
  Point p{s.chart, (VecD(2) << 0.1, 0.2).finished()};
  Tensor3 gamma = christoffel(s.g, p);
  // closed form for the graph chart: Gamma^k_ij = u_k g_ij(u) evaluated with
  // the round metric, equivalently Gamma^k_ij = x_k (delta_ij + u_i u_j / w^2)
  const double w2 = 1.0 - p.coords.squaredNorm();
  MatD g0 = s.g.values(p);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(gamma(k, i, j) == doctest::Approx(p.coords[k] * g0(i, j)).epsilon(1e-10));
  (void)w2;
}

TEST_CASE("round 2-sphere: Gauss curvature 1, Ricci = g, scalar 2") {
  Sphere2 s;
  SplitMix64 rng(21);
  for (const auto& p : sample_points(s.chart, 16, 23)) {
    auto pack = riemann(s.g, p);
    CHECK((pack.ricci - pack.g0).lpNorm<Eigen::Infinity>() <= 1e-9);
    CHECK(pack.scalar == doctest::Approx(2.0).epsilon(1e-9));
    VecD X = rand_vec(rng, 2), Y = rand_vec(rng, 2);
    if (std::abs(X[0] * Y[1] - X[1] * Y[0]) < 0.1) continue;
    CHECK(sectional(pack, X, Y) == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("Christoffels agree with the finite-difference oracle") {
  Sphere2 s;
  for (const auto& p : sample_points(s.chart, 8, 29)) {
    const int d = 2;
    // metric derivative via fd_oracle on each component
    std::vector<MatD> dg(d, MatD::Zero(d, d));
    MatD g0 = s.g.values(p);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Jet2 o = fd_oracle(s.g.component(i, j), p);
        for (int k = 0; k < d; ++k) dg[k](i, j) = o.grad[k];
      }
    MatD ginv = g0.inverse();
    Tensor3 gamma = christoffel(s.g, p);
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double v = 0;
          for (int l = 0; l < d; ++l)
            v += 0.5 * ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
          CHECK(std::abs(gamma(k, i, j) - v) <= 1e-4 * (1 + std::abs(v)));
        }
  }
}

TEST_CASE("curvature pack symmetries and Bianchi identity") {
  Sphere2 s;
  SplitMix64 rng(31);
  for (const auto& p : sample_points(s.chart, 8, 37)) {
    auto pack = riemann(s.g, p);
    const int d = 2;
    for (int l = 0; l < d; ++l)
      for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            CHECK(pack.riemann13(l, k, i, j) ==
                  doctest::Approx(-pack.riemann13(l, k, j, i)).epsilon(1e-12));
    VecD X = rand_vec(rng, d), Y = rand_vec(rng, d), Z = rand_vec(rng, d);
    VecD bianchi = riemann_apply(pack, X, Y, Z) + riemann_apply(pack, Y, Z, X) +
                   riemann_apply(pack, Z, X, Y);
    CHECK(bianchi.lpNorm<Eigen::Infinity>() <= 1e-9);
    // (0,4) accessor pair antisymmetry in the last two slots
    VecD W = rand_vec(rng, d);
    CHECK(std::abs(riemann_0_4(pack, X, Y, Z, W) + riemann_0_4(pack, X, Y, W, Z)) <=
          1e-9);
  }
}

TEST_CASE("sectional curvature is basis invariant and guards degenerate planes") {
  auto m = pseudo_sphere(1, +1, 42);
  SplitMix64 rng(41);
  auto pts = sample_points(m.chart, 4, 43);
  for (const auto& p : pts) {
    auto pack = riemann(m.S.g, p);
    VecD X = rand_vec(rng, 7), Y = rand_vec(rng, 7);
    double k1;
    try {
      k1 = sectional(pack, X, Y);
    } catch (const DegeneratePlane&) {
      continue;
    }
    // random change of basis in the plane
    VecD X2 = 1.3 * X - 0.7 * Y, Y2 = 0.2 * X + 2.1 * Y;
    CHECK(sectional(pack, X2, Y2) == doctest::Approx(k1).epsilon(1e-8));
    // degenerate: the span of a single vector
    CHECK_THROWS_AS(sectional(pack, X, 2.0 * X), DegeneratePlane);
  }
}

TEST_CASE("metric compatibility of the assembled connection") {
  auto m = pseudo_sphere(1, -1, 42);
  for (const auto& p : sample_points(m.chart, 8, 47))
    CHECK(metric_compat_residual(m.S.g, p) <= 1e-9);
}

TEST_CASE("covariant derivative identities on the hypersurface") {
  auto m = pseudo_sphere(1, +1, 42);
  SplitMix64 rng(51);
  for (const auto& p : sample_points(m.chart, 4, 53)) {
    Tensor3 gamma = christoffel(m.S.g, p);
    for (int a = 0; a < 3; ++a) {
      // nabla_X xi_a = -eps_a phi_a X in coordinate directions
      MatD dxi = covariant_deriv_vector_full(gamma, m.S.xi[a], p);
      MatD phi0 = m.S.phi[a].values(p);
      for (int i = 0; i < 7; ++i)
        CHECK((dxi.row(i).transpose() + m.S.epsilon[a] * phi0.col(i))
                  .lpNorm<Eigen::Infinity>() <= 1e-7);
    }
    // (nabla_X phi_1)(Y) = tau_1 (g(X,Y) xi_1 - eps_1 eta^1(Y) X)
    VectorField X = VectorField::constant(7, rand_vec(rng, 7));
    VectorField Y = VectorField::constant(7, rand_vec(rng, 7));
    VecD lhs = covariant_deriv_endo(m.S.g, m.S.phi[0], X, Y, p);
    const VecD x0 = X.values(p), y0 = Y.values(p);
    VecD rhs = -1.0 * (m.S.g.inner(p, x0, y0) * m.S.xi[0].values(p) -
                       m.S.epsilon[0] * m.S.eta[0].apply(p, y0) * x0);
    CHECK((lhs - rhs).lpNorm<Eigen::Infinity>() <= 1e-7);
  }
}

TEST_CASE("p tensor obeys its defining contractions") {
  auto m = pseudo_sphere(1, +1, 42);
  SplitMix64 rng(61);
  auto pts = sample_points(m.chart, 4, 59);
  for (const auto& p : pts) {
    VecD X = rand_vec(rng, 7), Z = rand_vec(rng, 7), W = rand_vec(rng, 7);
    // P(X,X,Z,W) = 0 by skewness in the first pair
    CHECK(std::abs(p_tensor(m.S.g, m.S.eta[0], p, X, X, Z, W)) <= 1e-10);
  }
}
