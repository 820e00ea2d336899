#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixed3geo/frame.hpp"
#include "mixed3geo/models.hpp"
#include "mixed3geo/rng.hpp"

using namespace mixed3geo;

TEST_CASE("diagonal neutral metric gives the coordinate frame") {
  MatD g0 = MatD::Zero(4, 4);
  g0.diagonal() << 1, 1, -1, -1;
  Frame f = orthonormal_frame(g0);
  CHECK(f.signs.sum() == doctest::Approx(0.0));
  MatD gram = f.vectors.transpose() * g0 * f.vectors;
  CHECK((gram - f.signs.asDiagonal().toDenseMatrix()).lpNorm<Eigen::Infinity>() <=
        1e-10);
}

TEST_CASE("frame reconstructs the inverse metric") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 5;
    MatD a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
    MatD g0 = 0.5 * (a + a.transpose());
    g0.diagonal().array() += 0.0;  // keep indefinite in general
    if (std::abs(g0.determinant()) < 1e-3) continue;
    Frame f = orthonormal_frame(g0);
    MatD rec = MatD::Zero(d, d);
    for (int i = 0; i < d; ++i)
      rec += f.signs[i] * f.vectors.col(i) * f.vectors.col(i).transpose();
    CHECK((rec - g0.inverse()).lpNorm<Eigen::Infinity>() <= 1e-9 * g0.inverse().norm());
  }
}

TEST_CASE("signs sum matches the signature (Sylvester)") {
  MatD g0 = MatD::Zero(3, 3);
  g0 << 2, 1, 0, 1, -1, 0, 0, 0, 3;
  Frame f = orthonormal_frame(g0);
  auto sig = metric_signature(g0);
  CHECK(int(f.signs.sum()) == sig.second - sig.first);
}

TEST_CASE("seed vectors are orthonormalized first (adapted frame)") {
  MatD g0 = MatD::Zero(4, 4);
  g0.diagonal() << 1, 1, -1, -1;
  VecD seed = (VecD(4) << 1.0, 1.0, 0.5, 0.0).finished();
  Frame f = orthonormal_frame(g0, {seed});
  const double q = seed.dot(g0 * seed);
  CHECK((f.vectors.col(0) - seed / std::sqrt(std::abs(q))).norm() <= 1e-12);
}

TEST_CASE("degenerate metric is rejected before pivoting") {
  MatD g0 = MatD::Zero(2, 2);
  g0(0, 0) = 1.0;  // rank 1
  CHECK_THROWS_AS(orthonormal_frame(g0), DegenerateMetric);
}

TEST_CASE("pseudo-sphere induced metric has signature (4,3) minus-first") {
  auto m = pseudo_sphere(1, +1, 42);
  auto pts = sample_points(m.chart, 4, 9);
  for (const auto& p : pts) {
    auto sig = metric_signature(m.S.g.values(p));
    CHECK(sig.first == 4);
    CHECK(sig.second == 3);
    Frame f = orthonormal_frame(m.S.g, p);
    CHECK(int(f.signs.sum()) == -1);
  }
}
