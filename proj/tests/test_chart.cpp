#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixed3geo/chart.hpp"

using namespace mixed3geo;

namespace {

ChartPtr unit_ball_chart() {
  Constraint ball{"unit-ball", [](const VecD& u) { return 1.0 - u.squaredNorm(); }};
  return std::make_shared<Chart>("ball", std::vector<std::string>{"x", "y"},
                                 VecD::Constant(2, -1.0), VecD::Constant(2, 1.0),
                                 std::vector<Constraint>{ball});
}

}  // namespace

TEST_CASE("contains respects box and constraints strictly") {
  auto c = unit_ball_chart();
  CHECK(c->contains((VecD(2) << 0.1, 0.2).finished()));
  CHECK_FALSE(c->contains((VecD(2) << 0.8, 0.8).finished()));   // outside ball
  CHECK_FALSE(c->contains((VecD(2) << 1.0, 0.0).finished()));   // on boundary
}

TEST_CASE("sampling is deterministic and pure") {
  auto c = unit_ball_chart();
  auto a = sample_points(c, 4, 7);
  auto b = sample_points(c, 4, 7);
  REQUIRE(a.size() == 4);
  for (size_t i = 0; i < a.size(); ++i)
    CHECK((a[i].coords - b[i].coords).norm() == 0.0);
  auto other = sample_points(c, 4, 8);
  CHECK((a[0].coords - other[0].coords).norm() != 0.0);
}

TEST_CASE("sampled points satisfy all constraints with margin") {
  auto c = unit_ball_chart();
  for (const auto& p : sample_points(c, 64, 3)) {
    CHECK(c->contains(p.coords));
    CHECK(c->margin(p.coords) > 0.05);
  }
}

TEST_CASE("empty feasible region exhausts sampling") {
  Constraint never{"empty", [](const VecD&) { return -1.0; }};
  auto c = std::make_shared<Chart>("empty", std::vector<std::string>{"x"},
                                   VecD::Constant(1, -1.0), VecD::Constant(1, 1.0),
                                   std::vector<Constraint>{never});
  CHECK_THROWS_AS(sample_points(c, 1, 0), SamplingExhausted);
}

TEST_CASE("scalar field algebra and coordinate fields") {
  auto c = unit_ball_chart();
  Point p{c, (VecD(2) << 0.3, -0.2).finished()};
  ScalarField x = ScalarField::coordinate(2, 0);
  ScalarField y = ScalarField::coordinate(2, 1);
  ScalarField f = x * y + ScalarField::constant(2, 2.0);
  Jet2 j = f(p);
  CHECK(j.val == doctest::Approx(0.3 * -0.2 + 2.0));
  CHECK(j.grad[0] == doctest::Approx(-0.2));
  CHECK(j.grad[1] == doctest::Approx(0.3));
  CHECK(j.hess(0, 1) == doctest::Approx(1.0));
}

TEST_CASE("fd_oracle on constants and quadratics") {
  auto c = unit_ball_chart();
  Point p{c, (VecD(2) << 0.1, 0.1).finished()};
  Jet2 k = fd_oracle(ScalarField::constant(2, 3.5), p);
  CHECK(k.grad.lpNorm<Eigen::Infinity>() <= 1e-10);
  CHECK(k.hess.lpNorm<Eigen::Infinity>() <= 1e-10);

  ScalarField x = ScalarField::coordinate(2, 0);
  Jet2 q = fd_oracle(x * x, p);
  CHECK(std::abs(q.grad[0] - 0.2) <= 1e-6);
  CHECK(std::abs(q.hess(0, 0) - 2.0) <= 1e-6);
}

TEST_CASE("fd_oracle stencil leaving the domain throws") {
  auto c = unit_ball_chart();
  // legal point, but a stencil with huge h exits the box
  Point p{c, (VecD(2) << 0.0, 0.0).finished()};
  CHECK_THROWS_AS(fd_oracle(ScalarField::coordinate(2, 0), p, 2.0),
                  StencilOutOfDomain);
}

TEST_CASE("fd_oracle agrees with jets on a smooth field") {
  auto c = unit_ball_chart();
  ScalarField f = ScalarField::from_expr(2, [](const std::vector<Jet2>& u) {
    return sqrt(u[0] * u[0] + u[1] * u[1] + 1.0) * u[1];
  });
  for (const auto& p : sample_points(c, 16, 5)) {
    Jet2 j = f(p);
    Jet2 o = fd_oracle(f, p);
    CHECK((j.grad - o.grad).lpNorm<Eigen::Infinity>() <=
          1e-4 * (1 + j.grad.lpNorm<Eigen::Infinity>()));
    CHECK((j.hess - o.hess).lpNorm<Eigen::Infinity>() <=
          1e-4 * (1 + j.hess.lpNorm<Eigen::Infinity>()));
  }
}
