#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "sbq/errors.hpp"
#include "sbq/quadrature.hpp"

using Catch::Approx;
using namespace sbq;

TEST_CASE("gauss-legendre integrates polynomials exactly", "[quadrature]") {
  const auto rule = gauss_legendre(10, -1.0, 2.0);
  for (int p = 0; p < 20; ++p) {
    double q = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) q += rule.weights[i] * std::pow(rule.nodes[i], p);
    const double exact = (std::pow(2.0, p + 1) - std::pow(-1.0, p + 1)) / (p + 1);
    CHECK(q == Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("adaptive integration of a Gaussian", "[quadrature]") {
  QuadratureSettings s;
  const double v = integrate_adaptive([](double x) { return std::exp(-x * x); }, -3.0, 3.0, s);
  CHECK(v == Approx(std::sqrt(std::numbers::pi) * std::erf(3.0)).epsilon(1e-13));

  const double breaks[] = {0.0, 0.5, 1.0, 4.0};
  const double w = integrate_adaptive([](double x) { return std::cos(x); }, breaks, s);
  CHECK(w == Approx(std::sin(4.0)).epsilon(1e-13));
}

TEST_CASE("adaptive integration reports non-convergence with its estimate", "[quadrature]") {
  QuadratureSettings s;
  s.max_subdivisions = 1;
  s.rel_tol = 1e-14;
  s.abs_tol = 1e-300;
  try {
    integrate_adaptive([](double x) { return std::sin(400.0 * x) * std::exp(x); }, 0.0, 10.0, s);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.error_estimate() > 0.0);
  }
}

TEST_CASE("quadrature settings are validated", "[quadrature]") {
  QuadratureSettings s;
  s.rel_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {};
  s.max_subdivisions = 0;
  CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("ball product rule reproduces ball volumes and moments", "[quadrature]") {
  for (int d = 1; d <= 4; ++d) {
    const double R = 1.3;
    const auto ball = ball_product_rule(d, R, 20);
    double vol = 0.0;
    double second = 0.0;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      vol += ball.weights[i];
      double r2 = 0.0;
      for (double y : ball.point(i)) r2 += y * y;
      second += ball.weights[i] * r2;
      CHECK(r2 <= R * R * (1 + 1e-14));
    }
    const double exact_vol = unit_sphere_area(d) * std::pow(R, d) / d;
    CHECK(vol == Approx(exact_vol).epsilon(1e-12));
    CHECK(second == Approx(unit_sphere_area(d) * std::pow(R, d + 2) / (d + 2)).epsilon(1e-12));
  }
}

TEST_CASE("unit sphere areas", "[quadrature]") {
  CHECK(unit_sphere_area(1) == Approx(2.0));
  CHECK(unit_sphere_area(2) == Approx(2.0 * std::numbers::pi));
  CHECK(unit_sphere_area(3) == Approx(4.0 * std::numbers::pi));
}
