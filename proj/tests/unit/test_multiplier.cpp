#include "catch_amalgamated.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "sbq/errors.hpp"
#include "sbq/multiplier.hpp"

using Catch::Approx;
using namespace sbq::multiplier;

namespace {

// Frozen plain Monte Carlo oracles (tests/oracles/mc_ball_oracles.py, 1e7 samples each).
constexpr double kV1 = 0.363197258717;
constexpr double kV1Se = 0.000152;
constexpr double kV2 = 1.15726785307;
constexpr double kV2Se = 0.000383;

}  // namespace

TEST_CASE("alpha against the Monte Carlo oracle v1", "[multiplier][oracle]") {
  const double a = alpha({0.5, 1.0, 2.0, 1.0, 3});
  CHECK(std::abs(a - kV1) < 4.0 * kV1Se);
}

TEST_CASE("ball reduction against the Monte Carlo oracle v2", "[multiplier][oracle]") {
  const double v = reduce_ball_integral(2.0, 0.5, 1.5, 4);
  CHECK(std::abs(v - kV2) < 4.0 * kV2Se);
}

TEST_CASE("alpha tends to 1", "[multiplier]") {
  for (double t : {0.1, 0.5, 1.0})
    for (int d : {1, 3, 6})
      for (double rho : {0.0, 1.0, 4.0}) {
        // at lambda = rho^2 the plain radius 12 sqrt(t d) suffices
        CHECK(std::abs(alpha({t, 12.0 * std::sqrt(t * d), rho, rho, d}) - 1.0) < 1e-8);
        for (double lam : {rho, rho + 1.0, rho + 10.0, rho + 400.0})
          CHECK(std::abs(alpha({t, r_infinity(t, lam, rho, d), lam, rho, d}) - 1.0) < 1e-8);
      }
}

TEST_CASE("beta tends to e^{t lambda/2}", "[multiplier]") {
  for (double t : {0.1, 1.0})
    for (int d : {1, 3})
      for (double lam : {0.0, 1.0, 5.0, 40.0}) {
        const double R = 0.5 * r_infinity(2.0 * t, lam, 1.0, d);
        CHECK(beta({t, R, lam, 1.0, d}) == Approx(beta_limit(t, lam)).epsilon(1e-6));
      }
}

TEST_CASE("one-dimensional closed forms", "[multiplier]") {
  for (double t : {0.1, 0.7, 2.0})
    for (double R : {0.05, 0.5, 3.0})
      for (double rho : {0.0, 1.5}) {
        CHECK(alpha({t, R, rho * rho, rho * rho, 1}) == Approx(std::erf(R / std::sqrt(2.0 * t))).epsilon(1e-12));
        CHECK(beta({t, R, rho * rho, rho * rho, 1}) ==
              Approx(std::exp(0.5 * t * rho * rho) * std::erf(R / std::sqrt(t))).epsilon(1e-12));
      }
}

TEST_CASE("reduction with c = 0 is the chi-square mass", "[multiplier]") {
  for (double sigma : {0.2, 1.0})
    for (double P : {0.3, 1.0, 4.0}) {
      CHECK(reduce_ball_integral(0.0, sigma, P, 1) == Approx(std::erf(P / std::sqrt(2.0 * sigma))).epsilon(1e-12));
      for (int d = 1; d <= 7; ++d)
        CHECK(reduce_ball_integral(0.0, sigma, P, d) == Approx(gaussian_ball_mass(sigma, P, d)).epsilon(1e-11));
    }
  CHECK(lower_gamma_regularized(0.0, 0.3) == 1.0);
}

TEST_CASE("beta equals e^{t lambda/2} alpha_{2t,2R} on a 5x5x5 grid", "[multiplier]") {
  const double ts[] = {0.05, 0.2, 0.5, 1.0, 2.0};
  const double rs[] = {0.1, 0.3, 0.8, 1.5, 3.0};
  const double ls[] = {0.0, 0.5, 1.0, 3.0, 20.0};
  for (double t : ts)
    for (double R : rs)
      for (double l : ls) {
        const double b = beta({t, R, l, 1.0, 3});
        const double a = alpha({2.0 * t, 2.0 * R, l, 1.0, 3});
        CHECK(b == Approx(std::exp(0.5 * t * l) * a).epsilon(1e-9));
      }
}

TEST_CASE("branch independence of the reduction", "[multiplier]") {
  for (double c : {0.3, 2.0, 7.5}) {
    CHECK(reduce_ball_integral(c, 0.5, 1.2, 3) == reduce_ball_integral(-c, 0.5, 1.2, 3));
    const std::complex<double> ic(0.0, c);
    CHECK(reduce_ball_integral(ic, 0.5, 1.2, 3) == reduce_ball_integral(-ic, 0.5, 1.2, 3));
  }
  CHECK_THROWS_AS(reduce_ball_integral({1.0, 1.0}, 0.5, 1.0, 2), sbq::DomainError);
}

TEST_CASE("low spectrum: realness against the unsymmetrized exp form", "[multiplier]") {
  for (double rho : {1.0, 2.0, 4.0})
    for (double frac : {0.0, 0.3, 0.9})
      for (double R : {0.2, 1.0, 3.0}) {
        const MultiplierQuery q{0.5, R, frac * rho * rho, rho * rho, 3};
        const auto ae = alpha_exp_form(q);
        const double a = alpha(q);
        CHECK(std::isfinite(a));
        CHECK(std::abs(ae.imag()) <= 1e-12 * std::abs(ae.real()));
        CHECK(ae.real() == Approx(a).epsilon(1e-10));
        const auto be = beta_exp_form(q);
        CHECK(std::abs(be.imag()) <= 1e-12 * std::abs(be.real()));
        CHECK(be.real() == Approx(beta(q)).epsilon(1e-10));
      }
}

TEST_CASE("alpha bounded in (0, 1] and nondecreasing for lambda >= rho^2", "[multiplier]") {
  const auto grid = sbq::geometric_grid(0.01, 30.0, 60);
  for (double lam : {1.0, 2.0, 10.0, 200.0}) {
    const auto curve = alpha_curve(0.5, lam, 1.0, 3, grid);
    const auto v = curve.column("alpha");
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(v[i] > 0.0);
      CHECK(v[i] <= 1.0 + 1e-15);
      if (i > 0) CHECK(v[i] >= v[i - 1] - 1e-12);
    }
  }
}

TEST_CASE("alpha curve on the cos branch stays finite and real", "[multiplier]") {
  const auto grid = sbq::geometric_grid(0.05, 20.0, 30);
  const auto v = alpha_curve(0.5, 0.0, 1.0, 3, grid).column("alpha");
  for (double x : v) CHECK(std::isfinite(x));
  CHECK(v.back() == Approx(1.0).margin(1e-8));
}

TEST_CASE("curve grids", "[multiplier]") {
  const double one[] = {0.7};
  const auto single = beta_curve(0.5, 2.0, 1.0, 3, one);
  REQUIRE(single.rows.size() == 1);
  CHECK(single.rows[0][0] == 0.7);
  CHECK(single.rows[0][1] == beta({0.5, 0.7, 2.0, 1.0, 3}));
  const double bad[] = {0.5, 0.5};
  CHECK_THROWS_AS(alpha_curve(0.5, 2.0, 1.0, 3, bad), sbq::DomainError);
  const double neg[] = {-0.1, 0.5};
  CHECK_THROWS_AS(alpha_curve(0.5, 2.0, 1.0, 3, neg), sbq::DomainError);
}

TEST_CASE("query validation", "[multiplier]") {
  CHECK_THROWS_AS(alpha({0.0, 1.0, 1.0, 1.0, 3}), sbq::DomainError);
  CHECK_THROWS_AS(alpha({1.0, 0.0, 1.0, 1.0, 3}), sbq::DomainError);
  CHECK_THROWS_AS(alpha({1.0, 1.0, -1.0, 1.0, 3}), sbq::DomainError);
  CHECK_THROWS_AS(alpha({1.0, 1.0, 1.0, 1.0, 0}), sbq::DomainError);
}

TEST_CASE("large eigenvalues do not overflow", "[multiplier]") {
  const double a = alpha({1.0, 5.0, 1e5, 1.0, 3});
  CHECK(std::isfinite(a));
  CHECK(a >= 0.0);
  CHECK(a <= 1.0);
}

TEST_CASE("radial ball integral matches the Gaussian reduction", "[multiplier]") {
  for (int d = 1; d <= 4; ++d)
    for (double c_sq : {-4.0, 0.0, 2.5}) {
      const double sigma = 0.7;
      const double P = 1.3;
      const double norm = std::pow(2.0 * std::numbers::pi * sigma, 0.5 * d);
      const double via_radial =
          radial_ball_integral(c_sq, [&](double r) { return std::exp(-r * r / (2.0 * sigma)) / norm; }, P, d);
      const std::complex<double> c = c_sq >= 0 ? std::complex<double>(std::sqrt(c_sq), 0) : std::complex<double>(0, std::sqrt(-c_sq));
      CHECK(via_radial == Approx(reduce_ball_integral(c, sigma, P, d)).epsilon(1e-9));
    }
}

TEST_CASE("reduction agrees with d-dimensional Monte Carlo", "[multiplier][mc]") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif;
  const double sigma = 0.6;
  for (int d = 1; d <= 4; ++d)
    for (double c : {0.0, 1.0, 2.5})
      for (double P : {0.5, 1.0, 2.0}) {
        // sample the ball uniformly; integrand cosh(c y1) phi_sigma(Y)
        const int n = 200000;
        const double vol = std::pow(P, d) * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
        double s1 = 0.0, s2 = 0.0;
        std::vector<double> y(static_cast<std::size_t>(d));
        for (int i = 0; i < n; ++i) {
          double r2 = 0.0;
          for (double& v : y) {
            v = normal(rng);
            r2 += v * v;
          }
          const double scale = P * std::pow(unif(rng), 1.0 / d) / std::sqrt(r2);
          double rr = 0.0;
          for (double& v : y) {
            v *= scale;
            rr += v * v;
          }
          const double val = vol * std::cosh(c * y[0]) * std::exp(-rr / (2.0 * sigma)) /
                             std::pow(2.0 * std::numbers::pi * sigma, 0.5 * d);
          s1 += val;
          s2 += val * val;
        }
        const double mean = s1 / n;
        const double se = std::sqrt((s2 / n - mean * mean) / (n - 1));
        CHECK(std::abs(reduce_ball_integral(c, sigma, P, d) - mean) < 4.0 * se);
      }
}

TEST_CASE("r_infinity formula", "[multiplier]") {
  CHECK(r_infinity(1.0, 1.0, 1.0, 4) == Approx(24.0));
  CHECK(r_infinity(0.25, 5.0, 1.0, 1) == Approx(6.0 + 6.0 * 0.25 * 2.0));
  CHECK(r_infinity(0.001, 101.0, 1.0, 1) == Approx(12.0 * std::sqrt(0.001) + 0.001 * 10.0));
}
