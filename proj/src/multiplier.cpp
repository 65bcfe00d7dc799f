#include "sbq/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "sbq/errors.hpp"

namespace sbq::multiplier {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

// cosh(c y) for real c^2: cosh(sqrt(c_sq) y) or cos(sqrt(-c_sq) y).
double cosh_real_sq(double c_sq, double y) {
  return c_sq >= 0.0 ? std::cosh(std::sqrt(c_sq) * y) : std::cos(std::sqrt(-c_sq) * y);
}

void check_ball_args(double sigma, double P, int d) {
  if (!(sigma > 0.0)) throw DomainError("Gaussian variance parameter must be positive");
  if (!(P > 0.0)) throw DomainError("ball radius must be positive");
  if (d < 1) throw DomainError("dimension must be positive");
}

// theta breakpoints on [0, pi/2] for an integrand in y = P sin(theta) that peaks near
// y = centre with width sqrt(sigma).
std::vector<double> theta_breaks(double centre, double sigma, double P) {
  std::vector<double> cuts = {0.0, kHalfPi};
  const double w = std::sqrt(sigma);
  for (double y : {centre - 10.0 * w, centre - 2.0 * w, centre, centre + 2.0 * w, centre + 10.0 * w}) {
    if (y > 0.0 && y < P) cuts.push_back(std::asin(y / P));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// 2 * int_0^P kernel(y) Q((d-1)/2, (P^2 - y^2)/(2 sigma)) dy with y = P sin(theta).
double symmetric_reduction(const std::function<double(double)>& kernel, double sigma, double P, int d,
                           double centre, const QuadratureSettings& s) {
  const double a = 0.5 * (d - 1);
  auto integrand = [&](double theta) {
    const double y = P * std::sin(theta);
    const double transverse = P * std::cos(theta);
    const double q = lower_gamma_regularized(a, transverse * transverse / (2.0 * sigma));
    return 2.0 * kernel(y) * q * transverse;
  };
  const auto cuts = theta_breaks(centre, sigma, P);
  return integrate_adaptive(integrand, cuts, s);
}

double gaussian_density(double u, double sigma) {
  return std::exp(-u * u / (2.0 * sigma)) / std::sqrt(2.0 * std::numbers::pi * sigma);
}

// e^{log_prefactor} int_{|Y|<=P} cosh(c y1) phi_sigma(Y) dY, exponentials combined per point.
double direct_form(double c_sq, double sigma, double P, int d, double log_prefactor,
                   const QuadratureSettings& s) {
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * sigma);
  if (c_sq >= 0.0) {
    const double c = std::sqrt(c_sq);
    auto kernel = [&](double y) {
      const double g = -y * y / (2.0 * sigma);
      return 0.5 * norm * (std::exp(log_prefactor + c * y + g) + std::exp(log_prefactor - c * y + g));
    };
    return symmetric_reduction(kernel, sigma, P, d, sigma * c, s);
  }
  const double kappa = std::sqrt(-c_sq);
  auto kernel = [&](double y) { return norm * std::exp(log_prefactor - y * y / (2.0 * sigma)) * std::cos(kappa * y); };
  return symmetric_reduction(kernel, sigma, P, d, 0.0, s);
}

// e^{-sigma c^2 / 2} int_{|Y|<=P} cosh(c y1) phi_sigma(Y) dY as a pair of shifted Gaussians.
double shifted_form(double c_sq, double sigma, double P, int d, const QuadratureSettings& s) {
  if (c_sq >= 0.0) {
    const double shift = sigma * std::sqrt(c_sq);
    auto kernel = [&](double y) {
      return 0.5 * (gaussian_density(y - shift, sigma) + gaussian_density(y + shift, sigma));
    };
    return symmetric_reduction(kernel, sigma, P, d, shift, s);
  }
  const double kappa = std::sqrt(-c_sq);
  const double scale = std::exp(0.5 * sigma * (-c_sq));
  auto kernel = [&](double y) { return scale * gaussian_density(y, sigma) * std::cos(kappa * y); };
  return symmetric_reduction(kernel, sigma, P, d, 0.0, s);
}

std::complex<double> exp_form(std::complex<double> c, double sigma, double P, int d,
                              std::complex<double> prefactor, const QuadratureSettings& s) {
  check_ball_args(sigma, P, d);
  const double a = 0.5 * (d - 1);
  auto value = [&](double theta) {
    const double y = P * std::sin(theta);
    const double transverse = P * std::cos(theta);
    const double q = lower_gamma_regularized(a, transverse * transverse / (2.0 * sigma));
    return prefactor * std::exp(c * y) * gaussian_density(y, sigma) * q * transverse;
  };
  const double cuts[] = {-kHalfPi, 0.0, kHalfPi};
  const double re = integrate_adaptive([&](double th) { return value(th).real(); }, cuts, s);
  // imaginary part is often zero up to rounding; measure it against the real part
  QuadratureSettings s_im = s;
  s_im.abs_tol = std::max(s.abs_tol, s.rel_tol * std::abs(re));
  const double im = integrate_adaptive([&](double th) { return value(th).imag(); }, cuts, s_im);
  return {re, im};
}

}  // namespace

void MultiplierQuery::validate() const {
  if (!(t > 0.0)) throw DomainError("heat time t must be positive");
  if (!(R > 0.0)) throw DomainError("radius R must be positive");
  if (!(lambda >= 0.0)) throw DomainError("eigenvalue lambda must be non-negative");
  if (!(rho_sq >= 0.0)) throw DomainError("|rho|^2 must be non-negative");
  if (d < 1) throw DomainError("dimension d must be positive");
}

double lower_gamma_regularized(double a, double x) {
  if (a == 0.0) return 1.0;
  if (x <= 0.0) return 0.0;
  return boost::math::gamma_p(a, x);
}

double gaussian_ball_mass(double sigma, double P, int d) {
  check_ball_args(sigma, P, d);
  return lower_gamma_regularized(0.5 * d, P * P / (2.0 * sigma));
}

double alpha(const MultiplierQuery& q, const QuadratureSettings& s) {
  q.validate();
  return shifted_form(q.lambda - q.rho_sq, q.t, q.R, q.d, s);
}

double beta(const MultiplierQuery& q, const QuadratureSettings& s) {
  q.validate();
  const double log_prefactor = -0.5 * q.t * q.lambda + q.t * q.rho_sq;
  return direct_form(q.lambda - q.rho_sq, 2.0 * q.t, 2.0 * q.R, q.d, log_prefactor, s);
}

std::complex<double> alpha_exp_form(const MultiplierQuery& q, const QuadratureSettings& s) {
  q.validate();
  const auto c = std::sqrt(std::complex<double>(q.lambda - q.rho_sq, 0.0));
  const double pref = std::exp(-0.5 * q.t * q.lambda + 0.5 * q.t * q.rho_sq);
  return exp_form(c, q.t, q.R, q.d, pref, s);
}

std::complex<double> beta_exp_form(const MultiplierQuery& q, const QuadratureSettings& s) {
  q.validate();
  const auto c = std::sqrt(std::complex<double>(q.lambda - q.rho_sq, 0.0));
  const double pref = std::exp(-0.5 * q.t * q.lambda + q.t * q.rho_sq);
  return exp_form(c, 2.0 * q.t, 2.0 * q.R, q.d, pref, s);
}

double beta_limit(double t, double lambda) { return std::exp(0.5 * t * lambda); }

double reduce_ball_integral(std::complex<double> c, double sigma, double P, int d, const QuadratureSettings& s) {
  check_ball_args(sigma, P, d);
  const std::complex<double> c2 = c * c;
  if (std::abs(c2.imag()) > 1e-14 * std::max(1.0, std::abs(c2.real())))
    throw DomainError("reduce_ball_integral needs c real or purely imaginary");
  return direct_form(c2.real(), sigma, P, d, 0.0, s);
}

std::complex<double> reduce_ball_integral_exp(std::complex<double> c, double sigma, double P, int d,
                                              const QuadratureSettings& s) {
  return exp_form(c, sigma, P, d, 1.0, s);
}

double radial_ball_integral(double c_sq, const std::function<double(double)>& profile, double P, int d,
                            const QuadratureSettings& s) {
  if (!(P > 0.0)) throw DomainError("ball radius must be positive");
  if (d < 1) throw DomainError("dimension must be positive");
  if (d == 1) {
    auto f = [&](double theta) {
      const double y = P * std::sin(theta);
      return 2.0 * cosh_real_sq(c_sq, y) * profile(y) * P * std::cos(theta);
    };
    return integrate_adaptive(f, 0.0, kHalfPi, s);
  }
  const double sphere = unit_sphere_area(d - 1);
  auto outer = [&](double theta) {
    const double y = P * std::sin(theta);
    const double transverse = P * std::cos(theta);
    if (transverse <= 0.0) return 0.0;
    auto inner = [&](double u) {
      const double r = transverse * u;
      return profile(std::sqrt(y * y + r * r)) * std::pow(r, d - 2) * transverse;
    };
    const double slice = sphere * integrate_adaptive(inner, 0.0, 1.0, s);
    return 2.0 * cosh_real_sq(c_sq, y) * slice * transverse;
  };
  return integrate_adaptive(outer, 0.0, kHalfPi, s);
}

double r_infinity(double t, double lambda, double rho_sq, int d) {
  if (!(t > 0.0) || d < 1) throw DomainError("r_infinity needs t > 0 and d >= 1");
  const double c = std::sqrt(std::max(lambda - rho_sq, 0.0));
  return 12.0 * std::sqrt(t * d) + std::max(1.0, 12.0 * std::sqrt(t)) * t * c;
}

namespace {

ExperimentResult curve(const char* name, double (*fn)(const MultiplierQuery&, const QuadratureSettings&),
                       double t, double lambda, double rho_sq, int d, std::span<const double> r_grid,
                       const QuadratureSettings& s) {
  if (r_grid.empty()) throw DomainError("radius grid is empty");
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > 0.0)) throw DomainError("radius grid must be positive");
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) throw DomainError("radius grid must be strictly increasing");
  }
  ExperimentResult out;
  out.name = name;
  out.columns = {"R", name};
  for (double r : r_grid) out.add_row({r, fn(MultiplierQuery{t, r, lambda, rho_sq, d}, s)});
  out.add_metadata("t", std::to_string(t));
  out.add_metadata("lambda", std::to_string(lambda));
  out.add_metadata("rho_sq", std::to_string(rho_sq));
  out.add_metadata("d", std::to_string(d));
  return out;
}

}  // namespace

ExperimentResult alpha_curve(double t, double lambda, double rho_sq, int d, std::span<const double> r_grid,
                             const QuadratureSettings& s) {
  return curve("alpha", &alpha, t, lambda, rho_sq, d, r_grid, s);
}

ExperimentResult beta_curve(double t, double lambda, double rho_sq, int d, std::span<const double> r_grid,
                            const QuadratureSettings& s) {
  return curve("beta", &beta, t, lambda, rho_sq, d, r_grid, s);
}

}  // namespace sbq::multiplier
