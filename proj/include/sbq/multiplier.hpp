#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "sbq/experiment.hpp"
#include "sbq/quadrature.hpp"

namespace sbq::multiplier {

/// Parameters of alpha_{t,R}(lambda) and beta_{t,R}(lambda).
/// lambda is an eigenvalue of -Laplacian; rho_sq is |rho|^2 of the geometry.
struct MultiplierQuery {
  double t = 1.0;
  double R = 1.0;
  double lambda = 0.0;
  double rho_sq = 0.0;
  int d = 1;

  void validate() const;
};

/// Partial-inversion multiplier
///   alpha = e^{-t lambda/2} e^{t|rho|^2/2} int_{|Y|<=R} exp(c y1) e^{-|Y|^2/2t} / (2 pi t)^{d/2} dY
/// with c^2 = lambda - |rho|^2. Evaluated in the symmetric cosh/cos form, so the result is
/// real for every lambda. For c^2 >= 0 the prefactor is absorbed into two shifted
/// Gaussians centred at y1 = +-t c, which keeps large lambda from overflowing.
double alpha(const MultiplierQuery& q, const QuadratureSettings& s = {});

/// Partial-isometry multiplier
///   beta = e^{-t lambda/2} e^{t|rho|^2} int_{|Y|<=2R} exp(c y1) e^{-|Y|^2/4t} / (4 pi t)^{d/2} dY.
double beta(const MultiplierQuery& q, const QuadratureSettings& s = {});

/// alpha and beta through the unsymmetrized exp(c y1) integrand with a complex c
/// (principal root of lambda - |rho|^2). Used to confirm that the imaginary part vanishes.
std::complex<double> alpha_exp_form(const MultiplierQuery& q, const QuadratureSettings& s = {});
std::complex<double> beta_exp_form(const MultiplierQuery& q, const QuadratureSettings& s = {});

/// Limit of beta_{t,R}(lambda) as R -> infinity.
double beta_limit(double t, double lambda);

/// int_{|Y|<=P} cosh(c y1) e^{-|Y|^2/2 sigma} / (2 pi sigma)^{d/2} dY as a one-dimensional
/// integral weighted by the regularized lower incomplete gamma P((d-1)/2, (P^2-y1^2)/2 sigma).
/// c must be real or purely imaginary; only c^2 enters, so +c and -c are identical.
double reduce_ball_integral(std::complex<double> c, double sigma, double P, int d,
                            const QuadratureSettings& s = {});

/// int_{|Y|<=P} exp(c y1) e^{-|Y|^2/2 sigma} / (2 pi sigma)^{d/2} dY for arbitrary complex c,
/// integrated over the full interval [-P, P] without using the y -> -y symmetry.
std::complex<double> reduce_ball_integral_exp(std::complex<double> c, double sigma, double P, int d,
                                              const QuadratureSettings& s = {});

/// int_{|Y|<=P} cosh(c y1) profile(|Y|) dY for a bounded radial profile and real c^2.
/// The transverse (d-1)-ball integral is done radially, giving a nested 1-D quadrature.
double radial_ball_integral(double c_sq, const std::function<double(double)>& profile, double P, int d,
                            const QuadratureSettings& s = {});

/// Gaussian mass of the ball |Y| <= P under N(0, sigma I_d): P(d/2, P^2 / 2 sigma).
double gaussian_ball_mass(double sigma, double P, int d);

/// Regularized lower incomplete gamma; returns 1 for a == 0.
double lower_gamma_regularized(double a, double x);

/// Radius standing in for R -> infinity:
///   R_inf = 12 sqrt(t d) + max(1, 12 sqrt(t)) t sqrt(max(lambda - |rho|^2, 0)).
/// The Gaussian in alpha has centre t c and width sqrt(t), so the omitted mass is the
/// tail of a chi-square with d degrees of freedom beyond 144 d, far below 1e-16.
double r_infinity(double t, double lambda, double rho_sq, int d);

ExperimentResult alpha_curve(double t, double lambda, double rho_sq, int d, std::span<const double> r_grid,
                             const QuadratureSettings& s = {});
ExperimentResult beta_curve(double t, double lambda, double rho_sq, int d, std::span<const double> r_grid,
                            const QuadratureSettings& s = {});

}  // namespace sbq::multiplier
