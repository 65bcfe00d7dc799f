#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbq/experiment.hpp"
#include "sbq/quadrature.hpp"
#include "sbq/spectral_models.hpp"

namespace sbq::transform {

using models::Complex;
using models::SpectralFunction;
using models::SpectralModel;

struct HeatParams {
  double t = 1.0;

  void validate() const;
};

// a_n -> e^{-t lambda_n / 2} a_n
SpectralFunction heat(const SpectralFunction& f, const HeatParams& p);

struct SbValue {
  Complex value;
  double tail_bound = 0.0;
};

// F(exp_x iY) = sum e^{-t lambda_n/2} a_n psi_n(exp_x iY), with a bound on the modes the
// model truncates (coefficients assumed no larger than max |a_n| beyond the truncation).
SbValue sb_eval(const SpectralFunction& f, const HeatParams& p, std::span<const double> x,
                std::span<const double> y);

// A_{t,R} f(x) as a ball integral of F(x + iY) on a flat model (j^c = 1).
Complex partial_inversion_geometric(const SpectralFunction& f, const HeatParams& p, double R,
                                    std::span<const double> x, int nodes_per_axis = 48);

// a_n -> alpha_{t,R}(lambda_n) a_n
SpectralFunction partial_inversion_spectral(const SpectralFunction& f, const HeatParams& p, double R,
                                            const QuadratureSettings& s = {});

// Largest R_inf over the active modes of f (covers both alpha and beta).
double r_infinity(const SpectralFunction& f, const HeatParams& p);

// Default R grid: geometric from 0.05 to R_inf in 40 steps.
std::vector<double> default_r_grid(double r_inf);

struct SobolevGate {
  int d = 1;
  double l = 0.0;
  double epsilon = 0.0;          // 2l/d - (d-1)/2d - 1
  double threshold = 0.0;        // (3d^2 - d)/4
  bool epsilon_positive = false;
  bool above_threshold = false;
  double m_series_bound = 0.0;   // sum |a_n| sup |psi_n|
};

double sobolev_gate_epsilon(double l, int d);
double sobolev_gate_threshold(int d);
SobolevGate sobolev_gate(const SpectralFunction& f, double l);

struct InversionReport {
  ExperimentResult table;
  std::vector<double> r_grid;
  std::vector<double> errors;  // L2: ||f - A f|| / ||f||; pointwise: sup over probes of |f - A f|
  double r_inf = 0.0;
  double final_error = 0.0;
  bool eventually_decreasing = false;
  std::optional<SobolevGate> gate;
  std::vector<std::string> warnings;
};

// Error curves are "eventually decreasing" when they never rise (beyond a slack of
// 1e-20 ||f||^2) over the upper half of the grid.
bool eventually_decreasing(const std::vector<double>& values, double slack);

InversionReport global_inversion_l2(const SpectralFunction& f, const HeatParams& p, std::span<const double> r_grid,
                                    const QuadratureSettings& s = {});

// declared_l overrides the Sobolev order used by the gate (default: f.sobolev_order()).
InversionReport global_inversion_pointwise(const SpectralFunction& f, const HeatParams& p,
                                           std::span<const double> r_grid,
                                           const std::vector<std::vector<double>>& probes,
                                           std::optional<double> declared_l = std::nullopt,
                                           const QuadratureSettings& s = {});

struct IsometryReport {
  ExperimentResult table;  // R, G
  double r_inf = 0.0;
  double limit = 0.0;      // G at r_inf
  double norm_sq = 0.0;
  double relative_error = 0.0;
};

// G_F(R) = sum |a_n|^2 e^{-t lambda_n/2} beta_{t,R}(lambda_n)
double isometry_G_at(const SpectralFunction& f, const HeatParams& p, double R, const QuadratureSettings& s = {});
IsometryReport isometry_G(const SpectralFunction& f, const HeatParams& p, std::span<const double> r_grid,
                          const QuadratureSettings& s = {});

// e^{t|rho|^2} int_X int_{|Y|<=R} |F(x + iY)|^2 e^{-|Y|^2/t} / (pi t)^{d/2} dY dx on a flat model.
double isometry_geometric(const SpectralFunction& f, const HeatParams& p, double R, int nodes_per_axis = 48);

struct Reconstruction {
  SpectralFunction f;
  double predicted_limit = 0.0;  // sum |a_n|^2 e^{t lambda_n}
};

Reconstruction surjectivity_reconstruct(std::shared_ptr<const SpectralModel> model,
                                        const std::vector<Complex>& F_coefficients, const HeatParams& p);

struct RadialProfile {
  enum class Kind { Gaussian, Constant, Custom };
  Kind kind = Kind::Gaussian;
  double scale = 1.0;  // Gaussian: e^{-r^2 / 2 scale}; Constant: the value
  std::function<double(double)> custom;

  double operator()(double r) const;
  static RadialProfile gaussian(double variance);
  static RadialProfile constant(double value);
  static RadialProfile from_function(std::function<double(double)> g);
};

struct Lemma5Budget {
  int nodes_per_axis = 24;
  int max_product_dim = 4;
  std::size_t mc_samples = 2'000'000;
  std::uint64_t seed = 7;
};

struct Lemma5Result {
  double lhs = 0.0;
  double rhs = 0.0;
  double difference = 0.0;
  double lhs_error = 0.0;  // MC standard error, or |I_n - I_{n-8}| for the product rule
  bool monte_carlo = false;
};

// int_{|Y|<=R} Psi(Y) beta(|Y|) dY against Psi(0) int_{|Y|<=R} e^{sqrt(sigma) y1} beta(|Y|) dY.
Lemma5Result lemma5_check(const models::EuclideanEigenfunction& psi, const RadialProfile& beta, double R, int d,
                          const Lemma5Budget& budget = {}, const QuadratureSettings& s = {});

struct HoloChangeResult {
  Complex lhs;
  Complex rhs;
  double difference = 0.0;  // |lhs - rhs| / max(1, |lhs|)
};

// Circle coefficients in the circle model ordering; alpha_profile even on [-2R, 2R].
HoloChangeResult holo_change_check_circle(const std::vector<Complex>& F1, const std::vector<Complex>& F2,
                                          const std::function<double(double)>& alpha_profile, double R,
                                          int y_nodes = 96);

// Radius below which G_F(R) > 0 for all nonzero f: pi / (4 |rho|), infinite when rho = 0.
double positivity_radius(const SpectralModel& model);

}  // namespace sbq::transform
