#include "sbq/spectral_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "sbq/errors.hpp"

namespace sbq::models {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm_of(const std::vector<int>& k) {
  double s = 0.0;
  for (int v : k) s += static_cast<double>(v) * v;
  return std::sqrt(s);
}

BaseRule uniform_grid(int d, int per_axis) {
  BaseRule rule;
  rule.dim = d;
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(per_axis);
  rule.points.resize(total * static_cast<std::size_t>(d));
  rule.weights.assign(total, 1.0 / static_cast<double>(total));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (int k = d - 1; k >= 0; --k) {
      rule.points[idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)] =
          static_cast<double>(rem % static_cast<std::size_t>(per_axis)) / per_axis;
      rem /= static_cast<std::size_t>(per_axis);
    }
  }
  return rule;
}

void check_point(std::span<const double> x, int d, const char* what) {
  if (static_cast<int>(x.size()) != d) throw DomainError(std::string(what) + " has the wrong dimension");
}

}  // namespace

double portable_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

// SpectralModel defaults -----------------------------------------------------

void SpectralModel::missing(const std::string& capability) const { throw CapabilityError(capability, name()); }

Complex SpectralModel::eigenfunction_real(std::size_t, std::span<const double>) const {
  missing("real eigenfunction evaluation");
}

Complex SpectralModel::eigenfunction_complex(std::size_t, std::span<const double>, std::span<const double>) const {
  missing("complexified eigenfunction evaluation");
}

double SpectralModel::complex_growth_bound(std::size_t, double) const { missing("complexified growth bound"); }

double SpectralModel::truncation_tail_bound(double, double) const { missing("truncation tail bound"); }

std::optional<std::size_t> SpectralModel::conjugate_mode(std::size_t) const { return std::nullopt; }

const BaseRule& SpectralModel::base_rule() const { missing("integration over the base"); }

Complex SpectralModel::integrate(const std::function<Complex(std::span<const double>)>& g) const {
  const BaseRule& rule = base_rule();
  Complex acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * g(rule.point(i));
  return acc;
}

// TorusModel -----------------------------------------------------------------

TorusModel::TorusModel(std::string name, int d, std::vector<std::vector<int>> modes, int grid_per_axis)
    : name_(std::move(name)), d_(d), modes_(std::move(modes)) {
  if (d_ < 1) throw DomainError("torus dimension must be positive");
  if (modes_.empty()) throw DomainError("torus model needs at least one mode");
  eigenvalues_.reserve(modes_.size());
  for (const auto& k : modes_) {
    if (static_cast<int>(k.size()) != d_) throw DomainError("torus mode has the wrong dimension");
    double k2 = 0.0;
    for (int v : k) {
      k2 += static_cast<double>(v) * v;
      max_k_ = std::max(max_k_, std::abs(v));
    }
    eigenvalues_.push_back(kTwoPi * kTwoPi * k2);
  }
  if (eigenvalues_.front() != 0.0) throw DomainError("first torus mode must be the constant");
  for (std::size_t i = 1; i < eigenvalues_.size(); ++i)
    if (eigenvalues_[i] < eigenvalues_[i - 1]) throw DomainError("torus modes must have nondecreasing eigenvalues");
  if (grid_per_axis <= 0) grid_per_axis = std::max(8, 4 * max_k_);
  if (grid_per_axis <= 2 * max_k_)
    throw DomainError("base grid must have more than 2 max|k| points per axis to integrate products exactly");
  rule_ = uniform_grid(d_, grid_per_axis);
}

double TorusModel::analyticity_radius() const { return std::numeric_limits<double>::infinity(); }

double TorusModel::eigenvalue(std::size_t n) const { return eigenvalues_.at(n); }

Complex TorusModel::eigenfunction_real(std::size_t n, std::span<const double> x) const {
  check_point(x, d_, "base point");
  const auto& k = modes_.at(n);
  double phase = 0.0;
  for (int i = 0; i < d_; ++i) phase += k[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  return std::polar(1.0, kTwoPi * phase);
}

Complex TorusModel::eigenfunction_complex(std::size_t n, std::span<const double> x, std::span<const double> y) const {
  check_point(x, d_, "base point");
  check_point(y, d_, "tangent vector");
  const auto& k = modes_.at(n);
  double phase = 0.0;
  double decay = 0.0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(d_); ++i) {
    phase += k[i] * x[i];
    decay += k[i] * y[i];
  }
  // e^{2 pi i k.(x + iY)} = e^{-2 pi k.Y} e^{2 pi i k.x}
  return std::polar(std::exp(-kTwoPi * decay), kTwoPi * phase);
}

double TorusModel::complex_growth_bound(std::size_t n, double y_norm) const {
  return std::exp(kTwoPi * norm_of(modes_.at(n)) * y_norm);
}

double TorusModel::truncation_tail_bound(double t, double y_norm) const {
  // Every omitted mode has |k|_inf = j > m for some j; there are (2j+1)^d - (2j-1)^d such
  // lattice points, each with |k| in [j, sqrt(d) j].
  const int m = max_k_;
  const double sd = std::sqrt(static_cast<double>(d_));
  double total = 0.0;
  for (int j = m + 1; j < m + 100000; ++j) {
    const double count = std::pow(2.0 * j + 1.0, d_) - std::pow(2.0 * j - 1.0, d_);
    const double exponent = -0.5 * t * kTwoPi * kTwoPi * j * j + kTwoPi * sd * j * y_norm;
    const double term = count * std::exp(exponent);
    total += term;
    // Past the maximum of the exponent the terms decay faster than geometrically.
    const bool past_peak = kTwoPi * kTwoPi * t * j > kTwoPi * sd * y_norm + 1.0;
    if (past_peak && term <= 1e-18 * total) break;
    if (past_peak && total == 0.0) break;
  }
  return total;
}

std::optional<std::size_t> TorusModel::conjugate_mode(std::size_t n) const {
  std::vector<int> neg = modes_.at(n);
  for (int& v : neg) v = -v;
  return index_of(neg);
}

std::optional<std::size_t> TorusModel::index_of(const std::vector<int>& k) const {
  auto it = std::find(modes_.begin(), modes_.end(), k);
  if (it == modes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - modes_.begin());
}

std::shared_ptr<const TorusModel> circle_model(std::size_t n_modes, int grid_points) {
  if (n_modes < 1) throw DomainError("circle model needs at least one mode");
  std::vector<std::vector<int>> modes;
  modes.reserve(n_modes);
  modes.push_back({0});
  for (int k = 1; modes.size() < n_modes; ++k) {
    modes.push_back({k});
    if (modes.size() < n_modes) modes.push_back({-k});
  }
  return std::make_shared<const TorusModel>("circle", 1, std::move(modes), grid_points);
}

std::shared_ptr<const TorusModel> torus_model(int d, int n_modes_per_axis, int grid_per_axis) {
  if (d < 1) throw DomainError("torus dimension must be positive");
  if (n_modes_per_axis < 1) throw DomainError("torus needs at least one mode per axis");
  const int m = (n_modes_per_axis - 1) / 2;
  const int width = 2 * m + 1;
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(width);
  std::vector<std::vector<int>> modes;
  modes.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<int> k(static_cast<std::size_t>(d));
    std::size_t rem = idx;
    for (int i = d - 1; i >= 0; --i) {
      k[static_cast<std::size_t>(i)] = static_cast<int>(rem % static_cast<std::size_t>(width)) - m;
      rem /= static_cast<std::size_t>(width);
    }
    modes.push_back(std::move(k));
  }
  std::stable_sort(modes.begin(), modes.end(), [](const auto& a, const auto& b) {
    long na = 0;
    long nb = 0;
    for (int v : a) na += static_cast<long>(v) * v;
    for (int v : b) nb += static_cast<long>(v) * v;
    if (na != nb) return na < nb;
    return a < b;
  });
  return std::make_shared<const TorusModel>("torus" + std::to_string(d), d, std::move(modes), grid_per_axis);
}

// SyntheticQuotientModel -----------------------------------------------------

SyntheticQuotientModel::SyntheticQuotientModel(SyntheticParams params) : p_(std::move(params)) {
  if (p_.d < 1) throw DomainError("synthetic model dimension must be positive");
  if (!(p_.rho_sq >= 0.0)) throw DomainError("|rho|^2 must be non-negative");
  if (!(p_.weyl_const > 0.0)) throw DomainError("Weyl constant must be positive");
  if (!(p_.jitter >= 0.0 && p_.jitter < 1.0)) throw DomainError("jitter must lie in [0, 1)");
  if (!(p_.analyticity_radius > 0.0)) throw DomainError("analyticity radius must be positive");
  if (p_.n_modes < 1 + p_.low_spectrum.size()) throw DomainError("n_modes too small for the low spectrum");
  for (std::size_t i = 0; i < p_.low_spectrum.size(); ++i) {
    const double v = p_.low_spectrum[i];
    if (!(v >= 0.0 && v < p_.rho_sq))
      throw DomainError("low_spectrum value " + std::to_string(v) + " is outside [0, |rho|^2)");
    if (i > 0 && v < p_.low_spectrum[i - 1]) throw DomainError("low_spectrum must be sorted");
  }

  eigenvalues_.reserve(p_.n_modes);
  eigenvalues_.push_back(0.0);
  for (double v : p_.low_spectrum) eigenvalues_.push_back(v);
  std::mt19937_64 rng(p_.seed);
  const double exponent = 2.0 / p_.d;
  for (std::size_t n = eigenvalues_.size(); n < p_.n_modes; ++n) {
    const double u = p_.jitter * portable_uniform(rng());
    eigenvalues_.push_back(p_.weyl_const * std::pow(static_cast<double>(n) + u, exponent));
  }
  const std::size_t first_tail = 1 + p_.low_spectrum.size();
  if (first_tail < eigenvalues_.size() && eigenvalues_[first_tail] < eigenvalues_[first_tail - 1])
    throw DomainError("Weyl tail starts below the low spectrum; increase weyl_const");
}

double SyntheticQuotientModel::sup_norm_bound(std::size_t n) const {
  const double nn = static_cast<double>(std::max<std::size_t>(n, 1));
  return p_.sup_constant * std::pow(nn, (p_.d - 1.0) / (2.0 * p_.d));
}

std::shared_ptr<const SyntheticQuotientModel> synthetic_quotient_model(SyntheticParams params) {
  return std::make_shared<const SyntheticQuotientModel>(std::move(params));
}

// EuclideanEigenfunction ----------------------------------------------------

double EuclideanEigenfunction::operator()(std::span<const double> y) const {
  if (y.size() != k.size()) throw DomainError("point has the wrong dimension");
  double dot = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) dot += k[i] * y[i];
  return kind == Kind::PlaneWave ? std::cos(dot + phase) : std::exp(dot);
}

EuclideanEigenfunction euclidean_ball_eigenfunction(std::vector<double> k, EuclideanEigenfunction::Kind kind,
                                                    double phase) {
  if (k.empty()) throw DomainError("wave vector must have positive dimension");
  double k2 = 0.0;
  for (double v : k) k2 += v * v;
  EuclideanEigenfunction psi;
  psi.kind = kind;
  psi.k = std::move(k);
  psi.phase = kind == EuclideanEigenfunction::Kind::PlaneWave ? phase : 0.0;
  psi.sigma = kind == EuclideanEigenfunction::Kind::PlaneWave ? -k2 : k2;
  return psi;
}

// SpectralFunction -----------------------------------------------------------

SpectralFunction::SpectralFunction(std::shared_ptr<const SpectralModel> model, std::vector<Complex> coefficients)
    : model_(std::move(model)), coeffs_(std::move(coefficients)) {
  if (!model_) throw DomainError("spectral function needs a model");
  if (coeffs_.size() > model_->size())
    throw DomainError("more coefficients (" + std::to_string(coeffs_.size()) + ") than model modes (" +
                      std::to_string(model_->size()) + ")");
  for (const auto& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("coefficients must be finite");
}

SpectralFunction SpectralFunction::zero(std::shared_ptr<const SpectralModel> model) {
  return SpectralFunction(std::move(model), {});
}

SpectralFunction SpectralFunction::eigenfunction(std::shared_ptr<const SpectralModel> model, std::size_t n,
                                                 Complex amplitude) {
  std::vector<Complex> c(n + 1, 0.0);
  c[n] = amplitude;
  return SpectralFunction(std::move(model), std::move(c));
}

SpectralFunction SpectralFunction::random(std::shared_ptr<const SpectralModel> model, std::size_t n_active,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> c(n_active);
  for (auto& v : c) {
    // Box-Muller on portable uniforms.
    const double u1 = 1.0 - portable_uniform(rng());
    const double u2 = portable_uniform(rng());
    const double r = std::sqrt(-2.0 * std::log(u1));
    v = Complex(r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)) / std::sqrt(2.0);
  }
  return SpectralFunction(std::move(model), std::move(c));
}

double SpectralFunction::norm_sq() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

double SpectralFunction::max_active_eigenvalue() const {
  double m = 0.0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (coeffs_[n] != Complex(0.0)) m = std::max(m, model_->eigenvalue(n));
  return m;
}

double SpectralFunction::sobolev_order() const { return std::numeric_limits<double>::infinity(); }

Complex SpectralFunction::evaluate(std::span<const double> x) const {
  Complex acc = 0.0;
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    if (coeffs_[n] != Complex(0.0)) acc += coeffs_[n] * model_->eigenfunction_real(n, x);
  return acc;
}

}  // namespace sbq::models
