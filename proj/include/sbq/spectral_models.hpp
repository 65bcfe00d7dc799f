#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sbq::models {

using Complex = std::complex<double>;

/// Quadrature over the base manifold: points (row-major, dim per point) and weights.
struct BaseRule {
  int dim = 0;
  std::vector<double> points;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> point(std::size_t i) const {
    return {points.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

/// Eigen-decomposition oracle for -Laplacian on a compact manifold.
///
/// Modes are indexed by a flat n with nondecreasing eigenvalues and eigenvalue(0) == 0.
/// Evaluation capabilities are optional: the synthetic quotient model supplies only its
/// spectrum and throws CapabilityError on any eigenfunction request.
class SpectralModel {
 public:
  virtual ~SpectralModel() = default;

  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  virtual double rho_sq() const = 0;
  /// Radius R0 below which complexified evaluation is available (infinity for entire models).
  virtual double analyticity_radius() const = 0;
  virtual std::size_t size() const = 0;
  virtual double eigenvalue(std::size_t n) const = 0;
  virtual double sup_norm_bound(std::size_t n) const = 0;

  virtual bool has_real_evaluation() const { return false; }
  virtual bool has_complex_evaluation() const { return false; }

  virtual Complex eigenfunction_real(std::size_t n, std::span<const double> x) const;
  /// psi_n(exp_x iY), the holomorphic extension evaluated at the tangent vector Y at x.
  virtual Complex eigenfunction_complex(std::size_t n, std::span<const double> x,
                                        std::span<const double> y) const;
  /// Upper bound for |psi_n(exp_x iY)| over x, given |Y|.
  virtual double complex_growth_bound(std::size_t n, double y_norm) const;
  /// Bound for sum over modes beyond size() of e^{-t lambda/2} |psi(exp_x iY)|.
  virtual double truncation_tail_bound(double t, double y_norm) const;
  /// Index m with psi_m = conj(psi_n) on the base, when the basis is closed under conjugation.
  virtual std::optional<std::size_t> conjugate_mode(std::size_t n) const;

  virtual const BaseRule& base_rule() const;
  Complex integrate(const std::function<Complex(std::span<const double>)>& g) const;

 protected:
  [[noreturn]] void missing(const std::string& capability) const;
};

/// Flat torus R^d / Z^d with psi_k(x) = e^{2 pi i k.x}, lambda_k = 4 pi^2 |k|^2, |rho| = 0.
/// exp_x(iY) = x + iY, so the complexification is entire.
class TorusModel final : public SpectralModel {
 public:
  TorusModel(std::string name, int d, std::vector<std::vector<int>> modes, int grid_per_axis);

  std::string name() const override { return name_; }
  int dim() const override { return d_; }
  double rho_sq() const override { return 0.0; }
  double analyticity_radius() const override;
  std::size_t size() const override { return modes_.size(); }
  double eigenvalue(std::size_t n) const override;
  double sup_norm_bound(std::size_t) const override { return 1.0; }
  bool has_real_evaluation() const override { return true; }
  bool has_complex_evaluation() const override { return true; }
  Complex eigenfunction_real(std::size_t n, std::span<const double> x) const override;
  Complex eigenfunction_complex(std::size_t n, std::span<const double> x, std::span<const double> y) const override;
  double complex_growth_bound(std::size_t n, double y_norm) const override;
  double truncation_tail_bound(double t, double y_norm) const override;
  std::optional<std::size_t> conjugate_mode(std::size_t n) const override;
  const BaseRule& base_rule() const override { return rule_; }

  const std::vector<int>& mode(std::size_t n) const { return modes_.at(n); }
  std::optional<std::size_t> index_of(const std::vector<int>& k) const;
  int max_abs_mode() const { return max_k_; }

 private:
  std::string name_;
  int d_;
  std::vector<std::vector<int>> modes_;
  std::vector<double> eigenvalues_;
  int max_k_ = 0;
  BaseRule rule_;
};

/// Spectrum-only stand-in for a compact quotient: lambda_0 = 0, the supplied low
/// eigenvalues in [0, |rho|^2), then a Weyl-law tail weyl_const * (n + u_n)^{2/d} with
/// seeded jitter u_n in [0, jitter). Sup norms follow C2 n^{(d-1)/2d}.
struct SyntheticParams {
  int d = 3;
  double rho_sq = 1.0;
  double weyl_const = 1.0;
  std::size_t n_modes = 2000;
  std::vector<double> low_spectrum = {0.5};
  std::uint64_t seed = 1;
  double jitter = 0.0;
  double sup_constant = 1.0;
  /// Free parameter: results that use it are conditional on this value.
  double analyticity_radius = 1.0;
};

class SyntheticQuotientModel final : public SpectralModel {
 public:
  explicit SyntheticQuotientModel(SyntheticParams params);

  std::string name() const override { return "synthetic"; }
  int dim() const override { return p_.d; }
  double rho_sq() const override { return p_.rho_sq; }
  double analyticity_radius() const override { return p_.analyticity_radius; }
  std::size_t size() const override { return eigenvalues_.size(); }
  double eigenvalue(std::size_t n) const override { return eigenvalues_.at(n); }
  double sup_norm_bound(std::size_t n) const override;
  const SyntheticParams& params() const { return p_; }

 private:
  SyntheticParams p_;
  std::vector<double> eigenvalues_;
};

/// Circle R/Z with modes ordered k = 0, +1, -1, +2, -2, ...; grid_points = 0 picks
/// 4 * max|k| points (at least 8).
std::shared_ptr<const TorusModel> circle_model(std::size_t n_modes = 64, int grid_points = 0);

/// Torus with k in {-m..m}^d, m = (n_modes_per_axis - 1) / 2, sorted by |k|^2 and then
/// lexicographically inside each shell.
std::shared_ptr<const TorusModel> torus_model(int d, int n_modes_per_axis = 15, int grid_per_axis = 0);

std::shared_ptr<const SyntheticQuotientModel> synthetic_quotient_model(SyntheticParams params);

/// Eigenfunction of the Euclidean Laplacian on R^d with Laplacian = sigma * Psi.
struct EuclideanEigenfunction {
  enum class Kind { PlaneWave, Exponential };
  Kind kind = Kind::Exponential;
  std::vector<double> k;
  double phase = 0.0;
  double sigma = 0.0;

  double operator()(std::span<const double> y) const;
};

/// PlaneWave: cos(k.Y + phase), sigma = -|k|^2. Exponential: exp(k.Y), sigma = |k|^2.
EuclideanEigenfunction euclidean_ball_eigenfunction(std::vector<double> k, EuclideanEigenfunction::Kind kind,
                                                    double phase = 0.0);

/// f = sum a_n psi_n over a model's eigenbasis.
class SpectralFunction {
 public:
  SpectralFunction(std::shared_ptr<const SpectralModel> model, std::vector<Complex> coefficients);

  static SpectralFunction zero(std::shared_ptr<const SpectralModel> model);
  static SpectralFunction eigenfunction(std::shared_ptr<const SpectralModel> model, std::size_t n,
                                        Complex amplitude = 1.0);
  /// Complex Gaussian coefficients on the first n_active modes, deterministic in the seed.
  static SpectralFunction random(std::shared_ptr<const SpectralModel> model, std::size_t n_active,
                                 std::uint64_t seed);

  const SpectralModel& model() const { return *model_; }
  const std::shared_ptr<const SpectralModel>& model_ptr() const { return model_; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  double norm_sq() const;
  /// Largest eigenvalue carrying a nonzero coefficient (0 for the zero function).
  double max_active_eigenvalue() const;
  /// Sobolev order l with sum |a_n|^2 lambda_n^{2l} finite. Infinite for finite vectors.
  double sobolev_order() const;

  Complex evaluate(std::span<const double> x) const;

 private:
  std::shared_ptr<const SpectralModel> model_;
  std::vector<Complex> coeffs_;
};

/// Uniform double in [0, 1) from the top 53 bits, identical across standard libraries.
double portable_uniform(std::uint64_t bits);

}  // namespace sbq::models
