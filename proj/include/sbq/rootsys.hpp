#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sbq::rootsys {

enum class Family { A1, A1xA1, A2, Custom };

/// Positive restricted roots of a complex-type symmetric space.
///
/// Roots are stored as vectors in a = R^rank via the inner product, so alpha(H) is a
/// dot product. Every multiplicity is 2, hence dim = rank + 2 |R+| and
/// rho = sum of the positive roots.
struct RootSystemData {
  std::string name;
  int rank = 0;
  std::vector<std::vector<double>> positive_roots;
  std::vector<int> multiplicity;
  int dim = 0;
  std::vector<double> rho;
  double rho_norm_sq = 0.0;
  /// Normalisation of the polar density; see polar_density().
  double polar_constant = 1.0;
};

/// Builds one of the shipped rank <= 2 systems or a validated custom one.
///
/// Conventions (the metric on p is a free choice): A1 uses a unit root, which gives
/// j^c(Y) = (sin|Y|/|Y|)^2, |rho|^2 = 1 and d = 3, i.e. hyperbolic 3-space with
/// curvature -1. A1xA1 is the orthogonal sum of two such copies; A2 uses unit roots.
/// A custom system with no roots needs `custom_rank` and is the flat case.
RootSystemData build_root_system(Family family, const std::vector<std::vector<double>>& custom_roots = {},
                                 int custom_rank = 0);

std::optional<Family> parse_family(const std::string& name);

/// A point of the closed fundamental chamber; membership is checked on construction.
class RadialPoint {
 public:
  RadialPoint(const RootSystemData& sys, std::vector<double> h);
  const std::vector<double>& h() const noexcept { return h_; }

 private:
  std::vector<double> h_;
};

bool in_closed_chamber(const RootSystemData& sys, std::span<const double> h, double slack = 0.0);

double root_value(std::span<const double> root, std::span<const double> h);

/// Reflection of h across the hyperplane orthogonal to `root`.
std::vector<double> reflect(std::span<const double> root, std::span<const double> h);

// The radial Jacobians accept any H in a; they are Weyl invariant.

/// j(H) = prod (sinh a(H) / a(H))^2.
double j_radial(const RootSystemData& sys, std::span<const double> h);
/// j(iH) for the compact-group picture; same product as j_radial.
double j_nc_radial(const RootSystemData& sys, std::span<const double> h);
/// j^c(H) = prod (sin a(H) / a(H))^2.
double j_c_radial(const RootSystemData& sys, std::span<const double> h);
/// The real-analytic (signed) root prod sin a(H) / a(H), positive near 0.
double j_c_half_radial(const RootSystemData& sys, std::span<const double> h);
/// Entire extension of j to complex H.
std::complex<double> j_radial_complex(const RootSystemData& sys, std::span<const std::complex<double>> h);

/// Density mu of generalized polar coordinates: c_sys * prod a(H)^2 on the chamber, with
/// c_sys chosen so that integrating a radial function over p equals integrating it
/// against mu over the chamber.
double polar_density(const RootSystemData& sys, const RadialPoint& h);

double sinhc(double u);
double sinc(double u);

}  // namespace sbq::rootsys
