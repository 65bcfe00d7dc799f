#pragma once

#include <functional>
#include <span>
#include <vector>

namespace sbq {

struct QuadratureSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 1 << 15;

  void validate() const;
};

/// Adaptive Gauss-Kronrod integration of a smooth real integrand over [a, b].
/// Throws ConvergenceError when the error estimate stays above the tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSettings& settings);

/// Same, but over consecutive sub-intervals split at `breakpoints` (sorted, inside [a, b]).
double integrate_adaptive(const std::function<double(double)>& f, std::span<const double> breakpoints,
                          const QuadratureSettings& settings);

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b].
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Tensor rule for the closed ball |Y| <= radius in R^d.
///
/// Built by iterating y_k = r_k sin(theta_k) with r_{k+1} = r_k cos(theta_k), so every
/// coordinate is integrated with Gauss-Legendre in theta and the square-root endpoint
/// behaviour of the ball boundary disappears. Points are stored row-major (d per point).
struct BallRule {
  int dim = 0;
  std::vector<double> points;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> point(std::size_t i) const {
    return {points.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

BallRule ball_product_rule(int d, double radius, int nodes_per_axis);

/// Surface area of the unit sphere S^{d-1} in R^d.
double unit_sphere_area(int d);

}  // namespace sbq
