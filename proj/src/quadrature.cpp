#include "sbq/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sbq/errors.hpp"

namespace sbq {

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be at least 1");
}

namespace {

struct Piece {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

Piece gk_piece(const std::function<double(double)>& f, double a, double b, const QuadratureSettings& s) {
  using boost::math::quadrature::gauss_kronrod;
  // A budget of N subdivisions corresponds to a bisection depth of log2(N).
  const auto depth = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(s.max_subdivisions)) - 1);
  Piece p;
  p.value = gauss_kronrod<double, 31>::integrate(f, a, b, depth, s.rel_tol, &p.error, &p.l1);
  return p;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSettings& settings) {
  const double ends[] = {a, b};
  return integrate_adaptive(f, std::span<const double>(ends), settings);
}

double integrate_adaptive(const std::function<double(double)>& f, std::span<const double> breakpoints,
                          const QuadratureSettings& settings) {
  settings.validate();
  auto pass = [&](double tol, double& total, double& total_error, double& total_l1) {
    QuadratureSettings local = settings;
    local.rel_tol = tol;
    total = total_error = total_l1 = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
      const double a = breakpoints[i];
      const double b = breakpoints[i + 1];
      if (!(b > a)) continue;
      const Piece p = gk_piece(f, a, b, local);
      total += p.value;
      total_error += p.error;
      total_l1 += p.l1;
    }
  };
  double total = 0.0;
  double total_error = 0.0;
  double total_l1 = 0.0;
  pass(settings.rel_tol, total, total_error, total_l1);
  if (!std::isfinite(total)) throw ConvergenceError("non-finite quadrature result", total_error);
  double target = std::max(settings.rel_tol * std::abs(total), settings.abs_tol);
  if (total_error > target && total_l1 > 0.0) {
    // cancellation: Boost stops at rel_tol * L1, so ask for the tolerance we actually need
    const double tol = std::max(target / total_l1, 4.0 * std::numeric_limits<double>::epsilon());
    pass(tol, total, total_error, total_l1);
    target = std::max(settings.rel_tol * std::abs(total), settings.abs_tol);
  }
  if (!std::isfinite(total)) throw ConvergenceError("non-finite quadrature result", total_error);
  if (total_error > target) throw ConvergenceError("adaptive quadrature did not converge", total_error);
  return total;
}

GaussRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half * x;
    rule.nodes[hi] = mid + half * x;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  return rule;
}

namespace {

void ball_recurse(int remaining, double radius, double weight, std::vector<double>& prefix,
                  const GaussRule& theta, BallRule& out) {
  if (remaining == 0) {
    out.points.insert(out.points.end(), prefix.begin(), prefix.end());
    out.weights.push_back(weight);
    return;
  }
  for (std::size_t i = 0; i < theta.nodes.size(); ++i) {
    const double c = std::cos(theta.nodes[i]);
    prefix.push_back(radius * std::sin(theta.nodes[i]));
    ball_recurse(remaining - 1, radius * c, weight * radius * c * theta.weights[i], prefix, theta, out);
    prefix.pop_back();
  }
}

}  // namespace

BallRule ball_product_rule(int d, double radius, int nodes_per_axis) {
  if (d < 1) throw DomainError("ball rule dimension must be positive");
  if (!(radius > 0.0)) throw DomainError("ball rule radius must be positive");
  const GaussRule theta = gauss_legendre(nodes_per_axis, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
  BallRule rule;
  rule.dim = d;
  std::size_t count = 1;
  for (int k = 0; k < d; ++k) count *= static_cast<std::size_t>(nodes_per_axis);
  rule.points.reserve(count * static_cast<std::size_t>(d));
  rule.weights.reserve(count);
  std::vector<double> prefix;
  prefix.reserve(static_cast<std::size_t>(d));
  ball_recurse(d, radius, 1.0, prefix, theta, rule);
  return rule;
}

double unit_sphere_area(int d) {
  if (d < 1) throw DomainError("sphere dimension must be positive");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

}  // namespace sbq
