#include "sbq/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "sbq/errors.hpp"
#include "sbq/multiplier.hpp"
#include "sbq/parallel.hpp"

namespace sbq::transform {

namespace {

constexpr double kPi = std::numbers::pi;

struct Active {
  std::size_t n;
  Complex a;
  double lambda;
};

std::vector<Active> active_modes(const SpectralFunction& f) {
  std::vector<Active> out;
  const auto& c = f.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n)
    if (c[n] != Complex(0.0)) out.push_back({n, c[n], f.model().eigenvalue(n)});
  return out;
}

double norm2(std::span<const double> y) {
  double s = 0.0;
  for (double v : y) s += v * v;
  return std::sqrt(s);
}

void check_grid(std::span<const double> r_grid) {
  if (r_grid.empty()) throw DomainError("R grid is empty");
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > 0.0)) throw DomainError("R grid values must be positive");
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) throw DomainError("R grid must be strictly increasing");
  }
}

// grid plus r_inf when the grid stops short of it
std::vector<double> extend_grid(std::span<const double> r_grid, double r_inf) {
  std::vector<double> g(r_grid.begin(), r_grid.end());
  if (g.back() < r_inf) g.push_back(r_inf);
  return g;
}

// alpha_{t,R}(lambda) for every (R, distinct lambda); rows follow `radii`.
std::vector<std::map<double, double>> alpha_table(const std::vector<Active>& act, const SpectralModel& m,
                                                  const HeatParams& p, const std::vector<double>& radii,
                                                  const QuadratureSettings& s) {
  std::vector<double> lambdas;
  for (const auto& a : act) lambdas.push_back(a.lambda);
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
  const std::size_t nl = lambdas.size();
  std::vector<double> values(radii.size() * nl);
  parallel_for(values.size(), [&](std::size_t i) {
    multiplier::MultiplierQuery q{p.t, radii[i / nl], lambdas[i % nl], m.rho_sq(), m.dim()};
    values[i] = multiplier::alpha(q, s);
  });
  std::vector<std::map<double, double>> out(radii.size());
  for (std::size_t r = 0; r < radii.size(); ++r)
    for (std::size_t j = 0; j < nl; ++j) out[r][lambdas[j]] = values[r * nl + j];
  return out;
}

const models::TorusModel& flat_model(const SpectralModel& m, const char* what) {
  const auto* torus = dynamic_cast<const models::TorusModel*>(&m);
  if (!torus) throw CapabilityError(what, m.name());
  return *torus;
}

void check_radius(const SpectralModel& m, double R) {
  if (!(R > 0.0)) throw DomainError("R must be positive");
  if (!(R < m.analyticity_radius()))
    throw DomainError("R = " + std::to_string(R) + " is not below the analyticity radius of model '" + m.name() + "'");
}

Complex heat_sum_complex(const std::vector<Active>& act, const SpectralModel& m, double t, std::span<const double> x,
                         std::span<const double> y) {
  Complex acc = 0.0;
  for (const auto& a : act) acc += std::exp(-0.5 * t * a.lambda) * a.a * m.eigenfunction_complex(a.n, x, y);
  return acc;
}

double gaussian_weight(double r2, double variance, int d) {
  return std::exp(-r2 / (2.0 * variance)) / std::pow(2.0 * kPi * variance, 0.5 * d);
}

}  // namespace

void HeatParams::validate() const {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat time t must be positive and finite");
}

SpectralFunction heat(const SpectralFunction& f, const HeatParams& p) {
  p.validate();
  std::vector<Complex> c = f.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) c[n] *= std::exp(-0.5 * p.t * f.model().eigenvalue(n));
  return SpectralFunction(f.model_ptr(), std::move(c));
}

SbValue sb_eval(const SpectralFunction& f, const HeatParams& p, std::span<const double> x, std::span<const double> y) {
  p.validate();
  const SpectralModel& m = f.model();
  if (!m.has_complex_evaluation()) throw CapabilityError("complexified eigenfunction evaluation", m.name());
  const double y_norm = norm2(y);
  if (!(y_norm < m.analyticity_radius()))
    throw DomainError("|Y| = " + std::to_string(y_norm) + " is not below the analyticity radius");

  Complex sum = 0.0;
  double abs_sum = 0.0;
  double max_coeff = 0.0;
  for (const auto& a : active_modes(f)) {
    const Complex term = std::exp(-0.5 * p.t * a.lambda) * a.a * m.eigenfunction_complex(a.n, x, y);
    sum += term;
    abs_sum += std::abs(term);
    max_coeff = std::max(max_coeff, std::abs(a.a));
  }
  const double tail = max_coeff > 0.0 ? max_coeff * m.truncation_tail_bound(p.t, y_norm) : 0.0;
  if (tail > 1e-8 * abs_sum) throw ConvergenceError("truncation tail exceeds 1e-8 of the partial sum", tail);
  return {sum, tail};
}

Complex partial_inversion_geometric(const SpectralFunction& f, const HeatParams& p, double R,
                                    std::span<const double> x, int nodes_per_axis) {
  p.validate();
  const SpectralModel& m = f.model();
  flat_model(m, "geometric partial inversion (flat complexified base)");
  check_radius(m, R);
  const int d = m.dim();
  // refuse before integrating if the model truncation matters anywhere on the ball
  std::vector<double> edge(static_cast<std::size_t>(d), 0.0);
  edge[0] = R;
  sb_eval(f, p, x, edge);

  const auto act = active_modes(f);
  const BallRule ball = ball_product_rule(d, R, nodes_per_axis);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto y = ball.point(i);
    const double r = norm2(y);
    acc += ball.weights[i] * gaussian_weight(r * r, p.t, d) * heat_sum_complex(act, m, p.t, x, y);
  }
  return std::exp(0.5 * p.t * m.rho_sq()) * acc;
}

SpectralFunction partial_inversion_spectral(const SpectralFunction& f, const HeatParams& p, double R,
                                            const QuadratureSettings& s) {
  p.validate();
  const auto act = active_modes(f);
  const auto table = alpha_table(act, f.model(), p, {R}, s);
  std::vector<Complex> c(f.size(), 0.0);
  for (const auto& a : act) c[a.n] = table[0].at(a.lambda) * a.a;
  return SpectralFunction(f.model_ptr(), std::move(c));
}

double r_infinity(const SpectralFunction& f, const HeatParams& p) {
  p.validate();
  const SpectralModel& m = f.model();
  double lam_max = f.max_active_eigenvalue();
  const double ra = multiplier::r_infinity(p.t, lam_max, m.rho_sq(), m.dim());
  const double rb = 0.5 * multiplier::r_infinity(2.0 * p.t, lam_max, m.rho_sq(), m.dim());
  return std::max(ra, rb);
}

std::vector<double> default_r_grid(double r_inf) { return geometric_grid(0.05, std::max(r_inf, 0.1), 40); }

double sobolev_gate_epsilon(double l, int d) {
  if (std::isinf(l)) return l;
  return 2.0 * l / d - (d - 1.0) / (2.0 * d) - 1.0;
}

double sobolev_gate_threshold(int d) { return (3.0 * d * d - d) / 4.0; }

SobolevGate sobolev_gate(const SpectralFunction& f, double l) {
  const SpectralModel& m = f.model();
  SobolevGate g;
  g.d = m.dim();
  g.l = l;
  g.epsilon = sobolev_gate_epsilon(l, g.d);
  g.threshold = sobolev_gate_threshold(g.d);
  g.epsilon_positive = g.epsilon > 0.0;
  g.above_threshold = l > g.threshold;
  for (const auto& a : active_modes(f)) g.m_series_bound += std::abs(a.a) * m.sup_norm_bound(a.n);
  return g;
}

bool eventually_decreasing(const std::vector<double>& values, double slack) {
  if (values.size() < 2) return true;
  return nonincreasing_from(values, values.size() / 2, slack);
}

InversionReport global_inversion_l2(const SpectralFunction& f, const HeatParams& p, std::span<const double> r_grid,
                                    const QuadratureSettings& s) {
  p.validate();
  check_grid(r_grid);
  InversionReport rep;
  rep.r_inf = r_infinity(f, p);
  rep.r_grid = extend_grid(r_grid, rep.r_inf);
  const auto act = active_modes(f);
  const auto table = alpha_table(act, f.model(), p, rep.r_grid, s);
  const double norm_sq = f.norm_sq();

  rep.table.name = "invert-l2";
  rep.table.columns = {"R", "error_sq", "relative_error"};
  std::vector<double> err_sq;
  for (std::size_t r = 0; r < rep.r_grid.size(); ++r) {
    double e = 0.0;
    for (const auto& a : act) {
      const double gap = 1.0 - table[r].at(a.lambda);
      e += gap * gap * std::norm(a.a);
    }
    err_sq.push_back(e);
    const double rel = norm_sq > 0.0 ? std::sqrt(e / norm_sq) : 0.0;
    rep.errors.push_back(rel);
    rep.table.add_row({rep.r_grid[r], e, rel});
  }
  // final error at r_inf itself, even when the grid runs past it
  if (rep.r_grid.back() == rep.r_inf) {
    rep.final_error = rep.errors.back();
  } else {
    const auto at_inf = alpha_table(act, f.model(), p, {rep.r_inf}, s);
    double e = 0.0;
    for (const auto& a : act) {
      const double gap = 1.0 - at_inf[0].at(a.lambda);
      e += gap * gap * std::norm(a.a);
    }
    rep.final_error = norm_sq > 0.0 ? std::sqrt(e / norm_sq) : 0.0;
  }
  rep.eventually_decreasing = eventually_decreasing(err_sq, 1e-20 * norm_sq);
  rep.table.add_metadata("r_inf", std::to_string(rep.r_inf));
  return rep;
}

InversionReport global_inversion_pointwise(const SpectralFunction& f, const HeatParams& p,
                                           std::span<const double> r_grid,
                                           const std::vector<std::vector<double>>& probes,
                                           std::optional<double> declared_l, const QuadratureSettings& s) {
  p.validate();
  check_grid(r_grid);
  const SpectralModel& m = f.model();
  if (!m.has_real_evaluation()) throw CapabilityError("real eigenfunction evaluation", m.name());
  if (probes.empty()) throw DomainError("pointwise inversion needs at least one probe point");

  InversionReport rep;
  rep.gate = sobolev_gate(f, declared_l.value_or(f.sobolev_order()));
  if (!rep.gate->epsilon_positive)
    rep.warnings.push_back("Sobolev gate: epsilon = " + std::to_string(rep.gate->epsilon) +
                           " <= 0, uniform convergence is not guaranteed by the series bound");
  rep.r_inf = r_infinity(f, p);
  rep.r_grid = extend_grid(r_grid, rep.r_inf);
  const auto act = active_modes(f);
  const auto table = alpha_table(act, m, p, rep.r_grid, s);

  std::vector<std::vector<Complex>> psi(probes.size());
  std::vector<Complex> fx(probes.size(), 0.0);
  for (std::size_t j = 0; j < probes.size(); ++j) {
    for (const auto& a : act) {
      psi[j].push_back(m.eigenfunction_real(a.n, probes[j]));
      fx[j] += a.a * psi[j].back();
    }
  }

  rep.table.name = "invert-pointwise";
  rep.table.columns = {"R"};
  for (std::size_t j = 0; j < probes.size(); ++j) rep.table.columns.push_back("probe" + std::to_string(j));
  rep.table.columns.push_back("sup_error");
  rep.table.columns.push_back("sup_error_bound");

  std::vector<double> sup_sq;
  for (std::size_t r = 0; r < rep.r_grid.size(); ++r) {
    std::vector<double> row = {rep.r_grid[r]};
    double sup = 0.0;
    for (std::size_t j = 0; j < probes.size(); ++j) {
      Complex afx = 0.0;
      for (std::size_t i = 0; i < act.size(); ++i) afx += table[r].at(act[i].lambda) * act[i].a * psi[j][i];
      const double e = std::abs(fx[j] - afx);
      row.push_back(e);
      sup = std::max(sup, e);
    }
    double bound = 0.0;
    for (const auto& a : act) bound += std::abs(1.0 - table[r].at(a.lambda)) * std::abs(a.a) * m.sup_norm_bound(a.n);
    row.push_back(sup);
    row.push_back(bound);
    rep.errors.push_back(sup);
    sup_sq.push_back(sup * sup);
    rep.table.add_row(std::move(row));
  }
  rep.final_error = rep.errors.back();
  if (rep.r_grid.back() != rep.r_inf) {
    const auto at_inf = alpha_table(act, m, p, {rep.r_inf}, s);
    double sup = 0.0;
    for (std::size_t j = 0; j < probes.size(); ++j) {
      Complex afx = 0.0;
      for (std::size_t i = 0; i < act.size(); ++i) afx += at_inf[0].at(act[i].lambda) * act[i].a * psi[j][i];
      sup = std::max(sup, std::abs(fx[j] - afx));
    }
    rep.final_error = sup;
  }
  const double scale = rep.gate->m_series_bound;
  rep.eventually_decreasing = eventually_decreasing(sup_sq, 1e-20 * scale * scale);
  rep.table.add_metadata("r_inf", std::to_string(rep.r_inf));
  rep.table.add_metadata("sobolev_epsilon", std::to_string(rep.gate->epsilon));
  rep.table.add_metadata("sobolev_threshold", std::to_string(rep.gate->threshold));
  rep.table.add_metadata("m_series_bound", std::to_string(rep.gate->m_series_bound));
  for (const auto& w : rep.warnings) rep.table.add_metadata("warning", w);
  return rep;
}

namespace {

double damped_beta(double t, double R, double lambda, const SpectralModel& m, const QuadratureSettings& s) {
  multiplier::MultiplierQuery q{t, R, lambda, m.rho_sq(), m.dim()};
  const double b = multiplier::beta(q, s);
  if (std::isfinite(b)) return std::exp(-0.5 * t * lambda) * b;
  // e^{-t lambda/2} beta_{t,R} = alpha_{2t,2R} when beta itself overflows
  q.t = 2.0 * t;
  q.R = 2.0 * R;
  return multiplier::alpha(q, s);
}

}  // namespace

double isometry_G_at(const SpectralFunction& f, const HeatParams& p, double R, const QuadratureSettings& s) {
  p.validate();
  const auto act = active_modes(f);
  std::map<double, double> cache;
  double g = 0.0;
  for (const auto& a : act) {
    auto it = cache.find(a.lambda);
    if (it == cache.end()) it = cache.emplace(a.lambda, damped_beta(p.t, R, a.lambda, f.model(), s)).first;
    g += std::norm(a.a) * it->second;
  }
  return g;
}

IsometryReport isometry_G(const SpectralFunction& f, const HeatParams& p, std::span<const double> r_grid,
                          const QuadratureSettings& s) {
  p.validate();
  check_grid(r_grid);
  IsometryReport rep;
  rep.table.name = "isometry";
  rep.table.columns = {"R", "G"};
  std::vector<double> radii(r_grid.begin(), r_grid.end());
  rep.r_inf = r_infinity(f, p);
  radii.push_back(rep.r_inf);
  std::vector<double> values(radii.size());
  parallel_for(radii.size(), [&](std::size_t i) { values[i] = isometry_G_at(f, p, radii[i], s); });
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) rep.table.add_row({radii[i], values[i]});
  rep.limit = values.back();
  rep.norm_sq = f.norm_sq();
  rep.relative_error = std::abs(rep.limit - rep.norm_sq) / (rep.norm_sq > 0.0 ? rep.norm_sq : 1.0);
  rep.table.add_metadata("r_inf", std::to_string(rep.r_inf));
  return rep;
}

double isometry_geometric(const SpectralFunction& f, const HeatParams& p, double R, int nodes_per_axis) {
  p.validate();
  const SpectralModel& m = f.model();
  flat_model(m, "geometric isometry (flat complexified base)");
  check_radius(m, R);
  const int d = m.dim();
  const auto act = active_modes(f);
  if (act.empty()) return 0.0;
  const models::BaseRule& base = m.base_rule();
  std::vector<double> edge(static_cast<std::size_t>(d), 0.0);
  edge[0] = R;
  sb_eval(f, p, base.point(0), edge);

  const BallRule ball = ball_product_rule(d, R, nodes_per_axis);
  std::vector<double> wy(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const double r = norm2(ball.point(i));
    // e^{-|Y|^2/t} / (pi t)^{d/2} is the Gaussian of variance t/2
    wy[i] = ball.weights[i] * gaussian_weight(r * r, 0.5 * p.t, d);
  }
  std::vector<double> per_x(base.size());
  parallel_for(base.size(), [&](std::size_t k) {
    const auto x = base.point(k);
    double acc = 0.0;
    for (std::size_t i = 0; i < ball.size(); ++i) acc += wy[i] * std::norm(heat_sum_complex(act, m, p.t, x, ball.point(i)));
    per_x[k] = base.weights[k] * acc;
  });
  double total = 0.0;
  for (double v : per_x) total += v;
  return std::exp(p.t * m.rho_sq()) * total;
}

Reconstruction surjectivity_reconstruct(std::shared_ptr<const SpectralModel> model,
                                        const std::vector<Complex>& F_coefficients, const HeatParams& p) {
  p.validate();
  if (!model) throw DomainError("surjectivity reconstruction needs a model");
  std::vector<Complex> c(F_coefficients.size());
  double predicted = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const double lam = model->eigenvalue(n);
    c[n] = F_coefficients[n] * std::exp(0.5 * p.t * lam);
    predicted += std::norm(F_coefficients[n]) * std::exp(p.t * lam);
  }
  if (!std::isfinite(predicted)) throw DomainError("sum |a_n|^2 e^{t lambda_n} is not finite");
  return {SpectralFunction(std::move(model), std::move(c)), predicted};
}

double RadialProfile::operator()(double r) const {
  switch (kind) {
    case Kind::Gaussian:
      return std::exp(-r * r / (2.0 * scale));
    case Kind::Constant:
      return scale;
    case Kind::Custom:
      return custom(r);
  }
  return 0.0;
}

RadialProfile RadialProfile::gaussian(double variance) {
  if (!(variance > 0.0)) throw DomainError("Gaussian profile variance must be positive");
  return {Kind::Gaussian, variance, {}};
}

RadialProfile RadialProfile::constant(double value) { return {Kind::Constant, value, {}}; }

RadialProfile RadialProfile::from_function(std::function<double(double)> g) {
  if (!g) throw DomainError("custom profile is empty");
  return {Kind::Custom, 1.0, std::move(g)};
}

Lemma5Result lemma5_check(const models::EuclideanEigenfunction& psi, const RadialProfile& beta, double R, int d,
                          const Lemma5Budget& budget, const QuadratureSettings& s) {
  if (d < 1) throw DomainError("dimension must be positive");
  if (!(R > 0.0)) throw DomainError("R must be positive");
  if (static_cast<int>(psi.k.size()) != d) throw DomainError("eigenfunction dimension does not match d");

  Lemma5Result res;
  auto integrand = [&](std::span<const double> y) { return psi(y) * beta(norm2(y)); };
  if (d <= budget.max_product_dim) {
    if (budget.nodes_per_axis < 16) throw DomainError("product rule needs at least 16 nodes per axis");
    auto product = [&](int n) {
      const BallRule ball = ball_product_rule(d, R, n);
      double acc = 0.0;
      for (std::size_t i = 0; i < ball.size(); ++i) acc += ball.weights[i] * integrand(ball.point(i));
      return acc;
    };
    res.lhs = product(budget.nodes_per_axis);
    res.lhs_error = std::abs(res.lhs - product(budget.nodes_per_axis - 8));
  } else {
    if (budget.mc_samples < 2) throw DomainError("Monte Carlo budget must be at least 2 samples");
    std::mt19937_64 rng(budget.seed);
    auto normal = [&] {
      const double u1 = 1.0 - models::portable_uniform(rng());
      const double u2 = models::portable_uniform(rng());
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    };
    const double volume = std::pow(R, d) * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
    std::vector<double> y(static_cast<std::size_t>(d));
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < budget.mc_samples; ++i) {
      double r2 = 0.0;
      for (double& v : y) {
        v = normal();
        r2 += v * v;
      }
      const double radius = R * std::pow(models::portable_uniform(rng()), 1.0 / d) / std::sqrt(r2);
      for (double& v : y) v *= radius;
      const double val = integrand(y);
      const double delta = val - mean;
      mean += delta / static_cast<double>(i + 1);
      m2 += delta * (val - mean);
    }
    const double n = static_cast<double>(budget.mc_samples);
    res.lhs = volume * mean;
    res.lhs_error = volume * std::sqrt(m2 / (n - 1.0) / n);
    res.monte_carlo = true;
  }

  std::vector<double> origin(static_cast<std::size_t>(d), 0.0);
  const double psi0 = psi(origin);
  if (beta.kind == RadialProfile::Kind::Gaussian) {
    const Complex c = psi.sigma >= 0.0 ? Complex(std::sqrt(psi.sigma), 0.0) : Complex(0.0, std::sqrt(-psi.sigma));
    res.rhs = psi0 * std::pow(2.0 * kPi * beta.scale, 0.5 * d) * multiplier::reduce_ball_integral(c, beta.scale, R, d, s);
  } else {
    res.rhs = psi0 * multiplier::radial_ball_integral(psi.sigma, [&](double r) { return beta(r); }, R, d, s);
  }
  res.difference = std::abs(res.lhs - res.rhs);
  return res;
}

namespace {

int circle_k(std::size_t n) {
  if (n == 0) return 0;
  const int h = static_cast<int>((n + 1) / 2);
  return n % 2 == 1 ? h : -h;
}

Complex circle_eval(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n)
    if (c[n] != Complex(0.0)) acc += c[n] * std::exp(Complex(0.0, 2.0 * kPi * circle_k(n)) * z);
  return acc;
}

}  // namespace

HoloChangeResult holo_change_check_circle(const std::vector<Complex>& F1, const std::vector<Complex>& F2,
                                          const std::function<double(double)>& alpha_profile, double R, int y_nodes) {
  if (!(R > 0.0)) throw DomainError("R must be positive");
  if (!alpha_profile) throw DomainError("alpha profile is empty");
  const int kmax = static_cast<int>((F1.size() + 1) / 2 + (F2.size() + 1) / 2);
  const int nx = std::max(16, 4 * kmax);
  const GaussRule gy = gauss_legendre(y_nodes, -2.0 * R, 2.0 * R);
  Complex lhs = 0.0;
  Complex rhs = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double x = static_cast<double>(i) / nx;
    const Complex f1x = std::conj(circle_eval(F1, x));
    Complex inner_l = 0.0;
    Complex inner_r = 0.0;
    for (std::size_t j = 0; j < gy.nodes.size(); ++j) {
      const double y = gy.nodes[j];
      const double w = gy.weights[j] * alpha_profile(y);
      inner_l += w * circle_eval(F2, Complex(x, y));
      const Complex half(x, 0.5 * y);
      inner_r += w * std::conj(circle_eval(F1, half)) * circle_eval(F2, half);
    }
    lhs += f1x * inner_l;
    rhs += inner_r;
  }
  lhs /= static_cast<double>(nx);
  rhs /= static_cast<double>(nx);
  return {lhs, rhs, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs))};
}

double positivity_radius(const SpectralModel& model) {
  const double rho_sq = model.rho_sq();
  if (rho_sq <= 0.0) return std::numeric_limits<double>::infinity();
  return kPi / (4.0 * std::sqrt(rho_sq));
}

}  // namespace sbq::transform
