// Acceptance gate: one PASS/FAIL line per criterion, at the contract tolerances.
// Usage: acceptance <id>   or   acceptance --summary-only

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "sbq/errors.hpp"
#include "sbq/multiplier.hpp"
#include "sbq/rootsys.hpp"
#include "sbq/spectral_models.hpp"
#include "sbq/transform.hpp"

namespace {

using namespace sbq;
using models::Complex;
using models::SpectralFunction;
namespace mult = sbq::multiplier;
namespace tr = sbq::transform;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  double time_limit;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const double kTs[] = {0.1, 0.5, 1.0};
const int kDs[] = {1, 3, 6};
const double kRhos[] = {0.0, 1.0, 4.0};

Outcome alpha_limit() {
  double worst = 0.0;
  for (double t : kTs)
    for (int d : kDs)
      for (double rho_sq : kRhos)
        for (double lam : {rho_sq, rho_sq + 1.0, rho_sq + 10.0}) {
          const double R = mult::r_infinity(t, lam, rho_sq, d);
          worst = std::max(worst, std::abs(mult::alpha({t, R, lam, rho_sq, d}) - 1.0));
        }
  return {worst < 1e-6, "max |alpha(R_inf) - 1| = " + fmt("%.3e", worst) + " (limit 1e-6, 81 points)"};
}

Outcome beta_limit() {
  double worst = 0.0;
  for (double t : kTs)
    for (int d : kDs)
      for (double rho_sq : kRhos)
        for (double lam : {rho_sq, rho_sq + 1.0, rho_sq + 10.0}) {
          const double R = mult::r_infinity(t, lam, rho_sq, d);
          const double lim = mult::beta_limit(t, lam);
          worst = std::max(worst, std::abs(mult::beta({t, R, lam, rho_sq, d}) - lim) / lim);
        }
  return {worst < 1e-6, "max relative |beta(R_inf) - e^{t lambda/2}| = " + fmt("%.3e", worst) + " (limit 1e-6)"};
}

Outcome beta_alpha_identity() {
  double worst = 0.0;
  int n = 0;
  const double rho_sq = 1.0;
  const int d = 3;
  for (double t : {0.1, 0.3, 0.5, 1.0, 2.0})
    for (double R : {0.05, 0.2, 0.7, 1.5, 4.0})
      for (double lam : {0.0, 0.5, 1.0, 3.0, 20.0}) {
        const double b = mult::beta({t, R, lam, rho_sq, d});
        const double a2 = std::exp(0.5 * t * lam) * mult::alpha({2.0 * t, 2.0 * R, lam, rho_sq, d});
        worst = std::max(worst, std::abs(b - a2) / std::abs(a2));
        ++n;
      }
  return {worst < 1e-9 && n == 125, "max relative difference = " + fmt("%.3e", worst) + " over " +
                                        std::to_string(n) + " points (limit 1e-9)"};
}

Outcome low_spectrum_realness() {
  double worst_im = 0.0;
  bool finite = true;
  for (double t : kTs)
    for (int d : kDs)
      for (double rho_sq : {1.0, 4.0})
        for (double frac : {0.0, 0.25, 0.5, 0.99})
          for (double R : {0.1, 1.0, 3.0}) {
            const mult::MultiplierQuery q{t, R, frac * rho_sq, rho_sq, d};
            const double a = mult::alpha(q);
            const double b = mult::beta(q);
            finite = finite && std::isfinite(a) && std::isfinite(b);
            const auto ae = mult::alpha_exp_form(q);
            const auto be = mult::beta_exp_form(q);
            worst_im = std::max(worst_im, std::abs(ae.imag()) / std::max(1.0, std::abs(ae.real())));
            worst_im = std::max(worst_im, std::abs(be.imag()) / std::max(1.0, std::abs(be.real())));
          }
  return {finite && worst_im < 1e-12,
          std::string(finite ? "finite" : "NON-FINITE") + ", max spurious imaginary part = " + fmt("%.3e", worst_im) +
              " (limit 1e-12)"};
}

std::vector<std::vector<double>> circle_probes(int n) {
  std::vector<std::vector<double>> out;
  for (int i = 0; i < n; ++i) out.push_back({(i + 0.37) / n});
  return out;
}

Outcome diagonal() {
  const auto c = models::circle_model(64);
  const tr::HeatParams p{0.5};
  double worst = 0.0;
  for (std::size_t k = 0; k <= 5; ++k) {
    const auto f = SpectralFunction::eigenfunction(c, k);
    for (double R : {0.1, 0.3}) {
      const double a = mult::alpha({p.t, R, c->eigenvalue(k), 0.0, 1});
      for (const auto& x : circle_probes(8)) {
        const Complex geo = tr::partial_inversion_geometric(f, p, R, x);
        worst = std::max(worst, std::abs(geo - a * c->eigenfunction_real(k, x)));
      }
    }
  }
  return {worst < 1e-7, "max |A_{t,R} psi_k - alpha psi_k| = " + fmt("%.3e", worst) + " (limit 1e-7)"};
}

Outcome l2_inversion() {
  const tr::HeatParams p{0.5};
  std::vector<std::shared_ptr<const models::SpectralModel>> ms = {
      models::circle_model(64), models::torus_model(2), models::synthetic_quotient_model(models::SyntheticParams{})};
  bool ok = true;
  std::string detail;
  for (const auto& m : ms) {
    const auto f = SpectralFunction::random(m, 8, 2024);
    const auto rep = tr::global_inversion_l2(f, p, tr::default_r_grid(tr::r_infinity(f, p)));
    ok = ok && rep.final_error < 1e-6 && rep.eventually_decreasing;
    detail += m->name() + ": " + fmt("%.3e", rep.final_error) + (rep.eventually_decreasing ? " decreasing; " : " NOT decreasing; ");
  }
  return {ok, detail + "(limit 1e-6)"};
}

Outcome pointwise_inversion() {
  const auto c = models::circle_model(64);
  const tr::HeatParams p{0.5};
  const auto f = SpectralFunction::random(c, 8, 77);
  const auto rep = tr::global_inversion_pointwise(f, p, tr::default_r_grid(tr::r_infinity(f, p)), circle_probes(16));
  return {rep.final_error < 1e-6, "sup over 16 probes at R_inf = " + fmt("%.3e", rep.final_error) + " (limit 1e-6)"};
}

// l > (3d^2 - d)/4 <=> eps(l, d) > 0, tested on a fine grid of l around both thresholds.
Outcome sobolev_gate_equivalence() {
  bool ok = true;
  std::string detail;
  for (int d : {1, 2, 3, 6}) {
    int mismatches = 0;
    double first = -1.0;
    for (int i = 0; i <= 4000; ++i) {
      const double l = 0.01 * i;
      const bool above = l > tr::sobolev_gate_threshold(d);
      const bool pos = tr::sobolev_gate_epsilon(l, d) > 0.0;
      if (above != pos) {
        if (mismatches == 0) first = l;
        ++mismatches;
      }
    }
    ok = ok && mismatches == 0;
    detail += "d=" + std::to_string(d) + ": " + std::to_string(mismatches) + " mismatches";
    if (mismatches) detail += " from l=" + fmt("%g", first);
    detail += "; ";
  }
  return {ok, detail + "(eps > 0 iff l > (3d-1)/4)"};
}

Outcome isometry() {
  const tr::HeatParams p{0.5};
  std::vector<std::shared_ptr<const models::SpectralModel>> ms = {
      models::circle_model(64), models::torus_model(2), models::synthetic_quotient_model(models::SyntheticParams{})};
  double worst_lim = 0.0;
  double worst_geo = 0.0;
  for (const auto& m : ms) {
    const auto f = SpectralFunction::random(m, 8, 99);
    const double r_inf = tr::r_infinity(f, p);
    const double g = tr::isometry_G_at(f, p, r_inf);
    worst_lim = std::max(worst_lim, std::abs(g - f.norm_sq()) / f.norm_sq());
    if (m->name() == "synthetic") continue;
    for (double R : {0.1, 0.25}) {
      const double spec = tr::isometry_G_at(f, p, R);
      const double geo = tr::isometry_geometric(f, p, R);
      worst_geo = std::max(worst_geo, std::abs(geo - spec) / std::abs(spec));
    }
  }
  return {worst_lim < 1e-6 && worst_geo < 1e-6, "G(R_inf) vs ||f||^2: " + fmt("%.3e", worst_lim) +
                                                    "; geometric vs spectral: " + fmt("%.3e", worst_geo) +
                                                    " (limits 1e-6)"};
}

Outcome surjectivity() {
  const tr::HeatParams p{0.5};
  double worst_rt = 0.0;
  double worst_lim = 0.0;
  std::vector<std::shared_ptr<const models::SpectralModel>> ms = {
      models::circle_model(64), models::torus_model(2), models::synthetic_quotient_model(models::SyntheticParams{})};
  for (const auto& m : ms) {
    const auto F = SpectralFunction::random(m, 8, 5);
    const auto rec = tr::surjectivity_reconstruct(m, F.coefficients(), p);
    const auto back = tr::heat(rec.f, p);
    for (std::size_t n = 0; n < F.size(); ++n) {
      const Complex a = F.coefficients()[n];
      if (a != Complex(0.0)) worst_rt = std::max(worst_rt, std::abs(back.coefficients()[n] - a) / std::abs(a));
    }
    double expected = 0.0;
    for (std::size_t n = 0; n < F.size(); ++n)
      expected += std::norm(F.coefficients()[n]) * std::exp(p.t * m->eigenvalue(n));
    const double g = tr::isometry_G_at(rec.f, p, tr::r_infinity(rec.f, p));
    worst_lim = std::max(worst_lim, std::abs(g - expected) / expected);
    worst_lim = std::max(worst_lim, std::abs(rec.predicted_limit - expected) / expected);
  }
  return {worst_rt < 1e-12 && worst_lim < 1e-6, "round trip " + fmt("%.3e", worst_rt) + " (limit 1e-12); limit " +
                                                    fmt("%.3e", worst_lim) + " (limit 1e-6)"};
}

Outcome lemma5() {
  using K = models::EuclideanEigenfunction::Kind;
  struct Case {
    std::vector<double> k;
    K kind;
    tr::RadialProfile beta;
  };
  const std::vector<Case> cases = {
      {{1.3}, K::PlaneWave, tr::RadialProfile::gaussian(1.0)},
      {{0.8, -0.4}, K::Exponential, tr::RadialProfile::gaussian(0.5)},
      {{1.0, 0.5, 0.25}, K::PlaneWave, tr::RadialProfile::gaussian(1.0)},
      {{0.6, 0.2, -0.3}, K::Exponential, tr::RadialProfile::constant(1.0)},
      {{0.5, 0.5, 0.5, 0.5}, K::PlaneWave, tr::RadialProfile::constant(2.0)},
      {{0.4, 0.3, 0.2, 0.1, 0.5}, K::Exponential, tr::RadialProfile::gaussian(1.0)},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto psi = models::euclidean_ball_eigenfunction(c.k, c.kind, 0.3);
    const int d = static_cast<int>(c.k.size());
    const auto r = tr::lemma5_check(psi, c.beta, 1.0, d);
    if (r.monte_carlo) {
      const double z = r.difference / r.lhs_error;
      ok = ok && z < 4.0;
      detail += "d=" + std::to_string(d) + " " + fmt("%.2f", z) + " se; ";
    } else {
      const double rel = r.difference / std::max(1.0, std::abs(r.rhs));
      ok = ok && rel < 1e-7;
      detail += "d=" + std::to_string(d) + " " + fmt("%.1e", rel) + "; ";
    }
  }
  return {ok, detail + "(limits 4 se / 1e-7)"};
}

Outcome holo_change() {
  const auto c = models::circle_model(4);
  auto profile = [](double y) { return std::exp(-y * y); };
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 5; ++i) {
    const auto F1 = SpectralFunction::random(c, 4, 100 + 2 * i);
    const auto F2 = SpectralFunction::random(c, 4, 101 + 2 * i);
    worst = std::max(worst, tr::holo_change_check_circle(F1.coefficients(), F2.coefficients(), profile, 0.25).difference);
  }
  return {worst < 1e-8, "max dual-path difference = " + fmt("%.3e", worst) + " (limit 1e-8)"};
}

Outcome jacobians() {
  using rootsys::Family;
  double worst_dual = 0.0;
  for (Family fam : {Family::A1, Family::A1xA1, Family::A2}) {
    const auto sys = rootsys::build_root_system(fam);
    const int steps = 40;
    for (int i = 0; i <= steps; ++i) {
      const double r = 4.0 * i / steps;
      for (int a = 0; a < 12; ++a) {
        std::vector<double> h;
        if (sys.rank == 1) {
          h = {a % 2 ? r : -r};
        } else {
          const double th = 2.0 * std::numbers::pi * a / 12.0;
          h = {r * std::cos(th), r * std::sin(th)};
        }
        std::vector<std::complex<double>> ih;
        for (double v : h) ih.emplace_back(0.0, v);
        const auto j = rootsys::j_radial_complex(sys, ih);
        const double jc = rootsys::j_c_radial(sys, h);
        worst_dual = std::max(worst_dual, std::abs(j - jc) / std::max(1.0, std::abs(jc)));
      }
    }
  }
  const auto a1 = rootsys::build_root_system(Family::A1);
  double worst_a1 = 0.0;
  for (int i = 1; i <= 400; ++i) {
    const double y = 0.01 * i;
    const double h[] = {y};
    const double s = std::sin(y) / y;
    worst_a1 = std::max(worst_a1, std::abs(rootsys::j_c_radial(a1, h) - s * s));
  }
  return {worst_dual < 1e-10 && worst_a1 < 1e-14, "j(iH) vs j^c(H): " + fmt("%.3e", worst_dual) +
                                                      " (limit 1e-10); A1 formula: " + fmt("%.3e", worst_a1) +
                                                      " (limit 1e-14)"};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"1", 10, alpha_limit},
      {"2", 10, beta_limit},
      {"3", 10, beta_alpha_identity},
      {"4", 2, low_spectrum_realness},
      {"5", 60, diagonal},
      {"6", 30, l2_inversion},
      {"7a", 30, pointwise_inversion},
      {"7b", 30, sobolev_gate_equivalence},
      {"8", 60, isometry},
      {"9", 5, surjectivity},
      {"10", 60, lemma5},
      {"11", 10, holo_change},
      {"12", 2, jacobians},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < c.time_limit;
  const bool pass = o.pass && in_time;
  std::printf("%s %s  %s; %.2f s (limit %g s)\n", pass ? "PASS" : "FAIL", c.id.c_str(), o.detail.c_str(), secs,
              c.time_limit);
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <id> | --summary-only\n");
    return 2;
  }
  const std::string arg = argv[1];
  if (arg == "--summary-only") {
    int failed = 0;
    for (const auto& c : criteria())
      if (!run_one(c)) ++failed;
    std::printf("%d of %zu criteria failed\n", failed, criteria().size());
    return failed == 0 ? 0 : 1;
  }
  for (const auto& c : criteria())
    if (c.id == arg) return run_one(c) ? 0 : 1;
  std::fprintf(stderr, "unknown criterion '%s'\n", arg.c_str());
  return 2;
}
