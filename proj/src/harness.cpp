#include "sbq/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

#include "sbq/errors.hpp"
#include "sbq/multiplier.hpp"
#include "sbq/parallel.hpp"
#include "sbq/spectral_models.hpp"
#include "sbq/transform.hpp"

namespace sbq::harness {

namespace {

using config::ExperimentConfig;
using models::Complex;
using models::SpectralFunction;
using models::SpectralModel;

struct Ctx {
  const ExperimentConfig& cfg;
  const RunOptions& opts;
  ExperimentOutput out;

  std::uint64_t seed() const { return opts.seed.value_or(cfg.get_u64("seed", 1)); }
  double tol(double fallback) const {
    if (opts.tol) return *opts.tol;
    return cfg.get_double("check_tol", fallback);
  }
  QuadratureSettings quad() const {
    QuadratureSettings s;
    s.rel_tol = cfg.get_double("quad_rel_tol", s.rel_tol);
    s.validate();
    return s;
  }
  transform::HeatParams heat() const {
    transform::HeatParams p{cfg.get_double("t", 0.5)};
    if (!(p.t > 0.0)) cfg.fail("t", "must be positive");
    return p;
  }

  void check(const std::string& name, double measured, const std::string& rel, double expected) {
    bool pass = false;
    if (rel == "<") pass = measured < expected;
    else if (rel == "<=") pass = measured <= expected;
    else if (rel == ">") pass = measured > expected;
    else if (rel == "==") pass = measured == expected;
    out.checks.push_back({cfg.experiment, name, measured, rel, expected, pass});
  }

  long positive_int(const std::string& key, long fallback) const {
    const long v = cfg.get_int(key, fallback);
    if (v < 1) cfg.fail(key, "must be a positive integer");
    return v;
  }

  std::vector<double> r_grid(double r_inf) const {
    const double r_min = cfg.get_double("r_min", 0.05);
    const long steps = positive_int("r_steps", 40);
    double r_max = r_inf;
    if (cfg.get_string("r_max", "auto") != "auto") r_max = cfg.get_double("r_max", r_inf);
    if (!(r_min > 0.0)) cfg.fail("r_min", "must be positive");
    if (!(r_max > r_min)) cfg.fail("r_max", "must exceed r_min");
    if (steps < 2) return {r_max};
    return geometric_grid(r_min, r_max, static_cast<int>(steps));
  }
};

std::shared_ptr<const SpectralModel> build_model(const Ctx& c) {
  const auto& cfg = c.cfg;
  const std::string name = cfg.get_string("model", "circle");
  try {
    if (name == "circle") {
      return models::circle_model(static_cast<std::size_t>(c.positive_int("n_modes", 64)),
                                  static_cast<int>(cfg.get_int("grid_points", 0)));
    }
    if (name == "torus") {
      return models::torus_model(static_cast<int>(c.positive_int("d", 2)),
                                 static_cast<int>(c.positive_int("n_modes_per_axis", 15)),
                                 static_cast<int>(cfg.get_int("grid_points", 0)));
    }
    if (name == "synthetic") {
      models::SyntheticParams p;
      p.d = static_cast<int>(c.positive_int("d", p.d));
      p.rho_sq = cfg.get_double("rho_sq", p.rho_sq);
      p.weyl_const = cfg.get_double("weyl_const", p.weyl_const);
      p.n_modes = static_cast<std::size_t>(c.positive_int("n_modes", static_cast<long>(p.n_modes)));
      p.low_spectrum = cfg.get_doubles("low_spectrum", p.low_spectrum);
      p.seed = c.seed();
      p.jitter = cfg.get_double("jitter", p.jitter);
      p.sup_constant = cfg.get_double("sup_constant", p.sup_constant);
      p.analyticity_radius = cfg.get_double("analyticity_radius", p.analyticity_radius);
      return models::synthetic_quotient_model(p);
    }
  } catch (const DomainError& e) {
    cfg.fail("model", e.what());
  }
  cfg.fail("model", "unknown model '" + name + "' (circle, torus, synthetic)");
}

SpectralFunction random_function(const Ctx& c, const std::shared_ptr<const SpectralModel>& model, long fallback) {
  const long n = c.positive_int("active_modes", fallback);
  if (static_cast<std::size_t>(n) > model->size()) c.cfg.fail("active_modes", "exceeds the model's mode count");
  return SpectralFunction::random(model, static_cast<std::size_t>(n), c.seed());
}

std::vector<std::vector<double>> probe_points(const Ctx& c, int d, long fallback) {
  const long n = c.positive_int("probes", fallback);
  std::vector<std::vector<double>> pts;
  for (long j = 0; j < n; ++j) {
    std::vector<double> x(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      const double v = (static_cast<double>(j) + 0.5 * i) * (i + 1) / static_cast<double>(n);
      x[static_cast<std::size_t>(i)] = v - std::floor(v);
    }
    pts.push_back(std::move(x));
  }
  return pts;
}

bool is_flat(const SpectralModel& m) { return dynamic_cast<const models::TorusModel*>(&m) != nullptr; }

// ---------------------------------------------------------------------------

void multiplier_curve(Ctx& c) {
  const auto& cfg = c.cfg;
  const auto p = c.heat();
  const int d = static_cast<int>(c.positive_int("d", 3));
  const double rho_sq = cfg.get_double("rho_sq", 1.0);
  const auto lambdas = cfg.get_doubles("lambdas", {0.0, 0.5, 1.0, 2.0, 10.0});
  const std::string kind = cfg.get_string("kind", "alpha");
  if (kind != "alpha" && kind != "beta") cfg.fail("kind", "must be alpha or beta");
  if (lambdas.empty()) cfg.fail("lambdas", "needs at least one value");
  for (double l : lambdas)
    if (!(l >= 0.0)) cfg.fail("lambdas", "eigenvalues must be non-negative");
  const auto s = c.quad();

  double r_inf = 0.0;
  for (double l : lambdas) {
    r_inf = std::max(r_inf, multiplier::r_infinity(p.t, l, rho_sq, d));
    r_inf = std::max(r_inf, 0.5 * multiplier::r_infinity(2.0 * p.t, l, rho_sq, d));
  }
  auto grid = c.r_grid(r_inf);
  if (grid.back() < r_inf) grid.push_back(r_inf);

  std::vector<ExperimentResult> curves(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    curves[i] = kind == "alpha" ? multiplier::alpha_curve(p.t, lambdas[i], rho_sq, d, grid, s)
                                : multiplier::beta_curve(p.t, lambdas[i], rho_sq, d, grid, s);
  });

  auto& table = c.out.table;
  table.columns = {"R"};
  for (double l : lambdas) table.columns.push_back("lambda=" + format_double(l));
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::vector<double> row = {grid[r]};
    for (const auto& cv : curves) row.push_back(cv.rows[r][1]);
    table.add_row(std::move(row));
  }
  table.add_metadata("r_inf", format_double(r_inf));

  const double tol = c.tol(1e-6);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double l = lambdas[i];
    const auto values = curves[i].column(kind);
    const std::string tag = kind + "(lambda=" + format_double(l) + ")";
    bool finite = std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
    c.check(tag + " finite", finite ? 1.0 : 0.0, "==", 1.0);
    if (l >= rho_sq) {
      const double target = kind == "alpha" ? 1.0 : multiplier::beta_limit(p.t, l);
      c.check(tag + " at R_inf, relative distance to limit", std::abs(values.back() - target) / target, "<", tol);
      bool monotone = true;
      for (std::size_t r = 1; r < values.size(); ++r) monotone = monotone && values[r] >= values[r - 1] - 1e-12 * values.back();
      c.check(tag + " nondecreasing in R", monotone ? 1.0 : 0.0, "==", 1.0);
    }
  }
}

void invert_l2(Ctx& c) {
  const auto model = build_model(c);
  const auto f = random_function(c, model, 8);
  const auto p = c.heat();
  const double r_inf = transform::r_infinity(f, p);
  const auto grid = c.r_grid(r_inf);
  auto rep = transform::global_inversion_l2(f, p, grid, c.quad());
  c.out.table = rep.table;
  c.out.table.add_metadata("model", model->name());
  c.check("relative L2 error at R_inf", rep.final_error, "<", c.tol(1e-6));
  c.check("error curve eventually decreasing", rep.eventually_decreasing ? 1.0 : 0.0, "==", 1.0);
}

void invert_pointwise(Ctx& c) {
  const auto model = build_model(c);
  const auto f = random_function(c, model, 5);
  const auto p = c.heat();
  const double r_inf = transform::r_infinity(f, p);
  const auto grid = c.r_grid(r_inf);
  std::optional<double> l;
  if (c.cfg.has("sobolev_order")) l = c.cfg.get_double("sobolev_order", 0.0);
  auto rep = transform::global_inversion_pointwise(f, p, grid, probe_points(c, model->dim(), 16), l, c.quad());
  c.out.table = rep.table;
  c.out.table.add_metadata("model", model->name());
  c.check("sup probe error at R_inf", rep.final_error, "<", c.tol(1e-6));
  for (const auto& w : rep.warnings) c.out.notes.push_back("warning: " + w);
}

void isometry(Ctx& c) {
  const auto model = build_model(c);
  const auto f = random_function(c, model, 8);
  const auto p = c.heat();
  const auto s = c.quad();
  const double r_inf = transform::r_infinity(f, p);
  const auto grid = c.r_grid(r_inf);
  auto rep = transform::isometry_G(f, p, grid, s);
  c.out.table = rep.table;
  c.out.table.add_metadata("model", model->name());
  c.out.table.add_metadata("norm_sq", format_double(rep.norm_sq));
  c.out.table.add_metadata("G_at_r_inf", format_double(rep.limit));
  const double tol = c.tol(1e-6);
  c.check("G(R_inf) relative distance to ||f||^2", rep.relative_error, "<", tol);

  const double r_pos = transform::positivity_radius(*model);
  double min_small = std::numeric_limits<double>::infinity();
  for (const auto& row : rep.table.rows)
    if (row[0] < r_pos) min_small = std::min(min_small, row[1]);
  if (std::isfinite(min_small)) c.check("min G(R) below positivity radius", min_small, ">", 0.0);

  if (is_flat(*model)) {
    for (double R : c.cfg.get_doubles("radii", {0.1, 0.25})) {
      const double geo = transform::isometry_geometric(f, p, R);
      const double spec = transform::isometry_G_at(f, p, R, s);
      c.out.table.add_metadata("geometric_G(R=" + format_double(R) + ")", format_double(geo));
      c.check("geometric vs spectral G at R=" + format_double(R), std::abs(geo - spec) / std::max(std::abs(spec), 1e-300),
              "<", tol);
    }
  }
}

void surjectivity(Ctx& c) {
  const auto model = build_model(c);
  const auto F = random_function(c, model, 8);
  const auto p = c.heat();
  const auto rec = transform::surjectivity_reconstruct(model, F.coefficients(), p);
  const auto back = transform::heat(rec.f, p);
  auto& table = c.out.table;
  table.columns = {"n", "lambda", "abs_F", "abs_f", "roundtrip_rel_error"};
  double worst = 0.0;
  for (std::size_t n = 0; n < F.size(); ++n) {
    const Complex a = F.coefficients()[n];
    const double rel = a == Complex(0.0) ? std::abs(back.coefficients()[n]) : std::abs(back.coefficients()[n] - a) / std::abs(a);
    worst = std::max(worst, rel);
    table.add_row({static_cast<double>(n), model->eigenvalue(n), std::abs(a), std::abs(rec.f.coefficients()[n]), rel});
  }
  const double r_inf = transform::r_infinity(rec.f, p);
  const double g = transform::isometry_G_at(rec.f, p, r_inf, c.quad());
  table.add_metadata("model", model->name());
  table.add_metadata("predicted_limit", format_double(rec.predicted_limit));
  table.add_metadata("G_at_r_inf", format_double(g));
  c.check("reconstruct-then-heat relative error", worst, "<", c.opts.tol.value_or(1e-12));
  c.check("G(R_inf) relative distance to predicted limit",
          std::abs(g - rec.predicted_limit) / std::max(rec.predicted_limit, 1e-300), "<", c.tol(1e-6));
}

void lemma5(Ctx& c) {
  const auto& cfg = c.cfg;
  const auto k = cfg.get_doubles("k", {1.0, 0.5, 0.25});
  if (k.empty()) cfg.fail("k", "needs at least one component");
  const int d = static_cast<int>(k.size());
  const std::string kind = cfg.get_string("psi_kind", "plane");
  if (kind != "plane" && kind != "exp") cfg.fail("psi_kind", "must be plane or exp");
  const auto psi = models::euclidean_ball_eigenfunction(
      k, kind == "plane" ? models::EuclideanEigenfunction::Kind::PlaneWave : models::EuclideanEigenfunction::Kind::Exponential,
      cfg.get_double("phase", 0.0));
  const std::string pk = cfg.get_string("profile", "gaussian");
  const double scale = cfg.get_double("profile_scale", 1.0);
  transform::RadialProfile beta;
  if (pk == "gaussian") {
    if (!(scale > 0.0)) cfg.fail("profile_scale", "Gaussian variance must be positive");
    beta = transform::RadialProfile::gaussian(scale);
  } else if (pk == "constant") {
    beta = transform::RadialProfile::constant(scale);
  } else {
    cfg.fail("profile", "must be gaussian or constant");
  }
  const double R = cfg.get_double("radius", 1.0);
  if (!(R > 0.0)) cfg.fail("radius", "must be positive");
  transform::Lemma5Budget budget;
  budget.nodes_per_axis = static_cast<int>(c.positive_int("nodes", budget.nodes_per_axis));
  budget.mc_samples = static_cast<std::size_t>(c.positive_int("mc_samples", static_cast<long>(budget.mc_samples)));
  budget.seed = c.seed();
  const auto res = transform::lemma5_check(psi, beta, R, d, budget, c.quad());

  auto& table = c.out.table;
  table.columns = {"d", "sigma", "lhs", "rhs", "difference", "lhs_error", "monte_carlo"};
  table.add_row({static_cast<double>(d), psi.sigma, res.lhs, res.rhs, res.difference, res.lhs_error,
                 res.monte_carlo ? 1.0 : 0.0});
  if (res.monte_carlo) {
    c.check("|lhs - rhs| in Monte Carlo standard errors", res.difference / res.lhs_error, "<",
            c.opts.tol.value_or(cfg.get_double("check_tol", 4.0)));
  } else {
    c.check("|lhs - rhs| / max(1, |rhs|)", res.difference / std::max(1.0, std::abs(res.rhs)), "<", c.tol(1e-7));
  }
}

void holo_change(Ctx& c) {
  const auto& cfg = c.cfg;
  const long pairs = c.positive_int("pairs", 5);
  const long modes = c.positive_int("active_modes", 4);
  const double R = cfg.get_double("radius", 0.25);
  if (!(R > 0.0)) cfg.fail("radius", "must be positive");
  const double var = cfg.get_double("profile_variance", 0.5);
  if (!(var > 0.0)) cfg.fail("profile_variance", "must be positive");
  const auto circle = models::circle_model(static_cast<std::size_t>(modes));
  auto profile = [var](double y) { return std::exp(-y * y / (2.0 * var)); };
  auto& table = c.out.table;
  table.columns = {"pair", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "difference"};
  double worst = 0.0;
  for (long i = 0; i < pairs; ++i) {
    const auto F1 = SpectralFunction::random(circle, static_cast<std::size_t>(modes), c.seed() + 2 * static_cast<std::uint64_t>(i));
    const auto F2 = SpectralFunction::random(circle, static_cast<std::size_t>(modes), c.seed() + 2 * static_cast<std::uint64_t>(i) + 1);
    const auto r = transform::holo_change_check_circle(F1.coefficients(), F2.coefficients(), profile, R);
    table.add_row({static_cast<double>(i), r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.difference});
    worst = std::max(worst, r.difference);
  }
  c.check("max dual-path difference", worst, "<", c.tol(1e-8));
}

void path_agreement(Ctx& c) {
  const auto model = build_model(c);
  if (!is_flat(*model)) throw CapabilityError("geometric path (flat complexified base)", model->name());
  const auto f = random_function(c, model, 8);
  const auto p = c.heat();
  const auto s = c.quad();
  const auto probes = probe_points(c, model->dim(), 8);
  auto& table = c.out.table;
  table.columns = {"R", "probe", "geometric_re", "geometric_im", "spectral_re", "spectral_im", "abs_diff"};
  double worst = 0.0;
  double worst_g = 0.0;
  for (double R : c.cfg.get_doubles("radii", {0.1, 0.3})) {
    const auto af = transform::partial_inversion_spectral(f, p, R, s);
    std::vector<Complex> geo(probes.size());
    parallel_for(probes.size(), [&](std::size_t j) { geo[j] = transform::partial_inversion_geometric(f, p, R, probes[j]); });
    for (std::size_t j = 0; j < probes.size(); ++j) {
      const Complex spec = af.evaluate(probes[j]);
      const double diff = std::abs(geo[j] - spec);
      worst = std::max(worst, diff);
      table.add_row({R, static_cast<double>(j), geo[j].real(), geo[j].imag(), spec.real(), spec.imag(), diff});
    }
    const double g_geo = transform::isometry_geometric(f, p, R);
    const double g_spec = transform::isometry_G_at(f, p, R, s);
    worst_g = std::max(worst_g, std::abs(g_geo - g_spec) / std::max(std::abs(g_spec), 1e-300));
  }
  table.add_metadata("model", model->name());
  const double tol = c.tol(1e-6);
  c.check("max |geometric - spectral| for A_{t,R} f", worst, "<", tol);
  c.check("max relative |geometric - spectral| for G_F(R)", worst_g, "<", tol);
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_gnuplot(const std::filesystem::path& path, const std::string& csv_name, const ExperimentResult& table) {
  std::ofstream out(path);
  out << "set datafile separator ','\n";
  out << "set key autotitle columnhead\n";
  if (!table.columns.empty() && table.columns[0] == "R") out << "set logscale x\nset xlabel 'R'\n";
  out << "plot for [i=2:" << table.columns.size() << "] '" << csv_name << "' using 1:i with linespoints\n";
  out << "pause -1\n";
}

}  // namespace

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> infos = {
      {"multiplier-curve", "alpha_{t,R}(lambda) or beta_{t,R}(lambda) against R up to R_inf",
       "partial inversion / partial isometry theorems (R -> infinity limits)"},
      {"invert-l2", "||f - A_{t,R} f|| / ||f|| over an R grid", "global L2 inversion theorem"},
      {"invert-pointwise", "|f(x) - A_{t,R} f(x)| at probe points with the Sobolev gate",
       "global pointwise inversion theorem"},
      {"isometry", "G_F(R) against ||f||^2, geometric vs spectral on flat models", "global isometry theorem"},
      {"surjectivity", "reconstruct f from F, heat round trip and predicted lim G_F", "surjectivity theorem"},
      {"lemma5", "ball integral of a Euclidean eigenfunction against a radial weight, two paths",
       "Euclidean ball-integral lemma"},
      {"holo-change", "circle prototype of the holomorphic change of variable, two paths",
       "holomorphic change-of-variable theorem (circle prototype)"},
      {"path-agreement", "geometric vs spectral A_{t,R} f and G_F(R) on flat models",
       "partial inversion and partial isometry theorems"},
  };
  return infos;
}

std::string format_catalogue() {
  std::ostringstream os;
  for (const auto& e : list_experiments()) os << e.name << "\t" << e.description << "\t[" << e.theorem << "]\n";
  return os.str();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_csv(const ExperimentResult& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
  for (const auto& [k, v] : table.metadata) out << "# " << k << ": " << v << "\n";
}

ExperimentOutput run_experiment(const config::ExperimentConfig& cfg, const RunOptions& opts) {
  Ctx c{cfg, opts, {}};
  const std::string& name = cfg.experiment;
  if (name == "multiplier-curve") multiplier_curve(c);
  else if (name == "invert-l2") invert_l2(c);
  else if (name == "invert-pointwise") invert_pointwise(c);
  else if (name == "isometry") isometry(c);
  else if (name == "surjectivity") surjectivity(c);
  else if (name == "lemma5") lemma5(c);
  else if (name == "holo-change") holo_change(c);
  else if (name == "path-agreement") path_agreement(c);
  else throw config::ConfigError(cfg.line, 1, "unknown experiment '" + name + "'");
  c.out.table.name = name;
  return std::move(c.out);
}

RunOutcome run_config(const config::ConfigFile& file, const RunOptions& opts) {
  RunOutcome outcome;
  std::filesystem::create_directories(opts.out_dir);
  std::vector<std::string> notes;
  try {
    for (const auto& cfg : file.experiments) {
      auto result = run_experiment(cfg, opts);
      for (const auto& [k, v] : cfg.values) result.table.add_metadata("config." + k, v.text);
      result.table.add_metadata("version", SBQ_VERSION);
      result.table.add_metadata("seed", std::to_string(opts.seed.value_or(cfg.get_u64("seed", 1))));
      if (!opts.reproducible) result.table.add_metadata("timestamp", timestamp());
      const auto csv = opts.out_dir / (cfg.experiment + ".csv");
      {
        std::ofstream out(csv);
        write_csv(result.table, out);
      }
      outcome.files.push_back(csv);
      if (opts.emit_gnuplot) {
        const auto gp = opts.out_dir / (cfg.experiment + ".gp");
        write_gnuplot(gp, csv.filename().string(), result.table);
        outcome.files.push_back(gp);
      }
      for (auto& ch : result.checks) outcome.checks.push_back(std::move(ch));
      for (auto& n : result.notes) notes.push_back(cfg.experiment + ": " + n);
    }
  } catch (const config::ConfigError& e) {
    outcome.exit_code = kParseError;
    outcome.error = e.what();
  } catch (const CapabilityError& e) {
    outcome.exit_code = kCapabilityError;
    outcome.error = e.what();
  } catch (const ConvergenceError& e) {
    outcome.exit_code = kConvergenceError;
    outcome.error = e.what();
  } catch (const DomainError& e) {
    outcome.exit_code = kParseError;
    outcome.error = e.what();
  }

  const bool all_pass = std::all_of(outcome.checks.begin(), outcome.checks.end(), [](const Check& c) { return c.pass; });
  if (outcome.exit_code == kOk && !all_pass) outcome.exit_code = kCheckFailed;

  const auto summary = opts.out_dir / "summary.txt";
  std::ofstream out(summary);
  for (const auto& ch : outcome.checks) {
    out << (ch.pass ? "PASS " : "FAIL ") << ch.experiment << ": " << ch.name << "  measured=" << format_double(ch.measured)
        << "  expected " << ch.relation << " " << format_short(ch.expected) << "\n";
  }
  for (const auto& n : notes) out << "NOTE " << n << "\n";
  if (!outcome.error.empty()) out << "ERROR " << outcome.error << "\n";
  out << "exit " << outcome.exit_code << "\n";
  outcome.files.push_back(summary);
  return outcome;
}

RunOutcome run_file(const std::string& path, const RunOptions& opts) {
  try {
    return run_config(config::parse_file(path), opts);
  } catch (const config::ConfigError& e) {
    RunOutcome o;
    o.exit_code = kParseError;
    o.error = e.what();
    return o;
  }
}

RunOutcome run_text(const std::string& text, const RunOptions& opts) {
  try {
    return run_config(config::parse(text), opts);
  } catch (const config::ConfigError& e) {
    RunOutcome o;
    o.exit_code = kParseError;
    o.error = e.what();
    return o;
  }
}

}  // namespace sbq::harness
