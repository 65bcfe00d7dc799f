#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sbq/config.hpp"
#include "sbq/errors.hpp"
#include "sbq/harness.hpp"
#include "sbq/multiplier.hpp"
#include "sbq/rootsys.hpp"
#include "sbq/spectral_models.hpp"
#include "sbq/transform.hpp"

namespace py = pybind11;
using namespace sbq;
using models::Complex;
using models::SpectralFunction;
using models::SpectralModel;

namespace {

py::dict table_dict(const ExperimentResult& t) {
  py::dict d;
  d["columns"] = t.columns;
  d["rows"] = t.rows;
  return d;
}

rootsys::Family family_or_throw(const std::string& name) {
  const auto f = rootsys::parse_family(name);
  if (!f) throw DomainError("unknown root system '" + name + "' (A1, A1xA1, A2, custom)");
  return *f;
}

}  // namespace

PYBIND11_MODULE(_sbq, m) {
  m.doc() = "Segal-Bargmann transform on compact quotients";
  m.attr("__version__") = SBQ_VERSION;

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<config::ConfigError>(m, "ConfigError", domain.ptr());
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  // multipliers
  m.def("alpha", [](double t, double R, double lambda, double rho_sq, int d) {
    return multiplier::alpha({t, R, lambda, rho_sq, d});
  }, py::arg("t"), py::arg("R"), py::arg("lam"), py::arg("rho_sq") = 0.0, py::arg("d") = 1);
  m.def("beta", [](double t, double R, double lambda, double rho_sq, int d) {
    return multiplier::beta({t, R, lambda, rho_sq, d});
  }, py::arg("t"), py::arg("R"), py::arg("lam"), py::arg("rho_sq") = 0.0, py::arg("d") = 1);
  m.def("beta_limit", &multiplier::beta_limit, py::arg("t"), py::arg("lam"));
  m.def("r_infinity", &multiplier::r_infinity, py::arg("t"), py::arg("lam"), py::arg("rho_sq"), py::arg("d"));

  // models
  py::class_<SpectralModel, std::shared_ptr<SpectralModel>>(m, "SpectralModel")
      .def_property_readonly("name", &SpectralModel::name)
      .def_property_readonly("dim", &SpectralModel::dim)
      .def_property_readonly("rho_sq", &SpectralModel::rho_sq)
      .def("__len__", &SpectralModel::size)
      .def("eigenvalue", &SpectralModel::eigenvalue)
      .def("eigenvalues", [](const SpectralModel& s) {
        std::vector<double> v(s.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = s.eigenvalue(i);
        return v;
      })
      .def("__repr__", [](const SpectralModel& s) {
        return "<SpectralModel " + s.name() + " d=" + std::to_string(s.dim()) + " modes=" + std::to_string(s.size()) + ">";
      });

  // the factories hand back shared_ptr<const T>; pybind holds non-const
  m.def("circle_model", [](std::size_t n, int grid) {
    return std::const_pointer_cast<SpectralModel>(std::shared_ptr<const SpectralModel>(models::circle_model(n, grid)));
  }, py::arg("n_modes") = 64, py::arg("grid_points") = 0);
  m.def("torus_model", [](int d, int n, int grid) {
    return std::const_pointer_cast<SpectralModel>(std::shared_ptr<const SpectralModel>(models::torus_model(d, n, grid)));
  }, py::arg("d"), py::arg("n_modes_per_axis") = 15, py::arg("grid_per_axis") = 0);
  m.def("synthetic_quotient_model",
        [](int d, double rho_sq, double weyl_const, std::size_t n_modes, std::vector<double> low, std::uint64_t seed,
           double jitter, double sup_constant, double analyticity_radius) {
          models::SyntheticParams p;
          p.d = d;
          p.rho_sq = rho_sq;
          p.weyl_const = weyl_const;
          p.n_modes = n_modes;
          p.low_spectrum = std::move(low);
          p.seed = seed;
          p.jitter = jitter;
          p.sup_constant = sup_constant;
          p.analyticity_radius = analyticity_radius;
          return std::const_pointer_cast<SpectralModel>(
              std::shared_ptr<const SpectralModel>(models::synthetic_quotient_model(p)));
        },
        py::arg("d") = 3, py::arg("rho_sq") = 1.0, py::arg("weyl_const") = 1.0, py::arg("n_modes") = 2000,
        py::arg("low_spectrum") = std::vector<double>{0.5}, py::arg("seed") = 1, py::arg("jitter") = 0.0,
        py::arg("sup_constant") = 1.0, py::arg("analyticity_radius") = 1.0);

  py::class_<SpectralFunction>(m, "SpectralFunction")
      .def(py::init([](std::shared_ptr<SpectralModel> model, std::vector<Complex> coeffs) {
             return SpectralFunction(model, std::move(coeffs));
           }),
           py::arg("model"), py::arg("coefficients"))
      .def_static("random", [](std::shared_ptr<SpectralModel> model, std::size_t n, std::uint64_t seed) {
        return SpectralFunction::random(model, n, seed);
      }, py::arg("model"), py::arg("n_active"), py::arg("seed") = 1)
      .def_static("eigenfunction", [](std::shared_ptr<SpectralModel> model, std::size_t n, Complex amp) {
        return SpectralFunction::eigenfunction(model, n, amp);
      }, py::arg("model"), py::arg("n"), py::arg("amplitude") = Complex(1.0))
      .def_property_readonly("coefficients", &SpectralFunction::coefficients)
      .def("norm_sq", &SpectralFunction::norm_sq)
      .def("__call__", [](const SpectralFunction& f, std::vector<double> x) { return f.evaluate(x); });

  // transform
  using transform::HeatParams;
  m.def("heat", [](const SpectralFunction& f, double t) { return transform::heat(f, HeatParams{t}); });
  m.def("sb_eval", [](const SpectralFunction& f, double t, std::vector<double> x, std::vector<double> y) {
    const auto v = transform::sb_eval(f, HeatParams{t}, x, y);
    return py::make_tuple(v.value, v.tail_bound);
  }, py::arg("f"), py::arg("t"), py::arg("x"), py::arg("y"));
  m.def("partial_inversion_spectral", [](const SpectralFunction& f, double t, double R) {
    return transform::partial_inversion_spectral(f, HeatParams{t}, R);
  });
  m.def("partial_inversion_geometric", [](const SpectralFunction& f, double t, double R, std::vector<double> x,
                                          int nodes) {
    return transform::partial_inversion_geometric(f, HeatParams{t}, R, x, nodes);
  }, py::arg("f"), py::arg("t"), py::arg("R"), py::arg("x"), py::arg("nodes") = 48);
  m.def("global_inversion_l2", [](const SpectralFunction& f, double t, std::optional<std::vector<double>> grid) {
    const HeatParams p{t};
    const auto g = grid ? *grid : transform::default_r_grid(transform::r_infinity(f, p));
    const auto rep = transform::global_inversion_l2(f, p, g);
    py::dict d = table_dict(rep.table);
    d["r_inf"] = rep.r_inf;
    d["final_error"] = rep.final_error;
    d["eventually_decreasing"] = rep.eventually_decreasing;
    return d;
  }, py::arg("f"), py::arg("t"), py::arg("r_grid") = py::none());
  m.def("isometry_G", [](const SpectralFunction& f, double t, std::optional<double> R) {
    const HeatParams p{t};
    return transform::isometry_G_at(f, p, R ? *R : transform::r_infinity(f, p));
  }, py::arg("f"), py::arg("t"), py::arg("R") = py::none());
  m.def("isometry_geometric", [](const SpectralFunction& f, double t, double R, int nodes) {
    return transform::isometry_geometric(f, HeatParams{t}, R, nodes);
  }, py::arg("f"), py::arg("t"), py::arg("R"), py::arg("nodes") = 48);
  m.def("surjectivity_reconstruct", [](const SpectralFunction& F, double t) {
    const auto r = transform::surjectivity_reconstruct(F.model_ptr(), F.coefficients(), HeatParams{t});
    return py::make_tuple(r.f, r.predicted_limit);
  });
  m.def("lemma5_check",
        [](std::vector<double> k, const std::string& kind, const std::string& profile, double scale, double R,
           std::size_t mc_samples, std::uint64_t seed) {
          using K = models::EuclideanEigenfunction::Kind;
          if (kind != "plane" && kind != "exp") throw DomainError("kind must be 'plane' or 'exp'");
          const auto psi = models::euclidean_ball_eigenfunction(k, kind == "plane" ? K::PlaneWave : K::Exponential);
          transform::RadialProfile b;
          if (profile == "gaussian") b = transform::RadialProfile::gaussian(scale);
          else if (profile == "constant") b = transform::RadialProfile::constant(scale);
          else throw DomainError("profile must be 'gaussian' or 'constant'");
          transform::Lemma5Budget budget;
          budget.mc_samples = mc_samples;
          budget.seed = seed;
          const auto r = transform::lemma5_check(psi, b, R, static_cast<int>(k.size()), budget);
          py::dict d;
          d["lhs"] = r.lhs;
          d["rhs"] = r.rhs;
          d["difference"] = r.difference;
          d["lhs_error"] = r.lhs_error;
          d["monte_carlo"] = r.monte_carlo;
          return d;
        },
        py::arg("k"), py::arg("kind") = "plane", py::arg("profile") = "gaussian", py::arg("scale") = 1.0,
        py::arg("R") = 1.0, py::arg("mc_samples") = 2'000'000, py::arg("seed") = 7);
  m.def("holo_change_check_circle",
        [](std::vector<Complex> F1, std::vector<Complex> F2, std::function<double(double)> profile, double R) {
          // the callback re-enters Python, so keep the GIL
          const auto r = transform::holo_change_check_circle(F1, F2, profile, R);
          return py::make_tuple(r.lhs, r.rhs, r.difference);
        });
  m.def("positivity_radius", [](const SpectralModel& s) { return transform::positivity_radius(s); });

  // root systems
  m.def("j_c_radial", [](const std::string& family, std::vector<double> h) {
    return rootsys::j_c_radial(rootsys::build_root_system(family_or_throw(family)), h);
  });
  m.def("j_radial_complex", [](const std::string& family, std::vector<Complex> h) {
    return rootsys::j_radial_complex(rootsys::build_root_system(family_or_throw(family)), h);
  });

  // harness
  m.def("list_experiments", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : harness::list_experiments()) out.emplace_back(e.name, e.description, e.theorem);
    return out;
  });
  m.def("run_config", [](const std::string& text, std::filesystem::path out_dir, bool reproducible,
                         std::optional<std::uint64_t> seed) {
    harness::RunOptions o;
    o.out_dir = std::move(out_dir);
    o.reproducible = reproducible;
    o.seed = seed;
    harness::RunOutcome r;
    {
      py::gil_scoped_release release;
      r = harness::run_text(text, o);
    }
    py::list checks;
    for (const auto& c : r.checks) {
      py::dict d;
      d["experiment"] = c.experiment;
      d["name"] = c.name;
      d["measured"] = c.measured;
      d["relation"] = c.relation;
      d["expected"] = c.expected;
      d["pass"] = c.pass;
      checks.append(d);
    }
    return py::make_tuple(r.exit_code, r.error, checks);
  }, py::arg("text"), py::arg("out_dir"), py::arg("reproducible") = true, py::arg("seed") = py::none());
}
