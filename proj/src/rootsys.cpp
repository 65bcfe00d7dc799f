#include "sbq/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sbq/errors.hpp"
#include "sbq/quadrature.hpp"

namespace sbq::rootsys {

namespace {

constexpr double kSeriesCutoff = 1e-4;

double norm_sq(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

bool parallel(std::span<const double> a, std::span<const double> b) {
  // |a.b|^2 == |a|^2 |b|^2 up to rounding.
  const double ab = root_value(a, b);
  const double lhs = ab * ab;
  const double rhs = norm_sq(a) * norm_sq(b);
  return std::abs(lhs - rhs) <= 1e-12 * rhs;
}

// Integral over S^{r-1} intersected with the chamber of prod a(w)^2.
double chamber_sphere_integral(const RootSystemData& sys) {
  auto weight = [&](std::span<const double> w) {
    if (!in_closed_chamber(sys, w)) return 0.0;
    double p = 1.0;
    for (const auto& a : sys.positive_roots) {
      const double v = root_value(a, w);
      p *= v * v;
    }
    return p;
  };

  if (sys.rank == 1) {
    const double plus[] = {1.0};
    const double minus[] = {-1.0};
    return weight(plus) + weight(minus);
  }

  if (sys.rank == 2) {
    std::vector<double> cuts = {0.0, 2.0 * std::numbers::pi};
    for (const auto& a : sys.positive_roots) {
      const double phi = std::atan2(a[1], a[0]);
      for (double c : {phi + 0.5 * std::numbers::pi, phi - 0.5 * std::numbers::pi}) {
        c = std::fmod(c, 2.0 * std::numbers::pi);
        if (c < 0.0) c += 2.0 * std::numbers::pi;
        cuts.push_back(c);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i];
      const double hi = cuts[i + 1];
      if (!(hi > lo)) continue;
      const double mid = 0.5 * (lo + hi);
      const double wm[] = {std::cos(mid), std::sin(mid)};
      if (!in_closed_chamber(sys, wm)) continue;
      // Integrand is a trigonometric polynomial of degree 2|R+| on this arc.
      const GaussRule rule = gauss_legendre(64, lo, hi);
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double w[] = {std::cos(rule.nodes[k]), std::sin(rule.nodes[k])};
        double p = 1.0;
        for (const auto& a : sys.positive_roots) {
          const double v = root_value(a, w);
          p *= v * v;
        }
        total += rule.weights[k] * p;
      }
    }
    return total;
  }

  // Rank >= 3: seeded Monte Carlo calibration over the sphere.
  std::mt19937_64 rng(0x5b0c0ffeeULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  constexpr int kSamples = 1'000'000;
  std::vector<double> w(static_cast<std::size_t>(sys.rank));
  double acc = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    for (double& x : w) x = normal(rng);
    const double n = std::sqrt(norm_sq(w));
    for (double& x : w) x /= n;
    acc += weight(w);
  }
  return unit_sphere_area(sys.rank) * acc / kSamples;
}

void finish(RootSystemData& sys) {
  sys.multiplicity.assign(sys.positive_roots.size(), 2);
  sys.dim = sys.rank + 2 * static_cast<int>(sys.positive_roots.size());
  sys.rho.assign(static_cast<std::size_t>(sys.rank), 0.0);
  for (std::size_t i = 0; i < sys.positive_roots.size(); ++i)
    for (int k = 0; k < sys.rank; ++k)
      sys.rho[static_cast<std::size_t>(k)] += 0.5 * sys.multiplicity[i] * sys.positive_roots[i][static_cast<std::size_t>(k)];
  sys.rho_norm_sq = norm_sq(sys.rho);
  sys.polar_constant = unit_sphere_area(sys.dim) / chamber_sphere_integral(sys);
}

}  // namespace

double sinhc(double u) {
  if (std::abs(u) < kSeriesCutoff) {
    const double u2 = u * u;
    return 1.0 + u2 / 6.0 * (1.0 + u2 / 20.0);
  }
  return std::sinh(u) / u;
}

double sinc(double u) {
  if (std::abs(u) < kSeriesCutoff) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
  }
  return std::sin(u) / u;
}

namespace {

std::complex<double> sinhc(std::complex<double> z) {
  if (std::abs(z) < kSeriesCutoff) {
    const auto z2 = z * z;
    return 1.0 + z2 / 6.0 * (1.0 + z2 / 20.0);
  }
  return std::sinh(z) / z;
}

}  // namespace

RootSystemData build_root_system(Family family, const std::vector<std::vector<double>>& custom_roots,
                                 int custom_rank) {
  RootSystemData sys;
  switch (family) {
    case Family::A1:
      sys.name = "A1";
      sys.rank = 1;
      sys.positive_roots = {{1.0}};
      break;
    case Family::A1xA1:
      sys.name = "A1xA1";
      sys.rank = 2;
      sys.positive_roots = {{1.0, 0.0}, {0.0, 1.0}};
      break;
    case Family::A2: {
      sys.name = "A2";
      sys.rank = 2;
      const double s = std::sqrt(3.0) / 2.0;
      sys.positive_roots = {{1.0, 0.0}, {-0.5, s}, {0.5, s}};
      break;
    }
    case Family::Custom: {
      sys.name = "custom";
      if (custom_roots.empty()) {
        if (custom_rank < 1) throw DomainError("custom root system without roots needs a positive rank");
        sys.rank = custom_rank;
      } else {
        sys.rank = static_cast<int>(custom_roots.front().size());
        if (sys.rank < 1) throw DomainError("custom roots must have positive length");
        if (custom_rank != 0 && custom_rank != sys.rank)
          throw DomainError("custom rank does not match root length");
      }
      for (std::size_t i = 0; i < custom_roots.size(); ++i) {
        if (static_cast<int>(custom_roots[i].size()) != sys.rank)
          throw DomainError("custom root " + std::to_string(i) + " has the wrong length");
        if (norm_sq(custom_roots[i]) == 0.0) throw DomainError("custom root " + std::to_string(i) + " is zero");
        for (std::size_t j = 0; j < i; ++j) {
          if (parallel(custom_roots[i], custom_roots[j]))
            throw DomainError("custom roots " + std::to_string(j) + " and " + std::to_string(i) +
                              " are multiples of each other");
        }
      }
      sys.positive_roots = custom_roots;
      break;
    }
  }
  finish(sys);
  return sys;
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "A1") return Family::A1;
  if (name == "A1xA1") return Family::A1xA1;
  if (name == "A2") return Family::A2;
  if (name == "custom") return Family::Custom;
  return std::nullopt;
}

double root_value(std::span<const double> root, std::span<const double> h) {
  if (root.size() != h.size()) throw DomainError("root and point have different rank");
  double s = 0.0;
  for (std::size_t i = 0; i < root.size(); ++i) s += root[i] * h[i];
  return s;
}

std::vector<double> reflect(std::span<const double> root, std::span<const double> h) {
  const double coeff = 2.0 * root_value(root, h) / norm_sq(root);
  std::vector<double> out(h.begin(), h.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= coeff * root[i];
  return out;
}

bool in_closed_chamber(const RootSystemData& sys, std::span<const double> h, double slack) {
  if (static_cast<int>(h.size()) != sys.rank) return false;
  return std::all_of(sys.positive_roots.begin(), sys.positive_roots.end(),
                     [&](const auto& a) { return root_value(a, h) >= -slack; });
}

RadialPoint::RadialPoint(const RootSystemData& sys, std::vector<double> h) : h_(std::move(h)) {
  if (static_cast<int>(h_.size()) != sys.rank) throw DomainError("radial point has the wrong rank");
  if (!in_closed_chamber(sys, h_)) throw DomainError("radial point lies outside the closed Weyl chamber");
}

double j_radial(const RootSystemData& sys, std::span<const double> h) {
  double p = 1.0;
  for (const auto& a : sys.positive_roots) {
    const double f = sinhc(root_value(a, h));
    p *= f * f;
  }
  return p;
}

double j_nc_radial(const RootSystemData& sys, std::span<const double> h) { return j_radial(sys, h); }

double j_c_half_radial(const RootSystemData& sys, std::span<const double> h) {
  double p = 1.0;
  for (const auto& a : sys.positive_roots) p *= sinc(root_value(a, h));
  return p;
}

double j_c_radial(const RootSystemData& sys, std::span<const double> h) {
  double p = 1.0;
  for (const auto& a : sys.positive_roots) {
    const double f = sinc(root_value(a, h));
    p *= f * f;
  }
  return p;
}

std::complex<double> j_radial_complex(const RootSystemData& sys, std::span<const std::complex<double>> h) {
  if (static_cast<int>(h.size()) != sys.rank) throw DomainError("point has the wrong rank");
  std::complex<double> p = 1.0;
  for (const auto& a : sys.positive_roots) {
    std::complex<double> z = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) z += a[i] * h[i];
    const auto f = sinhc(z);
    p *= f * f;
  }
  return p;
}

double polar_density(const RootSystemData& sys, const RadialPoint& h) {
  double p = sys.polar_constant;
  for (const auto& a : sys.positive_roots) {
    const double v = root_value(a, h.h());
    p *= v * v;
  }
  return p;
}

}  // namespace sbq::rootsys
