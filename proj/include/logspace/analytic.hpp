#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "logspace/measure.hpp"
#include "logspace/metrics.hpp"
#include "logspace/modular.hpp"
#include "logspace/nelder_mead.hpp"
#include "logspace/rng.hpp"
#include "logspace/summation.hpp"
#include "logspace/weighted.hpp"

namespace logspace {

// Function analytic on the open unit disk, in one of two concrete forms:
// a polynomial given by coefficients, or an outer function reconstructed
// from boundary log-modulus samples through the Herglotz kernel
//
//   F(z) = exp( sum_k mass_k * (e^{i t_k} + z)/(e^{i t_k} - z) * logmod_k ).
//
// |F(0)| = exp(mean log-modulus) and, for constant log-modulus c, F = e^c
// up to quadrature error (the kernel has mean value one on the circle).
class AnalyticFunction {
 public:
  struct Polynomial {
    std::vector<std::complex<double>> coeffs;  // c0 + c1 z + ...
  };
  struct Outer {
    MeasurePtr grid;
    std::vector<double> log_modulus;
    std::vector<std::complex<double>> unit_points;  // e^{i t_k}, precomputed
  };

  static AnalyticFunction polynomial(std::vector<std::complex<double>> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial: coefficients required");
    AnalyticFunction f;
    f.v_ = Polynomial{std::move(coeffs)};
    return f;
  }

  static AnalyticFunction outer(MeasurePtr grid, std::vector<double> log_modulus) {
    if (!grid) throw std::invalid_argument("outer: null grid");
    if (log_modulus.size() != grid->size()) {
      throw std::invalid_argument("outer: sample count does not match atom count");
    }
    Outer o;
    o.unit_points.resize(grid->size());
    for (std::size_t k = 0; k < grid->size(); ++k) {
      o.unit_points[k] = std::polar(1.0, grid->points[k]);
    }
    o.grid = std::move(grid);
    o.log_modulus = std::move(log_modulus);
    AnalyticFunction f;
    f.v_ = std::move(o);
    return f;
  }

  // Outer function with |F*| = w on the boundary: log-modulus = log w.
  static AnalyticFunction outer_from_weight(const Weight& w) {
    std::vector<double> lm(w.size());
    for (std::size_t k = 0; k < lm.size(); ++k) lm[k] = std::log(w.values[k]);
    return outer(w.measure, std::move(lm));
  }

  bool is_polynomial() const { return std::holds_alternative<Polynomial>(v_); }
  bool is_outer() const { return std::holds_alternative<Outer>(v_); }

  const Polynomial& as_polynomial() const { return std::get<Polynomial>(v_); }
  const Outer& as_outer() const { return std::get<Outer>(v_); }

  // log |f(r e^{i theta})|, computed without forming f itself.  For outer
  // functions this is the real part of the kernel sum, so profiles stay
  // finite even when exp() of the value would overflow.
  double log_modulus(double r, double theta) const {
    require_interior(r);
    if (const auto* poly = std::get_if<Polynomial>(&v_)) {
      return std::log(std::abs(horner(*poly, std::polar(r, theta))));
    }
    return kernel_sum(std::get<Outer>(v_), std::polar(r, theta)).real();
  }

  std::complex<double> eval(double r, double theta) const {
    require_interior(r);
    const std::complex<double> z = std::polar(r, theta);
    if (const auto* poly = std::get_if<Polynomial>(&v_)) return horner(*poly, z);
    return std::exp(kernel_sum(std::get<Outer>(v_), z));
  }

 private:
  static void require_interior(double r) {
    if (!(r >= 0.0) || r >= 1.0) {
      throw std::invalid_argument("analytic eval: radius must lie in [0, 1)");
    }
  }

  static std::complex<double> horner(const Polynomial& p, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * z + p.coeffs[i];
    return acc;
  }

  static std::complex<double> kernel_sum(const Outer& o, std::complex<double> z) {
    KahanSum re, im;
    for (std::size_t k = 0; k < o.log_modulus.size(); ++k) {
      const std::complex<double> e = o.unit_points[k];
      const std::complex<double> kern = (e + z) / (e - z);
      const double c = o.grid->masses[k] * o.log_modulus[k];
      re.add(c * kern.real());
      im.add(c * kern.imag());
    }
    return {re.value(), im.value()};
  }

  std::variant<Polynomial, Outer> v_;
};

struct RadialProfile {
  std::vector<double> radii;
  std::vector<double> means;  // integral of (log^+ |f(r e^{i.})|)^p per radius
  double sup_estimate = 0.0;
  bool bounded = false;
};

// Radial means of (log^+ |f|)^p over circle grids; their supremum over r is
// the membership functional of the radius-uniform log class.  Boundedness
// heuristic: the last three means agree within 5% or are nonincreasing.
inline RadialProfile privalov_profile(const AnalyticFunction& f, const Exponent& p,
                                      std::vector<double> radii, const MeasurePtr& grid) {
  if (radii.empty()) throw std::invalid_argument("privalov_profile: radii required");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0) || radii[i] >= 1.0) {
      throw std::invalid_argument("privalov_profile: radii must lie in [0, 1)");
    }
    if (i > 0 && radii[i] <= radii[i - 1]) {
      throw std::invalid_argument("privalov_profile: radii must increase");
    }
  }
  RadialProfile out;
  out.radii = std::move(radii);
  out.means.reserve(out.radii.size());
  for (double r : out.radii) {
    KahanSum acc;
    for (std::size_t k = 0; k < grid->size(); ++k) {
      const double lm = f.log_modulus(r, grid->points[k]);
      acc.add(grid->masses[k] * std::pow(std::max(lm, 0.0), p.value()));
    }
    out.means.push_back(acc.value());
    out.sup_estimate = std::max(out.sup_estimate, out.means.back());
  }

  const std::size_t n = out.means.size();
  const std::size_t tail = n < 3 ? n : std::size_t{3};
  double lo = out.means[n - tail], hi = out.means[n - tail];
  bool nonincreasing = true;
  for (std::size_t i = n - tail; i < n; ++i) {
    lo = std::min(lo, out.means[i]);
    hi = std::max(hi, out.means[i]);
    if (i > n - tail && out.means[i] > out.means[i - 1]) nonincreasing = false;
  }
  out.bounded = nonincreasing || (hi - lo) <= 0.05 * std::max(hi, 1e-12);
  return out;
}

struct BoundaryCheck {
  double probe_radius = 0.0;
  double max_rel_error = 0.0;
  std::size_t worst_atom = 0;
  std::size_t checked_atoms = 0;
};

// Compares |F| just inside the boundary against target modulus samples.
// Probe radius defaults to 1 - 2*pi/N, one grid spacing inside.  A mask
// (nonzero = check) excludes atoms, e.g. a deleted neighbourhood of a
// singularity of the target.
inline BoundaryCheck boundary_modulus_check(const AnalyticFunction& f,
                                            std::span<const double> target,
                                            const MeasurePtr& grid,
                                            std::optional<double> probe_radius = std::nullopt,
                                            std::span<const char> mask = {}) {
  if (target.size() != grid->size()) {
    throw std::invalid_argument("boundary_modulus_check: target size mismatch");
  }
  if (!mask.empty() && mask.size() != grid->size()) {
    throw std::invalid_argument("boundary_modulus_check: mask size mismatch");
  }
  BoundaryCheck out;
  const double n = static_cast<double>(grid->size());
  out.probe_radius = probe_radius.value_or(1.0 - 2.0 * std::numbers::pi / n);
  if (!(out.probe_radius >= 0.0) || out.probe_radius >= 1.0) {
    throw std::invalid_argument("boundary_modulus_check: probe radius must lie in [0, 1)");
  }
  for (std::size_t k = 0; k < grid->size(); ++k) {
    if (!mask.empty() && mask[k] == 0) continue;
    if (!(target[k] > 0.0)) {
      throw std::invalid_argument("boundary_modulus_check: target modulus must be positive");
    }
    const double got = std::exp(f.log_modulus(out.probe_radius, grid->points[k]));
    const double rel = std::abs(got - target[k]) / target[k];
    ++out.checked_atoms;
    if (rel > out.max_rel_error) {
      out.max_rel_error = rel;
      out.worst_atom = k;
    }
  }
  if (out.checked_atoms == 0) {
    throw std::invalid_argument("boundary_modulus_check: mask excludes every atom");
  }
  return out;
}

struct PolyInfimumOptions {
  int degree = 3;
  int restarts = 20;
  std::uint64_t seed = 1;
  int max_evals_per_restart = 0;           // 0: 300 * (2*degree)
  std::vector<double> ratio;               // w/omega samples; empty = unweighted
  std::vector<std::complex<double>> warm_start;  // c_1..c_d initial guess
};

struct PolyInfimumResult {
  double best_value = 0.0;
  std::vector<std::complex<double>> coeffs;  // full [1, c_1, ..., c_d]
  int best_restart = -1;
  long evaluations = 0;
};

// Minimises the (optionally weighted) modular of boundary polynomials with
// constant coefficient one:
//
//   min over c_1..c_d of  integral (log(1 + |1 + c_1 z + ... + c_d z^d| * ratio))^p dmu
//
// over the circle grid.  Derivative-free multi-start search: restart 0 is
// P = 1 (or the warm start), the rest draw coefficients from seeded
// substreams; the reported minimum is the smallest value, ties resolved by
// restart index.  With ratio = 1 no polynomial beats the constant one, so
// values sit at (log 2)^p up to optimizer slack.
inline PolyInfimumResult poly_modular_infimum(const MeasurePtr& grid, const Exponent& p,
                                              const PolyInfimumOptions& opt = {}) {
  if (opt.degree < 0) throw std::invalid_argument("poly_modular_infimum: degree must be >= 0");
  if (opt.restarts < 1) throw std::invalid_argument("poly_modular_infimum: restarts must be >= 1");
  if (!opt.ratio.empty() && opt.ratio.size() != grid->size()) {
    throw std::invalid_argument("poly_modular_infimum: ratio size mismatch");
  }
  if (!opt.warm_start.empty() && opt.warm_start.size() != static_cast<std::size_t>(opt.degree)) {
    throw std::invalid_argument("poly_modular_infimum: warm start must have degree entries");
  }

  const std::size_t n = grid->size();
  std::vector<std::complex<double>> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(1.0, grid->points[k]);

  const auto modular_of = [&](const std::vector<double>& x) {
    KahanSum acc;
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> val{0.0, 0.0};
      for (std::size_t j = x.size() / 2; j-- > 0;) {
        val = (val + std::complex<double>(x[2 * j], x[2 * j + 1])) * z[k];
      }
      val += 1.0;
      double a = std::abs(val);
      if (!opt.ratio.empty()) a *= opt.ratio[k];
      acc.add(grid->masses[k] * std::pow(std::log1p(a), p.value()));
    }
    return acc.value();
  };

  PolyInfimumResult out;
  if (opt.degree == 0) {
    out.best_value = modular_of({});
    out.coeffs = {std::complex<double>(1.0, 0.0)};
    out.best_restart = 0;
    out.evaluations = 1;
    return out;
  }

  const std::size_t dim = 2 * static_cast<std::size_t>(opt.degree);
  NelderMeadOptions nm;
  nm.max_evals = opt.max_evals_per_restart > 0 ? opt.max_evals_per_restart
                                               : static_cast<int>(300 * dim);
  nm.initial_step = 0.35;

  std::vector<double> best_x(dim, 0.0);
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < opt.restarts; ++r) {
    std::vector<double> x0(dim, 0.0);
    if (r == 0 && !opt.warm_start.empty()) {
      for (int j = 0; j < opt.degree; ++j) {
        x0[2 * j] = opt.warm_start[j].real();
        x0[2 * j + 1] = opt.warm_start[j].imag();
      }
    } else if (r > 0) {
      Rng rng = substream(opt.seed, "poly-infimum/restart/" + std::to_string(r));
      for (double& c : x0) c = rng.uniform(-0.8, 0.8);
    }
    const NelderMeadResult res = nelder_mead(modular_of, std::move(x0), nm);
    out.evaluations += res.evaluations;
    if (res.fx < best) {
      best = res.fx;
      best_x = res.x;
      out.best_restart = r;
    }
  }

  // Polish: one narrow descent from the incumbent tightens the last digits.
  NelderMeadOptions polish = nm;
  polish.initial_step = 0.02;
  const NelderMeadResult res = nelder_mead(modular_of, best_x, polish);
  out.evaluations += res.evaluations;
  if (res.fx < best) {
    best = res.fx;
    best_x = res.x;
  }

  out.best_value = best;
  out.coeffs.resize(static_cast<std::size_t>(opt.degree) + 1);
  out.coeffs[0] = {1.0, 0.0};
  for (int j = 0; j < opt.degree; ++j) {
    out.coeffs[static_cast<std::size_t>(j) + 1] = {best_x[2 * j], best_x[2 * j + 1]};
  }
  return out;
}

}  // namespace logspace
