#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "logspace/measure.hpp"
#include "logspace/modular.hpp"
#include "logspace/summation.hpp"

namespace logspace {

struct MetricValue {
  double value = 0.0;
  std::optional<double> ky_fan_part;
  std::optional<double> integral_part;
};

// Ky Fan functional: inf over t > 0 of [ t + mu{ h >= t } ] for h >= 0.
//
// On (v_i, v_{i+1}] the superlevel mass is constant, so the infimum over the
// interval is approached at its left end.  The finite candidate set is
// therefore exact, not a discretisation:
//   - v_i + mu{ h >  v_i }   (right limit at each distinct sample value)
//   - v_i + mu{ h >= v_i }   (the attained value at t = v_i, v_i > 0)
//   - total mass             (limit t -> 0+ when every sample is positive)
inline double ky_fan(const DiscreteMeasure& mu, std::span<const double> h) {
  const std::size_t n = h.size();
  if (n != mu.size()) {
    throw std::invalid_argument("ky_fan: sample count does not match atom count");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return h[a] < h[b]; });

  std::vector<double> hv(n), mv(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (h[order[k]] < 0.0) {
      throw std::invalid_argument("ky_fan: samples must be nonnegative");
    }
    hv[k] = h[order[k]];
    mv[k] = mu.masses[order[k]];
  }

  // suffix[i] = mass of { h >= hv[i] } when i starts a run of equal values.
  std::vector<double> suffix(n + 1, 0.0);
  KahanSum tail;
  for (std::size_t i = n; i-- > 0;) {
    tail.add(mv[i]);
    suffix[i] = tail.value();
  }

  double best = mu.total_mass;  // t -> 0+ with all samples positive
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && hv[j] == hv[i]) ++j;
    const double v = hv[i];
    if (v > 0.0) best = std::min(best, v + suffix[i]);  // t = v attained
    best = std::min(best, v + suffix[j]);               // t -> v+ limit
    i = j;
  }
  return best;
}

inline double ky_fan(const SampledFunction& f, const SampledFunction& g) {
  require_same_measure(f.measure, g.measure, "ky_fan");
  return ky_fan(*f.measure, abs_values(difference(f, g)));
}

// d_p(f, g) = KyFan(|f-g|) + integral of |(log^+|f|)^p - (log^+|g|)^p| dmu.
// Metric of convergence in measure joined with the log^+ energy gap.
inline MetricValue metric_d_p(const SampledFunction& f, const SampledFunction& g,
                              const Exponent& p) {
  require_same_measure(f.measure, g.measure, "metric_d_p");
  MetricValue out;
  out.ky_fan_part = ky_fan(f, g);
  KahanSum acc;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double a = std::pow(log_plus(std::abs(f.values[k])), p.value());
    const double b = std::pow(log_plus(std::abs(g.values[k])), p.value());
    acc.add(f.measure->masses[k] * std::abs(a - b));
  }
  out.integral_part = acc.value();
  out.value = *out.ky_fan_part + *out.integral_part;
  return out;
}

// delta_p(f, g) = KyFan(|f-g|)
//               + ( integral of |log^+|f| - log^+|g||^p dmu )^(1/max(p,1)).
inline MetricValue metric_delta_p(const SampledFunction& f, const SampledFunction& g,
                                  const Exponent& p) {
  require_same_measure(f.measure, g.measure, "metric_delta_p");
  MetricValue out;
  out.ky_fan_part = ky_fan(f, g);
  KahanSum acc;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double gap =
        std::abs(log_plus(std::abs(f.values[k])) - log_plus(std::abs(g.values[k])));
    acc.add(f.measure->masses[k] * std::pow(gap, p.value()));
  }
  out.integral_part = std::pow(acc.value(), 1.0 / p.max_with_one());
  out.value = *out.ky_fan_part + *out.integral_part;
  return out;
}

// rho_p(f, g) = norm_p(f - g) for p > 1, and the modular itself for p <= 1;
// equivalently (norm_p(f - g))^min(p,1).  Translation-invariant metric.
inline MetricValue metric_rho_p(const SampledFunction& f, const SampledFunction& g,
                                const Exponent& p) {
  require_same_measure(f.measure, g.measure, "metric_rho_p");
  const double modular = orlicz_modular(difference(f, g), p);
  MetricValue out;
  out.value = p.value() > 1.0 ? std::pow(modular, 1.0 / p.value()) : modular;
  return out;
}

struct FNormOptions {
  double rel_tol = 1e-12;       // bracket width relative to the root
  double residual_tol = 1e-10;  // |modular(f/eps) - eps| <= residual_tol*max(1,eps)
  int max_iter = 2000;
};

struct FNormResult {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

// F-norm |f|_p = inf{ eps > 0 : modular(f/eps) <= eps }.
//
// G(eps) = modular(f/eps) - eps is strictly decreasing with a sign change,
// so the infimum is the root and bisection is exact up to tolerance.  The
// returned iterate is the feasible (upper) end of the bracket, hence
// modular(f/value) <= value always holds.
inline FNormResult f_norm_detailed(const SampledFunction& f, const Exponent& p,
                                   const FNormOptions& opt = {}) {
  const std::vector<double> absv = abs_values(f);
  const std::vector<double>& masses = f.measure->masses;

  const auto scaled_modular = [&](double eps) {
    KahanSum acc;
    for (std::size_t k = 0; k < absv.size(); ++k) {
      acc.add(masses[k] * std::pow(std::log1p(absv[k] / eps), p.value()));
    }
    return acc.value();
  };

  FNormResult out;
  const double modular0 = orlicz_modular(f, p);
  if (modular0 == 0.0) return out;  // f vanishes atomwise

  const auto g = [&](double eps) { return scaled_modular(eps) - eps; };

  double hi = std::max(1.0, modular0);
  while (g(hi) > 0.0) {
    hi *= 2.0;
    if (++out.iterations > opt.max_iter) {
      throw std::runtime_error("f_norm: failed to bracket the root from above");
    }
  }
  double lo = hi;
  while (g(lo) <= 0.0) {
    lo *= 0.5;
    if (lo < 1e-300) return FNormResult{0.0, out.iterations, 0.0};
    if (++out.iterations > opt.max_iter) {
      throw std::runtime_error("f_norm: failed to bracket the root from below");
    }
  }

  double residual = -g(hi);
  while ((hi - lo) > opt.rel_tol * hi ||
         residual > opt.residual_tol * std::max(1.0, hi)) {
    if (++out.iterations > opt.max_iter) {
      throw std::runtime_error("f_norm: bisection failed to converge");
    }
    const double mid = 0.5 * (hi + lo);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
      residual = -g(hi);
    }
  }

  out.value = hi;
  out.residual = residual;
  return out;
}

inline double f_norm(const SampledFunction& f, const Exponent& p,
                     const FNormOptions& opt = {}) {
  return f_norm_detailed(f, p, opt).value;
}

}  // namespace logspace
