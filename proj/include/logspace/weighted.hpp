#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logspace/descriptors.hpp"
#include "logspace/measure.hpp"
#include "logspace/metrics.hpp"
#include "logspace/modular.hpp"
#include "logspace/summation.hpp"

namespace logspace {

// Strictly positive weight over a shared measure.  The optional descriptor
// is what allows re-evaluation on refined grids; weights ingested as raw
// samples can be used in modulars and metrics but not classified.
struct Weight {
  MeasurePtr measure;
  std::vector<double> values;
  std::optional<Descriptor> descriptor;

  Weight() = default;
  Weight(MeasurePtr m, std::vector<double> v, std::optional<Descriptor> d = std::nullopt)
      : measure(std::move(m)), values(std::move(v)), descriptor(std::move(d)) {
    if (!measure) throw std::invalid_argument("Weight: null measure");
    if (values.size() != measure->size()) {
      throw std::invalid_argument("Weight: sample count does not match atom count");
    }
    for (double w : values) {
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw std::invalid_argument("Weight: values must be strictly positive and finite");
      }
    }
  }

  std::size_t size() const { return values.size(); }
};

inline Weight weight_from_descriptor(const Descriptor& d, const MeasurePtr& m) {
  if (!d.deterministic()) {
    throw std::invalid_argument("weight_from_descriptor: family has no pointwise formula");
  }
  if (d.complex_valued()) {
    throw std::invalid_argument("weight_from_descriptor: weights are real and positive");
  }
  std::vector<double> v(m->size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = d.eval_real(m->points[k]);
  return Weight(m, std::move(v), d);
}

// Pointwise product f*w; the carrier of every weighted identity below.
inline SampledFunction rescale(const SampledFunction& f, const Weight& w) {
  require_same_measure(f.measure, w.measure, "rescale");
  std::vector<std::complex<double>> v(f.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.values[k] * w.values[k];
  return SampledFunction(f.measure, std::move(v));
}

// Weighted modular: integral of (log(1 + |f| w))^p dmu.  Implemented by
// delegation to the unweighted modular of f*w, so the reduction identity
// holds exactly, not merely within rounding.
inline double weighted_modular(const SampledFunction& f, const Weight& w, const Exponent& p) {
  return orlicz_modular(rescale(f, w), p);
}

inline double weighted_norm_p(const SampledFunction& f, const Weight& w, const Exponent& p) {
  return std::pow(weighted_modular(f, w, p), 1.0 / p.value());
}

inline MetricValue metric_rho_w_p(const SampledFunction& f, const SampledFunction& g,
                                  const Weight& w, const Exponent& p) {
  return metric_rho_p(rescale(f, w), rescale(g, w), p);
}

inline FNormResult f_norm_w_detailed(const SampledFunction& f, const Weight& w,
                                     const Exponent& p, const FNormOptions& opt = {}) {
  return f_norm_detailed(rescale(f, w), p, opt);
}

inline double f_norm_w(const SampledFunction& f, const Weight& w, const Exponent& p,
                       const FNormOptions& opt = {}) {
  return f_norm_w_detailed(f, w, p, opt).value;
}

enum class SpaceRelation { EqualSpaces, ProperInclusion, Inconclusive };

inline const char* to_string(SpaceRelation r) {
  switch (r) {
    case SpaceRelation::EqualSpaces: return "EqualSpaces";
    case SpaceRelation::ProperInclusion: return "ProperInclusion";
    case SpaceRelation::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

struct ClassifyOptions {
  std::vector<int> ladder = {8, 10, 12, 14, 16, 18, 20};  // grid sizes 2^e
  double divergence_ratio = 10.0;  // total growth that alone declares divergence
  double bounded_ratio = 1.05;     // total growth below which energy counts as bounded
  double growth_ratio = 1.05;      // final-step growth marking sustained (slow) divergence
};

enum class EnergyTrend { Bounded, Divergent, Ambiguous };

// Trend of an energy sequence along grid refinement.  Fast divergence trips
// the total-growth ratio; logarithmic divergence (a harmonic-sum profile
// grows only ~2x over this ladder) is caught by the sustained-growth prong:
// strictly increasing energies whose final step still exceeds growth_ratio.
// A quadrature-convergent sequence flattens to steps of ~1e-6 instead.
inline EnergyTrend energy_trend(const std::vector<double>& e, const ClassifyOptions& opt) {
  if (e.size() < 2) return EnergyTrend::Ambiguous;
  const double tiny = 1e-300;
  bool all_tiny = true;
  for (double x : e) {
    if (x > tiny) all_tiny = false;
  }
  if (all_tiny) return EnergyTrend::Bounded;
  if (e.front() <= tiny) return EnergyTrend::Divergent;

  const double total = e.back() / e.front();
  if (total > opt.divergence_ratio) return EnergyTrend::Divergent;

  bool strictly_increasing = true;
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (!(e[i] > e[i - 1])) strictly_increasing = false;
  }
  const double last_step = e.back() / e[e.size() - 2];
  if (strictly_increasing && last_step > opt.growth_ratio) return EnergyTrend::Divergent;

  if (total < opt.bounded_ratio) return EnergyTrend::Bounded;
  return EnergyTrend::Ambiguous;
}

struct ClassifyResult {
  SpaceRelation relation = SpaceRelation::Inconclusive;
  std::vector<std::size_t> grid_sizes;
  std::vector<double> logplus_energies;  // integral of (log^+(w/omega))^p per rung
  std::vector<double> abs_energies;      // integral of |log(w/omega)|^p per rung
  EnergyTrend logplus_trend = EnergyTrend::Ambiguous;
  EnergyTrend abs_trend = EnergyTrend::Ambiguous;
  std::string note;
};

// Compares the spaces generated by w and omega through the energies of
// log(w/omega) on a refinement ladder of midpoint-shifted circle grids.
//
//   EqualSpaces     |log(w/omega)|^p energy stays bounded
//   ProperInclusion that energy diverges while (log^+(w/omega))^p stays
//                   bounded (then the omega-space sits strictly inside the
//                   w-space)
//   Inconclusive    the standing hypothesis fails or no trend is clear
inline ClassifyResult classify_weights(const Descriptor& w, const Descriptor& omega,
                                       const Exponent& p, const ClassifyOptions& opt = {}) {
  if (!w.deterministic() || !omega.deterministic()) {
    throw std::invalid_argument("classify_weights: weights need a closed-form descriptor");
  }
  if (w.complex_valued() || omega.complex_valued()) {
    throw std::invalid_argument("classify_weights: weights are real and positive");
  }
  if (opt.ladder.size() < 2) {
    throw std::invalid_argument("classify_weights: ladder needs at least two rungs");
  }

  ClassifyResult out;
  for (int e : opt.ladder) {
    if (e < 1 || e > 26) {
      throw std::invalid_argument("classify_weights: ladder exponent out of range");
    }
    const std::size_t n = std::size_t{1} << e;
    const auto grid = midpoint_grid(n);
    KahanSum logplus_acc;
    KahanSum abs_acc;
    for (std::size_t k = 0; k < n; ++k) {
      const double t = grid->points[k];
      // Work in the log domain: exp-family weights leave double range near
      // their pole at refinements the energies still have to see.
      const double logratio = w.eval_log_real(t) - omega.eval_log_real(t);
      if (!std::isfinite(logratio)) {
        throw std::invalid_argument("classify_weights: log(w/omega) must stay finite");
      }
      const double m = grid->masses[k];
      logplus_acc.add(m * std::pow(std::max(logratio, 0.0), p.value()));
      abs_acc.add(m * std::pow(std::abs(logratio), p.value()));
    }
    out.grid_sizes.push_back(n);
    out.logplus_energies.push_back(logplus_acc.value());
    out.abs_energies.push_back(abs_acc.value());
  }

  out.logplus_trend = energy_trend(out.logplus_energies, opt);
  out.abs_trend = energy_trend(out.abs_energies, opt);

  if (out.logplus_trend != EnergyTrend::Bounded) {
    out.relation = SpaceRelation::Inconclusive;
    out.note = "log^+(w/omega) energy is not bounded along refinement; "
               "the comparison hypothesis fails";
    return out;
  }
  switch (out.abs_trend) {
    case EnergyTrend::Bounded:
      out.relation = SpaceRelation::EqualSpaces;
      out.note = "|log(w/omega)|^p energy bounded along refinement";
      break;
    case EnergyTrend::Divergent:
      out.relation = SpaceRelation::ProperInclusion;
      out.note = "|log(w/omega)|^p energy diverges along refinement while "
                 "log^+(w/omega) energy stays bounded";
      break;
    case EnergyTrend::Ambiguous:
      out.relation = SpaceRelation::Inconclusive;
      out.note = "|log(w/omega)|^p energy trend is ambiguous on this ladder";
      break;
  }
  return out;
}

inline ClassifyResult classify_weights(const Weight& w, const Weight& omega, const Exponent& p,
                                       const ClassifyOptions& opt = {}) {
  if (!w.descriptor || !omega.descriptor) {
    throw std::invalid_argument(
        "classify_weights: both weights need descriptors to evaluate refined grids");
  }
  return classify_weights(*w.descriptor, *omega.descriptor, p, opt);
}

}  // namespace logspace
