#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "logspace/descriptors.hpp"
#include "logspace/measure.hpp"
#include "logspace/modular.hpp"
#include "logspace/rng.hpp"
#include "logspace/weighted.hpp"

namespace logspace {

// Deterministic sample generation from a descriptor.  Closed-form families
// evaluate pointwise; lognormal draws from a substream derived from the
// seed and the descriptor spelling, so the same request always yields the
// same samples.
inline SampledFunction generate_function(const Descriptor& d, const MeasurePtr& m,
                                         std::uint64_t seed) {
  std::vector<std::complex<double>> v(m->size());
  if (d.kind == Descriptor::Kind::LogNormal) {
    Rng rng = substream(seed, "generate/" + d.text);
    for (auto& x : v) x = std::exp(d.sigma * rng.normal());
    return SampledFunction(m, std::move(v));
  }
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = d.eval_complex(m->points[k]);
  return SampledFunction(m, std::move(v));
}

inline SampledFunction generate_function(std::string_view text, const MeasurePtr& m, double p,
                                         std::uint64_t seed) {
  return generate_function(parse_descriptor(text, p), m, seed);
}

inline Weight generate_weight(const Descriptor& d, const MeasurePtr& m, std::uint64_t seed) {
  if (d.complex_valued()) {
    throw std::invalid_argument("generate_weight: weights are real and positive");
  }
  if (d.kind == Descriptor::Kind::LogNormal) {
    Rng rng = substream(seed, "generate/" + d.text);
    std::vector<double> v(m->size());
    for (auto& x : v) x = std::exp(d.sigma * rng.normal());
    return Weight(m, std::move(v));  // no descriptor: not refinable
  }
  return weight_from_descriptor(d, m);
}

inline Weight generate_weight(std::string_view text, const MeasurePtr& m, double p,
                              std::uint64_t seed) {
  return generate_weight(parse_descriptor(text, p), m, seed);
}

// Random complex samples with lognormal magnitude and uniform phase; spans
// both sides of |f| = 1, where the log^+ terms switch on.
inline SampledFunction random_function(const MeasurePtr& m, Rng& rng, double log_scale = 1.0) {
  std::vector<std::complex<double>> v(m->size());
  for (auto& x : v) {
    x = std::polar(std::exp(log_scale * rng.normal()),
                   rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  return SampledFunction(m, std::move(v));
}

inline Weight random_weight(const MeasurePtr& m, Rng& rng, double log_scale = 0.5) {
  std::vector<double> v(m->size());
  for (auto& x : v) x = std::exp(log_scale * rng.normal());
  return Weight(m, std::move(v));
}

}  // namespace logspace
