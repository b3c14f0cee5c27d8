#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "logspace/measure.hpp"
#include "logspace/summation.hpp"

namespace logspace {

// Exponent p > 0 of the space.  Derived constants are computed on demand so
// they can never go stale; the object itself is immutable.
class Exponent {
 public:
  explicit Exponent(double p) : p_(p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("Exponent: p must be a positive finite real");
    }
  }

  double value() const { return p_; }
  double min_with_one() const { return p_ < 1.0 ? p_ : 1.0; }
  double max_with_one() const { return p_ > 1.0 ? p_ : 1.0; }
  // 2^max(p-1,0) and 3^max(p-1,0): constants of the subadditivity bounds.
  double two_pow() const { return std::pow(2.0, std::max(p_ - 1.0, 0.0)); }
  double three_pow() const { return std::pow(3.0, std::max(p_ - 1.0, 0.0)); }

 private:
  double p_;
};

// Complex-valued function sampled on the atoms of a shared measure.
// Value type; copies are cheap apart from the sample vector itself.
struct SampledFunction {
  MeasurePtr measure;
  std::vector<std::complex<double>> values;

  SampledFunction() = default;
  SampledFunction(MeasurePtr m, std::vector<std::complex<double>> v)
      : measure(std::move(m)), values(std::move(v)) {
    if (!measure) throw std::invalid_argument("SampledFunction: null measure");
    if (values.size() != measure->size()) {
      throw std::invalid_argument("SampledFunction: sample count does not match atom count");
    }
  }

  std::size_t size() const { return values.size(); }
};

inline SampledFunction constant_function(const MeasurePtr& m, std::complex<double> c) {
  return SampledFunction(m, std::vector<std::complex<double>>(m->size(), c));
}

inline SampledFunction difference(const SampledFunction& f, const SampledFunction& g) {
  require_same_measure(f.measure, g.measure, "difference");
  std::vector<std::complex<double>> v(f.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.values[k] - g.values[k];
  return SampledFunction(f.measure, std::move(v));
}

inline SampledFunction sum(const SampledFunction& f, const SampledFunction& g) {
  require_same_measure(f.measure, g.measure, "sum");
  std::vector<std::complex<double>> v(f.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.values[k] + g.values[k];
  return SampledFunction(f.measure, std::move(v));
}

inline SampledFunction product(const SampledFunction& f, const SampledFunction& g) {
  require_same_measure(f.measure, g.measure, "product");
  std::vector<std::complex<double>> v(f.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f.values[k] * g.values[k];
  return SampledFunction(f.measure, std::move(v));
}

inline SampledFunction scale(const SampledFunction& f, std::complex<double> c) {
  std::vector<std::complex<double>> v(f.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * f.values[k];
  return SampledFunction(f.measure, std::move(v));
}

inline std::vector<double> abs_values(const SampledFunction& f) {
  std::vector<double> a(f.size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = std::abs(f.values[k]);
  return a;
}

// log^+ x = max(log x, 0); log^+ 0 = 0 by convention, negative input rejected.
inline double log_plus(double x) {
  if (x < 0.0 || std::isnan(x)) {
    throw std::invalid_argument("log_plus: argument must be nonnegative");
  }
  if (x <= 1.0) return 0.0;
  return std::log(x);
}

// psi(t) = (log(1+t))^p, the Orlicz function generating every space here.
inline double orlicz_psi(double t, const Exponent& p) {
  if (t < 0.0 || std::isnan(t)) {
    throw std::invalid_argument("orlicz_psi: argument must be nonnegative");
  }
  return std::pow(std::log1p(t), p.value());
}

// integral of (log^+ |f|)^p dmu.
inline double logplus_energy(const SampledFunction& f, const Exponent& p) {
  KahanSum acc;
  for (std::size_t k = 0; k < f.size(); ++k) {
    acc.add(f.measure->masses[k] * std::pow(log_plus(std::abs(f.values[k])), p.value()));
  }
  return acc.value();
}

// Orlicz modular: integral of (log(1+|f|))^p dmu.  Finite for every sampled
// function; zero exactly when f vanishes at every atom.
inline double orlicz_modular(const SampledFunction& f, const Exponent& p) {
  KahanSum acc;
  for (std::size_t k = 0; k < f.size(); ++k) {
    acc.add(f.measure->masses[k] * orlicz_psi(std::abs(f.values[k]), p));
  }
  return acc.value();
}

// norm_p(f) = modular^(1/p); positively homogeneous only in the log-free
// regime, but monotone and the basis of rho_p for p > 1.
inline double norm_p(const SampledFunction& f, const Exponent& p) {
  return std::pow(orlicz_modular(f, p), 1.0 / p.value());
}

struct SandwichReport {
  bool ok = true;
  double max_slack = 0.0;               // worst margin of the upper bound
  std::optional<std::size_t> violating_atom;
};

// Verifies, atom by atom, the two-sided comparison between the modular
// integrand and the log^+ energy:
//
//   (log^+ x)^p <= (log(1+x))^p <= 2^max(p-1,0) * ((log 2)^p + (log^+ x)^p)
//
// Returns the first violating atom if either side fails (it cannot, up to
// rounding; the check guards the integrands against regressions).
inline SandwichReport check_sandwich(const SampledFunction& f, const Exponent& p) {
  SandwichReport rep;
  const double log2p = std::pow(std::numbers::ln2, p.value());
  const double c = p.two_pow();
  double worst = -1.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double x = std::abs(f.values[k]);
    const double mid = orlicz_psi(x, p);
    const double lo = std::pow(log_plus(x), p.value());
    const double hi = c * (log2p + lo);
    const double tol = 1e-12 * std::max(1.0, hi);
    if (mid < lo - tol || mid > hi + tol) {
      rep.ok = false;
      rep.violating_atom = k;
      return rep;
    }
    const double slack = hi - mid;
    if (slack > worst) worst = slack;
  }
  rep.max_slack = worst;
  return rep;
}

}  // namespace logspace
