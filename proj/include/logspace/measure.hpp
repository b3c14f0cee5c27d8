#pragma once

#include <cstddef>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logspace/summation.hpp"

namespace logspace {

// Finite discrete measure: atoms with strictly positive masses.  Atoms carry
// a real coordinate; for circle grids this is the angle t_k in [0, 2*pi).
// Everything downstream (functions, weights, metrics) lives over one of
// these, shared by pointer so compatibility checks are cheap.
struct DiscreteMeasure {
  std::vector<double> points;
  std::vector<double> masses;
  std::vector<std::string> labels;  // optional; empty or one per atom
  double total_mass = 0.0;
  bool circle_grid = false;

  std::size_t size() const { return masses.size(); }
};

using MeasurePtr = std::shared_ptr<const DiscreteMeasure>;

inline MeasurePtr make_measure(std::vector<double> points, std::vector<double> masses,
                               std::vector<std::string> labels = {}) {
  if (points.size() != masses.size()) {
    throw std::invalid_argument("measure: points and masses differ in length");
  }
  if (!labels.empty() && labels.size() != masses.size()) {
    throw std::invalid_argument("measure: labels, when given, must cover every atom");
  }
  if (masses.empty()) {
    throw std::invalid_argument("measure: at least one atom required");
  }
  auto m = std::make_shared<DiscreteMeasure>();
  m->points = std::move(points);
  m->masses = std::move(masses);
  m->labels = std::move(labels);
  KahanSum total;
  for (double mass : m->masses) {
    if (!(mass > 0.0)) {
      throw std::invalid_argument("measure: masses must be strictly positive");
    }
    total.add(mass);
  }
  m->total_mass = total.value();
  return m;
}

// Uniform probability grid on the circle: t_k = 2*pi*k/N, mass 1/N.
inline MeasurePtr lebesgue_grid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("lebesgue_grid: grid size must be positive");
  auto m = std::make_shared<DiscreteMeasure>();
  m->points.resize(n);
  m->masses.assign(n, 1.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    m->points[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  }
  m->total_mass = 1.0;
  m->circle_grid = true;
  return m;
}

// Midpoint-shifted grid: t_k = 2*pi*(k+1/2)/N.  Keeps families with a
// singularity at t = 0 evaluable at every atom.
inline MeasurePtr midpoint_grid(std::size_t n) {
  if (n == 0) throw std::invalid_argument("midpoint_grid: grid size must be positive");
  auto m = std::make_shared<DiscreteMeasure>();
  m->points.resize(n);
  m->masses.assign(n, 1.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    m->points[k] =
        2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
  }
  m->total_mass = 1.0;
  m->circle_grid = true;
  return m;
}

// True when two handles may be used together: same object or same atoms.
inline bool same_measure(const MeasurePtr& a, const MeasurePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->points == b->points && a->masses == b->masses;
}

inline void require_same_measure(const MeasurePtr& a, const MeasurePtr& b,
                                 const char* where) {
  if (!same_measure(a, b)) {
    throw std::invalid_argument(std::string(where) + ": operands live on different measures");
  }
}

// mu{ h >= t } for a nonnegative sample vector h over the atoms of mu.
inline double superlevel_mass(const DiscreteMeasure& mu, std::span<const double> h, double t) {
  if (h.size() != mu.size()) {
    throw std::invalid_argument("superlevel_mass: sample count does not match atom count");
  }
  KahanSum acc;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] < 0.0) {
      throw std::invalid_argument("superlevel_mass: samples must be nonnegative");
    }
    if (h[k] >= t) acc.add(mu.masses[k]);
  }
  return acc.value();
}

}  // namespace logspace
