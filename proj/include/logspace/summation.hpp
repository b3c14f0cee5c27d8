#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace logspace {

// Neumaier-compensated accumulator.  Every integral in this library is a sum
// over measure atoms; plain summation drifts once atom counts pass ~1e4, so
// all reductions go through this type.  Results are independent of chunking
// up to ~1e-15 relative error.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  // Merges another accumulator; used by chunked reductions.
  void add(const KahanSum& other) {
    add(other.sum_);
    comp_ += other.comp_;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  KahanSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace logspace
