#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace logspace {

struct NelderMeadOptions {
  int max_evals = 4000;
  double initial_step = 0.5;
  double f_tol = 1e-12;  // absolute spread of simplex values at termination
  double x_tol = 1e-10;  // simplex diameter at termination
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  int evaluations = 0;
};

// Downhill simplex with the standard coefficients (reflect 1, expand 2,
// contract 1/2, shrink 1/2).  Fully deterministic: the trajectory depends
// only on the start point and options, never on global state.
template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0,
                             const NelderMeadOptions& opt = {}) {
  const std::size_t n = x0.size();
  NelderMeadResult out;
  if (n == 0) {
    out.x = std::move(x0);
    out.fx = f(out.x);
    out.evaluations = 1;
    return out;
  }

  std::vector<std::vector<double>> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (std::size_t i = 1; i <= n; ++i) xs[i][i - 1] += opt.initial_step;
  for (std::size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);
  out.evaluations = static_cast<int>(n) + 1;

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);

  while (out.evaluations < opt.max_evals) {
    for (std::size_t i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    const std::size_t best = order[0];
    const std::size_t worst = order[n];
    const std::size_t second_worst = order[n - 1];

    double diam = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        diam = std::max(diam, std::abs(xs[order[i]][j] - xs[best][j]));
      }
    }
    if (fs[worst] - fs[best] <= opt.f_tol && diam <= opt.x_tol) break;

    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i <= n; ++i) {
        if (i != worst) s += xs[i][j];
      }
      centroid[j] = s / static_cast<double>(n);
    }

    for (std::size_t j = 0; j < n; ++j) xr[j] = centroid[j] + (centroid[j] - xs[worst][j]);
    const double fr = f(xr);
    ++out.evaluations;

    if (fr < fs[best]) {
      for (std::size_t j = 0; j < n; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - xs[worst][j]);
      const double fe = f(xe);
      ++out.evaluations;
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second_worst]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      const std::vector<double>& towards = outside ? xr : xs[worst];
      for (std::size_t j = 0; j < n; ++j) xc[j] = centroid[j] + 0.5 * (towards[j] - centroid[j]);
      const double fc = f(xc);
      ++out.evaluations;
      if (fc < (outside ? fr : fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t j = 0; j < n; ++j) {
            xs[i][j] = xs[best][j] + 0.5 * (xs[i][j] - xs[best][j]);
          }
          fs[i] = f(xs[i]);
          ++out.evaluations;
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (fs[i] < fs[best]) best = i;
  }
  out.x = xs[best];
  out.fx = fs[best];
  return out;
}

}  // namespace logspace
