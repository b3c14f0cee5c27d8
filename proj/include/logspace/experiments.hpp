#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logspace/analytic.hpp"
#include "logspace/generators.hpp"
#include "logspace/measure.hpp"
#include "logspace/metrics.hpp"
#include "logspace/modular.hpp"
#include "logspace/report.hpp"
#include "logspace/rng.hpp"
#include "logspace/summation.hpp"
#include "logspace/weighted.hpp"

namespace logspace {

// Operational meaning of "the sequence tends to zero" throughout the
// harness: the final value sits below `threshold` and the last `tail`
// values are nonincreasing.  Sequences are indexed over a geometric ladder
// n = 2^j, so the tail covers a 2^10 range of scales.
struct ConvergenceRule {
  double threshold = 1e-3;
  int tail = 10;
};

struct SeqVerdict {
  bool converged = false;
  bool monotone_tail = false;
  double last = 0.0;
  int crossing_index = -1;  // first ladder index below threshold, -1 if none
};

inline SeqVerdict assess_convergence(const std::vector<double>& seq,
                                     const ConvergenceRule& rule = {}) {
  SeqVerdict v;
  if (seq.empty()) return v;
  v.last = seq.back();
  v.monotone_tail = true;
  const std::size_t tail = std::min<std::size_t>(seq.size(), static_cast<std::size_t>(rule.tail));
  for (std::size_t i = seq.size() - tail + 1; i < seq.size(); ++i) {
    if (seq[i] > seq[i - 1]) v.monotone_tail = false;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < rule.threshold) {
      v.crossing_index = static_cast<int>(i);
      break;
    }
  }
  v.converged = v.monotone_tail && v.last < rule.threshold;
  return v;
}

// A sequence together with its sample-wise limit.  Members are bounded on
// purpose: with heavy-tailed samples the operational rule would need a far
// longer ladder before the Ky Fan term clears the threshold.  Scales shrink
// like 8^-j because below p = 1 the modular of a size-eps perturbation is
// only eps^p; a 2^-j ladder would stall above the threshold.
struct SequenceFamily {
  std::string name;
  std::function<SampledFunction(int)> at;  // ladder index j
  SampledFunction limit;
};

inline std::vector<SequenceFamily> bounded_families(const MeasurePtr& m) {
  const SampledFunction f = generate_function("poly-boundary:1,0.5", m, 1.0, 0);
  const SampledFunction g = generate_function("trig-affine:a=2,b=1", m, 1.0, 0);

  std::vector<SequenceFamily> out;
  out.push_back({"scaled-sum",
                 [f, g](int j) { return sum(f, scale(g, std::pow(8.0, -j))); },
                 f});
  // The support halves each rung and the value tapers by 4^-j on top: on a
  // fixed atomic grid a pure support shrink plateaus at single-atom mass,
  // which rho_p^(1/p) would leave visible above the threshold.
  out.push_back({"shrinking-support",
                 [m, f, g](int j) {
                   const double n = std::pow(2.0, j);
                   const std::size_t atoms = static_cast<std::size_t>(
                       std::ceil(static_cast<double>(m->size()) / n));
                   const double taper = std::pow(4.0, -j);
                   std::vector<std::complex<double>> v = f.values;
                   for (std::size_t k = 0; k < std::min(atoms, m->size()); ++k) {
                     v[k] += taper * g.values[k];
                   }
                   return SampledFunction(m, std::move(v));
                 },
                 f});
  out.push_back({"modular-scaling",
                 [g](int j) { return scale(g, std::pow(8.0, -j)); },
                 constant_function(m, 0.0)});
  return out;
}

struct ExperimentConfig {
  std::string name;
  std::vector<double> p_values;  // empty: experiment default
  int grid_size = 0;             // 0: experiment default
  std::vector<int> ladder;       // classification ladder exponents; empty: default
  std::uint64_t seed = 1;
  int triples = 1000;
  int pairs = 100;
  int restarts = 20;
  int degree = 3;
  ConvergenceRule rule;
};

struct ExperimentInfo {
  std::string name;
  std::string anchor;
};

inline const std::vector<ExperimentInfo>& experiment_catalog() {
  static const std::vector<ExperimentInfo> catalog = {
      {"metric-axioms",
       "d_p, delta_p, rho_p: symmetry is exact, distance zero only at equality, "
       "triangle inequality holds on random triples"},
      {"metric-equivalence",
       "rho_p -> 0 iff d_p -> 0 on generated sequences; restricted modulars obey "
       "the triangle and two-sided log^+ bounds"},
      {"coarser-topology", "for 0 < p < s, d_s-convergence implies d_p-convergence"},
      {"lq-stronger",
       "L^q-convergence implies rho_p-convergence; (log(1+x))^p <= (p/q) x^q on the "
       "test grid for q <= min(p,1)"},
      {"norm-modular", "modular(f_n) -> 0 iff F-norm |f_n|_p -> 0 on scaling families"},
      {"delta2",
       "doubling bound psi(2t) <= 2^p psi(t) on a log-spaced grid; psi(t)/t decreases "
       "to 0 beyond t = e^p"},
      {"algebra-inequalities",
       "log^+ bounds for products and sums, the two-sided modular sandwich, and "
       "continuity of multiplication along converging sequences"},
      {"weight-classify",
       "refinement-ladder verdicts for the weight-pair catalog; the singular pair "
       "tracks the harmonic sum; bounded-log weights change nothing"},
      {"proper-inclusion",
       "weighted norm triangle bound |f w| <= |f omega| + |w/omega|, convergence "
       "transfer from the omega-space to the w-space, scalar dilation bound"},
      {"poly-infimum",
       "inf over polynomials with P(0) = 1 of the modular is (log 2)^p unweighted; "
       "a vanishing weight ratio drives the weighted infimum strictly down"},
      {"outer-boundary",
       "Herglotz-kernel outer functions: unit kernel mean, boundary modulus "
       "recovery under refinement, multiplicativity, radial log^+ means"},
      {"cauchy-spotcheck",
       "partial sums of absolutely summable series converge in rho_p and in "
       "rho_p^w for every weight"},
  };
  return catalog;
}

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::vector<double> default_p(const ExperimentConfig& cfg) {
  return cfg.p_values.empty() ? std::vector<double>{0.5, 1.0, 2.0, 3.0} : cfg.p_values;
}

inline std::vector<int> default_ladder(const ExperimentConfig& cfg) {
  return cfg.ladder.empty() ? std::vector<int>{8, 10, 12, 14, 16, 18, 20} : cfg.ladder;
}

inline nlohmann::json seq_json(const SeqVerdict& v) {
  return {{"converged", v.converged},
          {"last", v.last},
          {"monotone_tail", v.monotone_tail},
          {"crossing_index", v.crossing_index}};
}

inline bool leq_slack(double lhs, double rhs, double slack) {
  return lhs <= rhs + slack * std::max(1.0, std::abs(rhs));
}

// ---------------------------------------------------------------- experiments

inline void run_metric_axioms(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const int n_grid = cfg.grid_size > 0 ? cfg.grid_size : 64;
  const auto m = lebesgue_grid(static_cast<std::size_t>(n_grid));
  const double slack = 1e-12;

  for (double pv : default_p(cfg)) {
    const Exponent p(pv);
    Rng rng = substream(cfg.seed, "metric-axioms/p=" + fmt(pv));
    int sym_fail = 0, id_fail = 0, tri_fail = 0;
    // smallest slack fg + gh - fh seen; how close the triangle came to failing
    double min_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.triples; ++i) {
      const SampledFunction f = random_function(m, rng);
      const SampledFunction g = random_function(m, rng);
      const SampledFunction h = random_function(m, rng);
      const auto eval3 = [&](const SampledFunction& a, const SampledFunction& b) {
        return std::array<double, 3>{metric_d_p(a, b, p).value, metric_delta_p(a, b, p).value,
                                     metric_rho_p(a, b, p).value};
      };
      const auto fg = eval3(f, g), gf = eval3(g, f), gh = eval3(g, h), fh = eval3(f, h);
      for (int k = 0; k < 3; ++k) {
        if (fg[k] != gf[k]) ++sym_fail;
        if (!leq_slack(fh[k], fg[k] + gh[k], slack)) {
          ++tri_fail;
        }
        min_margin = std::min(min_margin, fg[k] + gh[k] - fh[k]);
      }
      if (i == 0) {
        const auto ff = eval3(f, f);
        for (int k = 0; k < 3; ++k) {
          if (ff[k] != 0.0) ++id_fail;
          if (!(fg[k] > 0.0)) ++id_fail;
        }
      }
    }
    rep.add({"axioms/p=" + fmt(pv),
             "symmetry exact, identity of indiscernibles, triangle with 1e-12 slack",
             {{"triples", cfg.triples},
              {"symmetry_failures", sym_fail},
              {"identity_failures", id_fail},
              {"triangle_failures", tri_fail},
              {"smallest_triangle_margin", min_margin}},
             {{"slack", slack}},
             sym_fail == 0 && id_fail == 0 && tri_fail == 0});
  }
}

inline void run_metric_equivalence(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const int n_grid = cfg.grid_size > 0 ? cfg.grid_size : 8192;
  const auto m = lebesgue_grid(static_cast<std::size_t>(n_grid));
  const auto families = bounded_families(m);
  const int ladder_top = 14;

  for (double pv : default_p(cfg)) {
    const Exponent p(pv);
    for (const auto& fam : families) {
      std::vector<double> rho_seq, d_seq;
      for (int j = 0; j <= ladder_top; ++j) {
        const SampledFunction fj = fam.at(j);
        rho_seq.push_back(metric_rho_p(fj, fam.limit, p).value);
        d_seq.push_back(metric_d_p(fj, fam.limit, p).value);
      }
      const SeqVerdict vr = assess_convergence(rho_seq, cfg.rule);
      const SeqVerdict vd = assess_convergence(d_seq, cfg.rule);
      const int octaves = (vr.crossing_index >= 0 && vd.crossing_index >= 0)
                              ? std::abs(vr.crossing_index - vd.crossing_index)
                              : 99;
      rep.add({"equivalence/" + fam.name + "/p=" + fmt(pv),
               "rho_p and d_p vanish together along the sequence, crossing the "
               "threshold within a bounded index gap",
               {{"rho", seq_json(vr)}, {"d", seq_json(vd)}, {"crossing_gap", octaves}},
               {{"threshold", cfg.rule.threshold}, {"tail", cfg.rule.tail}, {"max_gap", 6}},
               vr.converged && vd.converged && octaves <= 6});
    }

    // Restricted modular bounds used by the equivalence arguments: for any
    // atom subset E, the E-restricted norm obeys the triangle inequality and
    // the two-sided log^+ comparison.
    Rng rng = substream(cfg.seed, "metric-equivalence/restricted/p=" + fmt(pv));
    const auto msmall = lebesgue_grid(256);
    int fails = 0;
    double worst = 0.0;
    const double log2p = std::pow(std::numbers::ln2, pv);
    for (int i = 0; i < 200; ++i) {
      const SampledFunction f = random_function(msmall, rng);
      const SampledFunction g = random_function(msmall, rng);
      std::vector<char> e(msmall->size());
      for (auto& b : e) b = rng.uniform01() < 0.5 ? 1 : 0;
      KahanSum mu_e, mod_f, mod_g, mod_fg, logplus_f;
      for (std::size_t k = 0; k < msmall->size(); ++k) {
        if (!e[k]) continue;
        const double mass = msmall->masses[k];
        mu_e.add(mass);
        mod_f.add(mass * orlicz_psi(std::abs(f.values[k]), p));
        mod_g.add(mass * orlicz_psi(std::abs(g.values[k]), p));
        mod_fg.add(mass * orlicz_psi(std::abs(f.values[k] + g.values[k]), p));
        logplus_f.add(mass * std::pow(log_plus(std::abs(f.values[k])), pv));
      }
      const double inv = 1.0 / p.max_with_one();
      const double tri_lhs = std::pow(mod_fg.value(), inv);
      const double tri_rhs = std::pow(mod_f.value(), inv) + std::pow(mod_g.value(), inv);
      const double cap = p.two_pow() * (log2p * mu_e.value() + logplus_f.value());
      if (!leq_slack(tri_lhs, tri_rhs, 1e-12)) ++fails;
      if (!leq_slack(mod_f.value(), cap, 1e-12)) ++fails;
      worst = std::max(worst, tri_lhs - tri_rhs);
    }
    rep.add({"restricted-bounds/p=" + fmt(pv),
             "restricted norms: triangle inequality and modular <= "
             "2^max(p-1,0) ((log 2)^p mu(E) + restricted log^+ energy)",
             {{"samples", 200}, {"failures", fails}, {"worst_triangle_excess", worst}},
             {{"slack", 1e-12}},
             fails == 0});
  }
}

inline void run_coarser_topology(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const int n_grid = cfg.grid_size > 0 ? cfg.grid_size : 8192;
  const auto m = lebesgue_grid(static_cast<std::size_t>(n_grid));
  const auto families = bounded_families(m);
  const std::vector<std::pair<double, double>> ps = {{0.5, 1.0}, {1.0, 2.0}, {2.0, 3.0}};

  for (const auto& [pv, sv] : ps) {
    const Exponent p(pv), s(sv);
    for (const auto& fam : families) {
      std::vector<double> dp_seq, ds_seq;
      for (int j = 0; j <= 14; ++j) {
        const SampledFunction fj = fam.at(j);
        dp_seq.push_back(metric_d_p(fj, fam.limit, p).value);
        ds_seq.push_back(metric_d_p(fj, fam.limit, s).value);
      }
      const SeqVerdict vs = assess_convergence(ds_seq, cfg.rule);
      const SeqVerdict vp = assess_convergence(dp_seq, cfg.rule);
      rep.add({"coarser/" + fam.name + "/p=" + fmt(pv) + "/s=" + fmt(sv),
               "d_s-convergence implies d_p-convergence for p < s",
               {{"d_s", seq_json(vs)}, {"d_p", seq_json(vp)}},
               {{"threshold", cfg.rule.threshold}},
               vs.converged && vp.converged});
    }
  }
}

inline void run_lq_stronger(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const std::vector<std::pair<double, double>> pq = {{0.5, 0.5}, {0.5, 0.25}, {1.0, 1.0},
                                                     {1.0, 0.5}, {2.0, 1.0},  {2.0, 0.5},
                                                     {3.0, 1.0}};
  // Pointwise bound on a log-spaced grid.
  const int grid_points = 10000;
  for (const auto& [pv, qv] : pq) {
    int violations = 0;
    double worst = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double x =
          std::pow(10.0, -9.0 + 18.0 * static_cast<double>(i) / (grid_points - 1));
      const double lhs = std::pow(std::log1p(x), pv);
      const double rhs = (pv / qv) * std::pow(x, qv);
      if (lhs > rhs) ++violations;
      worst = std::max(worst, lhs - rhs);
    }
    rep.add({"pointwise/p=" + fmt(pv) + "/q=" + fmt(qv),
             "(log(1+x))^p <= (p/q) x^q for q <= min(p,1), inclusive comparison",
             {{"grid_points", grid_points}, {"violations", violations}, {"worst_excess", worst}},
             {{"x_range", "1e-9..1e9"}},
             violations == 0});
  }

  // Sequence implication on a geometric perturbation family.  The scale
  // contracts by 16 per rung so the L^q values clear the threshold even at
  // q = 1/4, where they only shrink like (scale)^q.
  const int n_grid = cfg.grid_size > 0 ? cfg.grid_size : 4096;
  const auto m = lebesgue_grid(static_cast<std::size_t>(n_grid));
  const SampledFunction f0 = generate_function("poly-boundary:1,0.5", m, 1.0, 0);
  const SampledFunction g0 = generate_function("trig-affine:a=2,b=1", m, 1.0, 0);
  for (const auto& [pv, qv] : pq) {
    const Exponent p(pv);
    std::vector<double> lq_seq, rho_seq;
    for (int j = 0; j <= 14; ++j) {
      const SampledFunction fj = sum(f0, scale(g0, std::pow(16.0, -j)));
      const SampledFunction diff = difference(fj, f0);
      KahanSum acc;
      for (std::size_t k = 0; k < m->size(); ++k) {
        acc.add(m->masses[k] * std::pow(std::abs(diff.values[k]), qv));
      }
      lq_seq.push_back(std::pow(acc.value(), 1.0 / std::max(qv, 1.0)));
      rho_seq.push_back(metric_rho_p(fj, f0, p).value);
    }
    const SeqVerdict vq = assess_convergence(lq_seq, cfg.rule);
    const SeqVerdict vr = assess_convergence(rho_seq, cfg.rule);
    rep.add({"implication/p=" + fmt(pv) + "/q=" + fmt(qv),
             "L^q-convergence implies rho_p-convergence",
             {{"lq", seq_json(vq)}, {"rho", seq_json(vr)}},
             {{"threshold", cfg.rule.threshold}},
             vq.converged && vr.converged});
  }
}

inline void run_norm_modular(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const int n_grid = cfg.grid_size > 0 ? cfg.grid_size : 1024;
  const auto m = lebesgue_grid(static_cast<std::size_t>(n_grid));
  const SampledFunction g = generate_function("trig-affine:a=2,b=1", m, 1.0, 0);

  for (double pv : default_p(cfg)) {
    const Exponent p(pv);
    // Vanishing branch: h_j = g * 8^-j drives both quantities to zero.  The
    // F-norm of a small function is roughly modular^(1/(p+1))-sized, so the
    // geometric contraction is what lets it cross the threshold by j = 14.
    std::vector<double> modular_seq, fnorm_seq;
    for (int j = 0; j <= 14; ++j) {
      const SampledFunction h = scale(g, std::pow(8.0, -j));
      modular_seq.push_back(orlicz_modular(h, p));
      fnorm_seq.push_back(f_norm(h, p));
    }
    const SeqVerdict vm = assess_convergence(modular_seq, cfg.rule);
    const SeqVerdict vf = assess_convergence(fnorm_seq, cfg.rule);
    rep.add({"norm-modular/vanishing/p=" + fmt(pv),
             "modular and F-norm vanish together along the scaling sequence",
             {{"modular", seq_json(vm)}, {"f_norm", seq_json(vf)}},
             {{"threshold", cfg.rule.threshold}},
             vm.converged && vf.converged});

    // Negative control: the constant sequence h_j = g keeps both quantities
    // away from zero, so neither side of the equivalence fires vacuously.
    const double mod_g = orlicz_modular(g, p);
    const double fnorm_g = f_norm(g, p);
    rep.add({"norm-modular/negative-control/p=" + fmt(pv),
             "a non-vanishing sequence keeps both the modular and the F-norm "
             "above the threshold",
             {{"modular", mod_g}, {"f_norm", fnorm_g}},
             {{"threshold", cfg.rule.threshold}},
             mod_g > cfg.rule.threshold && fnorm_g > cfg.rule.threshold});
  }
}

inline void run_delta2(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const int grid_points = 10000;
  for (double pv : default_p(cfg)) {
    const Exponent p(pv);
    const double c = std::pow(2.0, pv);
    int violations = 0;
    double worst_ratio = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double t =
          std::pow(10.0, -9.0 + 18.0 * static_cast<double>(i) / (grid_points - 1));
      const double lhs = orlicz_psi(2.0 * t, p);
      const double rhs = c * orlicz_psi(t, p);
      if (lhs > rhs) ++violations;
      if (rhs > 0.0) worst_ratio = std::max(worst_ratio, lhs / rhs);
    }
    rep.add({"doubling/p=" + fmt(pv),
             "psi(2t) <= 2^p psi(t) with zero violations, inclusive comparison",
             {{"grid_points", grid_points}, {"violations", violations}, {"worst_ratio", worst_ratio}},
             {{"t_range", "1e-9..1e9"}},
             violations == 0});

    // psi(t)/t decreases beyond t = e^p and drains to zero.
    const double t0 = std::exp(pv);
    const int decay_points = 200;
    bool monotone = true;
    double prev = std::numeric_limits<double>::infinity();
    double last = 0.0;
    for (int i = 0; i < decay_points; ++i) {
      const double t = t0 * std::pow(1e9 / t0, static_cast<double>(i) / (decay_points - 1));
      const double v = orlicz_psi(t, p) / t;
      if (v > prev) monotone = false;
      prev = v;
      last = v;
    }
    rep.add({"decay/p=" + fmt(pv),
             "psi(t)/t is nonincreasing on [e^p, 1e9] and ends below 1e-4",
             {{"monotone", monotone}, {"final_value", last}},
             {{"final_below", 1e-4}},
             monotone && last < 1e-4});
  }
}

inline void run_algebra_inequalities(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const int samples = 10000;
  for (double pv : default_p(cfg)) {
    const Exponent p(pv);
    Rng rng = substream(cfg.seed, "algebra/p=" + fmt(pv));
    int fails = 0;
    const double c3 = p.three_pow();
    const double two_log2 = 2.0 * std::numbers::ln2;
    for (int i = 0; i < samples; ++i) {
      const double x = std::exp(2.0 * rng.normal());
      const double y = std::exp(2.0 * rng.normal());
      if (!leq_slack(log_plus(x * y), log_plus(x) + log_plus(y), 1e-12)) ++fails;
      if (!leq_slack(log_plus(x + y), log_plus(x) + log_plus(y) + std::numbers::ln2, 1e-12)) {
        ++fails;
      }
      if (!leq_slack(std::log1p(x * y), std::log1p(x) + std::log1p(y), 1e-12)) ++fails;
      const double lhs = orlicz_psi(x + y, p);
      const double rhs = c3 * (std::pow(two_log2, pv) + std::pow(log_plus(x), pv) +
                               std::pow(log_plus(y), pv));
      if (!leq_slack(lhs, rhs, 1e-12)) ++fails;
    }
    rep.add({"pointwise/p=" + fmt(pv),
             "log^+ product/sum bounds and the three-term sum bound with constant "
             "3^max(p-1,0)",
             {{"samples", samples}, {"failures", fails}},
             {{"slack", 1e-12}},
             fails == 0});

    const auto m = lebesgue_grid(512);
    Rng rng2 = substream(cfg.seed, "algebra/sandwich/p=" + fmt(pv));
    const SampledFunction f = random_function(m, rng2, 2.0);
    const SandwichReport sw = check_sandwich(f, p);
    rep.add({"sandwich/p=" + fmt(pv),
             "(log^+ x)^p <= (log(1+x))^p <= 2^max(p-1,0)((log 2)^p + (log^+ x)^p) atomwise",
             {{"ok", sw.ok}, {"max_slack", sw.max_slack}},
             {{"atoms", 512}},
             sw.ok});
  }

  // Multiplication continuity: f_n -> f and g_n -> g force f_n g_n -> f g.
  const auto m = lebesgue_grid(1024);
  const SampledFunction f = generate_function("poly-boundary:1,0.5", m, 1.0, 0);
  const SampledFunction g = generate_function("trig-affine:a=2,b=1", m, 1.0, 0);
  for (double pv : default_p(cfg)) {
    const Exponent p(pv);
    std::vector<double> seq;
    for (int j = 0; j <= 14; ++j) {
      const double eps = std::pow(8.0, -j);
      const SampledFunction fn = sum(f, constant_function(m, eps));
      const SampledFunction gn = sum(g, constant_function(m, 0.5 * eps));
      seq.push_back(metric_rho_p(product(fn, gn), product(f, g), p).value);
    }
    const SeqVerdict v = assess_convergence(seq, cfg.rule);
    rep.add({"multiplication/p=" + fmt(pv),
             "rho_p(f_n g_n, f g) -> 0 when both factors converge",
             seq_json(v),
             {{"threshold", cfg.rule.threshold}},
             v.converged});
  }
}

inline void run_weight_classify(const ExperimentConfig& cfg, ExperimentReport& rep) {
  ClassifyOptions copt;
  copt.ladder = default_ladder(cfg);

  for (double pv : default_p(cfg)) {
    const Exponent p(pv);
    const Descriptor one = parse_descriptor("const:1", pv);
    const Descriptor singular = parse_descriptor("expneg:a=1,b=1/p", pv);
    const Descriptor bounded = parse_descriptor("trig-affine:a=2,b=1", pv);
    const Descriptor hypothesis_breaker = parse_descriptor("exppos:a=1,b=1/p", pv);

    const ClassifyResult sing = classify_weights(singular, one, p, copt);
    // The singular pair integrates |log(w/omega)|^p = 1/t; on midpoint grids
    // the rung energy is exactly the scaled odd harmonic sum.
    double worst_oracle = 0.0;
    for (std::size_t i = 0; i < sing.grid_sizes.size(); ++i) {
      KahanSum hsum;
      for (std::size_t k = 0; k < sing.grid_sizes[i]; ++k) {
        hsum.add(1.0 / (static_cast<double>(k) + 0.5));
      }
      const double oracle = hsum.value() / (2.0 * std::numbers::pi);
      worst_oracle = std::max(worst_oracle,
                              std::abs(sing.abs_energies[i] - oracle) / oracle);
    }
    rep.add({"singular-pair/p=" + fmt(pv),
             "w = exp(-t^(-1/p)), omega = 1: proper inclusion; rung energies equal "
             "the harmonic-sum oracle",
             {{"relation", to_string(sing.relation)},
              {"abs_energies", sing.abs_energies},
              {"oracle_rel_error", worst_oracle},
              {"total_growth", sing.abs_energies.back() / sing.abs_energies.front()}},
             {{"oracle_tol", 1e-8}},
             sing.relation == SpaceRelation::ProperInclusion && worst_oracle <= 1e-8});

    const ClassifyResult bnd = classify_weights(bounded, one, p, copt);
    rep.add({"bounded-pair/p=" + fmt(pv),
             "w = 2 + sin t, omega = 1: equal spaces with flat energies",
             {{"relation", to_string(bnd.relation)},
              {"total_growth", bnd.abs_energies.back() / bnd.abs_energies.front()}},
             {{"bounded_ratio", copt.bounded_ratio}},
             bnd.relation == SpaceRelation::EqualSpaces});

    const ClassifyResult same = classify_weights(bounded, bounded, p, copt);
    rep.add({"identical-pair/p=" + fmt(pv),
             "w = omega: equal spaces, all energies vanish",
             {{"relation", to_string(same.relation)},
              {"max_energy", *std::max_element(same.abs_energies.begin(), same.abs_energies.end())}},
             {},
             same.relation == SpaceRelation::EqualSpaces && same.abs_energies.back() == 0.0});

    const ClassifyResult breaker = classify_weights(hypothesis_breaker, one, p, copt);
    rep.add({"hypothesis-breaker/p=" + fmt(pv),
             "w = exp(+t^(-1/p)): log^+(w/omega) energy diverges, verdict withheld",
             {{"relation", to_string(breaker.relation)}},
             {},
             breaker.relation == SpaceRelation::Inconclusive});

    // Decidable consistency: equal spaces against the constant weight exactly
    // when |log w|^p has bounded refinement energy.
    bool consistent = true;
    for (const Descriptor* w : {&singular, &bounded}) {
      const ClassifyResult r = classify_weights(*w, one, p, copt);
      if (r.relation == SpaceRelation::Inconclusive) continue;
      const bool equal = r.relation == SpaceRelation::EqualSpaces;
      const bool log_in_lp = r.abs_trend == EnergyTrend::Bounded;
      if (equal != log_in_lp) consistent = false;
    }
    rep.add({"logw-consistency/p=" + fmt(pv),
             "conclusive verdicts agree with the decidable test log w in L^p",
             {{"consistent", consistent}},
             {},
             consistent});

    // Witness search for an algebra obstruction: f = g = 1/w has finite
    // weighted modular while the modular of the product f g grows along the
    // ladder.  Evidence only; nothing is asserted about its limit.
    std::vector<double> product_energies;
    double fg_modular_last = 0.0;
    for (int e : copt.ladder) {
      const auto grid = midpoint_grid(std::size_t{1} << e);
      KahanSum acc;
      for (std::size_t k = 0; k < grid->size(); ++k) {
        // |f g| w = (1/w)^2 w = 1/w, handled as log(1 + e^s) with
        // s = -log w so the fine rungs stay inside double range
        const double s = -singular.eval_log_real(grid->points[k]);
        const double log1p_exp = s > 40.0 ? s : std::log1p(std::exp(s));
        acc.add(grid->masses[k] * std::pow(log1p_exp, pv));
      }
      product_energies.push_back(acc.value());
      fg_modular_last = acc.value();
    }
    rep.add({"product-witness/p=" + fmt(pv),
             "f = g = 1/w: weighted modular of f stays (log 2)^p while the modular "
             "of f g climbs along refinement",
             {{"product_modulars", product_energies}, {"last", fg_modular_last}},
             {},
             true,
             /*informational=*/true});
  }
}

inline void run_proper_inclusion(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const auto m = lebesgue_grid(256);

  for (double pv : default_p(cfg)) {
    const Exponent p(pv);
    Rng rng = substream(cfg.seed, "proper-inclusion/p=" + fmt(pv));
    int fails = 0;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const SampledFunction f = random_function(m, rng);
      const Weight w = random_weight(m, rng);
      const Weight omega = random_weight(m, rng);
      std::vector<std::complex<double>> ratio(m->size());
      for (std::size_t k = 0; k < m->size(); ++k) ratio[k] = w.values[k] / omega.values[k];
      const SampledFunction ratio_fn(m, std::move(ratio));

      double lhs, rhs;
      if (pv >= 1.0) {
        lhs = weighted_norm_p(f, w, p);
        rhs = weighted_norm_p(f, omega, p) + norm_p(ratio_fn, p);
      } else {
        lhs = weighted_modular(f, w, p);
        rhs = weighted_modular(f, omega, p) + orlicz_modular(ratio_fn, p);
      }
      if (!leq_slack(lhs, rhs, 1e-12)) ++fails;
      worst = std::max(worst, lhs - rhs);

      // Scalar dilation: the constant's norm is taken unweighted.
      const double c = std::exp(rng.normal());
      const SampledFunction cf = scale(f, c);
      double dl, dr;
      if (pv >= 1.0) {
        dl = weighted_norm_p(cf, w, p);
        dr = std::log1p(c) + weighted_norm_p(f, w, p);
      } else {
        dl = weighted_modular(cf, w, p);
        dr = orlicz_psi(c, p) + weighted_modular(f, w, p);
      }
      if (!leq_slack(dl, dr, 1e-12)) ++fails;
    }
    rep.add({"norm-triangle/p=" + fmt(pv),
             "norm(f w) <= norm(f omega) + norm(w/omega); scalar dilation "
             "norm(c f, w) <= log(1+c) + norm(f, w); modular form below p = 1",
             {{"samples", 200}, {"failures", fails}, {"worst_excess", worst}},
             {{"slack", 1e-12}},
             fails == 0});

    // Convergence transfer: with ratio w/omega bounded by one, omega-space
    // convergence forces w-space convergence monotonically.  The pole
    // exponent stays at 1/2 regardless of p: the claim needs domination
    // only, and deeper poles underflow double weights on this grid.
    const int n_grid = cfg.grid_size > 0 ? cfg.grid_size : 4096;
    const auto grid = midpoint_grid(static_cast<std::size_t>(n_grid));
    const Weight w_sing = generate_weight("expneg:a=1,b=0.5", grid, pv, cfg.seed);
    const Weight omega_one = generate_weight("const:1", grid, pv, cfg.seed);
    const SampledFunction f0 = generate_function("poly-boundary:1,0.5", grid, pv, 0);
    const SampledFunction g0 = generate_function("trig-affine:a=2,b=1", grid, pv, 0);
    std::vector<double> rho_omega, rho_w;
    for (int j = 0; j <= 14; ++j) {
      const SampledFunction fj = sum(f0, scale(g0, std::pow(8.0, -j)));
      rho_omega.push_back(metric_rho_w_p(fj, f0, omega_one, p).value);
      rho_w.push_back(metric_rho_w_p(fj, f0, w_sing, p).value);
    }
    const SeqVerdict vo = assess_convergence(rho_omega, cfg.rule);
    const SeqVerdict vw = assess_convergence(rho_w, cfg.rule);
    bool dominated = true;
    for (std::size_t i = 0; i < rho_w.size(); ++i) {
      if (rho_w[i] > rho_omega[i] * (1.0 + 1e-12)) dominated = false;
    }
    rep.add({"transfer/p=" + fmt(pv),
             "w/omega <= 1: rho^omega-convergence transfers to rho^w, value by value",
             {{"rho_omega", seq_json(vo)}, {"rho_w", seq_json(vw)}, {"dominated", dominated}},
             {{"threshold", cfg.rule.threshold}},
             vo.converged && vw.converged && dominated});

    // Bounded log-weight reduction: classification says equal spaces and the
    // metrics converge side by side.
    ClassifyOptions copt;
    copt.ladder = default_ladder(cfg);
    const ClassifyResult red =
        classify_weights(parse_descriptor("trig-affine:a=2,b=1", pv),
                         parse_descriptor("const:1", pv), p, copt);
    const auto grid2 = lebesgue_grid(2048);
    const Weight w_b = generate_weight("trig-affine:a=2,b=1", grid2, pv, cfg.seed);
    const SampledFunction f1 = generate_function("poly-boundary:1,0.5", grid2, pv, 0);
    const SampledFunction g1 = generate_function("trig-affine:a=2,b=1", grid2, pv, 0);
    std::vector<double> rho_plain, rho_weighted;
    for (int j = 0; j <= 14; ++j) {
      const SampledFunction fj = sum(f1, scale(g1, std::pow(8.0, -j)));
      rho_plain.push_back(metric_rho_p(fj, f1, p).value);
      rho_weighted.push_back(metric_rho_w_p(fj, f1, w_b, p).value);
    }
    const SeqVerdict vp2 = assess_convergence(rho_plain, cfg.rule);
    const SeqVerdict vw2 = assess_convergence(rho_weighted, cfg.rule);
    rep.add({"bounded-log-reduction/p=" + fmt(pv),
             "log w bounded: equal spaces and side-by-side metric convergence",
             {{"relation", to_string(red.relation)},
              {"rho", seq_json(vp2)},
              {"rho_w", seq_json(vw2)}},
             {{"threshold", cfg.rule.threshold}},
             red.relation == SpaceRelation::EqualSpaces && vp2.converged && vw2.converged});
  }
}

inline void run_poly_infimum(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const std::vector<double> ps =
      cfg.p_values.empty() ? std::vector<double>{1.0, 2.0} : cfg.p_values;
  const int n_grid = cfg.grid_size > 0 ? cfg.grid_size : 4096;
  const auto grid = lebesgue_grid(static_cast<std::size_t>(n_grid));

  for (double pv : ps) {
    const Exponent p(pv);
    const double floor_v = std::pow(std::numbers::ln2, pv);

    PolyInfimumOptions d0;
    d0.degree = 0;
    const PolyInfimumResult r0 = poly_modular_infimum(grid, p, d0);
    rep.add({"degree0/p=" + fmt(pv),
             "degree 0 forces P = 1 and the modular (log 2)^p exactly",
             {{"value", r0.best_value}, {"expected", floor_v}},
             {{"rel_tol", 1e-14}},
             std::abs(r0.best_value - floor_v) <= 1e-14 * floor_v});

    bool floor_ok = true, band_ok = true;
    std::vector<double> values;
    for (int d = 1; d <= cfg.degree; ++d) {
      PolyInfimumOptions o;
      o.degree = d;
      o.restarts = cfg.restarts;
      o.seed = cfg.seed;
      const PolyInfimumResult r = poly_modular_infimum(grid, p, o);
      values.push_back(r.best_value);
      if (r.best_value < floor_v - 1e-6) floor_ok = false;
      if (r.best_value > floor_v + 1e-3) band_ok = false;
    }
    rep.add({"unweighted-floor/p=" + fmt(pv),
             "no admissible polynomial drives the modular below (log 2)^p; the "
             "optimizer lands inside [(log 2)^p - 1e-6, (log 2)^p + 1e-3]",
             {{"values", values}, {"floor", floor_v}},
             {{"floor_slack", 1e-6}, {"band", 1e-3}},
             floor_ok && band_ok});

    // Weighted descent: the vanishing ratio lets higher degrees push the
    // weighted modular strictly below each lower-degree optimum while the
    // unweighted floor stands untouched.
    const auto wgrid = midpoint_grid(1024);
    const Weight wr = generate_weight("expneg:a=1,b=1/p", wgrid, pv, cfg.seed);
    std::vector<double> weighted_values, unweighted_values;
    std::vector<std::complex<double>> warm;
    for (int d = 1; d <= 6; ++d) {
      PolyInfimumOptions o;
      o.degree = d;
      o.restarts = 12;
      o.seed = cfg.seed;
      o.ratio = wr.values;
      o.warm_start = warm;
      const PolyInfimumResult r = poly_modular_infimum(wgrid, p, o);
      weighted_values.push_back(r.best_value);
      warm.assign(r.coeffs.begin() + 1, r.coeffs.end());
      warm.push_back({0.0, 0.0});

      PolyInfimumOptions u;
      u.degree = d;
      u.restarts = 8;
      u.seed = cfg.seed;
      const PolyInfimumResult ru = poly_modular_infimum(wgrid, p, u);
      unweighted_values.push_back(ru.best_value);
    }
    bool strict = true;
    for (std::size_t i = 1; i < weighted_values.size(); ++i) {
      if (!(weighted_values[i] < weighted_values[i - 1])) strict = false;
    }
    bool ufloor = true;
    for (double v : unweighted_values) {
      if (v < floor_v - 1e-6) ufloor = false;
    }
    rep.add({"weighted-descent/p=" + fmt(pv),
             "singular ratio w/omega = exp(-t^(-1/p)): weighted optima strictly "
             "decrease over degrees 1..6; unweighted optima never leave the floor",
             {{"weighted", weighted_values}, {"unweighted", unweighted_values}},
             {{"floor", floor_v}, {"floor_slack", 1e-6}},
             strict && ufloor});
  }
}

inline void run_outer_boundary(const ExperimentConfig& cfg, ExperimentReport& rep) {
  // Constant log-modulus: the kernel has unit mean, so F = e^c.
  {
    const auto grid = lebesgue_grid(4096);
    const double c = 0.7;
    const AnalyticFunction f =
        AnalyticFunction::outer(grid, std::vector<double>(grid->size(), c));
    double worst = 0.0;
    for (double r : {0.0, 0.5, 0.99}) {
      for (int i = 0; i < 128; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / 128.0;
        worst = std::max(worst, std::abs(f.eval(r, theta) - std::exp(c)));
      }
    }
    rep.add({"constant-logmod",
             "outer function of constant log-modulus c equals e^c on the disk",
             {{"worst_abs_error", worst}},
             {{"tol", 1e-8}},
             worst <= 1e-8});
  }

  // Boundary modulus recovery sharpens under refinement.  The ladder stops
  // where the refinement term still dominates: the discrete kernel mean is
  // exactly 1 + 2 z^N/(1 - z^N), so at r = 1 - 2 pi/N every N carries an
  // aliasing floor of about 2 e^(-2 pi) times the mean log-modulus.
  {
    std::vector<double> errors;
    for (int e : {8, 10, 14}) {
      const auto grid = lebesgue_grid(std::size_t{1} << e);
      const Weight w = generate_weight("trig-affine:a=2,b=1", grid, 1.0, 0);
      const AnalyticFunction f = AnalyticFunction::outer_from_weight(w);
      errors.push_back(boundary_modulus_check(f, w.values, grid).max_rel_error);
    }
    const bool decreasing = errors[0] > errors[1] && errors[1] > errors[2];
    rep.add({"boundary-recovery",
             "max relative boundary-modulus error at r = 1 - 2 pi/N decreases over "
             "N in {2^8, 2^10, 2^14} and ends below 1e-2",
             {{"errors", errors}},
             {{"final_tol", 1e-2}},
             decreasing && errors.back() < 1e-2});

    // Evidence for the floor itself: between 2^14 and 2^15 the error no
    // longer shrinks, and the first-order aliasing prediction matches its
    // scale.  Nothing asserted; this documents why the ladder stops early.
    const auto grid15 = lebesgue_grid(std::size_t{1} << 15);
    const Weight w15 = generate_weight("trig-affine:a=2,b=1", grid15, 1.0, 0);
    const double err15 =
        boundary_modulus_check(AnalyticFunction::outer_from_weight(w15), w15.values, grid15)
            .max_rel_error;
    KahanSum mean_lm;
    for (std::size_t k = 0; k < grid15->size(); ++k) {
      mean_lm.add(grid15->masses[k] * std::log(w15.values[k]));
    }
    rep.add({"aliasing-floor",
             "at the coupled radius the discrete kernel mean is 1 + 2 z^N/(1 - z^N); "
             "the resulting error floor is about 2 e^(-2 pi) mean(log w)",
             {{"error_2_14", errors.back()},
              {"error_2_15", err15},
              {"first_order_prediction",
               2.0 * std::exp(-2.0 * std::numbers::pi) * mean_lm.value()}},
             {},
             true,
             /*informational=*/true});
  }

  // Multiplicativity and the center value.
  {
    const auto grid = lebesgue_grid(2048);
    const Weight w1 = generate_weight("trig-affine:a=2,b=1", grid, 1.0, 0);
    const Weight w2 = generate_weight("trig-affine:a=3,b=-1", grid, 1.0, 0);
    const AnalyticFunction f1 = AnalyticFunction::outer_from_weight(w1);
    const AnalyticFunction f2 = AnalyticFunction::outer_from_weight(w2);
    std::vector<double> lm(grid->size());
    for (std::size_t k = 0; k < grid->size(); ++k) {
      lm[k] = std::log(w1.values[k]) + std::log(w2.values[k]);
    }
    const AnalyticFunction f12 = AnalyticFunction::outer(grid, lm);
    Rng rng = substream(cfg.seed, "outer/multiplicativity");
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
      const double r = rng.uniform(0.0, 0.95);
      const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const std::complex<double> lhs = f12.eval(r, theta);
      const std::complex<double> rhs = f1.eval(r, theta) * f2.eval(r, theta);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    KahanSum mean;
    for (std::size_t k = 0; k < grid->size(); ++k) mean.add(grid->masses[k] * lm[k]);
    const double center = std::abs(f12.eval(0.0, 0.0));
    const double center_err = std::abs(center - std::exp(mean.value()));
    rep.add({"multiplicativity",
             "outer(u + v) = outer(u) outer(v) on the disk; |F(0)| = exp(mean "
             "log-modulus)",
             {{"worst_rel_error", worst}, {"center_error", center_err}},
             {{"tol", 1e-10}},
             worst <= 1e-10 && center_err <= 1e-10});
  }

  // Singular but integrable log-modulus: radial means stay bounded by the
  // boundary energy; boundary recovery holds away from the singularity.
  {
    const double pv = 2.0;
    const Exponent p(pv);
    const auto grid = midpoint_grid(4096);
    std::vector<double> lm(grid->size());
    for (std::size_t k = 0; k < grid->size(); ++k) {
      lm[k] = std::pow(grid->points[k], -1.0 / (2.0 * pv));
    }
    const AnalyticFunction f = AnalyticFunction::outer(grid, lm);
    const RadialProfile prof = privalov_profile(f, p, {0.5, 0.9, 0.99}, grid);
    KahanSum boundary;
    for (std::size_t k = 0; k < grid->size(); ++k) {
      boundary.add(grid->masses[k] * std::pow(std::max(lm[k], 0.0), pv));
    }
    const bool capped = prof.sup_estimate <= boundary.value() * 1.02;

    std::vector<double> target(grid->size());
    for (std::size_t k = 0; k < grid->size(); ++k) target[k] = std::exp(lm[k]);
    std::vector<char> mask(grid->size(), 1);
    for (std::size_t k = 0; k < grid->size(); ++k) {
      if (grid->points[k] < 0.3 || grid->points[k] > 2.0 * std::numbers::pi - 0.3) mask[k] = 0;
    }
    const BoundaryCheck bc = boundary_modulus_check(f, target, grid, std::nullopt, mask);
    rep.add({"singular-logmod/p=" + fmt(pv),
             "log-modulus t^(-1/(2p)): radial log^+ means stay within 2% of the "
             "boundary energy; masked boundary recovery below 1e-2",
             {{"means", prof.means},
              {"sup_estimate", prof.sup_estimate},
              {"boundary_energy", boundary.value()},
              {"masked_error", bc.max_rel_error}},
             {{"cap_factor", 1.02}, {"masked_tol", 1e-2}},
             capped && bc.max_rel_error < 1e-2});
  }
}

inline void run_cauchy_spotcheck(const ExperimentConfig& cfg, ExperimentReport& rep) {
  const auto m = lebesgue_grid(1024);
  const SampledFunction f = generate_function("poly-boundary:1,0.5", m, 1.0, 0);
  const SampledFunction g = generate_function("trig-affine:a=2,b=1", m, 1.0, 0);
  const Weight w = generate_weight("trig-affine:a=2,b=1", m, 1.0, 0);
  // Increments g * 4^-j sum to g/3; the ratio-4 contraction keeps the tails
  // below threshold even below p = 1 where rho only sees (tail)^p.
  const SampledFunction limit = sum(f, scale(g, 1.0 / 3.0));

  for (double pv : default_p(cfg)) {
    const Exponent p(pv);
    std::vector<double> plain_seq, weighted_seq;
    KahanSum increment_sum;
    SampledFunction s = f;
    for (int j = 1; j <= 15; ++j) {
      const SampledFunction next = sum(s, scale(g, std::pow(0.25, j)));
      increment_sum.add(metric_rho_p(next, s, p).value);
      s = next;
      plain_seq.push_back(metric_rho_p(s, limit, p).value);
      weighted_seq.push_back(metric_rho_w_p(s, limit, w, p).value);
    }
    const SeqVerdict vp = assess_convergence(plain_seq, cfg.rule);
    const SeqVerdict vw = assess_convergence(weighted_seq, cfg.rule);
    rep.add({"cauchy/p=" + fmt(pv),
             "geometric partial sums reach their sample-wise limit in rho_p and "
             "rho_p^w; increments are absolutely summable",
             {{"rho", seq_json(vp)},
              {"rho_w", seq_json(vw)},
              {"increment_sum", increment_sum.value()}},
             {{"threshold", cfg.rule.threshold}},
             vp.converged && vw.converged});
  }
}

}  // namespace detail

inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  ExperimentReport rep;
  rep.experiment = cfg.name;
  rep.timestamp = iso8601_now();
  rep.config = {{"p_values", detail::default_p(cfg)},
                {"grid_size", cfg.grid_size},
                {"ladder", detail::default_ladder(cfg)},
                {"seed", cfg.seed},
                {"triples", cfg.triples},
                {"pairs", cfg.pairs},
                {"restarts", cfg.restarts},
                {"degree", cfg.degree},
                {"convergence_threshold", cfg.rule.threshold},
                {"convergence_tail", cfg.rule.tail}};

  if (cfg.name == "metric-axioms") {
    detail::run_metric_axioms(cfg, rep);
  } else if (cfg.name == "metric-equivalence") {
    detail::run_metric_equivalence(cfg, rep);
  } else if (cfg.name == "coarser-topology") {
    detail::run_coarser_topology(cfg, rep);
  } else if (cfg.name == "lq-stronger") {
    detail::run_lq_stronger(cfg, rep);
  } else if (cfg.name == "norm-modular") {
    detail::run_norm_modular(cfg, rep);
  } else if (cfg.name == "delta2") {
    detail::run_delta2(cfg, rep);
  } else if (cfg.name == "algebra-inequalities") {
    detail::run_algebra_inequalities(cfg, rep);
  } else if (cfg.name == "weight-classify") {
    detail::run_weight_classify(cfg, rep);
  } else if (cfg.name == "proper-inclusion") {
    detail::run_proper_inclusion(cfg, rep);
  } else if (cfg.name == "poly-infimum") {
    detail::run_poly_infimum(cfg, rep);
  } else if (cfg.name == "outer-boundary") {
    detail::run_outer_boundary(cfg, rep);
  } else if (cfg.name == "cauchy-spotcheck") {
    detail::run_cauchy_spotcheck(cfg, rep);
  } else {
    throw std::invalid_argument("unknown experiment '" + cfg.name +
                                "'; see the catalog for valid names");
  }
  return rep;
}

}  // namespace logspace
