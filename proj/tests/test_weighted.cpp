#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "logspace/generators.hpp"
#include "logspace/measure.hpp"
#include "logspace/modular.hpp"
#include "logspace/rng.hpp"
#include "logspace/weighted.hpp"

using namespace logspace;

TEST_CASE("weight construction validates its samples", "[weighted]") {
  const auto m = lebesgue_grid(4);
  REQUIRE_NOTHROW(Weight(m, {1.0, 2.0, 0.5, 1e-30}));
  REQUIRE_THROWS_AS(Weight(m, {1.0, 0.0, 1.0, 1.0}), std::invalid_argument);
  REQUIRE_THROWS_AS(Weight(m, {1.0, -2.0, 1.0, 1.0}), std::invalid_argument);
  REQUIRE_THROWS_AS(Weight(m, {1.0, std::nan(""), 1.0, 1.0}), std::invalid_argument);
  REQUIRE_THROWS_AS(Weight(m, {1.0, 1.0, 1.0}), std::invalid_argument);
  REQUIRE_THROWS_AS(Weight(nullptr, {}), std::invalid_argument);
}

TEST_CASE("weight from descriptor reproduces the formula pointwise", "[weighted]") {
  const auto m = midpoint_grid(64);
  const auto d = parse_descriptor("trig-affine:a=2,b=1", 1.0);
  const auto w = weight_from_descriptor(d, m);
  REQUIRE(w.descriptor.has_value());
  for (std::size_t k = 0; k < m->size(); ++k) {
    REQUIRE(w.values[k] == 2.0 + std::sin(m->points[k]));
  }
  // families without a pointwise formula or with complex values are rejected
  REQUIRE_THROWS_AS(weight_from_descriptor(parse_descriptor("lognormal:sigma=1", 1.0), m),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(weight_from_descriptor(parse_descriptor("poly-boundary:0,1", 1.0), m),
                    std::invalid_argument);
}

TEST_CASE("weighted quantities delegate to the rescaled function", "[weighted]") {
  const auto m = midpoint_grid(128);
  Rng rng(31);
  const auto f = random_function(m, rng, 1.0);
  const auto w = weight_from_descriptor(parse_descriptor("trig-affine:a=2,b=1", 2.0), m);
  const auto fw = rescale(f, w);
  for (double p : {0.5, 1.0, 2.0}) {
    const Exponent pe(p);
    REQUIRE(weighted_modular(f, w, pe) == orlicz_modular(fw, pe));
    REQUIRE(weighted_norm_p(f, w, pe) ==
            std::pow(weighted_modular(f, w, pe), 1.0 / p));
    REQUIRE(f_norm_w(f, w, pe) == f_norm(fw, pe));
  }
  const auto g = random_function(m, rng, 1.0);
  REQUIRE(metric_rho_w_p(f, g, w, Exponent(2.0)).value ==
          metric_rho_p(fw, rescale(g, w), Exponent(2.0)).value);
}

TEST_CASE("rescale requires a shared measure", "[weighted]") {
  const auto f = constant_function(lebesgue_grid(8), 1.0);
  const auto w = weight_from_descriptor(parse_descriptor("const:1", 1.0), lebesgue_grid(16));
  REQUIRE_THROWS_AS(rescale(f, w), std::invalid_argument);
}

TEST_CASE("energy trend branch coverage", "[weighted]") {
  const ClassifyOptions opt;
  using E = EnergyTrend;
  // flat sequence: total growth 1 < bounded_ratio
  REQUIRE(energy_trend({1.0, 1.0, 1.0}, opt) == E::Bounded);
  // fast growth trips the total ratio
  REQUIRE(energy_trend({1.0, 4.0, 20.0}, opt) == E::Divergent);
  // slow but sustained growth: strictly increasing, last step above 1.05
  REQUIRE(energy_trend({1.0, 1.3, 1.7, 2.3}, opt) == E::Divergent);
  // settles down: non-monotone and total under 1.05
  REQUIRE(energy_trend({1.0, 1.04, 1.02}, opt) == E::Bounded);
  // grows then shrinks with sizable total: no verdict
  REQUIRE(energy_trend({1.0, 3.0, 2.5}, opt) == E::Ambiguous);
  // identically zero energy is bounded
  REQUIRE(energy_trend({0.0, 0.0, 0.0}, opt) == E::Bounded);
  // zero first rung with later mass: any ratio test would divide by zero
  REQUIRE(energy_trend({0.0, 1.0}, opt) == E::Divergent);
  // fewer than two rungs carries no trend
  REQUIRE(energy_trend({1.0}, opt) == E::Ambiguous);
  REQUIRE(energy_trend({}, opt) == E::Ambiguous);
}

TEST_CASE("classification separates the weight catalog", "[weighted]") {
  ClassifyOptions opt;
  opt.ladder = {8, 10, 12, 14};

  SECTION("deep zero of the weight against a flat reference") {
    for (double p : {0.5, 1.0, 2.0}) {
      const auto r = classify_weights(parse_descriptor("expneg:a=1,b=1/p", p),
                                      parse_descriptor("const:1", p), Exponent(p), opt);
      INFO("p=" << p << " note=" << r.note);
      REQUIRE(r.relation == SpaceRelation::ProperInclusion);
      REQUIRE(r.logplus_trend == EnergyTrend::Bounded);
      REQUIRE(r.abs_trend == EnergyTrend::Divergent);
      REQUIRE(r.grid_sizes == std::vector<std::size_t>{256, 1024, 4096, 16384});
    }
  }

  SECTION("comparable weights give the same space") {
    const auto r = classify_weights(parse_descriptor("trig-affine:a=2,b=1", 1.0),
                                    parse_descriptor("const:1", 1.0), Exponent(1.0), opt);
    REQUIRE(r.relation == SpaceRelation::EqualSpaces);
  }

  SECTION("identical weights have exactly zero energies") {
    const auto r = classify_weights(parse_descriptor("trig-affine:a=2,b=1", 1.0),
                                    parse_descriptor("trig-affine:a=2,b=1", 1.0),
                                    Exponent(1.0), opt);
    REQUIRE(r.relation == SpaceRelation::EqualSpaces);
    for (double e : r.logplus_energies) REQUIRE(e == 0.0);
    for (double e : r.abs_energies) REQUIRE(e == 0.0);
  }

  SECTION("weight exploding at the pole breaks the comparison hypothesis") {
    const auto r = classify_weights(parse_descriptor("exppos:a=1,b=1", 1.0),
                                    parse_descriptor("const:1", 1.0), Exponent(1.0), opt);
    REQUIRE(r.relation == SpaceRelation::Inconclusive);
    REQUIRE(r.logplus_trend == EnergyTrend::Divergent);
  }
}

TEST_CASE("harmonic rung energy matches a direct sum", "[weighted]") {
  // w = exp(-t^(-1/p)) against 1: |log(w/1)|^p = 1/t, so the rung energy on a
  // 2^8 midpoint circle grid is (1/2pi) * sum over k of 1/(k + 1/2)
  ClassifyOptions opt;
  opt.ladder = {8, 10};
  const double p = 2.0;
  const auto r = classify_weights(parse_descriptor("expneg:a=1,b=1/p", p),
                                  parse_descriptor("const:1", p), Exponent(p), opt);
  double direct = 0.0;
  for (int k = 255; k >= 0; --k) direct += 1.0 / (k + 0.5);
  direct /= 2.0 * std::numbers::pi;
  REQUIRE(r.abs_energies[0] == Catch::Approx(direct).epsilon(1e-12));
  REQUIRE(r.logplus_energies[0] == 0.0);
}

TEST_CASE("log domain evaluation agrees with the value domain away from poles", "[weighted]") {
  for (const char* text : {"const:3", "trig-affine:a=2,b=1", "expneg:a=1,b=0.5",
                           "exppos:a=0.1,b=0.5", "piecewise:0=2,3=0.5"}) {
    const auto d = parse_descriptor(text, 1.0);
    for (double t : {0.3, 1.0, 2.5, 6.0}) {
      INFO(text << " at t=" << t);
      REQUIRE(d.eval_log_real(t) ==
              Catch::Approx(std::log(d.eval_real(t))).margin(1e-12));
    }
  }
}

TEST_CASE("classification rejects unusable inputs", "[weighted]") {
  const Exponent p(1.0);
  REQUIRE_THROWS_AS(classify_weights(parse_descriptor("lognormal:sigma=1", 1.0),
                                     parse_descriptor("const:1", 1.0), p),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(classify_weights(parse_descriptor("poly-boundary:0,1", 1.0),
                                     parse_descriptor("const:1", 1.0), p),
                    std::invalid_argument);
  ClassifyOptions short_ladder;
  short_ladder.ladder = {8};
  REQUIRE_THROWS_AS(classify_weights(parse_descriptor("const:2", 1.0),
                                     parse_descriptor("const:1", 1.0), p, short_ladder),
                    std::invalid_argument);
  ClassifyOptions wild_ladder;
  wild_ladder.ladder = {8, 30};
  REQUIRE_THROWS_AS(classify_weights(parse_descriptor("const:2", 1.0),
                                     parse_descriptor("const:1", 1.0), p, wild_ladder),
                    std::invalid_argument);
  // raw-sample weights carry no formula to refine
  const auto m = midpoint_grid(8);
  const Weight raw(m, std::vector<double>(8, 1.0));
  const auto ok = weight_from_descriptor(parse_descriptor("const:1", 1.0), m);
  REQUIRE_THROWS_AS(classify_weights(raw, ok, p), std::invalid_argument);
}
