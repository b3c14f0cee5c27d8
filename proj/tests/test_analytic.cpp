#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "logspace/analytic.hpp"
#include "logspace/measure.hpp"
#include "logspace/nelder_mead.hpp"
#include "logspace/rng.hpp"
#include "logspace/weighted.hpp"

using namespace logspace;

namespace {
constexpr double kLog2 = std::numbers::ln2;
}

TEST_CASE("radial means of simple polynomials match closed forms", "[analytic]") {
  const auto grid = lebesgue_grid(64);
  const auto two_z = AnalyticFunction::polynomial({{0.0, 0.0}, {2.0, 0.0}});
  // |2z| = 2r is constant on each circle, so the mean is (log^+ 2r)^p
  for (double p : {1.0, 2.0}) {
    const auto prof = privalov_profile(two_z, Exponent(p), {0.3, 0.6, 0.9}, grid);
    REQUIRE(prof.means[0] == 0.0);  // 2r < 1, log^+ kills it
    REQUIRE(prof.means[1] == Catch::Approx(std::pow(std::log(1.2), p)).epsilon(1e-13));
    REQUIRE(prof.means[2] == Catch::Approx(std::pow(std::log(1.8), p)).epsilon(1e-13));
    REQUIRE(prof.sup_estimate == Catch::Approx(std::pow(std::log(1.8), p)).epsilon(1e-13));
  }
  // means flatten near the boundary, where the heuristic calls it bounded
  const auto flat = privalov_profile(two_z, Exponent(1.0), {0.97, 0.98, 0.99}, grid);
  REQUIRE(flat.bounded);

  const auto z_only = AnalyticFunction::polynomial({{0.0, 0.0}, {1.0, 0.0}});
  const auto zero = privalov_profile(z_only, Exponent(1.0), {0.1, 0.5, 0.9}, grid);
  for (double m : zero.means) REQUIRE(m == 0.0);
  REQUIRE(zero.sup_estimate == 0.0);
  REQUIRE(zero.bounded);
}

TEST_CASE("log modulus agrees with the direct evaluation", "[analytic]") {
  const auto poly = AnalyticFunction::polynomial({{1.0, 0.5}, {0.0, -2.0}, {0.3, 0.0}});
  const auto grid = midpoint_grid(512);
  std::vector<double> lm(512);
  for (std::size_t k = 0; k < 512; ++k) lm[k] = std::log(2.0 + std::sin(grid->points[k]));
  const auto outer = AnalyticFunction::outer(grid, lm);
  for (const auto& f : {poly, outer}) {
    for (double r : {0.0, 0.4, 0.9}) {
      for (double th : {0.1, 2.0, 5.5}) {
        REQUIRE(f.log_modulus(r, th) ==
                Catch::Approx(std::log(std::abs(f.eval(r, th)))).margin(1e-12));
      }
    }
  }
}

TEST_CASE("evaluation is restricted to the open disk", "[analytic]") {
  const auto f = AnalyticFunction::polynomial({{1.0, 0.0}});
  REQUIRE_THROWS_AS(f.eval(1.0, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(f.eval(-0.1, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(f.log_modulus(1.5, 0.0), std::invalid_argument);
}

TEST_CASE("outer function with constant log modulus is the constant", "[analytic]") {
  // discretisation leaks only through r^N, negligible for these pairs
  const double c = 0.7;
  const auto grid = midpoint_grid(2048);
  const auto f = AnalyticFunction::outer(grid, std::vector<double>(2048, c));
  for (double r : {0.0, 0.5, 0.9}) {
    for (double th : {0.0, 1.3, 4.0}) {
      const auto v = f.eval(r, th);
      REQUIRE(std::abs(v) == Catch::Approx(std::exp(c)).epsilon(1e-10));
      REQUIRE(v.imag() == Catch::Approx(0.0).margin(1e-9));
    }
  }
}

TEST_CASE("centre value is the exponential of the mean log modulus", "[analytic]") {
  const auto grid = midpoint_grid(256);
  Rng rng(11);
  std::vector<double> lm(256);
  long double mean = 0.0L;
  for (std::size_t k = 0; k < 256; ++k) {
    lm[k] = rng.uniform(-1.0, 1.0);
    mean += static_cast<long double>(grid->masses[k]) * lm[k];
  }
  const auto f = AnalyticFunction::outer(grid, lm);
  REQUIRE(std::abs(f.eval(0.0, 0.0)) ==
          Catch::Approx(std::exp(static_cast<double>(mean))).epsilon(1e-13));
}

TEST_CASE("outer construction is multiplicative in the boundary data", "[analytic]") {
  const auto grid = midpoint_grid(512);
  std::vector<double> lm1(512), lm2(512), sum(512);
  for (std::size_t k = 0; k < 512; ++k) {
    lm1[k] = std::log(2.0 + std::sin(grid->points[k]));
    lm2[k] = 0.3 * std::cos(grid->points[k]);
    sum[k] = lm1[k] + lm2[k];
  }
  const auto f1 = AnalyticFunction::outer(grid, lm1);
  const auto f2 = AnalyticFunction::outer(grid, lm2);
  const auto f12 = AnalyticFunction::outer(grid, sum);
  for (double r : {0.2, 0.8}) {
    for (double th : {0.7, 3.9}) {
      REQUIRE(f12.log_modulus(r, th) ==
              Catch::Approx(f1.log_modulus(r, th) + f2.log_modulus(r, th)).margin(1e-10));
      const auto prod = f1.eval(r, th) * f2.eval(r, th);
      REQUIRE(std::abs(f12.eval(r, th) - prod) <= 1e-9 * std::abs(prod));
    }
  }
}

TEST_CASE("boundary check recovers trivial and smooth targets", "[analytic]") {
  SECTION("unit target from zero log modulus") {
    const auto grid = midpoint_grid(128);
    const auto f = AnalyticFunction::outer(grid, std::vector<double>(128, 0.0));
    const std::vector<double> target(128, 1.0);
    const auto chk = boundary_modulus_check(f, target, grid);
    REQUIRE(chk.max_rel_error < 1e-12);
    REQUIRE(chk.checked_atoms == 128);
    REQUIRE(chk.probe_radius ==
            Catch::Approx(1.0 - 2.0 * std::numbers::pi / 128.0).epsilon(1e-15));
  }
  SECTION("smooth positive weight on a mid-size grid") {
    const auto grid = midpoint_grid(1024);
    const auto w = weight_from_descriptor(parse_descriptor("trig-affine:a=2,b=1", 1.0), grid);
    const auto f = AnalyticFunction::outer_from_weight(w);
    const auto chk = boundary_modulus_check(f, w.values, grid);
    REQUIRE(chk.max_rel_error < 6e-3);  // one-grid-spacing probe of a smooth target
    REQUIRE(chk.worst_atom < 1024);
  }
}

TEST_CASE("boundary check validates its inputs", "[analytic]") {
  const auto grid = midpoint_grid(32);
  const auto f = AnalyticFunction::outer(grid, std::vector<double>(32, 0.0));
  const std::vector<double> ones(32, 1.0);
  std::vector<double> bad = ones;
  bad[7] = 0.0;
  REQUIRE_THROWS_AS(boundary_modulus_check(f, bad, grid), std::invalid_argument);
  REQUIRE_THROWS_AS(boundary_modulus_check(f, std::vector<double>(16, 1.0), grid),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(boundary_modulus_check(f, ones, grid, 1.0), std::invalid_argument);
  const std::vector<char> none(32, 0);
  REQUIRE_THROWS_AS(boundary_modulus_check(f, ones, grid, std::nullopt, none),
                    std::invalid_argument);
  const std::vector<char> short_mask(8, 1);
  REQUIRE_THROWS_AS(boundary_modulus_check(f, ones, grid, std::nullopt, short_mask),
                    std::invalid_argument);
  // masking works: excluding a poisoned atom lets the rest pass
  std::vector<char> skip7(32, 1);
  skip7[7] = 0;
  const auto chk = boundary_modulus_check(f, bad, grid, std::nullopt, skip7);
  REQUIRE(chk.checked_atoms == 31);
  REQUIRE(chk.max_rel_error < 1e-12);
}

TEST_CASE("radial profile validates its radii", "[analytic]") {
  const auto grid = lebesgue_grid(16);
  const auto f = AnalyticFunction::polynomial({{1.0, 0.0}});
  REQUIRE_THROWS_AS(privalov_profile(f, Exponent(1.0), {}, grid), std::invalid_argument);
  REQUIRE_THROWS_AS(privalov_profile(f, Exponent(1.0), {0.5, 1.0}, grid),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(privalov_profile(f, Exponent(1.0), {0.5, 0.5}, grid),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(privalov_profile(f, Exponent(1.0), {0.5, 0.2}, grid),
                    std::invalid_argument);
}

TEST_CASE("nelder mead minimises a quadratic bowl", "[analytic]") {
  const auto bowl = [](const std::vector<double>& x) {
    const double u = x[0] - 1.0, v = x[1] + 0.5;
    return u * u + 2.0 * v * v;
  };
  const auto res = nelder_mead(bowl, {0.0, 0.0});
  REQUIRE(res.fx < 1e-9);
  REQUIRE(res.x[0] == Catch::Approx(1.0).margin(1e-4));
  REQUIRE(res.x[1] == Catch::Approx(-0.5).margin(1e-4));
  REQUIRE(res.evaluations > 0);
}

TEST_CASE("polynomial infimum at degree zero is the constant modular", "[analytic]") {
  const auto grid = midpoint_grid(256);
  for (double p : {0.5, 1.0, 2.0}) {
    PolyInfimumOptions opt;
    opt.degree = 0;
    const auto r = poly_modular_infimum(grid, Exponent(p), opt);
    REQUIRE(r.best_value == Catch::Approx(std::pow(kLog2, p)).epsilon(1e-14));
    REQUIRE(r.coeffs.size() == 1);
    REQUIRE(r.coeffs[0] == std::complex<double>(1.0, 0.0));
    REQUIRE(r.evaluations == 1);
  }
}

TEST_CASE("degree one infimum is bracketed by a brute force scan", "[analytic]") {
  const auto grid = midpoint_grid(256);
  const Exponent p(1.0);

  // independent scan over real c of the modular of 1 + c z
  double brute = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 800; ++i) {
    const double c = -0.95 + i * (1.9 / 800.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < grid->size(); ++k) {
      const std::complex<double> z = std::polar(1.0, grid->points[k]);
      acc += grid->masses[k] * std::log1p(std::abs(1.0 + c * z));
    }
    brute = std::min(brute, acc);
  }

  PolyInfimumOptions opt;
  opt.degree = 1;
  opt.restarts = 6;
  const auto r = poly_modular_infimum(grid, p, opt);
  REQUIRE(r.best_value <= brute + 1e-6);
  REQUIRE(r.best_value >= kLog2 - 1e-6);  // the constant polynomial is optimal
  REQUIRE(r.coeffs.size() == 2);
  REQUIRE(r.best_restart >= 0);
}

TEST_CASE("polynomial infimum rejects malformed options", "[analytic]") {
  const auto grid = midpoint_grid(64);
  PolyInfimumOptions bad;
  bad.degree = -1;
  REQUIRE_THROWS_AS(poly_modular_infimum(grid, Exponent(1.0), bad), std::invalid_argument);
  bad.degree = 1;
  bad.restarts = 0;
  REQUIRE_THROWS_AS(poly_modular_infimum(grid, Exponent(1.0), bad), std::invalid_argument);
  bad.restarts = 2;
  bad.ratio = {1.0, 2.0};
  REQUIRE_THROWS_AS(poly_modular_infimum(grid, Exponent(1.0), bad), std::invalid_argument);
  bad.ratio.clear();
  bad.warm_start = {{0.1, 0.0}, {0.2, 0.0}};
  REQUIRE_THROWS_AS(poly_modular_infimum(grid, Exponent(1.0), bad), std::invalid_argument);
}

TEST_CASE("analytic constructors validate their inputs", "[analytic]") {
  REQUIRE_THROWS_AS(AnalyticFunction::polynomial({}), std::invalid_argument);
  REQUIRE_THROWS_AS(AnalyticFunction::outer(nullptr, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(AnalyticFunction::outer(midpoint_grid(8), std::vector<double>(4, 0.0)),
                    std::invalid_argument);
}
