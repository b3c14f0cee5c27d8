#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "logspace/csv.hpp"
#include "logspace/measure.hpp"
#include "logspace/rng.hpp"
#include "logspace/summation.hpp"

using namespace logspace;

namespace {

// reference splitmix64, kept separate from rng.hpp on purpose: the library
// promises byte-stable streams, so an independent copy of the constants
// guards against accidental edits
std::uint64_t ref_splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string("logspace_test_") + name;
  std::ofstream os(path);
  os << body;
  os.close();
  return path;
}

}  // namespace

TEST_CASE("kahan summation matches long double accumulation", "[measure]") {
  Rng rng(7);
  std::vector<double> xs(20000);
  for (auto& x : xs) x = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-8.0, 8.0));
  long double ref = 0.0L;
  for (double x : xs) ref += static_cast<long double>(x);
  const double got = compensated_sum(xs);
  REQUIRE(std::abs(got - static_cast<double>(ref)) <=
          1e-12 * std::max(1.0, std::abs(static_cast<double>(ref))));
}

TEST_CASE("kahan summation is chunking independent", "[measure]") {
  Rng rng(11);
  std::vector<double> xs(4096);
  for (auto& x : xs) x = rng.normal() * std::pow(10.0, rng.uniform(-4.0, 4.0));
  KahanSum whole;
  for (double x : xs) whole.add(x);
  KahanSum parts;
  for (std::size_t start = 0; start < xs.size(); start += 307) {
    KahanSum chunk;
    for (std::size_t i = start; i < std::min(start + 307, xs.size()); ++i) chunk.add(xs[i]);
    parts.add(chunk);
  }
  REQUIRE(std::abs(whole.value() - parts.value()) <=
          1e-13 * std::max(1.0, std::abs(whole.value())));
}

TEST_CASE("rng reproduces the splitmix64 reference stream", "[measure]") {
  std::uint64_t state = 42;
  Rng rng(42);
  for (int i = 0; i < 64; ++i) REQUIRE(rng.next_u64() == ref_splitmix64(state));
}

TEST_CASE("rng streams are deterministic and label separated", "[measure]") {
  Rng a(123), b(123);
  for (int i = 0; i < 16; ++i) REQUIRE(a.uniform01() == b.uniform01());
  Rng s1 = substream(9, "alpha");
  Rng s2 = substream(9, "beta");
  REQUIRE(s1.next_u64() != s2.next_u64());
  Rng s3 = substream(9, "alpha");
  REQUIRE(substream(9, "alpha").next_u64() == s3.next_u64());
}

TEST_CASE("circle grids are uniform probability measures", "[measure]") {
  const auto m = lebesgue_grid(256);
  REQUIRE(m->size() == 256);
  REQUIRE(m->circle_grid);
  REQUIRE(m->total_mass == 1.0);
  REQUIRE(m->points[0] == 0.0);
  REQUIRE(m->points[1] == Catch::Approx(2.0 * std::numbers::pi / 256).epsilon(1e-15));

  const auto mid = midpoint_grid(256);
  REQUIRE(mid->points[0] == Catch::Approx(std::numbers::pi / 256).epsilon(1e-15));
  for (std::size_t k = 0; k < 256; ++k) REQUIRE(mid->points[k] > 0.0);
  REQUIRE(mid->total_mass == 1.0);
}

TEST_CASE("make_measure validates masses", "[measure]") {
  REQUIRE_THROWS_AS(make_measure({0.0, 1.0}, {0.5, -0.5}), std::invalid_argument);
  REQUIRE_THROWS_AS(make_measure({0.0, 1.0}, {0.5}), std::invalid_argument);
  REQUIRE_THROWS_AS(make_measure({}, {}), std::invalid_argument);
  const auto m = make_measure({0.0, 1.0, 2.0}, {0.25, 0.5, 0.25});
  REQUIRE(m->total_mass == 1.0);
}

TEST_CASE("superlevel mass uses inclusive comparison", "[measure]") {
  const auto m = make_measure({0.0, 1.0, 2.0}, {0.2, 0.3, 0.5});
  const std::vector<double> h = {1.0, 2.0, 3.0};
  REQUIRE(superlevel_mass(*m, h, 2.0) == Catch::Approx(0.8).epsilon(1e-15));
  REQUIRE(superlevel_mass(*m, h, 2.0000001) == Catch::Approx(0.5).epsilon(1e-15));
  REQUIRE(superlevel_mass(*m, h, 0.5) == Catch::Approx(1.0).epsilon(1e-15));
  REQUIRE(superlevel_mass(*m, h, 4.0) == 0.0);
  REQUIRE_THROWS_AS(superlevel_mass(*m, std::vector<double>{1.0}, 0.5), std::invalid_argument);
  REQUIRE_THROWS_AS(superlevel_mass(*m, std::vector<double>{-1.0, 0.0, 0.0}, 0.5),
                    std::invalid_argument);
}

TEST_CASE("same_measure accepts pointer or structural equality", "[measure]") {
  const auto a = lebesgue_grid(32);
  const auto b = lebesgue_grid(32);
  const auto c = midpoint_grid(32);
  REQUIRE(same_measure(a, a));
  REQUIRE(same_measure(a, b));
  REQUIRE_FALSE(same_measure(a, c));
  REQUIRE_THROWS_AS(require_same_measure(a, c, "test"), std::invalid_argument);
}

TEST_CASE("measure csv round trip", "[measure]") {
  const auto path = write_temp("measure.csv", "label,mass\n0.0,0.25\n1.5,0.5\n3.0,0.25\n");
  const auto m = load_measure_csv(path);
  REQUIRE(m->size() == 3);
  REQUIRE(m->points[1] == 1.5);
  REQUIRE(m->masses[2] == 0.25);
  REQUIRE(m->labels[1] == "1.5");
  std::remove(path.c_str());
}

TEST_CASE("measure csv rejects bad rows", "[measure]") {
  const auto zero = write_temp("zero_mass.csv", "a,0.0\n");
  REQUIRE_THROWS_AS(load_measure_csv(zero), CsvError);
  std::remove(zero.c_str());

  const auto bad = write_temp("bad_number.csv", "a,0.5\nb,oops\n");
  REQUIRE_THROWS_AS(load_measure_csv(bad), CsvError);
  std::remove(bad.c_str());

  // file-level problems are plain runtime errors, they carry no line anchor
  REQUIRE_THROWS_AS(load_measure_csv("no_such_file_here.csv"), std::runtime_error);
}

TEST_CASE("function csv loads complex samples in order", "[measure]") {
  const auto path = write_temp("function.csv", "index,re,im\n0,1.0,0.0\n1,0.5,-0.5\n2,0,2\n");
  const auto f = load_function_csv(path);
  REQUIRE(f.values.size() == 3);
  REQUIRE(f.values[1] == std::complex<double>(0.5, -0.5));
  REQUIRE(f.measure->total_mass == Catch::Approx(1.0).epsilon(1e-15));

  const auto out_of_order = write_temp("disorder.csv", "index,re,im\n1,1,0\n0,2,0\n");
  REQUIRE_THROWS_AS(load_function_csv(out_of_order), CsvError);
  std::remove(path.c_str());
  std::remove(out_of_order.c_str());
}

TEST_CASE("function csv respects a supplied measure", "[measure]") {
  const auto m = make_measure({0.0, 1.0}, {0.5, 0.5});
  const auto path = write_temp("sized.csv", "0,1,0\n1,2,0\n");
  const auto f = load_function_csv(path, m);
  REQUIRE(f.measure == m);
  const auto mismatch = make_measure({0.0}, {1.0});
  REQUIRE_THROWS_AS(load_function_csv(path, mismatch), std::runtime_error);
  std::remove(path.c_str());
}
