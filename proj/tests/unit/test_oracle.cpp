#include <catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "test_support.hpp"

using namespace peakdec;

TEST_CASE("exhaustive isotonic oracle", "[oracle]") {
  REQUIRE(oracle::oracle_isotonic(std::vector<double>{1, 3}) == std::vector<double>{2, 2});
  REQUIRE(oracle::oracle_isotonic(std::vector<double>{2, 1}) == std::vector<double>{2, 1});
  REQUIRE(oracle::oracle_isotonic(std::vector<double>{5, 3, 4, 1}) == std::vector<double>{5, 3.5, 3.5, 1});
  REQUIRE(oracle::oracle_isotonic(std::vector<double>{1, 2, 3}) == std::vector<double>{2, 2, 2});
  REQUIRE_THROWS_AS(oracle::isotonic_exhaustive(std::vector<double>(13, 1.0)), std::invalid_argument);
  REQUIRE_THROWS_AS(oracle::oracle_isotonic(std::vector<double>(4097, 1.0)), std::invalid_argument);
}

TEST_CASE("the two isotonic oracles agree", "[oracle]") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = testing::random_magnitudes(rng, 1 + trial % 12);
    const auto a = oracle::isotonic_exhaustive(t);
    const auto b = oracle::isotonic_scan(t);
    for (std::size_t i = 0; i < t.size(); ++i) REQUIRE(std::abs(a[i] - b[i]) <= 1e-12);
  }
}

TEST_CASE("direct DFT oracle", "[oracle]") {
  const auto y = oracle::oracle_dft(TimeSeries({1, 1, 1, 1}));
  REQUIRE(std::abs(y[0] - Complex(4)) < 1e-12);
  REQUIRE(std::abs(y[1]) < 1e-12);
  REQUIRE(std::abs(y[2]) < 1e-12);
  REQUIRE_THROWS_AS(oracle::oracle_dft(TimeSeries({5})), std::invalid_argument);
  REQUIRE_THROWS_AS(oracle::oracle_dft(TimeSeries(std::vector<double>(4097, 0.0))), std::invalid_argument);
}

TEST_CASE("joint minimisation oracle", "[oracle]") {
  SECTION("pseudo-symmetric about (3, +1)") {
    const auto order = oracle::sorted_index_order(3, 1, 7);
    std::vector<Complex> bins(8);
    for (std::size_t m = 0; m < 8; ++m) bins[order[m]] = Complex(0, 10.0 - double(m));
    const auto r = oracle::oracle_joint_min(Spectrum::from_bins(bins));
    REQUIRE(r.error == 0.0);
  }
  SECTION("spike") {
    std::vector<Complex> bins(5);
    bins[2] = Complex(3, 0);
    const auto r = oracle::oracle_joint_min(Spectrum::from_bins(bins));
    REQUIRE(r.error == 0.0);
    REQUIRE(r.k_star == 2);
    REQUIRE(r.b == 1);
  }
  SECTION("cap") {
    REQUIRE_THROWS_AS(oracle::oracle_joint_min(Spectrum::from_bins(std::vector<Complex>(66))), std::invalid_argument);
  }
}
