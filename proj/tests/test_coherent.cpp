#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dkgcs/coherent.hpp"

using dkg::CoherentParams;
using dkg::Complex;
using dkg::CurvatureCase;
using dkg::DunklAlpha;

namespace {

const DunklAlpha kHalf = DunklAlpha::from_numerator(1);
const DunklAlpha kThreeHalves = DunklAlpha::from_numerator(3);
const DunklAlpha kSevenHalves = DunklAlpha::from_numerator(7);

Complex lambda0(DunklAlpha a) { return dkg::coherent_scale(CurvatureCase::kGaussian, 0, a, 1.0, 1.0); }

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("parameters are confined to the unit disk") {
  CHECK_THROWS_AS(CoherentParams::make({1.0, 0.0}, kHalf, 1.0), dkg::DomainError);
  CHECK_THROWS_AS(CoherentParams::make({0.8, 0.7}, kHalf, 1.0), dkg::DomainError);
  CHECK_THROWS_AS(CoherentParams::make(0.5, kHalf, 0.0), dkg::DegenerateError);
  CHECK_NOTHROW(CoherentParams::make({0.0, -0.999}, kHalf, 1.0));
  CoherentParams p = CoherentParams::make(0.5, kHalf, 1.0);
  p.xi = 1.2;
  CHECK_THROWS_AS(dkg::coherent_closed_form(0.5, p), dkg::DomainError);
  CHECK_THROWS_AS(dkg::coherent_series(0.5, p, 10), dkg::DomainError);
  CHECK_THROWS_AS(dkg::coherent_evolved(0.5, p), dkg::DomainError);
}

TEST_CASE("scale factor at E_0 for the gaussian profile") {
  CHECK(std::abs(lambda0(kHalf) - Complex(3.4641016151377546, -4.0)) < 1e-14);
  CHECK_THROWS_AS(dkg::coherent_scale(CurvatureCase::kRational, 0, kHalf, 1, 1), dkg::DomainError);
  CHECK_THROWS_AS(dkg::coherent_scale(CurvatureCase::kGaussian, 0, kHalf, 1, 1, dkg::Branch::kMinus), dkg::DomainError);
  CHECK_NOTHROW(dkg::coherent_scale(CurvatureCase::kSinc, 2, kHalf, 1, 1, dkg::Branch::kMinus));
}

TEST_CASE("closed form reference value") {
  const auto p = CoherentParams::make({0.5, 0.2}, kHalf, lambda0(kHalf));
  CHECK(rel(dkg::coherent_closed_form(0.5, p), {1.8213786238461022, -4.7301137159945603}) < 1e-12);
  CHECK(dkg::coherent_closed_form(0.0, p) == Complex(0.0));
}

TEST_CASE("xi = 0 reduces to the lowest eigenfunction") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> xs(1e-3, 1.5);
  for (DunklAlpha a : {kHalf, kThreeHalves, kSevenHalves}) {
    const auto p = CoherentParams::make(0.0, a, lambda0(a));
    for (int i = 0; i < 100; ++i) {
      const double x = xs(rng);
      const Complex f = dkg::eigenfunction_x(0, a, p.lambda_scale, x);
      CHECK(rel(dkg::coherent_closed_form(x, p), f) < 1e-12);
      CHECK(rel(dkg::coherent_series(x, p, 7), f) < 1e-12);
    }
  }
}

TEST_CASE("series agrees with the closed form") {
  for (DunklAlpha a : {kHalf, kThreeHalves, kSevenHalves}) {
    for (Complex xi : {Complex(0.3), Complex(0.5, 0.2), Complex(0.1, -0.6)}) {
      const auto p = CoherentParams::make(xi, a, lambda0(a));
      const int terms = dkg::series_terms_for(p, dkg::kStandardXMax);
      CHECK(terms < dkg::kMaxSeriesTerms);
      double diff = 0.0, size = 0.0;
      for (double x : dkg::standard_grid()) {
        const Complex c = dkg::coherent_closed_form(x, p);
        diff = std::max(diff, std::abs(c - dkg::coherent_series(x, p, terms)));
        size = std::max(size, std::abs(c));
      }
      CAPTURE(a.str());
      CAPTURE(xi);
      CHECK(diff / size < 1e-6);
    }
  }
}

TEST_CASE("series self-convergence between 60 and 80 terms") {
  const auto p = CoherentParams::make({0.5, 0.2}, kHalf, lambda0(kHalf));
  double diff = 0.0;
  for (double x : dkg::standard_grid()) {
    diff = std::max(diff, std::abs(dkg::coherent_series(x, p, 60) - dkg::coherent_series(x, p, 80)));
  }
  CHECK(diff < 1e-8);
  CHECK_THROWS_AS(dkg::coherent_series(0.5, p, 0), dkg::DomainError);
}

TEST_CASE("time evolution") {
  auto p = CoherentParams::make({0.5, 0.2}, kHalf, dkg::coherent_scale(CurvatureCase::kGaussian, 1, kHalf, 1, 1), 1);
  for (double x : {0.1, 0.6, 1.4}) CHECK(dkg::coherent_evolved(x, p) == dkg::coherent_closed_form(x, p));

  // tau = pi maps a real xi to -xi.
  auto real_xi = CoherentParams::make(0.4, kThreeHalves, lambda0(kThreeHalves), 0, std::numbers::pi);
  auto flipped = real_xi;
  flipped.xi = -0.4;
  flipped.tau = 0.0;
  const Complex k = dkg::bargmann_index(kThreeHalves);
  for (double x : {0.2, 0.9}) {
    const Complex want = std::exp(Complex(0.0, -std::numbers::pi) * k) * dkg::coherent_closed_form(x, flipped);
    CHECK(rel(dkg::coherent_evolved(x, real_xi), want) < 1e-12);
  }

  const auto grid = dkg::standard_grid();
  const auto d0 = dkg::density_profile(grid, p, true);
  p.tau = 2.0 * std::numbers::pi;
  const auto d1 = dkg::density_profile(grid, p, true);
  p.phase = dkg::PhaseConvention::kAsPrinted;
  const auto d2 = dkg::density_profile(grid, p, true);
  p.tau = 0.0;
  const auto d3 = dkg::density_profile(grid, p, true);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(d0.density[i] - d1.density[i]) < 1e-10);
    CHECK(std::abs(d1.density[i] - d2.density[i]) < 1e-12);
    CHECK(std::abs(d0.density[i] - d3.density[i]) < 1e-12);
  }
}

TEST_CASE("phase conventions differ only by a constant factor") {
  auto p = CoherentParams::make({0.1, -0.6}, kSevenHalves, lambda0(kSevenHalves), 0, 2.5);
  const Complex corrected = dkg::coherent_evolved(0.7, p);
  p.phase = dkg::PhaseConvention::kAsPrinted;
  const Complex legacy = dkg::coherent_evolved(0.7, p);
  const Complex k = dkg::bargmann_index(kSevenHalves);
  CHECK(rel(legacy, corrected * std::exp(Complex(0.0, -1.0) * k * (1.0 - 2.5))) < 1e-12);
}

TEST_CASE("density profiles are normalized and non-negative") {
  const auto grid = dkg::standard_grid();
  for (int n = 0; n <= 5; ++n) {
    const auto p = CoherentParams::make({0.5, 0.2}, kHalf, dkg::coherent_scale(CurvatureCase::kGaussian, n, kHalf, 1, 1), n);
    const auto d = dkg::density_profile(grid, p, false);
    CHECK(std::abs(dkg::trapezoid(d.x, d.density) - 1.0) < 1e-10);
    for (double v : d.density) CHECK(v >= 0.0);
    double peak = 0.0;
    for (const Complex& a : d.amplitude) peak = std::max(peak, std::abs(a));
    CHECK(std::abs(dkg::coherent_closed_form(1e-8, p)) < 1e-6 * peak);
  }
  const auto p = CoherentParams::make(0.3, kHalf, lambda0(kHalf));
  CHECK_THROWS_AS(dkg::density_profile({0.0, 0.5, 1.0}, p, false), dkg::GridError);
  CHECK_THROWS_AS(dkg::density_profile({0.5, 0.4}, p, false), dkg::GridError);
  // Far out the amplitude underflows, leaving nothing to normalize.
  CHECK_THROWS_AS(dkg::density_profile({300.0, 301.0, 302.0}, p, false), dkg::NormalizationError);
}

TEST_CASE("grid helpers and instability flag") {
  const auto g = dkg::standard_grid();
  CHECK(g.size() == 300);
  CHECK(g.front() == 0.01);
  CHECK(g.back() == 1.5);
  CHECK_THROWS_AS(dkg::linear_grid(1.0, 1.0, 10), dkg::GridError);
  CHECK(dkg::flagged_unstable(kSevenHalves, 0));
  CHECK_FALSE(dkg::flagged_unstable(kSevenHalves, 1));
  CHECK_FALSE(dkg::flagged_unstable(kHalf, 0));
  CHECK(dkg::parse_phase_convention("as-printed") == dkg::PhaseConvention::kAsPrinted);
  CHECK_THROWS_AS(dkg::parse_phase_convention("none"), dkg::ParseError);
}
