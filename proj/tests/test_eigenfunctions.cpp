#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "dkgcs/eigenfunctions.hpp"
#include "dkgcs/spectrum.hpp"

using dkg::Complex;
using dkg::DunklAlpha;
using Q = boost::multiprecision::float128;

namespace {

const DunklAlpha kHalf = DunklAlpha::from_numerator(1);
const DunklAlpha kThreeHalves = DunklAlpha::from_numerator(3);
const DunklAlpha kSevenHalves = DunklAlpha::from_numerator(7);

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("eigenfunction_x vanishes at the origin") {
  for (DunklAlpha a : {kHalf, kSevenHalves}) {
    for (int n : {0, 3}) CHECK(dkg::eigenfunction_x(n, a, {3.4, -4.0}, 0.0) == Complex(0.0));
  }
}

TEST_CASE("eigenfunction_x at Lambda=1, x=1 reduces to sqrt(2/Gamma(2k)) exp(-i/2)") {
  const Complex k = dkg::bargmann_index(kHalf);
  const Complex want = std::sqrt(2.0 / dkg::gamma(2.0 * k)) * std::exp(Complex(0.0, -0.5));
  const Complex got = dkg::eigenfunction_x(0, kHalf, 1.0, 1.0);
  CHECK(rel(got, want) < 1e-14);
  CHECK(rel(got, {1.7175357330684679, -0.62009629212637385}) < 1e-12);
}

TEST_CASE("eigenfunction_x errors") {
  CHECK_THROWS_AS(dkg::eigenfunction_x(0, kHalf, 0.0, 1.0), dkg::DegenerateError);
  CHECK_THROWS_AS(dkg::eigenfunction_x(0, kHalf, 1.0, -0.5), dkg::DomainError);
  CHECK_THROWS_AS(dkg::eigenfunction_x(-1, kHalf, 1.0, 0.5), dkg::DomainError);
}

TEST_CASE("L_1 factor of F_1 is smallest in modulus where x^2 = Im(2k)") {
  const Complex k = dkg::bargmann_index(kHalf);
  double best_x = 0.0, best = 1e300;
  for (double x = 0.01; x < 2.0; x += 1e-4) {
    const double v = std::abs(dkg::laguerre(1, 2.0 * k - 1.0, Complex(0.0, x * x)));
    if (v < best) best = v, best_x = x;
  }
  CHECK(best_x == doctest::Approx(std::sqrt((2.0 * k).imag())).epsilon(1e-3));
}

TEST_CASE("eigenfunction_r values") {
  CHECK(dkg::eigenfunction_r(0, kHalf, 0.0) == Complex(0.0));
  CHECK(std::abs(dkg::eigenfunction_r(0, kHalf, 1.0) - Complex(0.8775826, -0.4794255)) < 1e-7);
  CHECK(rel(dkg::eigenfunction_r(2, kHalf, 2.0), {-2.074078473124485, -3.2470847471025841}) < 1e-13);
  CHECK_THROWS_AS(dkg::eigenfunction_r(0, kHalf, -1.0), dkg::DomainError);
}

TEST_CASE("x-form equals normalization times r-form at r = Lambda x^2") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(0.0, 2.0);
  for (DunklAlpha a : {kHalf, kThreeHalves, kSevenHalves}) {
    const Complex lam = dkg::scale_factor(dkg::CurvatureCase::kGaussian,
                                          dkg::energy_squared_gaussian(1, a, 1.0, 1.0), 1.0, 1.0);
    for (int n = 0; n <= 5; ++n) {
      const Complex norm = dkg::eigen_normalization(n, a, lam);
      for (int i = 0; i < 100; ++i) {
        const double x = xs(rng);
        const Complex want = norm * dkg::eigenfunction_r<double>(n, a, lam * (x * x));
        CHECK(rel(dkg::eigenfunction_x(n, a, lam, x), want) < 1e-10);
      }
    }
  }
}

TEST_CASE("the Laguerre-exponential part is even in x") {
  const Complex lam(3.46, -4.0);
  for (double x : {0.2, 0.7, 1.3}) {
    // Outside the (sqrt(Lambda) x)^(2k) factor, x enters only through x^2.
    const Complex plus = dkg::eigenfunction_r<double>(3, kThreeHalves, lam * (x * x)) /
                         dkg::principal_pow(lam * (x * x), dkg::bargmann_index(kThreeHalves));
    const double y = -x;
    const Complex minus = dkg::eigenfunction_r<double>(3, kThreeHalves, lam * (y * y)) /
                          dkg::principal_pow(lam * (y * y), dkg::bargmann_index(kThreeHalves));
    CHECK(plus == minus);
  }
}

TEST_CASE("eigenfunction_x_sequence matches single evaluations") {
  const Complex lam(3.46, -4.0);
  const auto seq = dkg::eigenfunction_x_sequence(12, kSevenHalves, lam, 0.8);
  for (int n = 0; n < 12; ++n) CHECK(rel(seq[std::size_t(n)], dkg::eigenfunction_x(n, kSevenHalves, lam, 0.8)) < 1e-13);
  const auto zero = dkg::eigenfunction_x_sequence(4, kHalf, lam, 0.0);
  for (const Complex& z : zero) CHECK(z == Complex(0.0));
  const dkg::RadialEigenfunction f = dkg::RadialEigenfunction::make(2, kHalf, lam);
  CHECK(f(0.5) == dkg::eigenfunction_x(2, kHalf, lam, 0.5));
  CHECK(f.normalization == dkg::eigen_normalization(2, kHalf, lam));
}

TEST_CASE("ODE coefficients") {
  for (dkg::CurvatureCase c : {dkg::CurvatureCase::kGaussian, dkg::CurvatureCase::kRational, dkg::CurvatureCase::kSinc}) {
    const dkg::OdeCoefficients co = dkg::ode_coefficients(c, kThreeHalves, dkg::energy_pair(c, 2, kThreeHalves, 1, 1).e2_plus, 1, 1);
    CHECK(co.B_r == Complex(0.75 + 3.0 / 16.0));
    CHECK(co.C_r == Complex(0.25));
    // The principal root gives A_r = -i(k + n).
    CHECK(std::abs(co.A_r + Complex(0.0, 1.0) * (dkg::bargmann_index(kThreeHalves) + 2.0)) < 1e-9);
  }
}

TEST_CASE("ODE residual on the default grid") {
  // The exact closed form leaves only truncation error, ~1e-12 in float128.
  CHECK(dkg::ode_residual<Q>(0, kHalf) < Q(1e-6));
  CHECK(dkg::ode_residual<Q>(3, kThreeHalves) < Q(1e-5));
  // Double precision is rounding-limited near 1e-6 at h = 1e-3.
  for (DunklAlpha a : {kHalf, kThreeHalves, kSevenHalves}) {
    for (int n = 0; n <= 5; ++n) CHECK(dkg::ode_residual<double>(n, a) < 1e-5);
  }
  CHECK(dkg::ode_residual<double>(0, kHalf, {}, Complex(0.1)) > 1e-2);
}

TEST_CASE("ODE residual converges at fourth order in float128") {
  const Q coarse = dkg::ode_residual<Q>(3, kThreeHalves, {0.1, 20.0, 2e-3});
  const Q fine = dkg::ode_residual<Q>(3, kThreeHalves, {0.1, 20.0, 1e-3});
  CHECK(static_cast<double>(coarse / fine) >= 8.0);
  CHECK(static_cast<double>(coarse / fine) < 20.0);
}

TEST_CASE("residual grids need nine points") {
  CHECK_THROWS_AS(dkg::ode_residual<double>(0, kHalf, {0.1, 0.15, 1e-2}), dkg::GridError);
  CHECK_THROWS_AS(dkg::z3_residual<double>(0, kHalf, {0.1, 0.15, 1e-2}), dkg::GridError);
  CHECK_NOTHROW(dkg::ode_residual<double>(0, kHalf, {0.1, 0.18, 1e-2}));
}

TEST_CASE("approximation gap") {
  CHECK(dkg::approximation_gap(0.0, 0.3, {2.0, -1.0}) == doctest::Approx(0.3));
  CHECK(dkg::approximation_gap(1.0, 1e-4, 1.0) == doctest::Approx(1e-4).epsilon(1e-3));
  // Large x: the e^(2 R x^2) expansion leaves 2 R^2 x^4 |E^2 - m^2|.
  const double R = 1e-4, x = 30.0;
  const double lead = 2.0 * R * R * std::pow(x, 4) * 1.0;
  CHECK(dkg::approximation_gap(x, R, 1.0) == doctest::Approx(lead).epsilon(0.25));
}

TEST_CASE("even-parity wavefunction") {
  const double R = 2.0;
  CHECK_THROWS_AS(dkg::full_wavefunction_even(0.0, 0.0, kHalf, R, 1.0, 1.0), dkg::DomainError);
  for (double x : {-1.3, 0.4, 2.0}) {
    const Complex psi = dkg::full_wavefunction_even(0.0, x, kThreeHalves, R, 1.7, 1.0);
    CHECK(std::abs(psi) == doctest::Approx(std::pow(std::abs(x) * std::sqrt(R), -1.5)));
  }
  const double E = 1.7, t = 0.37;
  CHECK(std::abs(dkg::full_wavefunction_even(t, 0.8, kHalf, R, E, 0.5) -
                 dkg::full_wavefunction_even(t + 2.0 * std::numbers::pi / E, 0.8, kHalf, R, E, 0.5)) < 1e-13);
  const Complex chi(0.3, -0.4);
  CHECK(std::abs(dkg::full_wavefunction_even(0.0, 1.0 / std::sqrt(R), kSevenHalves, R, E, chi)) ==
        doctest::Approx(std::abs(chi)));
}
