#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <limits>

#include "dkgcs/complexfn.hpp"

using dkg::Complex;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

// Reference values computed with mpmath at 40 digits.
TEST_CASE("gamma matches high-precision values across the strip") {
  struct Case {
    Complex z, want;
  };
  const Case cases[] = {
      {{1.0, 1.0}, {0.49801566811835604, -0.15494982830181069}},
      {{0.5, 10.0}, {3.3787243762342358e-7, 1.6893698390389189e-7}},
      {{3.7, -2.2}, {-1.8850260130418729, -0.84979094159458942}},
      {{15.0, 40.0}, {-0.00014925105262767863, 0.0002578254578942182}},
      {{0.6, 49.0}, {-1.2234635124474976e-33, -6.4529620893418071e-34}},
      {{20.0, -50.0}, {-0.40679637241149664, -0.11115264756460849}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.z);
    CHECK(rel(dkg::gamma(c.z), c.want) < 1e-12);
  }
  CHECK(rel(dkg::gamma(Complex(0.5)), Complex(1.772453850905516)) < 1e-14);
}

TEST_CASE("gamma reflection branch for Re z < 1/2") {
  CHECK(rel(dkg::gamma({-2.5, 0.3}), {-0.61382299743774149, -0.21123261493704178}) < 1e-12);
}

TEST_CASE("gamma recurrence on integers") {
  double factorial = 1.0;
  for (int n = 1; n <= 20; ++n) {
    CHECK(rel(dkg::gamma(Complex(n)), Complex(factorial)) < 1e-13);
    factorial *= n;
  }
}

TEST_CASE("gamma poles raise PoleError") {
  CHECK_THROWS_AS(dkg::gamma(Complex(0.0)), dkg::PoleError);
  CHECK_THROWS_AS(dkg::gamma(Complex(-1.0)), dkg::PoleError);
  CHECK_THROWS_AS(dkg::gamma(Complex(-7.0 + 1e-13)), dkg::PoleError);
  CHECK_NOTHROW(dkg::gamma(Complex(-7.0 + 1e-6)));
  CHECK_NOTHROW(dkg::gamma(Complex(-3.0, 1e-6)));
}

TEST_CASE("principal_sqrt branch") {
  CHECK(rel(dkg::principal_sqrt(Complex(-3.0, 0.0)), {0.0, std::sqrt(3.0)}) < 1e-15);
  const Complex s = dkg::principal_sqrt(Complex(-1.0, -13.8564065));
  CHECK(std::abs(s - Complex(2.5389411207033193, -2.728776651614827)) < 1e-8);
  // A negative zero imaginary part is read as +0.
  const Complex neg_zero = dkg::principal_sqrt(Complex(-1.0, -0.0));
  CHECK(neg_zero.imag() == doctest::Approx(1.0));
  CHECK(neg_zero.real() == doctest::Approx(0.0));
  for (double t = -3.1; t < 3.15; t += 0.1) {
    const Complex r = dkg::principal_sqrt(std::polar(2.0, t));
    CHECK(r.real() >= 0.0);
  }
}

TEST_CASE("principal_log and principal_pow") {
  CHECK(dkg::principal_log(Complex(-1.0, -0.0)).imag() == doctest::Approx(M_PI));
  CHECK_THROWS_AS(dkg::principal_log(Complex(0.0)), dkg::DomainError);
  CHECK(rel(dkg::principal_pow(Complex(2.0), Complex(0.0, 1.0)), {0.76923890136397213, 0.6389612763136348}) < 1e-15);
  CHECK(dkg::principal_pow(Complex(0.0), Complex(1.0, 0.4)) == Complex(0.0));
  CHECK_THROWS_AS(dkg::principal_pow(Complex(0.0), Complex(0.0, 1.0)), dkg::DomainError);
  CHECK_THROWS_AS(dkg::principal_pow(Complex(0.0), Complex(-1.0)), dkg::DomainError);
}

TEST_CASE("laguerre matches high-precision values") {
  CHECK(std::abs(dkg::laguerre(2, Complex(1.0), Complex(2.0)) - Complex(-1.0)) < 1e-15);
  CHECK(rel(dkg::laguerre(5, Complex(0.3, 2.0), Complex(1.0, -3.0)), {64.765903583333334, -71.770312499999999}) <
        1e-13);
  CHECK(rel(dkg::laguerre(30, Complex(-0.5, 0.8), Complex(4.0, 2.0)), {-8.2848843555191646, -27.297854027885117}) <
        1e-12);
  CHECK(rel(dkg::laguerre(12, Complex(7.0, -3.0), Complex(-2.0, 9.0)),
            {-2824195.3470637405, -26772363.191586763}) < 1e-12);
  CHECK(dkg::laguerre(0, Complex(3.0), Complex(5.0)) == Complex(1.0));
  CHECK(dkg::laguerre(1, Complex(0.5, 1.0), Complex(2.0)) == Complex(-0.5, 1.0));
  CHECK_THROWS_AS(dkg::laguerre(-1, Complex(0.0), Complex(0.0)), dkg::DomainError);
}

TEST_CASE("laguerre stays accurate for strongly negative order") {
  // mpmath: L_27^{a}(z) for a = -8.1185753896319444 + 2.9871382495130767i.
  const Complex a(-8.1185753896319444, 2.9871382495130767);
  const Complex z(0.34831754139532656, 0.67774652436698091);
  CHECK(rel(dkg::laguerre(27, a, z), {-2.7994940370992833e-05, -3.1540787787092714e-05}) < 1e-12);
}

TEST_CASE("laguerre_sequence agrees with single evaluations") {
  const Complex a(0.0, 0.866), z(0.4, 2.5);
  const auto seq = dkg::laguerre_sequence(31, a, z);
  REQUIRE(seq.size() == 31);
  for (int n = 0; n <= 30; ++n) CHECK(seq[static_cast<std::size_t>(n)] == dkg::laguerre(n, a, z));
  CHECK(dkg::laguerre_sequence(0, a, z).empty());
  CHECK_THROWS_AS(dkg::laguerre_sequence(-2, a, z), dkg::DomainError);
}

TEST_CASE("laguerre in float128 agrees with double") {
  using Q = boost::multiprecision::float128;
  const std::complex<Q> q = dkg::laguerre(20, std::complex<Q>(Q(0.0), Q(1.5)), std::complex<Q>(Q(0.0), Q(3.0)));
  const Complex d = dkg::laguerre(20, Complex(0.0, 1.5), Complex(0.0, 3.0));
  CHECK(rel(Complex(static_cast<double>(q.real()), static_cast<double>(q.imag())), d) < 1e-13);
}

TEST_CASE("pochhammer_ratio_root") {
  // Real order: sqrt(Gamma(n + a) / (n! Gamma(a))).
  for (int n = 0; n < 15; ++n) {
    const double want = std::sqrt(std::tgamma(n + 2.5) / (std::tgamma(n + 1.0) * std::tgamma(2.5)));
    CHECK(std::abs(dkg::pochhammer_ratio_root(n, Complex(2.5)) - want) < 1e-12 * want);
  }
  // Complex order: square equals the Pochhammer ratio.
  const Complex a(1.0, 0.866);
  for (int n = 0; n < 40; ++n) {
    const Complex want = dkg::gamma(a + double(n)) / (std::tgamma(n + 1.0) * dkg::gamma(a));
    const Complex got = dkg::pochhammer_ratio_root(n, a);
    CHECK(rel(got * got, want) < 1e-11);
  }
  CHECK(dkg::pochhammer_ratio_root(0, a) == Complex(1.0));
}
