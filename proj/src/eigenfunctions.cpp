#include "dkgcs/eigenfunctions.hpp"

#include <cmath>

#include "dkgcs/spectrum.hpp"

namespace dkg {

namespace {

void require_scale(Complex lambda_scale) {
  if (lambda_scale == Complex(0.0)) throw DegenerateError("scale factor is zero");
}

// (sqrt(Lambda) x)^(2k) exp(-i Lambda x^2 / 2)
Complex common_factor(Complex k, Complex lambda_scale, double x) {
  const Complex u = principal_sqrt(lambda_scale) * x;
  if (x == 0.0) return 0.0;
  return principal_pow(u, 2.0 * k) * std::exp(Complex(0.0, -0.5) * lambda_scale * (x * x));
}

}  // namespace

OdeCoefficients ode_coefficients(CurvatureCase curvature, DunklAlpha alpha, Complex e_squared, double R, double m) {
  const Complex gap = e_squared - m * m;
  const Complex scale = scale_factor(curvature, e_squared, R, m);
  Complex a;
  switch (curvature) {
    case CurvatureCase::kGaussian:
      a = gap / (4.0 * scale);
      break;
    case CurvatureCase::kRational:
      a = (gap + 2.0 * R) / (4.0 * scale);
      break;
    case CurvatureCase::kSinc:
      a = (6.0 * gap + R) / (24.0 * scale);
      break;
  }
  return {a, dunkl_constant(alpha), 0.25};
}

Complex eigen_normalization(int n, DunklAlpha alpha, Complex lambda_scale) {
  require_scale(lambda_scale);
  if (n < 0) throw DomainError("quantum number n must be non-negative");
  const Complex k = bargmann_index(alpha);
  const Complex sigma = k - 0.5;
  const Complex base = principal_sqrt(2.0 * principal_pow(lambda_scale, sigma + 1.0) / gamma(2.0 * k));
  return base / pochhammer_ratio_root(n, 2.0 * k);
}

Complex eigenfunction_x(int n, DunklAlpha alpha, Complex lambda_scale, double x) {
  require_scale(lambda_scale);
  if (!(x >= 0.0)) throw DomainError("eigenfunction_x: x must be non-negative");
  const Complex k = bargmann_index(alpha);
  const Complex common = common_factor(k, lambda_scale, x);
  if (common == Complex(0.0)) return 0.0;
  const Complex r = lambda_scale * (x * x);
  return eigen_normalization(n, alpha, lambda_scale) * common *
         laguerre(n, 2.0 * k - 1.0, Complex(0.0, 1.0) * r);
}

std::vector<Complex> eigenfunction_x_sequence(int count, DunklAlpha alpha, Complex lambda_scale, double x) {
  require_scale(lambda_scale);
  if (!(x >= 0.0)) throw DomainError("eigenfunction_x: x must be non-negative");
  std::vector<Complex> out(static_cast<std::size_t>(std::max(count, 0)));
  if (count <= 0) return out;
  const Complex k = bargmann_index(alpha);
  const Complex common = common_factor(k, lambda_scale, x);
  if (common == Complex(0.0)) return out;
  const Complex r = lambda_scale * (x * x);
  const std::vector<Complex> lag = laguerre_sequence(count, 2.0 * k - 1.0, Complex(0.0, 1.0) * r);
  const Complex base = eigen_normalization(0, alpha, lambda_scale) * common;
  for (int n = 0; n < count; ++n) {
    out[static_cast<std::size_t>(n)] = base / pochhammer_ratio_root(n, 2.0 * k) * lag[static_cast<std::size_t>(n)];
  }
  return out;
}

RadialEigenfunction RadialEigenfunction::make(int n, DunklAlpha alpha, Complex lambda_scale) {
  return {n, alpha, lambda_scale, eigen_normalization(n, alpha, lambda_scale)};
}

double approximation_gap(double x, double R, Complex energy_gap) {
  const double x2 = x * x;
  const Complex exact = energy_gap * std::exp(2.0 * R * x2) - R * R * x2 + R;
  const Complex approximate = 2.0 * R * energy_gap * x2 + energy_gap;
  return std::abs(exact - approximate);
}

Complex full_wavefunction_even(double t, double x, DunklAlpha alpha, double R, Complex energy, Complex chi) {
  if (x == 0.0) throw DomainError("full_wavefunction_even: x = 0 is singular");
  if (!(R > 0.0)) throw DomainError("curvature constant R must be positive");
  const double sr = std::sqrt(R);
  const double a = alpha.value();
  const double amplitude = std::pow(std::abs(x) * sr, -a);
  // 2 alpha + 1 is an even integer, so the power is real for negative x.
  const double power = std::pow(x * sr, alpha.numerator() + 1);
  const Complex phase = Complex(0.0, 1.0) * energy * (power / (sr * (2.0 * a + 1.0))) - Complex(0.0, 1.0) * energy * t;
  return amplitude * std::exp(phase) * chi;
}

}  // namespace dkg
