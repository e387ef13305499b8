#pragma once

// Closed-form radial eigenfunctions, their residuals against the reduced
// radial equation, and the even-parity wavefunction.

#include <cmath>
#include <complex>
#include <vector>

#include "dkgcs/gridops.hpp"
#include "dkgcs/model.hpp"

namespace dkg {

/// Coefficients of F'' + (A_r / r + B_r / r^2 + C_r) F = 0.
struct OdeCoefficients {
  Complex A_r;
  Complex B_r;  // alpha/2 + 3/16
  Complex C_r;  // 1/4
};

/// Gaussian  A_r = (E^2 - m^2) / (4 Lambda)
/// Rational  A_r = (E^2 - m^2 + 2R) / (4 Theta)
/// Sinc      A_r = (6(E^2 - m^2) + R) / (24 Pi)
/// with the principal scale factor.
OdeCoefficients ode_coefficients(CurvatureCase curvature, DunklAlpha alpha, Complex e_squared, double R, double m);

/// sqrt(2 Lambda^(sigma+1) / Gamma(2k)) / sqrt((2k)_n / n!), the second
/// root taken on the ladder branch (see pochhammer_ratio_root).
Complex eigen_normalization(int n, DunklAlpha alpha, Complex lambda_scale);

/// F_n(x) = N_n (sqrt(Lambda) x)^(2 sigma + 1) exp(-i Lambda x^2 / 2) L_n^(2 sigma)(i Lambda x^2).
/// x >= 0. DegenerateError for Lambda = 0.
Complex eigenfunction_x(int n, DunklAlpha alpha, Complex lambda_scale, double x);

/// F_0(x), ..., F_{count-1}(x) sharing one Laguerre sweep.
std::vector<Complex> eigenfunction_x_sequence(int count, DunklAlpha alpha, Complex lambda_scale, double x);

struct RadialEigenfunction {
  int n;
  DunklAlpha alpha;
  Complex lambda_scale;
  Complex normalization;

  static RadialEigenfunction make(int n, DunklAlpha alpha, Complex lambda_scale);
  Complex operator()(double x) const { return eigenfunction_x(n, alpha, lambda_scale, x); }
};

/// Unnormalized r-form r^(sigma + 1/2) exp(-i r / 2) L_n^(2 sigma)(i r).
/// Accepts complex r so that r = Lambda x^2 can be fed in directly.
template <class Real = double>
std::complex<Real> eigenfunction_r(int n, DunklAlpha alpha, std::complex<Real> r) {
  using C = std::complex<Real>;
  if (n < 0) throw DomainError("quantum number n must be non-negative");
  const C k = bargmann_index<Real>(alpha);
  const C sigma = k - Real(1) / Real(2);
  if (r == C(0)) return C(0);
  const C i(Real(0), Real(1));
  return principal_pow(r, sigma + Real(1) / Real(2)) * std::exp(-i * r / Real(2)) *
         laguerre(n, Real(2) * sigma, i * r);
}

template <class Real = double>
std::complex<Real> eigenfunction_r(int n, DunklAlpha alpha, Real r) {
  if (r < Real(0)) throw DomainError("eigenfunction_r: r must be non-negative");
  return eigenfunction_r<Real>(n, alpha, std::complex<Real>(r));
}

/// Radial grid used for residual checks; r = 0 is excluded because of the c/r^2 term.
struct RadialGridSpec {
  double r_min = 0.1;
  double r_max = 20.0;
  double h = 1e-3;
};

template <class Real>
GridFunction<Real> sample_eigenfunction_r(int n, DunklAlpha alpha, const RadialGridSpec& spec) {
  std::vector<Real> pts = positive_points<Real>(Real(spec.r_min), Real(spec.r_max), Real(spec.h));
  if (pts.size() < 9) throw GridError("residual grid needs at least 9 points");
  return sample<Real>(std::move(pts), DomainKind::kPositive,
                      [&](const Real& r) { return eigenfunction_r<Real>(n, alpha, r); });
}

/// max over interior points of |-r^2 F'' - lambda r F - r^2 F / 4 - c F| / max |F|,
/// with lambda = i (k + n + eigen_shift). The two outermost points at each end
/// (one-sided stencils) are dropped.
template <class Real>
Real ode_residual(int n, DunklAlpha alpha, const GridFunction<Real>& f, std::complex<Real> eigen_shift = {}) {
  using C = std::complex<Real>;
  if (f.size() < 9) throw GridError("ode_residual needs at least 9 points");
  const GridFunction<Real> d2 = second_derivative(f);
  const auto r = f.points();
  const C i(Real(0), Real(1));
  const C eigen = bargmann_index<Real>(alpha) + Real(n) + eigen_shift;
  const Real c = Real(alpha.numerator()) / Real(4) + Real(3) / Real(16);
  Real worst(0);
  for (std::size_t j = 2; j + 2 < f.size(); ++j) {
    const Real r2 = r[j] * r[j];
    const C lhs = -r2 * d2[j] - i * eigen * r[j] * f[j] - (r2 / Real(4)) * f[j];
    const Real d = std::abs(lhs - c * f[j]);
    if (d > worst) worst = d;
  }
  return worst / sup_norm(f, 2);
}

template <class Real = double>
Real ode_residual(int n, DunklAlpha alpha, const RadialGridSpec& spec = {}, std::complex<Real> eigen_shift = {}) {
  return ode_residual<Real>(n, alpha, sample_eigenfunction_r<Real>(n, alpha, spec), eigen_shift);
}

/// ||Z3 F - (k + n + eigen_shift) F|| / ||F|| over the same interior points.
template <class Real>
Real z3_residual(int n, DunklAlpha alpha, const GridFunction<Real>& f, std::complex<Real> eigen_shift = {}) {
  const GridFunction<Real> z3 = z3_apply(f, alpha);
  const std::complex<Real> eigen = bargmann_index<Real>(alpha) + Real(n) + eigen_shift;
  const GridFunction<Real> expected = multiply_apply(f, [&](const Real&) { return eigen; });
  return sup_distance(z3, expected, 2) / sup_norm(f, 2);
}

template <class Real = double>
Real z3_residual(int n, DunklAlpha alpha, const RadialGridSpec& spec = {}, std::complex<Real> eigen_shift = {}) {
  return z3_residual<Real>(n, alpha, sample_eigenfunction_r<Real>(n, alpha, spec), eigen_shift);
}

/// |[(E^2 - m^2) e^(2 R x^2) - R^2 x^2 + R] - [Lambda^2 x^2 + (E^2 - m^2)]|
/// with Lambda^2 = 2 R (E^2 - m^2): the error of the small-R Gaussian potential.
double approximation_gap(double x, double R, Complex energy_gap);

/// Even-parity psi(t, x) = (|x| sqrt R)^(-alpha) exp(i E (x sqrt R)^(2 alpha + 1) / (sqrt R (2 alpha + 1)) - i E t) chi.
/// DomainError at x = 0.
Complex full_wavefunction_even(double t, double x, DunklAlpha alpha, double R, Complex energy, Complex chi);

}  // namespace dkg
