#pragma once

// Complex special functions shared by all modules.
//
// Branch convention: every multivalued function uses the principal branch
// with the cut on the negative real axis. A signed-zero imaginary part is
// treated as +0, so arg(-1 - 0i) = pi and sqrt(-1 - 0i) = i.

#include <complex>
#include <type_traits>
#include <vector>

#include "dkgcs/errors.hpp"

namespace dkg {

using Complex = std::complex<double>;

/// Gamma function of a complex argument.
///
/// Lanczos approximation with g = 7 and the nine-term coefficient set
/// (0.99999999999980993, 676.5203681218851, ..., 1.5056327351493116e-7),
/// evaluated in logarithmic form. Re(z) < 1/2 goes through the reflection
/// formula. Relative accuracy is better than 1e-12 on 0.5 <= Re z <= 20,
/// |Im z| <= 50. The coefficient set is fixed, so results are bit-stable.
///
/// Throws PoleError within 1e-12 of a non-positive integer.
Complex gamma(Complex z);

namespace detail {

template <class Real>
std::complex<Real> canonical_zero(std::complex<Real> z) {
  if (z.imag() == Real(0)) return {z.real(), Real(0)};
  return z;
}

}  // namespace detail

/// Square root with argument in (-pi/2, pi/2].
template <class Real>
std::complex<Real> principal_sqrt(std::complex<Real> z) {
  return std::sqrt(detail::canonical_zero(z));
}

/// Logarithm with imaginary part in (-pi, pi].
template <class Real>
std::complex<Real> principal_log(std::complex<Real> z) {
  if (z == std::complex<Real>(0)) throw DomainError("principal_log: log(0) is undefined");
  return std::log(detail::canonical_zero(z));
}

/// z^w = exp(w Log z). 0^w is 0 when Re(w) > 0; DomainError otherwise.
template <class Real>
std::complex<Real> principal_pow(std::complex<Real> z, std::complex<Real> w) {
  if (z == std::complex<Real>(0)) {
    if (w.real() > Real(0)) return std::complex<Real>(0);
    throw DomainError("principal_pow: 0 raised to a power with Re(w) <= 0");
  }
  return std::exp(w * principal_log(z));
}

namespace detail {

// double is swept in long double: for Re(a) well below zero the factors
// (j + a) pass near zero and the recurrence loses several digits.
template <class Real>
using LaguerreWork = std::conditional_t<std::is_same_v<Real, double>, long double, Real>;

}  // namespace detail

/// Generalized Laguerre polynomial L_n^a(z) by upward three-term recurrence
///   (j+1) L_{j+1} = (2j+1+a-z) L_j - (j+a) L_{j-1},  L_0 = 1, L_1 = 1+a-z.
template <class Real>
std::complex<Real> laguerre(int n, std::complex<Real> a, std::complex<Real> z) {
  using W = detail::LaguerreWork<Real>;
  using C = std::complex<W>;
  if (n < 0) throw DomainError("laguerre: negative degree");
  if (n == 0) return std::complex<Real>(1);
  const C aw(static_cast<W>(a.real()), static_cast<W>(a.imag()));
  const C zw(static_cast<W>(z.real()), static_cast<W>(z.imag()));
  const C shift = aw - zw;
  C previous(1);
  C current = C(1) + shift;
  for (int j = 1; j < n; ++j) {
    C next = ((W(2 * j + 1) + shift) * current - (W(j) + aw) * previous) / W(j + 1);
    previous = current;
    current = next;
  }
  return {static_cast<Real>(current.real()), static_cast<Real>(current.imag())};
}

/// L_0^a(z), ..., L_{count-1}^a(z) from a single recurrence sweep.
std::vector<Complex> laguerre_sequence(int count, Complex a, Complex z);

/// Square root of the Pochhammer ratio (a)_n / n! on the ladder branch:
///   prod_{j<n} sqrt((a + j) / (j + 1)),
/// each factor a principal root. For real a > 0 this is the ordinary
/// positive root; for complex a it stays continuous in n, which a single
/// principal root of the whole ratio does not.
Complex pochhammer_ratio_root(int n, Complex a);

}  // namespace dkg
