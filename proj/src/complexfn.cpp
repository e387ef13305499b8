#include "dkgcs/complexfn.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace dkg {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kPoleTolerance = 1e-12;

Complex lanczos_gamma(Complex z) {
  // Gamma(z) = sqrt(2 pi) t^(z - 1/2) e^(-t) A(z),  t = z + g - 1/2.
  const Complex zm1 = z - 1.0;
  Complex sum = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    sum += kLanczosCoefficients[i] / (zm1 + static_cast<double>(i));
  }
  const Complex t = zm1 + kLanczosG + 0.5;
  const double log_sqrt_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return std::exp((zm1 + 0.5) * std::log(t) - t + log_sqrt_two_pi) * sum;
}

}  // namespace

Complex gamma(Complex z) {
  if (z.real() <= 0.5) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) < kPoleTolerance) {
      throw PoleError("gamma: argument at a non-positive integer pole");
    }
  }
  if (z.real() < 0.5) {
    const Complex s = std::sin(std::numbers::pi * z);
    return std::numbers::pi / (s * lanczos_gamma(1.0 - z));
  }
  return lanczos_gamma(z);
}

std::vector<Complex> laguerre_sequence(int count, Complex a, Complex z) {
  using W = long double;
  using C = std::complex<W>;
  if (count < 0) throw DomainError("laguerre_sequence: negative count");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 0) return out;
  out.emplace_back(1.0);
  if (count == 1) return out;
  const C aw(a.real(), a.imag());
  const C shift = aw - C(z.real(), z.imag());
  C previous(1);
  C current = C(1) + shift;
  out.emplace_back(static_cast<double>(current.real()), static_cast<double>(current.imag()));
  for (int j = 1; j + 1 < count; ++j) {
    const C next = ((W(2 * j + 1) + shift) * current - (W(j) + aw) * previous) / W(j + 1);
    previous = current;
    current = next;
    out.emplace_back(static_cast<double>(current.real()), static_cast<double>(current.imag()));
  }
  return out;
}

Complex pochhammer_ratio_root(int n, Complex a) {
  if (n < 0) throw DomainError("pochhammer_ratio_root: negative n");
  Complex product = 1.0;
  for (int j = 0; j < n; ++j) {
    product *= principal_sqrt((a + static_cast<double>(j)) / static_cast<double>(j + 1));
  }
  return product;
}

}  // namespace dkg
