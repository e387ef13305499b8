#include "dkgcs/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dkg {

namespace {

void require_disk(Complex xi) {
  if (!(std::abs(xi) < 1.0)) throw DomainError("coherent state parameter must satisfy |xi| < 1");
}

void require_x(double x) {
  if (!(x >= 0.0)) throw DomainError("coherent state: x must be non-negative");
}

}  // namespace

std::string_view to_string(PhaseConvention p) {
  return p == PhaseConvention::kCorrected ? "corrected" : "as-printed";
}

PhaseConvention parse_phase_convention(std::string_view text) {
  if (text == "corrected") return PhaseConvention::kCorrected;
  if (text == "as-printed" || text == "as_printed") return PhaseConvention::kAsPrinted;
  throw ParseError("phase convention must be 'corrected' or 'as-printed'; got '" + std::string(text) + "'");
}

CoherentParams CoherentParams::make(Complex xi, DunklAlpha alpha, Complex lambda_scale, int n_label, double tau,
                                    PhaseConvention phase) {
  require_disk(xi);
  if (lambda_scale == Complex(0.0)) throw DegenerateError("scale factor is zero");
  if (n_label < 0) throw DomainError("quantum number n must be non-negative");
  if (!std::isfinite(tau)) throw DomainError("tau must be finite");
  return CoherentParams{xi, alpha, lambda_scale, n_label, tau, phase};
}

Complex coherent_scale(CurvatureCase curvature, int n, DunklAlpha alpha, double R, double m,
                       std::optional<Branch> branch) {
  const EnergyPair pair = energy_pair(curvature, n, alpha, R, m);
  if (curvature == CurvatureCase::kGaussian) {
    if (branch && *branch == Branch::kMinus) throw DomainError("the gaussian spectrum has no minus branch");
    return scale_factor(curvature, pair.e2_plus, R, m);
  }
  if (!branch) throw DomainError("a spectral branch (plus or minus) is required for this profile");
  return scale_factor(curvature, pair.energy_squared(*branch), R, m);
}

Complex coherent_closed_form(double x, const CoherentParams& p) {
  require_disk(p.xi);
  require_x(x);
  if (x == 0.0) return 0.0;
  const Complex k = bargmann_index(p.alpha);
  const Complex lam = p.lambda_scale;
  const double q = 1.0 - std::norm(p.xi);
  const Complex pref = principal_sqrt(2.0 * principal_pow(lam, k + 0.5) * principal_pow(Complex(q), 2.0 * k) /
                                      gamma(2.0 * k));
  const Complex u = principal_sqrt(lam) * x;
  const Complex phase = Complex(0.0, 0.5) * lam * (x * x) * ((p.xi + 1.0) / (p.xi - 1.0));
  return pref * principal_pow(u, 2.0 * k) * std::exp(phase) / principal_pow(1.0 - p.xi, 2.0 * k);
}

Complex coherent_series(double x, const CoherentParams& p, int n_terms) {
  require_disk(p.xi);
  require_x(x);
  if (n_terms < 1) throw DomainError("coherent_series needs at least one term");
  const Complex k = bargmann_index(p.alpha);
  const std::vector<Complex> f = eigenfunction_x_sequence(n_terms, p.alpha, p.lambda_scale, x);
  Complex sum = 0.0;
  Complex xi_power = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    sum += pochhammer_ratio_root(n, 2.0 * k) * xi_power * f[static_cast<std::size_t>(n)];
    xi_power *= p.xi;
  }
  return principal_pow(Complex(1.0 - std::norm(p.xi)), k) * sum;
}

int series_terms_for(const CoherentParams& p, double x_max, double tol) {
  require_disk(p.xi);
  const Complex k = bargmann_index(p.alpha);
  const Complex z = Complex(0.0, 1.0) * p.lambda_scale * (x_max * x_max);
  // Up to an n-independent factor the n-th term is xi^n L_n^(2k-1)(z).
  const std::vector<Complex> lag = laguerre_sequence(kMaxSeriesTerms, 2.0 * k - 1.0, z);
  std::vector<double> size(lag.size());
  Complex sum = 0.0;
  Complex xi_power = 1.0;
  double scale = 0.0;
  for (std::size_t n = 0; n < lag.size(); ++n) {
    const Complex term = xi_power * lag[n];
    size[n] = std::abs(term);
    sum += term;
    scale = std::max(scale, std::abs(sum));
    xi_power *= p.xi;
  }
  scale = std::max(scale, std::abs(sum));
  std::size_t last = 0;
  for (std::size_t n = 0; n < size.size(); ++n) {
    if (size[n] >= tol * scale) last = n;
  }
  return static_cast<int>(std::min<std::size_t>(last + 2, kMaxSeriesTerms));
}

Complex coherent_evolved(double x, const CoherentParams& p) {
  CoherentParams moved = p;
  moved.xi = p.xi * std::exp(Complex(0.0, -p.tau));
  const Complex k = bargmann_index(p.alpha);
  const Complex phase = p.phase == PhaseConvention::kCorrected ? std::exp(Complex(0.0, -1.0) * k * p.tau)
                                                               : std::exp(Complex(0.0, -1.0) * k);
  return phase * coherent_closed_form(x, moved);
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw GridError("trapezoid: x and y differ in length");
  double total = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) total += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return total;
}

DensityProfile density_profile(const std::vector<double>& x, const CoherentParams& p, bool evolved) {
  if (x.size() < 2) throw GridError("density profile needs at least two points");
  if (!(x.front() > 0.0)) throw GridError("density profile grid must start at x > 0");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw GridError("density profile grid must be strictly increasing");
  }
  DensityProfile out;
  out.x = x;
  out.amplitude.resize(x.size());
  std::vector<double> raw(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.amplitude[i] = evolved ? coherent_evolved(x[i], p) : coherent_closed_form(x[i], p);
    raw[i] = std::norm(out.amplitude[i]);
  }
  out.integral = trapezoid(x, raw);
  if (!std::isfinite(out.integral) || out.integral < 1e-300) {
    throw NormalizationError("density integral is zero or not finite");
  }
  out.density.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.density[i] = raw[i] / out.integral;
  return out;
}

double peak_location(const DensityProfile& profile) {
  if (profile.density.empty()) throw GridError("empty density profile");
  const auto it = std::max_element(profile.density.begin(), profile.density.end());
  return profile.x[static_cast<std::size_t>(it - profile.density.begin())];
}

std::vector<double> linear_grid(double x_min, double x_max, int points) {
  if (points < 2 || !(x_max > x_min)) throw GridError("grid needs x_max > x_min and at least two points");
  std::vector<double> x(static_cast<std::size_t>(points));
  const double h = (x_max - x_min) / (points - 1);
  for (int i = 0; i < points; ++i) x[static_cast<std::size_t>(i)] = x_min + i * h;
  x.back() = x_max;
  return x;
}

bool flagged_unstable(DunklAlpha alpha, int n_label) { return n_label == 0 && alpha.numerator() == 7; }

}  // namespace dkg
