#pragma once

// Perelomov SU(1,1) coherent states: closed radial form, the truncated
// eigenfunction series it must equal, time evolution, and normalized
// density profiles.

#include <optional>
#include <string_view>
#include <vector>

#include "dkgcs/eigenfunctions.hpp"
#include "dkgcs/spectrum.hpp"

namespace dkg {

/// Phase of the evolved state: exp(-i k tau) (kCorrected, default) or the
/// constant exp(-i k) (kAsPrinted). Normalized densities do not depend on it.
enum class PhaseConvention { kCorrected, kAsPrinted };

std::string_view to_string(PhaseConvention p);
PhaseConvention parse_phase_convention(std::string_view text);

struct CoherentParams {
  Complex xi;
  DunklAlpha alpha;
  Complex lambda_scale;
  int n_label = 0;  // E_n that produced lambda_scale
  double tau = 0.0;
  PhaseConvention phase = PhaseConvention::kCorrected;

  /// DomainError unless |xi| < 1; DegenerateError for lambda_scale = 0.
  static CoherentParams make(Complex xi, DunklAlpha alpha, Complex lambda_scale, int n_label = 0,
                             double tau = 0.0, PhaseConvention phase = PhaseConvention::kCorrected);
};

/// Scale factor at E_n. The Gaussian profile has one branch; the rational
/// and sinc profiles need `branch` (DomainError if absent).
Complex coherent_scale(CurvatureCase curvature, int n, DunklAlpha alpha, double R, double m,
                       std::optional<Branch> branch = std::nullopt);

/// [2 Lambda^(k+1/2) (1-|xi|^2)^(2k) / Gamma(2k)]^(1/2) (sqrt(Lambda) x)^(2k)
///   exp[(i Lambda x^2 / 2)(xi + 1)/(xi - 1)] / (1 - xi)^(2k)
Complex coherent_closed_form(double x, const CoherentParams& p);

/// (1-|xi|^2)^k sum_{n < n_terms} sqrt((2k)_n / n!) xi^n F_n(x).
Complex coherent_series(double x, const CoherentParams& p, int n_terms);

inline constexpr int kMaxSeriesTerms = 2000;

/// Smallest term count after which every remaining term magnitude at x_max
/// (scanned up to kMaxSeriesTerms) is below tol times the partial-sum size.
/// Terms grow with x, so x_max bounds the whole grid.
int series_terms_for(const CoherentParams& p, double x_max, double tol = 1e-14);

/// Closed form with xi -> xi exp(-i tau) and the convention's phase factor.
Complex coherent_evolved(double x, const CoherentParams& p);

struct DensityProfile {
  std::vector<double> x;
  std::vector<Complex> amplitude;
  std::vector<double> density;  // |amplitude|^2 / integral
  double integral = 0.0;        // trapezoidal integral of |amplitude|^2
};

/// x strictly increasing with x[0] > 0. NormalizationError if the raw
/// integral is below 1e-300 or not finite.
DensityProfile density_profile(const std::vector<double>& x, const CoherentParams& p, bool evolved);

/// Trapezoidal integral on a (possibly non-uniform) grid.
double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

/// x at which the density is largest.
double peak_location(const DensityProfile& profile);

/// Evenly spaced grid on [x_min, x_max].
std::vector<double> linear_grid(double x_min, double x_max, int points);

inline constexpr double kStandardXMin = 0.01;
inline constexpr double kStandardXMax = 1.5;
inline constexpr int kStandardPoints = 300;

inline std::vector<double> standard_grid() { return linear_grid(kStandardXMin, kStandardXMax, kStandardPoints); }

/// The n = 0, alpha = 7/2 profile is known to behave erratically and is
/// emitted with a warning.
bool flagged_unstable(DunklAlpha alpha, int n_label);

}  // namespace dkg
