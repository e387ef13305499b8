#pragma once

// Closed-form complex energy spectra for the three curvature profiles.

#include <optional>
#include <span>
#include <vector>

#include "dkgcs/model.hpp"

namespace dkg {

enum class Branch { kPlus, kMinus };

std::string_view to_string(Branch b);
Branch parse_branch(std::string_view text);

/// How the inner radical sqrt(W^2 - 1) of the rational/sinc spectra is taken.
///
/// kPrincipal is the default and the library-wide convention. kFactored,
/// sqrt(W - 1) sqrt(W + 1), differs from it by a sign whenever the two
/// principal roots land on opposite sides of the cut; it is exposed for
/// comparison with tables produced under that convention.
enum class RadicalForm { kPrincipal, kFactored };

std::string_view to_string(RadicalForm f);
RadicalForm parse_radical_form(std::string_view text);

struct EnergyPair {
  int n = 0;
  Complex e2_plus;
  std::optional<Complex> e2_minus;  // absent for the Gaussian profile
  Complex e_plus;                   // principal root, Re >= 0
  std::optional<Complex> e_minus;

  Complex energy(Branch b) const;
  Complex energy_squared(Branch b) const;
};

/// E_n^2 = m^2 - 8 R (2n + 1 + i sqrt(2 alpha - 1/4))^2.
Complex energy_squared_gaussian(int n, DunklAlpha alpha, double R, double m);

/// E^2 = m^2 - 2R [W +- sqrt(W^2 - 1)],  W = (2 + 2i sqrt(2 alpha - 1/4) + 4n)^2 + 1.
EnergyPair energy_pair_rational(int n, DunklAlpha alpha, double R, double m,
                                RadicalForm form = RadicalForm::kPrincipal);

/// E^2 = m^2 - (R/6) [W +- sqrt(W^2 - 1)], same W as the rational case.
EnergyPair energy_pair_sinc(int n, DunklAlpha alpha, double R, double m,
                            RadicalForm form = RadicalForm::kPrincipal);

/// Dispatches on the profile. For the Gaussian profile only e2_plus/e_plus are set.
EnergyPair energy_pair(CurvatureCase curvature, int n, DunklAlpha alpha, double R, double m,
                       RadicalForm form = RadicalForm::kPrincipal);

struct SpectrumRow {
  DunklAlpha alpha;
  EnergyPair energies;
};

struct SpectrumTable {
  CurvatureCase curvature;
  double R;
  double m;
  std::vector<SpectrumRow> rows;  // sorted by (alpha, n), unique
};

SpectrumTable spectrum_table(CurvatureCase curvature, std::span<const DunklAlpha> alphas, int n_max, double R,
                             double m, RadicalForm form = RadicalForm::kPrincipal);

/// Which square root of the scale-factor argument enters the eigenvalue relation.
enum class RootChoice { kPrincipal, kNegated };

std::string_view to_string(RootChoice r);

/// |(k + n) + i A| where A is the profile's 1/r coefficient,
///   Gaussian  (E^2 - m^2) / (4 Lambda)
///   Rational  (E^2 - m^2 + 2R) / (4 Theta)
///   Sinc      (6(E^2 - m^2) + R) / (24 Pi),
/// with E^2 from the closed-form spectrum on `branch` and the scale factor
/// taken as the principal root or its negative. Throws DegenerateError
/// when E^2 = m^2.
double self_consistency_residual(CurvatureCase curvature, int n, DunklAlpha alpha, double R, double m,
                                 Branch branch, RootChoice root);

struct ConsistencyScan {
  double residual;
  Branch branch;
  RootChoice root;
};

/// Smallest residual over every available spectral branch and both roots.
ConsistencyScan best_self_consistency(CurvatureCase curvature, int n, DunklAlpha alpha, double R, double m);

}  // namespace dkg
