#pragma once

// Physical parameters, curvature profiles a(x), and the su(1,1) constants
// derived from the Dunkl parameter.

#include <compare>
#include <string>
#include <string_view>

#include "dkgcs/complexfn.hpp"

namespace dkg {

enum class CurvatureCase {
  kGaussian,  // a(x) = exp(-R x^2)
  kRational,  // a(x) = (1 - R x^2) / (1 + R x^2)
  kSinc,      // a(x) = sin(x sqrt R) / (x sqrt R)
};

std::string_view to_string(CurvatureCase c);
CurvatureCase parse_curvature_case(std::string_view text);

enum class Parity { kEven, kOdd };

/// Dunkl parameter alpha = p/2 with p a positive odd integer.
///
/// Stored as the numerator so the half-odd-integer restriction is checked
/// exactly. Parsed only from "p/2" literals.
class DunklAlpha {
 public:
  static DunklAlpha from_numerator(int numerator);
  static DunklAlpha parse(std::string_view text);

  int numerator() const { return numerator_; }
  double value() const { return 0.5 * numerator_; }
  std::string str() const;

  auto operator<=>(const DunklAlpha&) const = default;

 private:
  explicit DunklAlpha(int numerator) : numerator_(numerator) {}
  int numerator_;
};

struct PhysParams {
  DunklAlpha alpha;
  double R;
  double m;
  Parity parity;

  /// Validates R > 0, m > 0 and rejects the odd sector with UnsupportedParity.
  static PhysParams make(DunklAlpha alpha, double R, double m, Parity parity = Parity::kEven);
};

/// alpha/2 + 3/16: the inverse-square coefficient of the reduced radial
/// equation and minus the Casimir eigenvalue.
inline double dunkl_constant(DunklAlpha alpha) { return 0.5 * alpha.value() + 3.0 / 16.0; }

/// Bargmann index k = 1/2 + sqrt(1 - 8 alpha)/4 (principal root).
template <class Real = double>
std::complex<Real> bargmann_index(DunklAlpha alpha) {
  using C = std::complex<Real>;
  const C root = principal_sqrt(C(Real(1) - Real(4) * Real(alpha.numerator())));
  return C(Real(1) / Real(2)) + root / Real(4);
}

/// Quadratic Casimir eigenvalue -(alpha/2 + 3/16) = k(k-1).
Complex casimir_eigenvalue(DunklAlpha alpha);

struct AlgebraData {
  Complex k;
  Complex sigma;  // k - 1/2
  Complex casimir;
  double c;       // alpha/2 + 3/16
};

AlgebraData algebra_data(DunklAlpha alpha);

/// Curvature profile a(x). Even in x, a(0) = 1, and a -> 1 as R -> 0.
double profile_a(CurvatureCase curvature, double x, double R);

/// Scale factor of the substitution r = (scale) x^2:
///   Gaussian  Lambda = sqrt(2 R (E^2 - m^2))
///   Rational  Theta  = sqrt(4 R (E^2 - m^2))
///   Sinc      Pi     = sqrt(R (E^2 - m^2) / 3)
/// Principal root. Throws DegenerateError when |E^2 - m^2| < 1e-14.
Complex scale_factor(CurvatureCase curvature, Complex e_squared, double R, double m);

/// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" (whitespace ignored).
Complex parse_complex(std::string_view text);

}  // namespace dkg
