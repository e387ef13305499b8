#pragma once

// Verification suites behind `dkgcs verify`: assertable invariants plus
// measured-only diagnostics.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dkgcs/eigenfunctions.hpp"
#include "dkgcs/model.hpp"

namespace dkg {

enum class CheckStatus { kPass, kFail, kMeasured };

std::string_view to_string(CheckStatus s);

struct Check {
  std::string suite;
  std::string name;
  double value = 0.0;
  std::optional<double> tolerance;  // absent for measured-only checks
  std::string relation;             // "<", "<=", ">=", "in [a,b]", "==" ...
  CheckStatus status = CheckStatus::kMeasured;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool ok() const;  // no kFail
  std::size_t count(CheckStatus s) const;
};

struct VerifyOptions {
  double grid_h = 1e-3;
  double ode_tol = 1e-5;
  double z3_tol = 1e-4;
  double table_tol = 1e-2;
  double series_tol = 1e-6;
  double consistency_tol = 1e-8;
  double convergence_min = 8.0;
  std::vector<std::string> suites;  // empty runs everything
};

const std::vector<std::string>& suite_names();

/// Throws ParseError for an unknown suite name.
VerifyReport run_verify(const VerifyOptions& options);

void write_verify_report(std::ostream& os, const VerifyReport& report);

/// The alpha values swept by every suite: 1/2, 3/2, 7/2.
std::vector<DunklAlpha> sweep_alphas();
inline constexpr int kSweepMaxN = 5;

/// Residuals of one eigenfunction on two grids, in double and in float128.
struct ResidualPoint {
  DunklAlpha alpha;
  int n;
  double ode_coarse, ode_fine;          // double precision
  double z3_coarse, z3_fine;
  double ode_coarse_q, ode_fine_q;      // float128
  double z3_coarse_q, z3_fine_q;
};

/// Evaluates the sweep alpha x n in parallel; results in (alpha, n) order.
std::vector<ResidualPoint> residual_sweep(const RadialGridSpec& coarse, const RadialGridSpec& fine);

/// Largest |k(k-1) + alpha/2 + 3/16| over alpha = 1/2, 3/2, ..., max_numerator/2.
double casimir_identity_error(int max_numerator = 99);

struct SpecialFunctionErrors {
  double laguerre;    // relative residual of n L_n^a = (n+a) L_{n-1}^a - z L_{n-1}^{a+1}
  double gamma_rec;   // relative error of Gamma(z+1) = z Gamma(z)
  double gamma_refl;  // relative error of Gamma(z) Gamma(1-z) sin(pi z) = pi
};

/// Random sampling (fixed seed): a, z in the box |re|,|im| <= 10, n <= 30;
/// gamma on 0.5 <= Re z <= 20, |Im z| <= 50.
SpecialFunctionErrors special_function_errors(int samples = 2000, unsigned seed = 12345);

/// Sup-norm relative series/closed-form difference over the standard grid.
struct SeriesAgreement {
  DunklAlpha alpha;
  Complex xi;
  int terms;
  double relative;
};

std::vector<SeriesAgreement> series_agreement_sweep();

/// Max relative |R(x, 0) - F_0(x)| at `samples` random x in (0, 1.5].
double xi_zero_reduction_error(int samples = 100, unsigned seed = 2024);

/// Richardson ratio err(h)/err(h/2) of dunkl_apply on sin(x), x in (-3, 3).
double dunkl_richardson_ratio(DunklAlpha alpha, double h);

}  // namespace dkg
