#include "dkgcs/verify.hpp"

#include <algorithm>
#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <random>
#include <sstream>

#include "dkgcs/coherent.hpp"
#include "dkgcs/io.hpp"
#include "dkgcs/reference_tables.hpp"
#include "dkgcs/spectrum.hpp"

namespace dkg {

using boost::multiprecision::float128;

namespace {

std::string fmt(double v) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.3e", v);
  return buffer;
}

std::string label(DunklAlpha alpha, int n) { return "alpha=" + alpha.str() + " n=" + std::to_string(n); }

std::string label(DunklAlpha alpha, Complex xi) { return "alpha=" + alpha.str() + " xi=" + format_complex(xi); }

Check below(std::string suite, std::string name, double value, double tol, std::string detail = {}) {
  const bool ok = std::isfinite(value) && value < tol;
  return {std::move(suite), std::move(name), value, tol, "<", ok ? CheckStatus::kPass : CheckStatus::kFail,
          std::move(detail)};
}

Check at_least(std::string suite, std::string name, double value, double tol, std::string detail = {}) {
  const bool ok = std::isfinite(value) && value >= tol;
  return {std::move(suite), std::move(name), value, tol, ">=", ok ? CheckStatus::kPass : CheckStatus::kFail,
          std::move(detail)};
}

Check measured(std::string suite, std::string name, double value, std::string detail = {}) {
  return {std::move(suite), std::move(name), value, std::nullopt, "", CheckStatus::kMeasured, std::move(detail)};
}

// Least-squares residual ||g - P g|| / ||g|| of g projected on span{b1, b2}.
double projection_residual(const GridFunction<double>& g, const GridFunction<double>& b1,
                           const GridFunction<double>& b2, std::size_t skip) {
  Complex g11 = 0.0, g12 = 0.0, g22 = 0.0, r1 = 0.0, r2 = 0.0;
  double gg = 0.0;
  for (std::size_t j = skip; j + skip < g.size(); ++j) {
    g11 += std::conj(b1[j]) * b1[j];
    g12 += std::conj(b1[j]) * b2[j];
    g22 += std::conj(b2[j]) * b2[j];
    r1 += std::conj(b1[j]) * g[j];
    r2 += std::conj(b2[j]) * g[j];
    gg += std::norm(g[j]);
  }
  const Complex det = g11 * g22 - g12 * std::conj(g12);
  const Complex c1 = (g22 * r1 - g12 * r2) / det;
  const Complex c2 = (g11 * r2 - std::conj(g12) * r1) / det;
  double rr = 0.0;
  for (std::size_t j = skip; j + skip < g.size(); ++j) rr += std::norm(g[j] - c1 * b1[j] - c2 * b2[j]);
  return std::sqrt(rr / gg);
}

double relative_sup(const GridFunction<double>& a, const GridFunction<double>& b, std::size_t skip) {
  return sup_distance(a, b, skip) / std::max(sup_norm(b, skip), 1e-300);
}

void suite_casimir(VerifyReport& report) {
  report.checks.push_back(below("casimir", "k(k-1) + alpha/2 + 3/16, alpha <= 99/2", casimir_identity_error(99),
                                1e-13));
}

void suite_special(VerifyReport& report) {
  const SpecialFunctionErrors e = special_function_errors();
  report.checks.push_back(below("special", "laguerre recurrence residual, n <= 30", e.laguerre, 1e-10));
  report.checks.push_back(below("special", "gamma recurrence relative error", e.gamma_rec, 1e-11));
  report.checks.push_back(below("special", "gamma reflection relative error", e.gamma_refl, 1e-10));
}

void suite_tables(VerifyReport& report, const VerifyOptions& o) {
  for (ReferenceTable t : {ReferenceTable::kTable1, ReferenceTable::kTable2}) {
    const TableComparison cmp = compare_with_reference(t, o.table_tol);
    std::string detail = std::to_string(cmp.failures()) + " of " + std::to_string(cmp.entries.size()) +
                         " entries out of tolerance; unordered-pair max deviation " +
                         fmt(cmp.max_unordered_deviation);
    for (const EntryComparison& e : cmp.entries) {
      if (!e.within) {
        detail += "; " + label(DunklAlpha::from_numerator(e.reference.alpha_numerator), e.reference.n) + " " +
                  std::string(to_string(e.reference.branch)) + " off by " + fmt(e.deviation);
      }
    }
    report.checks.push_back(
        below("tables", std::string(to_string(t)) + " max deviation", cmp.max_deviation, o.table_tol, detail));
    const TableComparison factored = compare_with_reference(t, o.table_tol, RadicalForm::kFactored);
    report.checks.push_back(measured("tables", std::string(to_string(t)) + " max deviation, factored radical",
                                     factored.max_deviation));
  }
}

void suite_consistency(VerifyReport& report, const VerifyOptions& o) {
  for (CurvatureCase c : {CurvatureCase::kGaussian, CurvatureCase::kRational, CurvatureCase::kSinc}) {
    double worst = 0.0;
    double principal = std::numeric_limits<double>::infinity();
    std::string where;
    for (DunklAlpha a : sweep_alphas()) {
      for (int n = 0; n <= kSweepMaxN; ++n) {
        const ConsistencyScan s = best_self_consistency(c, n, a, 1.0, 1.0);
        if (s.residual >= worst) {
          worst = s.residual;
          where = label(a, n) + " branch=" + std::string(to_string(s.branch)) + " root=" +
                  std::string(to_string(s.root));
        }
        for (Branch b : {Branch::kPlus, Branch::kMinus}) {
          if (b == Branch::kMinus && c == CurvatureCase::kGaussian) continue;
          principal = std::min(principal, self_consistency_residual(c, n, a, 1.0, 1.0, b, RootChoice::kPrincipal));
        }
      }
    }
    const std::string name(to_string(c));
    report.checks.push_back(below("consistency", name + " best-branch residual, worst case", worst,
                                  o.consistency_tol, "worst at " + where));
    report.checks.push_back(measured("consistency", name + " smallest residual with the principal scale root",
                                     principal));
  }
}

void suite_radial(VerifyReport& report, const VerifyOptions& o, bool ode, bool z3) {
  const RadialGridSpec fine{0.1, 20.0, o.grid_h};
  const RadialGridSpec coarse{0.1, 20.0, 2.0 * o.grid_h};
  const std::vector<ResidualPoint> sweep = residual_sweep(coarse, fine);
  const std::string h = fmt(o.grid_h);
  for (const ResidualPoint& p : sweep) {
    const std::string where = label(p.alpha, p.n);
    if (ode) {
      report.checks.push_back(below("ode", "residual h=" + h + " " + where, p.ode_fine, o.ode_tol));
      report.checks.push_back(at_least("ode", "convergence ratio (float128) " + where,
                                       p.ode_coarse_q / p.ode_fine_q, o.convergence_min,
                                       "float128 residuals " + fmt(p.ode_coarse_q) + " -> " + fmt(p.ode_fine_q)));
      report.checks.push_back(measured("ode", "convergence ratio (double) " + where, p.ode_coarse / p.ode_fine,
                                       "double residuals are rounding-limited at this h"));
    }
    if (z3) {
      report.checks.push_back(below("z3", "eigenvalue residual h=" + h + " " + where, p.z3_fine, o.z3_tol));
      report.checks.push_back(at_least("z3", "convergence ratio (float128) " + where, p.z3_coarse_q / p.z3_fine_q,
                                       o.convergence_min,
                                       "float128 residuals " + fmt(p.z3_coarse_q) + " -> " + fmt(p.z3_fine_q)));
      report.checks.push_back(measured("z3", "convergence ratio (double) " + where, p.z3_coarse / p.z3_fine));
    }
  }
  if (ode) {
    const DunklAlpha half = DunklAlpha::from_numerator(1);
    report.checks.push_back(at_least("ode", "perturbed eigenvalue k+n+0.1 is rejected",
                                     ode_residual<double>(0, half, fine, Complex(0.1)), 1e-2));
  }
}

void suite_dunkl(VerifyReport& report) {
  const std::vector<double> pts = symmetric_points(0.01, 300);
  for (DunklAlpha a : sweep_alphas()) {
    double worst_even = 0.0;
    for (int degree = 0; degree <= 8; degree += 2) {
      const auto f = sample<double>(pts, DomainKind::kSymmetric, [&](double x) {
        double v = 0.0;
        for (int d = 0; d <= degree; d += 2) v += std::pow(x, d) / (1.0 + d);
        return Complex(v);
      });
      worst_even = std::max(worst_even, sup_distance(dunkl_apply(f, a), first_derivative(f)));
    }
    report.checks.push_back(below("dunkl", "even polynomial reduces to f', " + a.str(), worst_even, 1e-8));

    const auto line = sample<double>(pts, DomainKind::kSymmetric, [](double x) { return Complex(x); });
    const auto expected = line.with_values(std::vector<Complex>(pts.size(), Complex(1.0 + 2.0 * a.value())));
    report.checks.push_back(
        below("dunkl", "D x = 1 + 2 alpha, " + a.str(), sup_distance(dunkl_apply(line, a), expected), 1e-10));

    const double ratio = dunkl_richardson_ratio(a, 0.1);
    const bool ok = ratio >= 14.0 && ratio <= 18.0;
    report.checks.push_back({"dunkl", "richardson ratio on sin(x), h=0.1, " + a.str(), ratio, 18.0, "in [14,18]",
                             ok ? CheckStatus::kPass : CheckStatus::kFail, "lower bound 14"});

    const auto even = sample<double>(pts, DomainKind::kSymmetric, [](double x) { return Complex(x * x); });
    report.checks.push_back(measured(
        "dunkl", "reflection form vs parity shorthand on x^2, " + a.str(),
        sup_distance(dunkl_apply(even, a), dunkl_apply_parity_shorthand(even, a, Parity::kEven)),
        "the shorthand adds 2 alpha f / x for even f"));
  }
}

void suite_coherent(VerifyReport& report, const VerifyOptions& o) {
  for (const SeriesAgreement& s : series_agreement_sweep()) {
    report.checks.push_back(below("coherent", "series vs closed form " + label(s.alpha, s.xi), s.relative,
                                  o.series_tol, std::to_string(s.terms) + " terms"));
  }
  report.checks.push_back(below("coherent", "xi=0 reduction to F_0, 100 random x", xi_zero_reduction_error(), 1e-12));

  const DunklAlpha half = DunklAlpha::from_numerator(1);
  const auto p = CoherentParams::make({0.5, 0.2}, half, coherent_scale(CurvatureCase::kGaussian, 0, half, 1, 1));
  double conv = 0.0, scale = 0.0;
  for (double x : standard_grid()) {
    conv = std::max(conv, std::abs(coherent_series(x, p, 60) - coherent_series(x, p, 80)));
    scale = std::max(scale, std::abs(coherent_closed_form(x, p)));
  }
  report.checks.push_back(below("coherent", "60 vs 80 terms, alpha=1/2 xi=0.5+0.2i", conv, 1e-8,
                                "relative " + fmt(conv / scale)));
}

void suite_evolution(VerifyReport& report) {
  const DunklAlpha half = DunklAlpha::from_numerator(1);
  const std::vector<double> grid = standard_grid();
  double tau_zero = 0.0, periodic = 0.0, conventions = 0.0;
  for (DunklAlpha a : sweep_alphas()) {
    const Complex lam = coherent_scale(CurvatureCase::kGaussian, 1, a, 1, 1);
    for (Complex xi : {Complex(0.3, 0.0), Complex(0.5, 0.2), Complex(0.1, -0.6)}) {
      auto p = CoherentParams::make(xi, a, lam, 1);
      for (double x : grid) tau_zero = std::max(tau_zero, std::abs(coherent_evolved(x, p) - coherent_closed_form(x, p)));
      const DensityProfile d0 = density_profile(grid, p, true);
      p.tau = 2.0 * std::numbers::pi;
      const DensityProfile d1 = density_profile(grid, p, true);
      p.tau = 0.0;
      p.phase = PhaseConvention::kAsPrinted;
      const DensityProfile d2 = density_profile(grid, p, true);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        periodic = std::max(periodic, std::abs(d0.density[i] - d1.density[i]));
        conventions = std::max(conventions, std::abs(d0.density[i] - d2.density[i]));
      }
    }
  }
  report.checks.push_back({"evolution", "tau=0 reduction (corrected), max |difference|", tau_zero, 0.0, "==",
                           tau_zero == 0.0 ? CheckStatus::kPass : CheckStatus::kFail, ""});
  report.checks.push_back(below("evolution", "2 pi periodicity of normalized density", periodic, 1e-10));
  report.checks.push_back(below("evolution", "as-printed vs corrected density at tau=0", conventions, 1e-12));

  const Complex lam = coherent_scale(CurvatureCase::kGaussian, 1, half, 1, 1);
  double norm_err = 0.0, min_density = 0.0, repeat = 0.0;
  for (double tau : {std::numbers::pi / 2, 3 * std::numbers::pi / 2, 2 * std::numbers::pi, 3 * std::numbers::pi}) {
    const auto p = CoherentParams::make({0.5, 0.2}, half, lam, 1, tau);
    const DensityProfile a = density_profile(grid, p, true);
    const DensityProfile b = density_profile(grid, p, true);
    norm_err = std::max(norm_err, std::abs(trapezoid(a.x, a.density) - 1.0));
    min_density = std::min(min_density, *std::min_element(a.density.begin(), a.density.end()));
    for (std::size_t i = 0; i < grid.size(); ++i) repeat = std::max(repeat, std::abs(a.density[i] - b.density[i]));
  }
  report.checks.push_back(below("evolution", "evolved profiles n=1 alpha=1/2: |integral - 1|", norm_err, 1e-10));
  report.checks.push_back(at_least("evolution", "evolved profiles n=1 alpha=1/2: min density", min_density, 0.0));
  report.checks.push_back({"evolution", "evolved profiles n=1 alpha=1/2: repeat difference", repeat, 0.0, "==",
                           repeat == 0.0 ? CheckStatus::kPass : CheckStatus::kFail, ""});
}

void suite_diagnostics(VerifyReport& report) {
  const RadialGridSpec spec{0.5, 12.0, 1e-2};
  constexpr std::size_t kSkip = 12;
  for (DunklAlpha a : sweep_alphas()) {
    const auto f0 = sample_eigenfunction_r<double>(0, a, spec);
    const auto f1 = sample_eigenfunction_r<double>(1, a, spec);
    const GridOperator<double> z3 = [a](const GridFunction<double>& g) { return z3_apply(g, a); };
    const GridOperator<double> up = [a](const GridFunction<double>& g) {
      return ladder_apply(LadderSign::kRaise, g, a);
    };
    const GridOperator<double> down = [a](const GridFunction<double>& g) {
      return ladder_apply(LadderSign::kLower, g, a);
    };
    const auto combine = [](const GridFunction<double>& x, Complex cx, const GridFunction<double>& y, Complex cy) {
      std::vector<Complex> v(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) v[j] = cx * x[j] + cy * y[j];
      return x.with_values(std::move(v));
    };
    const auto r_times = [](const GridFunction<double>& g, Complex c) {
      return multiply_apply(g, [c](double r) { return c * r; });
    };
    const auto rdr = [&](const GridFunction<double>& g) {
      const auto d = first_derivative(g);
      return multiply_apply(d, [](double r) { return Complex(r); });
    };

    const auto zm = commutator_apply(z3, down, f1);
    const auto zp = commutator_apply(z3, up, f1);
    const auto pm = commutator_apply(up, down, f1);
    const std::string tag = " on F_1, " + a.str();

    report.checks.push_back(measured("diagnostics", "[Z3,D-] vs -D-" + tag,
                                     relative_sup(zm, combine(down(f1), -1.0, f1, 0.0), kSkip)));
    report.checks.push_back(measured("diagnostics", "[Z3,D-] vs 2 Z3 - D-" + tag,
                                     relative_sup(zm, combine(z3(f1), 2.0, down(f1), -1.0), kSkip)));
    report.checks.push_back(measured("diagnostics", "[Z3,D+] vs -D+" + tag,
                                     relative_sup(zp, combine(up(f1), -1.0, f1, 0.0), kSkip)));
    report.checks.push_back(measured(
        "diagnostics", "[Z3,D+] vs -Z3 - r d/dr + i r/2" + tag,
        relative_sup(zp, combine(combine(z3(f1), -1.0, rdr(f1), -1.0), 1.0, r_times(f1, {0.0, 0.5}), 1.0), kSkip)));
    report.checks.push_back(measured("diagnostics", "[D+,D-] vs 2 Z3" + tag,
                                     relative_sup(pm, combine(z3(f1), 2.0, f1, 0.0), kSkip)));
    report.checks.push_back(measured("diagnostics", "[D+,D-] vs 2 Z3 - 2 i r" + tag,
                                     relative_sup(pm, combine(z3(f1), 2.0, r_times(f1, {0.0, -2.0}), 1.0), kSkip)));
    report.checks.push_back(measured("diagnostics", "D+ F_0 projection residual on span{F_0, F_1}, " + a.str(),
                                     projection_residual(up(f0), f0, f1, kSkip)));
    report.checks.push_back(measured("diagnostics", "D- F_0 projection residual on span{F_0, F_1}, " + a.str(),
                                     projection_residual(down(f0), f0, f1, kSkip)));
  }

  const std::vector<double> grid = standard_grid();
  const auto peak = [&](DunklAlpha a, int n) {
    const auto p = CoherentParams::make({0.5, 0.2}, a, coherent_scale(CurvatureCase::kGaussian, n, a, 1, 1), n);
    return peak_location(density_profile(grid, p, false));
  };
  for (DunklAlpha a : sweep_alphas()) {
    std::string peaks;
    int inversions = 0;
    double previous = 0.0;
    for (int n = 0; n <= kSweepMaxN; ++n) {
      const double x = peak(a, n);
      if (n > 0 && x < previous) ++inversions;
      peaks += (n ? "," : "") + fmt(x);
      previous = x;
    }
    report.checks.push_back(measured("diagnostics", "steps n -> n+1 where the density peak moves inward, " + a.str(),
                                     inversions, "peaks n=0..5: " + peaks));
  }
  for (int n : {1, 3}) {
    std::string peaks;
    int inversions = 0;
    double previous = 0.0;
    bool first = true;
    for (DunklAlpha a : sweep_alphas()) {
      const double x = peak(a, n);
      if (!first && x < previous) ++inversions;
      peaks += (first ? "" : ",") + fmt(x);
      previous = x;
      first = false;
    }
    report.checks.push_back(measured("diagnostics", "steps in alpha where the density peak moves inward, n=" +
                                                        std::to_string(n),
                                     inversions, "peaks alpha=1/2,3/2,7/2: " + peaks));
  }
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kMeasured:
      return "measured";
  }
  return "unknown";
}

bool VerifyReport::ok() const { return count(CheckStatus::kFail) == 0; }

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"casimir", "special",  "tables",    "consistency", "ode",
                                              "z3",      "dunkl",    "coherent",  "evolution",   "diagnostics"};
  return names;
}

std::vector<DunklAlpha> sweep_alphas() {
  return {DunklAlpha::from_numerator(1), DunklAlpha::from_numerator(3), DunklAlpha::from_numerator(7)};
}

std::vector<ResidualPoint> residual_sweep(const RadialGridSpec& coarse, const RadialGridSpec& fine) {
  std::vector<std::future<ResidualPoint>> jobs;
  for (DunklAlpha a : sweep_alphas()) {
    for (int n = 0; n <= kSweepMaxN; ++n) {
      jobs.push_back(std::async(std::launch::async, [a, n, coarse, fine] {
        ResidualPoint p{a, n, 0, 0, 0, 0, 0, 0, 0, 0};
        const auto dc = sample_eigenfunction_r<double>(n, a, coarse);
        const auto df = sample_eigenfunction_r<double>(n, a, fine);
        p.ode_coarse = ode_residual<double>(n, a, dc);
        p.ode_fine = ode_residual<double>(n, a, df);
        p.z3_coarse = z3_residual<double>(n, a, dc);
        p.z3_fine = z3_residual<double>(n, a, df);
        const auto qc = sample_eigenfunction_r<float128>(n, a, coarse);
        const auto qf = sample_eigenfunction_r<float128>(n, a, fine);
        p.ode_coarse_q = static_cast<double>(ode_residual<float128>(n, a, qc));
        p.ode_fine_q = static_cast<double>(ode_residual<float128>(n, a, qf));
        p.z3_coarse_q = static_cast<double>(z3_residual<float128>(n, a, qc));
        p.z3_fine_q = static_cast<double>(z3_residual<float128>(n, a, qf));
        return p;
      }));
    }
  }
  std::vector<ResidualPoint> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

double casimir_identity_error(int max_numerator) {
  double worst = 0.0;
  for (int p = 1; p <= max_numerator; p += 2) {
    const DunklAlpha a = DunklAlpha::from_numerator(p);
    const Complex k = bargmann_index(a);
    worst = std::max(worst, std::abs(k * (k - 1.0) + dunkl_constant(a)));
  }
  return worst;
}

SpecialFunctionErrors special_function_errors(int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-10.0, 10.0);
  std::uniform_int_distribution<int> degree(1, 30);
  std::uniform_real_distribution<double> re(0.5, 20.0);
  std::uniform_real_distribution<double> im(-50.0, 50.0);
  SpecialFunctionErrors e{0.0, 0.0, 0.0};
  for (int s = 0; s < samples; ++s) {
    const Complex a(box(rng), box(rng));
    const Complex z(box(rng), box(rng));
    const int n = degree(rng);
    const Complex lhs = static_cast<double>(n) * laguerre(n, a, z);
    const Complex t1 = (static_cast<double>(n) + a) * laguerre(n - 1, a, z);
    const Complex t2 = z * laguerre(n - 1, a + 1.0, z);
    const double size = std::max({std::abs(lhs), std::abs(t1), std::abs(t2)});
    if (size > 0.0) e.laguerre = std::max(e.laguerre, std::abs(lhs - t1 + t2) / size);

    const Complex w(re(rng), im(rng));
    const Complex g1 = gamma(w + 1.0);
    e.gamma_rec = std::max(e.gamma_rec, std::abs(g1 - w * gamma(w)) / std::abs(g1));
    const Complex refl = gamma(w) * gamma(1.0 - w) * std::sin(std::numbers::pi * w) / std::numbers::pi;
    e.gamma_refl = std::max(e.gamma_refl, std::abs(refl - 1.0));
  }
  return e;
}

std::vector<SeriesAgreement> series_agreement_sweep() {
  std::vector<SeriesAgreement> out;
  const std::vector<double> grid = standard_grid();
  for (DunklAlpha a : sweep_alphas()) {
    const Complex lam = coherent_scale(CurvatureCase::kGaussian, 0, a, 1.0, 1.0);
    for (Complex xi : {Complex(0.3, 0.0), Complex(0.5, 0.2), Complex(0.1, -0.6)}) {
      const auto p = CoherentParams::make(xi, a, lam);
      const int terms = series_terms_for(p, grid.back());
      double diff = 0.0, size = 0.0;
      for (double x : grid) {
        const Complex closed = coherent_closed_form(x, p);
        diff = std::max(diff, std::abs(closed - coherent_series(x, p, terms)));
        size = std::max(size, std::abs(closed));
      }
      out.push_back({a, xi, terms, diff / size});
    }
  }
  return out;
}

double xi_zero_reduction_error(int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xs(1e-3, 1.5);
  double worst = 0.0;
  for (DunklAlpha a : sweep_alphas()) {
    const Complex lam = coherent_scale(CurvatureCase::kGaussian, 0, a, 1.0, 1.0);
    const auto p = CoherentParams::make(0.0, a, lam);
    for (int s = 0; s < samples; ++s) {
      const double x = xs(rng);
      const Complex f = eigenfunction_x(0, a, lam, x);
      worst = std::max(worst, std::abs(coherent_closed_form(x, p) - f) / std::abs(f));
    }
  }
  return worst;
}

double dunkl_richardson_ratio(DunklAlpha alpha, double h) {
  const auto error = [&](double step) {
    const int per_side = static_cast<int>(std::lround(3.0 / step));
    const auto f = sample<double>(symmetric_points(step, per_side), DomainKind::kSymmetric,
                                  [](double x) { return Complex(std::sin(x)); });
    const auto d = dunkl_apply(f, alpha);
    double worst = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const double x = f.points()[j];
      const double exact = std::cos(x) + 2.0 * alpha.value() * std::sin(x) / x;
      worst = std::max(worst, std::abs(d[j] - exact));
    }
    return worst;
  };
  return error(h) / error(h / 2.0);
}

VerifyReport run_verify(const VerifyOptions& o) {
  const auto& names = suite_names();
  for (const std::string& s : o.suites) {
    if (std::find(names.begin(), names.end(), s) == names.end()) throw ParseError("unknown verify suite '" + s + "'");
  }
  if (!(o.grid_h > 0.0) || o.grid_h > 0.05) throw DomainError("grid-h must lie in (0, 0.05]");
  const auto wanted = [&](const char* s) {
    return o.suites.empty() || std::find(o.suites.begin(), o.suites.end(), s) != o.suites.end();
  };
  VerifyReport report;
  if (wanted("casimir")) suite_casimir(report);
  if (wanted("special")) suite_special(report);
  if (wanted("tables")) suite_tables(report, o);
  if (wanted("consistency")) suite_consistency(report, o);
  if (wanted("ode") || wanted("z3")) suite_radial(report, o, wanted("ode"), wanted("z3"));
  if (wanted("dunkl")) suite_dunkl(report);
  if (wanted("coherent")) suite_coherent(report, o);
  if (wanted("evolution")) suite_evolution(report);
  if (wanted("diagnostics")) suite_diagnostics(report);
  return report;
}

void write_verify_report(std::ostream& os, const VerifyReport& report) {
  os << "{\"ok\":" << (report.ok() ? "true" : "false") << ",\"summary\":{\"pass\":" << report.count(CheckStatus::kPass)
     << ",\"fail\":" << report.count(CheckStatus::kFail) << ",\"measured\":" << report.count(CheckStatus::kMeasured)
     << "},\"checks\":[";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const Check& c = report.checks[i];
    os << (i ? ",\n " : "\n ") << "{\"suite\":" << json_string(c.suite) << ",\"name\":" << json_string(c.name)
       << ",\"value\":" << json_number(c.value)
       << ",\"tolerance\":" << (c.tolerance ? json_number(*c.tolerance) : "null")
       << ",\"relation\":" << json_string(c.relation) << ",\"status\":" << json_string(to_string(c.status))
       << ",\"detail\":" << json_string(c.detail) << "}";
  }
  os << "\n]}\n";
}

}  // namespace dkg
