#include "dkgcs/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dkg {

namespace {

// 2 + 2i sqrt(2 alpha - 1/4) + 4n, squared, plus one.
Complex spectral_w(int n, DunklAlpha alpha) {
  const double root = std::sqrt(2.0 * alpha.value() - 0.25);
  const Complex inner(2.0 + 4.0 * n, 2.0 * root);
  return inner * inner + 1.0;
}

Complex radical(Complex w, RadicalForm form) {
  if (form == RadicalForm::kFactored) return principal_sqrt(w - 1.0) * principal_sqrt(w + 1.0);
  return principal_sqrt(w * w - 1.0);
}

EnergyPair two_branch_pair(int n, DunklAlpha alpha, double R, double m, double prefactor, RadicalForm form) {
  if (n < 0) throw DomainError("quantum number n must be non-negative");
  const Complex w = spectral_w(n, alpha);
  const Complex s = radical(w, form);
  EnergyPair out;
  out.n = n;
  out.e2_plus = m * m - prefactor * R * (w + s);
  out.e2_minus = m * m - prefactor * R * (w - s);
  out.e_plus = principal_sqrt(out.e2_plus);
  out.e_minus = principal_sqrt(*out.e2_minus);
  return out;
}

}  // namespace

std::string_view to_string(Branch b) { return b == Branch::kPlus ? "plus" : "minus"; }

Branch parse_branch(std::string_view text) {
  if (text == "plus" || text == "+") return Branch::kPlus;
  if (text == "minus" || text == "-") return Branch::kMinus;
  throw ParseError("branch must be 'plus' or 'minus'; got '" + std::string(text) + "'");
}

std::string_view to_string(RadicalForm f) { return f == RadicalForm::kPrincipal ? "principal" : "factored"; }

RadicalForm parse_radical_form(std::string_view text) {
  if (text == "principal") return RadicalForm::kPrincipal;
  if (text == "factored") return RadicalForm::kFactored;
  throw ParseError("radical form must be 'principal' or 'factored'; got '" + std::string(text) + "'");
}

std::string_view to_string(RootChoice r) { return r == RootChoice::kPrincipal ? "principal" : "negated"; }

Complex EnergyPair::energy(Branch b) const {
  if (b == Branch::kPlus) return e_plus;
  if (!e_minus) throw DomainError("this spectrum has no minus branch");
  return *e_minus;
}

Complex EnergyPair::energy_squared(Branch b) const {
  if (b == Branch::kPlus) return e2_plus;
  if (!e2_minus) throw DomainError("this spectrum has no minus branch");
  return *e2_minus;
}

Complex energy_squared_gaussian(int n, DunklAlpha alpha, double R, double m) {
  if (n < 0) throw DomainError("quantum number n must be non-negative");
  const Complex inner(2.0 * n + 1.0, std::sqrt(2.0 * alpha.value() - 0.25));
  return m * m - 8.0 * R * inner * inner;
}

EnergyPair energy_pair_rational(int n, DunklAlpha alpha, double R, double m, RadicalForm form) {
  return two_branch_pair(n, alpha, R, m, 2.0, form);
}

EnergyPair energy_pair_sinc(int n, DunklAlpha alpha, double R, double m, RadicalForm form) {
  return two_branch_pair(n, alpha, R, m, 1.0 / 6.0, form);
}

EnergyPair energy_pair(CurvatureCase curvature, int n, DunklAlpha alpha, double R, double m, RadicalForm form) {
  switch (curvature) {
    case CurvatureCase::kGaussian: {
      EnergyPair out;
      out.n = n;
      out.e2_plus = energy_squared_gaussian(n, alpha, R, m);
      out.e_plus = principal_sqrt(out.e2_plus);
      return out;
    }
    case CurvatureCase::kRational:
      return energy_pair_rational(n, alpha, R, m, form);
    case CurvatureCase::kSinc:
      return energy_pair_sinc(n, alpha, R, m, form);
  }
  throw DomainError("unknown curvature case");
}

SpectrumTable spectrum_table(CurvatureCase curvature, std::span<const DunklAlpha> alphas, int n_max, double R,
                             double m, RadicalForm form) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  std::vector<DunklAlpha> sorted(alphas.begin(), alphas.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  SpectrumTable table{curvature, R, m, {}};
  table.rows.reserve(sorted.size() * static_cast<std::size_t>(n_max + 1));
  for (const DunklAlpha& alpha : sorted) {
    for (int n = 0; n <= n_max; ++n) {
      table.rows.push_back({alpha, energy_pair(curvature, n, alpha, R, m, form)});
    }
  }
  return table;
}

double self_consistency_residual(CurvatureCase curvature, int n, DunklAlpha alpha, double R, double m,
                                 Branch branch, RootChoice root) {
  const EnergyPair pair = energy_pair(curvature, n, alpha, R, m);
  const Complex e2 = pair.energy_squared(branch);
  const Complex gap = e2 - m * m;
  Complex scale = scale_factor(curvature, e2, R, m);
  if (root == RootChoice::kNegated) scale = -scale;

  Complex coefficient;
  switch (curvature) {
    case CurvatureCase::kGaussian:
      coefficient = gap / (4.0 * scale);
      break;
    case CurvatureCase::kRational:
      coefficient = (gap + 2.0 * R) / (4.0 * scale);
      break;
    case CurvatureCase::kSinc:
      coefficient = (6.0 * gap + R) / (24.0 * scale);
      break;
  }
  const Complex k = bargmann_index(alpha);
  return std::abs(k + static_cast<double>(n) + Complex(0.0, 1.0) * coefficient);
}

ConsistencyScan best_self_consistency(CurvatureCase curvature, int n, DunklAlpha alpha, double R, double m) {
  ConsistencyScan best{std::numeric_limits<double>::infinity(), Branch::kPlus, RootChoice::kPrincipal};
  const bool two_branches = curvature != CurvatureCase::kGaussian;
  for (Branch branch : {Branch::kPlus, Branch::kMinus}) {
    if (branch == Branch::kMinus && !two_branches) continue;
    for (RootChoice root : {RootChoice::kPrincipal, RootChoice::kNegated}) {
      const double r = self_consistency_residual(curvature, n, alpha, R, m, branch, root);
      if (r < best.residual) best = {r, branch, root};
    }
  }
  return best;
}

}  // namespace dkg
