#pragma once

// Finite-difference realizations of the Dunkl derivative and the su(1,1)
// operators Z3 and D+-. Templated on the real type so convergence order can
// be measured in extended precision as well as in double.
//
// Stencils are fourth order: 5-point central in the interior, one-sided
// 5-point (first derivative) and 6-point (second derivative) stencils on the
// two outermost points at each end.

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dkgcs/errors.hpp"
#include "dkgcs/model.hpp"

namespace dkg {

enum class DomainKind {
  kSymmetric,  // x-grid closed under x -> -x, excluding 0
  kPositive,   // r-grid with min point >= h > 0
};

template <class Real>
class GridFunction {
 public:
  using value_type = std::complex<Real>;

  /// Validates uniform spacing and the domain-kind invariants.
  GridFunction(std::vector<Real> points, std::vector<value_type> values, DomainKind kind)
      : points_(std::move(points)), values_(std::move(values)), kind_(kind) {
    if (points_.size() < 2) throw GridError("grid needs at least two points");
    if (points_.size() != values_.size()) throw GridError("grid points and values differ in length");
    h_ = (points_.back() - points_.front()) / Real(points_.size() - 1);
    if (!(h_ > Real(0))) throw GridError("grid points must be strictly increasing");
    using std::abs;
    const Real spacing_tol = Real(1e-12) * std::max(Real(1), abs(points_.back()) + abs(points_.front()));
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (abs((points_[i] - points_[i - 1]) - h_) > spacing_tol) throw GridError("grid spacing is not uniform");
    }
    if (kind_ == DomainKind::kPositive) {
      if (points_.front() < h_ * Real(1 - 1e-9)) throw GridError("positive grid must start at r >= h > 0");
    } else {
      if (points_.size() % 2 != 0) throw GridError("symmetric grid must have an even number of points");
      const std::size_t n = points_.size();
      for (std::size_t i = 0; i < n / 2; ++i) {
        if (abs(points_[i] + points_[n - 1 - i]) > spacing_tol) throw GridError("grid is not reflection symmetric");
      }
      if (points_[n / 2 - 1] >= Real(0) || points_[n / 2] <= Real(0)) {
        throw GridError("symmetric grid must exclude the origin");
      }
    }
  }

  std::span<const Real> points() const { return points_; }
  std::span<const value_type> values() const { return values_; }
  Real spacing() const { return h_; }
  DomainKind kind() const { return kind_; }
  std::size_t size() const { return points_.size(); }
  const value_type& operator[](std::size_t i) const { return values_[i]; }

  /// Same points and kind, new values.
  GridFunction with_values(std::vector<value_type> values) const {
    GridFunction out = *this;
    if (values.size() != values_.size()) throw GridError("value count does not match grid");
    out.values_ = std::move(values);
    return out;
  }

 private:
  std::vector<Real> points_;
  std::vector<value_type> values_;
  DomainKind kind_;
  Real h_{};
};

/// Points +-(j + 1/2) h for j = 0..per_side-1, in increasing order.
template <class Real>
std::vector<Real> symmetric_points(Real h, int per_side) {
  if (per_side < 1 || !(h > Real(0))) throw GridError("symmetric grid needs h > 0 and per_side >= 1");
  std::vector<Real> pts(static_cast<std::size_t>(2 * per_side));
  for (int j = 0; j < per_side; ++j) {
    const Real x = (Real(j) + Real(1) / Real(2)) * h;
    pts[static_cast<std::size_t>(per_side + j)] = x;
    pts[static_cast<std::size_t>(per_side - 1 - j)] = -x;
  }
  return pts;
}

/// r_min, r_min + h, ..., up to the last point not exceeding r_max.
template <class Real>
std::vector<Real> positive_points(Real r_min, Real r_max, Real h) {
  if (!(h > Real(0)) || !(r_max > r_min)) throw GridError("positive grid needs h > 0 and r_max > r_min");
  using std::floor;
  const long count = static_cast<long>(static_cast<double>(floor((r_max - r_min) / h + Real(1e-9)))) + 1;
  std::vector<Real> pts(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) pts[static_cast<std::size_t>(i)] = r_min + Real(i) * h;
  return pts;
}

template <class Real, class Fn>
GridFunction<Real> sample(std::vector<Real> points, DomainKind kind, Fn&& fn) {
  std::vector<std::complex<Real>> values;
  values.reserve(points.size());
  for (const Real& p : points) values.push_back(std::complex<Real>(fn(p)));
  return GridFunction<Real>(std::move(points), std::move(values), kind);
}

namespace detail {

template <class Real>
void require_points(const GridFunction<Real>& f, std::size_t minimum, const char* what) {
  if (f.size() < minimum) {
    throw GridError(std::string(what) + ": need at least " + std::to_string(minimum) + " grid points");
  }
}

}  // namespace detail

/// Fourth-order first derivative.
template <class Real>
GridFunction<Real> first_derivative(const GridFunction<Real>& f) {
  using C = std::complex<Real>;
  detail::require_points(f, 5, "first_derivative");
  const auto v = f.values();
  const std::size_t n = v.size();
  const Real inv = Real(1) / (Real(12) * f.spacing());
  std::vector<C> d(n);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (v[i - 2] - Real(8) * v[i - 1] + Real(8) * v[i + 1] - v[i + 2]) * inv;
  }
  d[0] = (Real(-25) * v[0] + Real(48) * v[1] - Real(36) * v[2] + Real(16) * v[3] - Real(3) * v[4]) * inv;
  d[1] = (Real(-3) * v[0] - Real(10) * v[1] + Real(18) * v[2] - Real(6) * v[3] + v[4]) * inv;
  d[n - 1] = (Real(25) * v[n - 1] - Real(48) * v[n - 2] + Real(36) * v[n - 3] - Real(16) * v[n - 4] +
              Real(3) * v[n - 5]) * inv;
  d[n - 2] = (Real(3) * v[n - 1] + Real(10) * v[n - 2] - Real(18) * v[n - 3] + Real(6) * v[n - 4] - v[n - 5]) * inv;
  return f.with_values(std::move(d));
}

/// Fourth-order second derivative.
template <class Real>
GridFunction<Real> second_derivative(const GridFunction<Real>& f) {
  using C = std::complex<Real>;
  detail::require_points(f, 6, "second_derivative");
  const auto v = f.values();
  const std::size_t n = v.size();
  const Real inv = Real(1) / (Real(12) * f.spacing() * f.spacing());
  std::vector<C> d(n);
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (-v[i - 2] + Real(16) * v[i - 1] - Real(30) * v[i] + Real(16) * v[i + 1] - v[i + 2]) * inv;
  }
  // 6-point one-sided, coefficients scaled by 12.
  d[0] = (Real(45) * v[0] - Real(154) * v[1] + Real(214) * v[2] - Real(156) * v[3] + Real(61) * v[4] -
          Real(10) * v[5]) * inv;
  d[1] = (Real(10) * v[0] - Real(15) * v[1] - Real(4) * v[2] + Real(14) * v[3] - Real(6) * v[4] + v[5]) * inv;
  d[n - 1] = (Real(45) * v[n - 1] - Real(154) * v[n - 2] + Real(214) * v[n - 3] - Real(156) * v[n - 4] +
              Real(61) * v[n - 5] - Real(10) * v[n - 6]) * inv;
  d[n - 2] = (Real(10) * v[n - 1] - Real(15) * v[n - 2] - Real(4) * v[n - 3] + Real(14) * v[n - 4] -
              Real(6) * v[n - 5] + v[n - 6]) * inv;
  return f.with_values(std::move(d));
}

/// Dunkl derivative in reflection form, Df = f' + (alpha/x)(f(x) - f(-x)).
/// The reflected sample is taken by exact index mirroring.
template <class Real>
GridFunction<Real> dunkl_apply(const GridFunction<Real>& f, DunklAlpha alpha) {
  if (f.kind() != DomainKind::kSymmetric) throw GridError("dunkl_apply needs a symmetric grid");
  detail::require_points(f, 18, "dunkl_apply");
  const GridFunction<Real> df = first_derivative(f);
  const auto x = f.points();
  const auto v = f.values();
  const std::size_t n = v.size();
  const Real a = Real(alpha.numerator()) / Real(2);
  std::vector<std::complex<Real>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = df[i] + (a / x[i]) * (v[i] - v[n - 1 - i]);
  }
  return f.with_values(std::move(out));
}

/// Parity shorthand Df = f' + (2 alpha / x) delta f with delta = 1 (even) or 0 (odd).
/// Kept separate from dunkl_apply: for even f the reflection form gives f'
/// while this form adds 2 alpha f / x.
template <class Real>
GridFunction<Real> dunkl_apply_parity_shorthand(const GridFunction<Real>& f, DunklAlpha alpha, Parity parity) {
  if (f.kind() != DomainKind::kSymmetric) throw GridError("dunkl_apply needs a symmetric grid");
  detail::require_points(f, 18, "dunkl_apply_parity_shorthand");
  const GridFunction<Real> df = first_derivative(f);
  if (parity == Parity::kOdd) return df;
  const auto x = f.points();
  const auto v = f.values();
  const Real a = Real(alpha.numerator());
  std::vector<std::complex<Real>> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = df[i] + (a / x[i]) * v[i];
  return f.with_values(std::move(out));
}

/// Z3 F = i [ r F'' + (alpha/2 + 3/16) F / r + r F / 4 ].
template <class Real>
GridFunction<Real> z3_apply(const GridFunction<Real>& f, DunklAlpha alpha) {
  using C = std::complex<Real>;
  if (f.kind() != DomainKind::kPositive) throw GridError("z3_apply needs a positive grid");
  detail::require_points(f, 9, "z3_apply");
  const GridFunction<Real> d2 = second_derivative(f);
  const auto r = f.points();
  const auto v = f.values();
  const Real c = Real(alpha.numerator()) / Real(4) + Real(3) / Real(16);
  const C i(Real(0), Real(1));
  std::vector<C> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[j] = i * (r[j] * d2[j] + (c / r[j]) * v[j] + (r[j] / Real(4)) * v[j]);
  }
  return f.with_values(std::move(out));
}

enum class LadderSign { kRaise, kLower };  // D+ and D-

/// D+- F = -+ r F' + (i r / 2) F + Z3 F.
template <class Real>
GridFunction<Real> ladder_apply(LadderSign sign, const GridFunction<Real>& f, DunklAlpha alpha) {
  using C = std::complex<Real>;
  if (f.kind() != DomainKind::kPositive) throw GridError("ladder_apply needs a positive grid");
  detail::require_points(f, 9, "ladder_apply");
  const GridFunction<Real> d1 = first_derivative(f);
  const GridFunction<Real> z3 = z3_apply(f, alpha);
  const auto r = f.points();
  const auto v = f.values();
  const Real s = sign == LadderSign::kRaise ? Real(-1) : Real(1);
  const C half_i(Real(0), Real(1) / Real(2));
  std::vector<C> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[j] = s * r[j] * d1[j] + half_i * r[j] * v[j] + z3[j];
  }
  return f.with_values(std::move(out));
}

/// Pointwise multiplication by m(x).
template <class Real, class Fn>
GridFunction<Real> multiply_apply(const GridFunction<Real>& f, Fn&& m) {
  const auto x = f.points();
  const auto v = f.values();
  std::vector<std::complex<Real>> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = std::complex<Real>(m(x[j])) * v[j];
  return f.with_values(std::move(out));
}

template <class Real>
using GridOperator = std::function<GridFunction<Real>(const GridFunction<Real>&)>;

/// [A, B] F = A(B F) - B(A F).
template <class Real>
GridFunction<Real> commutator_apply(const GridOperator<Real>& a, const GridOperator<Real>& b,
                                    const GridFunction<Real>& f) {
  const GridFunction<Real> ab = a(b(f));
  const GridFunction<Real> ba = b(a(f));
  if (ab.size() != ba.size()) throw GridError("commutator: operators changed the grid");
  std::vector<std::complex<Real>> out(ab.size());
  for (std::size_t j = 0; j < ab.size(); ++j) out[j] = ab[j] - ba[j];
  return f.with_values(std::move(out));
}

/// max_j |f_j - g_j| over j in [skip, size - skip).
template <class Real>
Real sup_distance(const GridFunction<Real>& f, const GridFunction<Real>& g, std::size_t skip = 0) {
  if (f.size() != g.size()) throw GridError("sup_distance: grids differ");
  Real best(0);
  for (std::size_t j = skip; j + skip < f.size(); ++j) {
    const Real d = std::abs(f[j] - g[j]);
    if (d > best) best = d;
  }
  return best;
}

template <class Real>
Real sup_norm(const GridFunction<Real>& f, std::size_t skip = 0) {
  Real best(0);
  for (std::size_t j = skip; j + skip < f.size(); ++j) {
    const Real d = std::abs(f[j]);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace dkg
