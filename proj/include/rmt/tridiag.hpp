#pragma once

// Symmetric tridiagonal matrices, their eigenvalues by Sturm-count bisection,
// and the entrywise operator-norm bound used by the concentration statistics.
//
// Bisection was chosen over shifted QL on purpose: it is dependency-free,
// bit-reproducible, and its accuracy is a simple function of the bracket
// width.  At the orders this library works with (n <= a few hundred) speed
// is a non-issue.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "rmt/errors.hpp"
#include "rmt/stream.hpp"

namespace rmt {

template <typename Scalar>
struct SymmetricTridiagonal {
  using Vector = Eigen::Vector<Scalar, Eigen::Dynamic>;

  Vector diag;  // n entries
  Vector sub;   // n-1 entries

  Eigen::Index order() const { return diag.size(); }
};

using SymTridiagd = SymmetricTridiagonal<double>;

// Sorted eigenvalue vector, tagged with the stream that generated the
// underlying sample (absent for deterministic spectra).
struct Spectrum {
  Eigen::VectorXd values;
  std::optional<SeededStream> source_seed;

  Eigen::Index size() const { return values.size(); }
};

template <typename Scalar>
void validate(const SymmetricTridiagonal<Scalar>& t) {
  if (t.diag.size() < 1) throw DomainError("tridiagonal: order must be at least 1");
  if (t.sub.size() != t.diag.size() - 1)
    throw DomainError("tridiagonal: subdiagonal length must be order - 1");
  if (!t.diag.allFinite() || !t.sub.allFinite())
    throw DomainError("tridiagonal: entries must be finite");
}

template <typename Scalar>
Scalar trace(const SymmetricTridiagonal<Scalar>& t) {
  validate(t);
  return t.diag.sum();
}

// Maximal absolute row sum of T1 - T2 (a tridiagonal difference), which
// dominates the maximal gap between the sorted spectra by Weyl's inequality.
template <typename Scalar>
Scalar entrywise_norm_bound(const SymmetricTridiagonal<Scalar>& t1,
                            const SymmetricTridiagonal<Scalar>& t2) {
  validate(t1);
  validate(t2);
  if (t1.order() != t2.order()) throw DomainError("tridiagonal: order mismatch");
  const Eigen::Index n = t1.order();
  const auto dd = (t1.diag - t2.diag).cwiseAbs().eval();
  const auto ds = (t1.sub - t2.sub).cwiseAbs().eval();
  Scalar best = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar row = dd[i];
    if (i > 0) row += ds[i - 1];
    if (i + 1 < n) row += ds[i];
    best = std::max(best, row);
  }
  return best;
}

namespace detail {

// Number of eigenvalues of the block strictly below x, via the signs of the
// LDL^T pivots.  pivmin keeps the recurrence away from division blowup.
template <typename Scalar>
Eigen::Index sturm_count_below(const Scalar* diag, const Scalar* sub2, Eigen::Index m,
                               Scalar x, Scalar pivmin) {
  Eigen::Index count = 0;
  Scalar d = diag[0] - x;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < Scalar(0)) ++count;
  for (Eigen::Index i = 1; i < m; ++i) {
    d = diag[i] - x - sub2[i - 1] / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < Scalar(0)) ++count;
  }
  return count;
}

// Ratio p(x)/p'(x) of the characteristic polynomial via the three-term
// recurrence, with joint rescaling so only the (scale-invariant) ratio
// matters.  Returns false when the ratio is unusable.
template <typename Scalar>
bool char_poly_newton_ratio(const Scalar* diag, const Scalar* sub2, Eigen::Index m,
                            Scalar x, Scalar& ratio) {
  Scalar pm1 = Scalar(1), p = diag[0] - x;
  Scalar dm1 = Scalar(0), dp = Scalar(-1);
  for (Eigen::Index i = 1; i < m; ++i) {
    const Scalar t = diag[i] - x;
    const Scalar pn = t * p - sub2[i - 1] * pm1;
    const Scalar dn = t * dp - p - sub2[i - 1] * dm1;
    pm1 = p;
    p = pn;
    dm1 = dp;
    dp = dn;
    const Scalar mag = std::max(std::abs(p), std::abs(dp));
    if (mag > Scalar(1e150)) {
      pm1 *= Scalar(1e-150);
      p *= Scalar(1e-150);
      dm1 *= Scalar(1e-150);
      dp *= Scalar(1e-150);
    } else if (mag > Scalar(0) && mag < Scalar(1e-150)) {
      pm1 *= Scalar(1e150);
      p *= Scalar(1e150);
      dm1 *= Scalar(1e150);
      dp *= Scalar(1e150);
    }
  }
  if (dp == Scalar(0)) return false;
  ratio = p / dp;
  return std::isfinite(ratio);
}

template <typename Scalar>
void block_eigenvalues(const Scalar* diag, const Scalar* sub, Eigen::Index m, Scalar tol,
                       std::vector<Scalar>& out) {
  if (m == 1) {
    out.push_back(diag[0]);
    return;
  }
  std::vector<Scalar> sub2(m - 1);
  Scalar max_sub2 = Scalar(0);
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    sub2[i] = sub[i] * sub[i];
    max_sub2 = std::max(max_sub2, sub2[i]);
  }
  // Gershgorin bracket for the whole block.
  Scalar lo = diag[0], hi = diag[0];
  for (Eigen::Index i = 0; i < m; ++i) {
    Scalar r = Scalar(0);
    if (i > 0) r += std::abs(sub[i - 1]);
    if (i + 1 < m) r += std::abs(sub[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar radius = std::max(std::abs(lo), std::abs(hi));
  lo -= Scalar(2) * eps * radius + std::numeric_limits<Scalar>::min();
  hi += Scalar(2) * eps * radius + std::numeric_limits<Scalar>::min();
  const Scalar pivmin = std::numeric_limits<Scalar>::min() * std::max(Scalar(1), max_sub2);
  const Scalar stop_abs = tol * std::max(Scalar(1), radius);

  for (Eigen::Index k = 1; k <= m; ++k) {
    Scalar a = lo, b = hi;
    for (int it = 0; it < 160; ++it) {
      const Scalar width = b - a;
      if (width <= stop_abs || width <= Scalar(2) * eps * (std::abs(a) + std::abs(b))) break;
      const Scalar mid = a + Scalar(0.5) * width;
      if (sturm_count_below(diag, sub2.data(), m, mid, pivmin) >= k)
        b = mid;
      else
        a = mid;
    }
    Scalar x = a + Scalar(0.5) * (b - a);
    // Newton polish on the characteristic recurrence, clamped to the final
    // bracket so the count-based error guarantee survives.
    for (int step = 0; step < 2; ++step) {
      Scalar ratio;
      if (!char_poly_newton_ratio(diag, sub2.data(), m, x, ratio)) break;
      const Scalar xn = x - ratio;
      if (!(xn > a && xn < b)) break;
      x = xn;
      if (std::abs(ratio) <= eps * std::max(Scalar(1), std::abs(x))) break;
    }
    out.push_back(x);
  }
}

}  // namespace detail

// All eigenvalues, ascending.  Zero subdiagonal entries split the matrix into
// independent blocks first (a zero sub makes the Sturm count degenerate).
// Each eigenvalue is located within tol * max(1, spectral radius).
template <typename Scalar>
typename SymmetricTridiagonal<Scalar>::Vector tridiagonal_eigenvalues(
    const SymmetricTridiagonal<Scalar>& t, Scalar tol = Scalar(1e-12)) {
  validate(t);
  if (!(tol > Scalar(0))) throw DomainError("tridiagonal: tol must be positive");
  const Eigen::Index n = t.order();
  std::vector<Scalar> vals;
  vals.reserve(static_cast<std::size_t>(n));
  Eigen::Index start = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i == n - 1 || t.sub[i] == Scalar(0)) {
      detail::block_eigenvalues(t.diag.data() + start, t.sub.data() + start, i - start + 1,
                                tol, vals);
      start = i + 1;
    }
  }
  std::sort(vals.begin(), vals.end());
  return Eigen::Map<typename SymmetricTridiagonal<Scalar>::Vector>(vals.data(), n);
}

inline Spectrum eigenvalues(const SymTridiagd& t, double tol = 1e-12) {
  return {tridiagonal_eigenvalues(t, tol), std::nullopt};
}

}  // namespace rmt
