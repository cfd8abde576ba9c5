#pragma once

// Chi and symmetric-beta sampling plus the explicit tail bounds that the
// concentration experiments check against.  All samplers are stateless up to
// the stream they draw from.

#include <Eigen/Dense>
#include <cmath>

#include "rmt/errors.hpp"
#include "rmt/stream.hpp"

namespace rmt {

// Calibrated constant of the symmetric-beta deviation bound
// 4*exp(-c*k*delta^2).  Mirrored in data/bound_constants.txt; regenerate and
// re-verify with `rmt calibrate-bounds`.
inline constexpr double kSymBetaBoundConstant = 0.25;

// Non-negative variate whose square is chi-square distributed with dof k.
struct ChiVariate {
  double dof = 1.0;
  double value = 0.0;
};

// Variate on [-1, 1] with density proportional to (1-z)^(k-1) (1+z)^(l-1).
struct SymBetaVariate {
  double k = 1.0;
  double l = 1.0;
  double value = 0.0;
};

struct ChiTailBound {
  double threshold = 0.0;
  double bound = 1.0;
};

inline ChiVariate sample_chi(double dof, RandomStream& stream) {
  if (!(dof > 0.0)) throw DomainError("sample_chi: dof must be positive");
  return {dof, std::sqrt(2.0 * stream.gamma(0.5 * dof))};
}

inline ChiVariate sample_chi(double dof, SeededStream seed) {
  RandomStream stream(seed);
  return sample_chi(dof, stream);
}

// z = 2u - 1 with u ~ Beta(l, k), realized as a gamma ratio in log space so
// that extremely lopsided (k, l) cannot underflow:
//   z = (G_l - G_k) / (G_l + G_k) = tanh((log G_l - log G_k) / 2).
inline SymBetaVariate sample_sym_beta(double k, double l, RandomStream& stream) {
  if (!(k > 0.0) || !(l > 0.0)) throw DomainError("sample_sym_beta: k and l must be positive");
  const double log_gl = stream.log_gamma_variate(l);
  const double log_gk = stream.log_gamma_variate(k);
  return {k, l, std::tanh(0.5 * (log_gl - log_gk))};
}

inline SymBetaVariate sample_sym_beta(double k, double l, SeededStream seed) {
  RandomStream stream(seed);
  return sample_sym_beta(k, l, stream);
}

// Laurent-Massart pair for the chi-square upper tail:
//   P(X_k^2 > k + 2*sqrt(k*x) + 2*x) <= exp(-x).
inline ChiTailBound chi_tail_bound(double k, double x) {
  if (!(k > 0.0)) throw DomainError("chi_tail_bound: k must be positive");
  if (!(x >= 0.0)) throw DomainError("chi_tail_bound: x must be non-negative");
  return {k + 2.0 * std::sqrt(k * x) + 2.0 * x, std::exp(-x)};
}

// Two-sided deviation bound P(|Z - E Z| > delta) <= 4*exp(-c*k*delta^2) for
// the symmetric beta variate with k >= l (swap parameters and reflect z
// otherwise).  The default constant is the calibrated one.
inline double sym_beta_tail_bound(double k, double l, double delta,
                                  double c = kSymBetaBoundConstant) {
  if (!(k > 0.0) || !(l > 0.0)) throw DomainError("sym_beta_tail_bound: k and l must be positive");
  if (!(delta > 0.0)) throw DomainError("sym_beta_tail_bound: delta must be positive");
  if (k < l) throw DomainError("sym_beta_tail_bound: requires k >= l");
  return 4.0 * std::exp(-c * k * delta * delta);
}

// Telescoping bound on |prod(p) - prod(q)| when the factors differ pairwise
// by at most delta:
//   delta * sum_{k=0}^{m-1} prod_{i<m-k} |p_i| * prod_{j>m-k} |q_j|.
inline double product_difference_bound(const Eigen::Ref<const Eigen::VectorXd>& p,
                                       const Eigen::Ref<const Eigen::VectorXd>& q,
                                       double delta) {
  if (p.size() != q.size()) throw DomainError("product_difference_bound: length mismatch");
  if (p.size() < 1) throw DomainError("product_difference_bound: need at least one factor");
  if (!(delta >= 0.0)) throw DomainError("product_difference_bound: delta must be non-negative");
  if ((p - q).cwiseAbs().maxCoeff() > delta)
    throw DomainError("product_difference_bound: max |p_i - q_i| exceeds delta");
  const Eigen::Index m = p.size();
  // prefix[i] = prod_{j < i} |p_j|, suffix[i] = prod_{j >= i} |q_j|
  Eigen::VectorXd prefix(m + 1), suffix(m + 1);
  prefix[0] = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * std::abs(p[i]);
  suffix[m] = 1.0;
  for (Eigen::Index i = m; i-- > 0;) suffix[i] = suffix[i + 1] * std::abs(q[i]);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < m; ++k) sum += prefix[m - k - 1] * suffix[m - k];
  return delta * sum;
}

}  // namespace rmt
