#pragma once

// The beta-Laguerre tridiagonal model, its deterministic counterpart whose
// eigenvalues are Laguerre polynomial zeros, and the dense Wishart oracle
// used to cross-check the tridiagonal sampler at beta = 1, 2.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "rmt/distributions.hpp"
#include "rmt/errors.hpp"
#include "rmt/stream.hpp"
#include "rmt/tridiag.hpp"

namespace rmt::laguerre {

struct Params {
  Eigen::Index n = 1;    // matrix order
  double beta = 1.0;     // Dyson index, any positive real
  double alpha = 1.0;    // must exceed (n-1)*beta/2
};

inline void validate(const Params& p) {
  if (p.n < 1) throw DomainError("laguerre: n must be a positive integer");
  if (!(p.beta > 0.0)) throw DomainError("laguerre: beta must be positive");
  if (!(p.alpha > 0.5 * static_cast<double>(p.n - 1) * p.beta))
    throw DomainError("laguerre: alpha must exceed (n-1)*beta/2");
}

// Scaled sup deviation between a sampled spectrum and the polynomial zeros.
struct DeviationStat {
  double value = 0.0;
};

// Tridiagonal model: diag_1 = X^2_{2a}, diag_i = X^2_{2a-(i-1)b} + Y^2_{(n+1-i)b},
// sub_i = X_{2a-(i-1)b} * Y_{(n-i)b}.  Each X and Y is drawn once and shared
// between the diagonal and subdiagonal entries it appears in; the correlation
// structure is part of the model, not an implementation shortcut.
inline SymTridiagd random_matrix(const Params& p, SeededStream seed) {
  validate(p);
  RandomStream stream(seed);
  const Eigen::Index n = p.n;
  Eigen::VectorXd x(n), y(n > 1 ? n - 1 : 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    x[i] = sample_chi(2.0 * p.alpha - static_cast<double>(i) * p.beta, stream).value;
    if (i < n - 1)
      y[i] = sample_chi(static_cast<double>(n - 1 - i) * p.beta, stream).value;
  }
  SymTridiagd t;
  t.diag.resize(n);
  t.sub.resize(n - 1);
  t.diag[0] = x[0] * x[0];
  for (Eigen::Index i = 1; i < n; ++i) t.diag[i] = x[i] * x[i] + y[i - 1] * y[i - 1];
  for (Eigen::Index i = 0; i + 1 < n; ++i) t.sub[i] = x[i] * y[i];
  return t;
}

inline Spectrum sample_spectrum(const Params& p, SeededStream seed) {
  Spectrum s = eigenvalues(random_matrix(p, seed));
  s.source_seed = seed;
  return s;
}

// Entrywise expectations of the random model: diag_1 = 2a,
// diag_i = 2a + (n+2-2i)b, sub_i = sqrt((2a-(i-1)b)(n-i)b).
inline SymTridiagd deterministic_matrix(const Params& p) {
  validate(p);
  const Eigen::Index n = p.n;
  SymTridiagd t;
  t.diag.resize(n);
  t.sub.resize(n - 1);
  t.diag[0] = 2.0 * p.alpha;
  for (Eigen::Index i = 1; i < n; ++i)
    t.diag[i] = 2.0 * p.alpha + static_cast<double>(n - 2 * i) * p.beta;
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    t.sub[i] = std::sqrt((2.0 * p.alpha - static_cast<double>(i) * p.beta) *
                         static_cast<double>(n - 1 - i) * p.beta);
  return t;
}

// Zeros of L_n^(2a/b - n)(x / b), obtained as the eigenvalues of the
// deterministic matrix.  Their mean is exactly 2a (trace identity).
inline Spectrum polynomial_zeros(const Params& p) {
  return eigenvalues(deterministic_matrix(p));
}

/// Generalized Laguerre polynomial L_n^(p)(x) by the stable three-term
/// recurrence (the defining alternating sum cancels badly for large n).
template <typename Scalar>
Scalar polynomial_eval(int n, Scalar p, Scalar x) {
  if (n < 0) throw DomainError("laguerre: polynomial degree must be non-negative");
  if (!(p > Scalar(-1))) throw DomainError("laguerre: polynomial parameter must exceed -1");
  if (n == 0) return Scalar(1);
  Scalar prev = Scalar(1);
  Scalar cur = Scalar(1) + p - x;
  for (int k = 1; k < n; ++k) {
    const Scalar next =
        ((Scalar(2 * k + 1) + p - x) * cur - (Scalar(k) + p) * prev) / Scalar(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

struct ZeroInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// Enclosing interval for the zeros of L_n^(p), from the chain-sequence bound
// on the eigenvalues of the polynomial's Jacobi matrix: with
// c = cos^2(pi/(n+1)), every zero lies between
//   min_j (2j + p - sqrt(1 + 4c j(j+p)))  and
//   max_j (2j + p + sqrt(1 + 4c j(j+p))),  j = 1..n-1.
// The upper extremum is always the j = n-1 term; the lower one must be
// minimized over j explicitly (the j = n-1 term is not a valid lower bound
// for n >= 3).  At n = 1 the single zero 1+p sits on the upper endpoint of
// the degenerate-width-2 interval [p-1, p+1].
inline ZeroInterval zero_interval(int n, double p) {
  if (n < 1) throw DomainError("laguerre: zero interval needs n >= 1");
  if (!(p > -1.0)) throw DomainError("laguerre: polynomial parameter must exceed -1");
  const double c = std::cos(std::numbers::pi / (n + 1));
  const double c2 = c * c;
  const double hi =
      2.0 * n + p - 2.0 + std::sqrt(1.0 + 4.0 * (n - 1) * (n + p - 1.0) * c2);
  if (n == 1) return {p - 1.0, hi};
  double lo = std::numeric_limits<double>::infinity();
  for (int j = 1; j < n; ++j)
    lo = std::min(lo, 2.0 * j + p - std::sqrt(1.0 + 4.0 * c2 * j * (j + p)));
  return {lo, hi};
}

/// (1/2a) * max_i |lambda_i - x_i| over the sorted inputs.
inline DeviationStat max_scaled_deviation(const Spectrum& sample, const Spectrum& zeros,
                                          double alpha) {
  if (sample.size() != zeros.size()) throw DomainError("max_scaled_deviation: length mismatch");
  if (!(alpha > 0.0)) throw DomainError("max_scaled_deviation: alpha must be positive");
  return {(sample.values - zeros.values).cwiseAbs().maxCoeff() / (2.0 * alpha)};
}

// Eigenvalues of V V* for an n x s standard real (beta = 1) or complex
// (beta = 2) Gaussian matrix; equal in distribution to sample_spectrum with
// alpha = beta * s / 2.  Dense path, deliberately disjoint from the
// tridiagonal sampler.
inline Spectrum wishart_oracle(Eigen::Index n, Eigen::Index s, int beta, SeededStream seed) {
  if (n < 1 || s < n) throw DomainError("wishart_oracle: need 1 <= n <= s");
  if (beta != 1 && beta != 2) throw DomainError("wishart_oracle: beta must be 1 or 2");
  RandomStream stream(seed);
  Spectrum out;
  if (beta == 1) {
    Eigen::MatrixXd v(n, s);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < s; ++j) v(i, j) = stream.normal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(v * v.transpose(),
                                                      Eigen::EigenvaluesOnly);
    out.values = es.eigenvalues();
  } else {
    Eigen::MatrixXcd v(n, s);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < s; ++j) v(i, j) = {stream.normal(), stream.normal()};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(v * v.adjoint(),
                                                       Eigen::EigenvaluesOnly);
    out.values = es.eigenvalues();
  }
  out.source_seed = seed;
  return out;
}

}  // namespace rmt::laguerre
