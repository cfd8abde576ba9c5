#pragma once

// The beta-Jacobi tridiagonal model driven by a chain of [-1,1] beta
// variables, its deterministic counterpart whose halved eigenvalues are
// Jacobi polynomial zeros, the closed-form moment identities, and the
// Haar-unitary block oracle for beta = 2.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <utility>

#include "rmt/distributions.hpp"
#include "rmt/errors.hpp"
#include "rmt/stream.hpp"
#include "rmt/tridiag.hpp"

namespace rmt::jacobi {

struct Params {
  Eigen::Index n = 1;
  double beta = 1.0;
  double a = 1.0;
  double b = 1.0;
};

inline void validate(const Params& p) {
  if (p.n < 1) throw DomainError("jacobi: n must be a positive integer");
  if (!(p.beta > 0.0)) throw DomainError("jacobi: beta must be positive");
  if (!(p.a > 0.0) || !(p.b > 0.0)) throw DomainError("jacobi: a and b must be positive");
}

/// N = a + b + beta*(n-1), the scale parameter of the moment formulas.
inline double scale_n(const Params& p) {
  return p.a + p.b + p.beta * static_cast<double>(p.n - 1);
}

// The 2n-long variable chain driving the model; entry 1 is pinned to -1 and
// entries 2..2n are independent [-1,1] beta draws.
struct ZChain {
  Eigen::VectorXd z;

  Eigen::Index pairs() const { return z.size() / 2; }
  /// 1-based access matching the model's indexing.
  double at(Eigen::Index i) const { return z[i - 1]; }
};

// Spectrum-average first moment and second moment about the exact
// expectation (b-a)/N.
struct MomentPair {
  double m1 = 0.0;
  double m2 = 0.0;
};

// E Z_i: (b-a)/(a+b+(n-i/2)b') for even i, (b'/2-a-b)/(a+b+(n-i/2)b') for
// odd i >= 3, and the pinned -1 at i = 1.
inline Eigen::VectorXd z_chain_means(const Params& p) {
  validate(p);
  Eigen::VectorXd m(2 * p.n);
  m[0] = -1.0;
  for (Eigen::Index i = 2; i <= 2 * p.n; ++i) {
    const double denom = p.a + p.b + (static_cast<double>(p.n) - 0.5 * static_cast<double>(i)) * p.beta;
    m[i - 1] = (i % 2 == 0) ? (p.b - p.a) / denom : (0.5 * p.beta - p.a - p.b) / denom;
  }
  return m;
}

inline ZChain sample_z_chain(const Params& p, SeededStream seed) {
  validate(p);
  RandomStream stream(seed);
  ZChain chain;
  chain.z.resize(2 * p.n);
  chain.z[0] = -1.0;
  for (Eigen::Index i = 2; i <= 2 * p.n; ++i) {
    const double step = static_cast<double>(2 * p.n - i);
    double k, l;
    if (i % 2 == 0) {
      k = p.a + step * p.beta / 4.0;
      l = p.b + step * p.beta / 4.0;
    } else {
      k = p.a + p.b + (step - 1.0) * p.beta / 4.0;
      l = (step + 1.0) * p.beta / 4.0;
    }
    chain.z[i - 1] = sample_sym_beta(k, l, stream).value;
  }
  return chain;
}

// Tridiagonal J built from the chain:
//   J_ii    = (1 - Z_{2i-1}) Z_{2i} - (1 + Z_{2i-1}) Z_{2i-2}
//   J_{i+1,i} = sqrt((1 - Z_{2i-1})(1 - Z_{2i}^2)(1 + Z_{2i+1}))
// with the i = 1 second product absent (Z_1 = -1 kills it anyway).  The
// eigenvalues of J/2 follow the beta-Jacobi law.
inline SymTridiagd random_matrix(const ZChain& chain) {
  const Eigen::Index n = chain.pairs();
  if (n < 1 || chain.z.size() != 2 * n)
    throw DomainError("jacobi: chain length must be 2n for some n >= 1");
  if (chain.z[0] != -1.0) throw DomainError("jacobi: chain entry 1 must be pinned to -1");
  SymTridiagd t;
  t.diag.resize(n);
  t.sub.resize(n - 1);
  for (Eigen::Index i = 1; i <= n; ++i) {
    double v = (1.0 - chain.at(2 * i - 1)) * chain.at(2 * i);
    if (i >= 2) v -= (1.0 + chain.at(2 * i - 1)) * chain.at(2 * i - 2);
    t.diag[i - 1] = v;
  }
  for (Eigen::Index i = 1; i < n; ++i) {
    const double zi = chain.at(2 * i);
    const double radicand =
        (1.0 - chain.at(2 * i - 1)) * (1.0 - zi * zi) * (1.0 + chain.at(2 * i + 1));
    if (radicand < 0.0)
      throw DomainError("jacobi: negative subdiagonal radicand; chain entry outside [-1, 1]");
    t.sub[i - 1] = std::sqrt(radicand);
  }
  return t;
}

inline Spectrum sample_spectrum(const Params& p, SeededStream seed) {
  Spectrum s = eigenvalues(random_matrix(sample_z_chain(p, seed)));
  s.values /= 2.0;
  s.source_seed = seed;
  return s;
}

/// The chain with every entry replaced by its expectation.
inline SymTridiagd deterministic_matrix(const Params& p) {
  return random_matrix(ZChain{z_chain_means(p)});
}

// Zeros of P_n^(2a/b'-1, 2b/b'-1), obtained as eigenvalues of the
// deterministic matrix divided by 2; all strictly inside (-1, 1).
inline Spectrum polynomial_zeros(const Params& p) {
  Spectrum s = eigenvalues(deterministic_matrix(p));
  s.values /= 2.0;
  return s;
}

/// Jacobi polynomial P_n^(p,q)(y), by the standard three-term recurrence.
template <typename Scalar>
Scalar polynomial_eval(int n, Scalar p, Scalar q, Scalar y) {
  if (n < 0) throw DomainError("jacobi: polynomial degree must be non-negative");
  if (!(p > Scalar(-1)) || !(q > Scalar(-1)))
    throw DomainError("jacobi: polynomial parameters must exceed -1");
  if (n == 0) return Scalar(1);
  Scalar prev = Scalar(1);
  Scalar cur = ((p + q + Scalar(2)) * y + (p - q)) / Scalar(2);
  for (int k = 2; k <= n; ++k) {
    const Scalar apb = p + q;
    const Scalar t = Scalar(2 * k) + apb;
    const Scalar a1 = Scalar(2 * k) * (Scalar(k) + apb) * (t - Scalar(2));
    const Scalar a2 = (t - Scalar(1)) * (p * p - q * q);
    const Scalar a3 = (t - Scalar(1)) * t * (t - Scalar(2));
    const Scalar a4 = Scalar(2) * (Scalar(k) + p - Scalar(1)) * (Scalar(k) + q - Scalar(1)) * t;
    const Scalar next = ((a2 + a3 * y) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// m1 = mean(mu); m2 = mean((mu - (b-a)/N)^2), centered at the exact
/// expectation rather than the sample mean.  Requires a [-1, 1] spectrum,
/// which keeps |m1| <= 1 and m2 <= 4.
inline MomentPair moments(const Spectrum& s, const Params& p) {
  validate(p);
  if (s.size() < 1) throw DomainError("jacobi: moments need a non-empty spectrum");
  if (s.values.minCoeff() < -1.0 - 1e-9 || s.values.maxCoeff() > 1.0 + 1e-9)
    throw DomainError("jacobi: moments need a spectrum inside [-1, 1]");
  const double em1 = (p.b - p.a) / scale_n(p);
  return {s.values.mean(), (s.values.array() - em1).square().mean()};
}

/// (E M1, leading term of E M2) = ((b-a)/N, b'n(2a+b'n)(2b+b'n)/(2N^3)).
inline std::pair<double, double> expected_moments(const Params& p) {
  validate(p);
  const double nn = scale_n(p);
  const double bn = p.beta * static_cast<double>(p.n);
  return {(p.b - p.a) / nn,
          bn * (2.0 * p.a + bn) * (2.0 * p.b + bn) / (2.0 * nn * nn * nn)};
}

// Exact mean and variance of the polynomial zeros:
//   Y1 = (b-a)/N,  Y2 = b'(n-1)(2a+b'(n-1))(2b+b'(n-1)) / (N^2 (2N-b')).
// Y2 = 0 at n = 1 (single zero).  The 2N <= beta degeneracy is only
// reachable at n = 1 and is guarded before the division.
inline std::pair<double, double> zero_moments_closed_form(const Params& p) {
  validate(p);
  const double nn = scale_n(p);
  const double y1 = (p.b - p.a) / nn;
  if (p.n == 1) return {y1, 0.0};
  if (!(2.0 * nn > p.beta))
    throw DomainError("jacobi: closed-form zero variance needs 2N > beta");
  const double bn1 = p.beta * static_cast<double>(p.n - 1);
  return {y1, bn1 * (2.0 * p.a + bn1) * (2.0 * p.b + bn1) / (nn * nn * (2.0 * nn - p.beta))};
}

/// M1 from the chain alone: (Z_{2n} - sum_{i=2}^{2n} Z_{i-1} Z_i) / (2n).
/// Equals trace(J/2)/n exactly.
inline double m1_chain_identity(const ZChain& chain) {
  const Eigen::Index m = chain.z.size();
  if (m < 2 || m % 2 != 0) throw DomainError("jacobi: chain length must be 2n for some n >= 1");
  const double cross = chain.z.head(m - 1).cwiseProduct(chain.z.tail(m - 1)).sum();
  return (chain.z[m - 1] - cross) / static_cast<double>(m);
}

/// M' = (1/4n) sum_{i=3}^{2n} (2 Z_{i-2} (Z_{i-1}^2 - 1) Z_i + Z_{i-1}^2 Z_i^2).
inline double m_prime(const ZChain& chain) {
  const Eigen::Index n = chain.pairs();
  double acc = 0.0;
  for (Eigen::Index i = 3; i <= 2 * n; ++i) {
    const double z0 = chain.at(i - 2);
    const double z1 = chain.at(i - 1);
    const double z2 = chain.at(i);
    acc += 2.0 * z0 * (z1 * z1 - 1.0) * z2 + z1 * z1 * z2 * z2;
  }
  return acc / (4.0 * static_cast<double>(n));
}

/// M2 from the chain alone; equals trace((J/2 - Y1 I)^2)/n exactly.
inline double m2_chain_identity(const ZChain& chain, const Params& p) {
  validate(p);
  const Eigen::Index n = chain.pairs();
  if (n != p.n) throw DomainError("jacobi: chain length inconsistent with params");
  const double y1 = (p.b - p.a) / scale_n(p);
  const double m1 = m1_chain_identity(chain);
  const double z2 = chain.at(2);
  const double zlast = chain.at(2 * n);
  const double zodd = chain.at(2 * n - 1);
  return y1 * y1 - 2.0 * y1 * m1 + 0.5 +
         (2.0 * zodd * (1.0 - zlast * zlast) + z2 * z2 + zlast * zlast) /
             (4.0 * static_cast<double>(n)) +
         m_prime(chain);
}

// beta = 2 oracle: mu_i = 2*sigma_i^2 - 1 for the singular values sigma of
// the top-left n x (n+b-1) block of a Haar unitary of dimension 2n+a+b-2.
// Haar measure needs the QR phase fix (R diagonal rotated positive).
inline Spectrum unitary_block_oracle(Eigen::Index n, Eigen::Index a, Eigen::Index b,
                                     SeededStream seed) {
  if (n < 1 || a < 1 || b < 1)
    throw DomainError("unitary_block_oracle: n, a, b must be positive integers");
  const Eigen::Index d = 2 * n + a + b - 2;
  RandomStream stream(seed);
  Eigen::MatrixXcd g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = {stream.normal(), stream.normal()};
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd u = qr.householderQ();
  const Eigen::VectorXcd rdiag = qr.matrixQR().diagonal();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(rdiag[j]);
    u.col(j) *= mag > 0.0 ? rdiag[j] / mag : std::complex<double>(1.0, 0.0);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(u.topLeftCorner(n, n + b - 1));
  Spectrum out;
  // singular values come out descending; mu ascending after the flip
  out.values = (2.0 * svd.singularValues().array().square() - 1.0).reverse();
  out.source_seed = seed;
  return out;
}

/// max_i |mu_i - y_i| over the sorted inputs.
inline double max_deviation(const Spectrum& sample, const Spectrum& zeros) {
  if (sample.size() != zeros.size()) throw DomainError("max_deviation: length mismatch");
  return (sample.values - zeros.values).cwiseAbs().maxCoeff();
}

/// mu_i -> sqrt((a+b)/(2abn*beta)) * ((a+b) mu_i + a - b); under this map the
/// spectrum approaches the radius-2 semicircle as a + b grows.
inline Eigen::VectorXd semicircle_transform(const Spectrum& s, const Params& p) {
  validate(p);
  const double ab = p.a + p.b;
  const double scale = std::sqrt(ab / (2.0 * p.a * p.b * static_cast<double>(p.n) * p.beta));
  return scale * ((ab * s.values).array() + (p.a - p.b)).matrix();
}

}  // namespace rmt::jacobi
