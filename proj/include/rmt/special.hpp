#pragma once

// Regularized incomplete gamma/beta functions and relatives, implemented the
// usual way (power series + Lentz continued fractions).  These back the
// analytic CDFs used as test oracles and the Clopper-Pearson intervals.

#include <cmath>
#include <limits>
#include <numbers>

#include "rmt/errors.hpp"

namespace rmt {

namespace detail {

inline double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_q_contfrac(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double beta_contfrac(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h;
}

}  // namespace detail

/// Lower regularized incomplete gamma P(a, x).
inline double reg_gamma_p(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw DomainError("reg_gamma_p: need a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  return x < a + 1.0 ? detail::gamma_p_series(a, x) : 1.0 - detail::gamma_q_contfrac(a, x);
}

/// Regularized incomplete beta I_x(a, b).
inline double reg_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("reg_beta: need a > 0 and b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x >= (a + 1.0) / (a + b + 2.0)) return 1.0 - reg_beta(b, a, 1.0 - x);
  const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                a * std::log(x) + b * std::log1p(-x));
  return front * detail::beta_contfrac(a, b, x) / a;
}

/// Inverse of reg_beta in x, by bisection (monotone, so always converges).
inline double beta_quantile(double p, double a, double b) {
  if (!(p >= 0.0) || !(p <= 1.0)) throw DomainError("beta_quantile: need p in [0, 1]");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    (reg_beta(a, b, mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0); }

/// Chi-square CDF with (possibly non-integer) dof k.
inline double chi_square_cdf(double k, double x) {
  if (x <= 0.0) return 0.0;
  return reg_gamma_p(0.5 * k, 0.5 * x);
}

/// CDF at z of the [-1,1] beta law with density proportional to
/// (1-z)^(k-1) (1+z)^(l-1).
inline double sym_beta_cdf(double k, double l, double z) {
  if (z <= -1.0) return 0.0;
  if (z >= 1.0) return 1.0;
  return reg_beta(l, k, 0.5 * (1.0 + z));
}

}  // namespace rmt
