#pragma once

// Monte Carlo machinery for the concentration experiments: exact binomial
// tail estimates, weighted log-linear rate fits, the per-ensemble deviation
// statistics, moment/variance scaling experiments, and the semicircle
// goodness-of-fit distance.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "rmt/errors.hpp"
#include "rmt/jacobi.hpp"
#include "rmt/laguerre.hpp"
#include "rmt/parallel.hpp"
#include "rmt/special.hpp"
#include "rmt/stream.hpp"

namespace rmt {

// Binomial exceedance estimate with an exact 95% Clopper-Pearson interval.
struct TailEstimate {
  std::uint64_t exceed_count = 0;
  std::uint64_t replicates = 0;
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 1.0;
};

inline TailEstimate make_tail_estimate(std::uint64_t exceed, std::uint64_t replicates) {
  if (replicates == 0) throw DomainError("tail estimate: replicates must be positive");
  if (exceed > replicates) throw DomainError("tail estimate: exceed_count > replicates");
  TailEstimate e;
  e.exceed_count = exceed;
  e.replicates = replicates;
  e.p_hat = static_cast<double>(exceed) / static_cast<double>(replicates);
  const double k = static_cast<double>(exceed);
  const double n = static_cast<double>(replicates);
  e.ci_lo = exceed == 0 ? 0.0 : beta_quantile(0.025, k, n - k + 1.0);
  e.ci_hi = exceed == replicates ? 1.0 : beta_quantile(0.975, k + 1.0, n - k);
  return e;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

/// Weighted least squares of y against x.  A constant-y series fits exactly
/// (slope 0, r^2 = 1 by convention).
inline LineFit fit_line(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                        const Eigen::VectorXd& w) {
  if (x.size() != y.size() || x.size() != w.size())
    throw DomainError("fit_line: length mismatch");
  if (x.size() < 2) throw InsufficientDataError("fit_line: need at least 2 points");
  if (!(w.minCoeff() > 0.0)) throw DomainError("fit_line: weights must be positive");
  const double wsum = w.sum();
  const double xbar = w.dot(x) / wsum;
  const double ybar = w.dot(y) / wsum;
  const Eigen::ArrayXd dx = x.array() - xbar;
  const Eigen::ArrayXd dy = y.array() - ybar;
  const double sxx = (w.array() * dx.square()).sum();
  if (sxx == 0.0) throw DomainError("fit_line: predictor values are all equal");
  LineFit f;
  f.slope = (w.array() * dx * dy).sum() / sxx;
  f.intercept = ybar - f.slope * xbar;
  const double ss_tot = (w.array() * dy.square()).sum();
  const double ss_res = (w.array() * (dy - f.slope * dx).square()).sum();
  f.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
  return f;
}

// Weighted fit of log p_hat against a predictor; the slope is the empirical
// decay-rate surrogate.  Only cells with at least 5 exceedances enter (the
// log-variance of rarer counts blows up).
struct RateFit {
  Eigen::VectorXd predictor;
  Eigen::VectorXd log_p;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

inline RateFit fit_rate(const std::vector<std::pair<double, TailEstimate>>& series) {
  std::vector<double> xs, ys, ws;
  for (const auto& [predictor, est] : series) {
    if (est.exceed_count < 5) continue;
    const double n = static_cast<double>(est.replicates);
    // delta-method variance of log p_hat is (1-p)/(n p); clamp p away from 1
    // so the weight stays finite
    const double p = std::min(est.p_hat, 1.0 - 0.5 / n);
    xs.push_back(predictor);
    ys.push_back(std::log(p));
    ws.push_back(n * p / (1.0 - p));
  }
  if (xs.size() < 3)
    throw InsufficientDataError("fit_rate: need at least 3 cells with exceed_count >= 5");
  const Eigen::Index m = static_cast<Eigen::Index>(xs.size());
  RateFit fit;
  fit.predictor = Eigen::Map<Eigen::VectorXd>(xs.data(), m);
  fit.log_p = Eigen::Map<Eigen::VectorXd>(ys.data(), m);
  const LineFit line = fit_line(fit.predictor, fit.log_p, Eigen::Map<Eigen::VectorXd>(ws.data(), m));
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.r_squared = line.r_squared;
  return fit;
}

/// Stream for replicate r of cell cell_index: cells get disjoint 2^32-wide
/// index ranges, so layouts with many cells stay reproducible cell by cell.
inline SeededStream replicate_stream(std::uint64_t master_seed, std::uint64_t cell_index,
                                     std::uint64_t r) {
  return {master_seed, (cell_index << 32) | r};
}

/// Per-replicate statistics, stored by replicate index so the result is a
/// pure function of (replicates, master seed) whatever the thread count.
template <typename Stat>
Eigen::VectorXd replicate_statistics(std::uint64_t replicates, int threads, Stat&& stat) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(replicates));
  for_each_replicate(replicates, threads,
                     [&](std::uint64_t r) { out[static_cast<Eigen::Index>(r)] = stat(r); });
  return out;
}

// One estimate per threshold from a single statistic vector.  Each replicate
// is compared against the whole grid, so the estimates are exactly nested in
// epsilon by construction.
inline std::vector<TailEstimate> tail_estimates_from_stats(const Eigen::VectorXd& stats,
                                                           const Eigen::VectorXd& eps_grid) {
  if (stats.size() == 0) throw DomainError("tail estimates: no replicates");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(eps_grid.size()), 0);
  for (Eigen::Index i = 0; i < stats.size(); ++i)
    for (Eigen::Index j = 0; j < eps_grid.size(); ++j)
      if (stats[i] > eps_grid[j]) ++counts[static_cast<std::size_t>(j)];
  std::vector<TailEstimate> out;
  out.reserve(counts.size());
  for (const std::uint64_t c : counts)
    out.push_back(make_tail_estimate(c, static_cast<std::uint64_t>(stats.size())));
  return out;
}

/// Deviation statistics (1/2a) max|lambda_i - x_i| for one Laguerre cell.
inline Eigen::VectorXd laguerre_deviation_statistics(const laguerre::Params& p,
                                                     std::uint64_t replicates,
                                                     std::uint64_t master_seed,
                                                     std::uint64_t cell_index, int threads) {
  const Spectrum zeros = laguerre::polynomial_zeros(p);
  return replicate_statistics(replicates, threads, [&](std::uint64_t r) {
    const Spectrum s = laguerre::sample_spectrum(p, replicate_stream(master_seed, cell_index, r));
    return laguerre::max_scaled_deviation(s, zeros, p.alpha).value;
  });
}

/// Deviation statistics max|mu_i - y_i| for one Jacobi cell.
inline Eigen::VectorXd jacobi_deviation_statistics(const jacobi::Params& p,
                                                   std::uint64_t replicates,
                                                   std::uint64_t master_seed,
                                                   std::uint64_t cell_index, int threads) {
  const Spectrum zeros = jacobi::polynomial_zeros(p);
  return replicate_statistics(replicates, threads, [&](std::uint64_t r) {
    const Spectrum s = jacobi::sample_spectrum(p, replicate_stream(master_seed, cell_index, r));
    return jacobi::max_deviation(s, zeros);
  });
}

inline TailEstimate estimate_tail(const laguerre::Params& p, double epsilon,
                                  std::uint64_t replicates, std::uint64_t master_seed,
                                  std::uint64_t cell_index = 0, int threads = 1) {
  const Eigen::VectorXd stats =
      laguerre_deviation_statistics(p, replicates, master_seed, cell_index, threads);
  Eigen::VectorXd grid(1);
  grid[0] = epsilon;
  return tail_estimates_from_stats(stats, grid).front();
}

inline TailEstimate estimate_tail(const jacobi::Params& p, double epsilon,
                                  std::uint64_t replicates, std::uint64_t master_seed,
                                  std::uint64_t cell_index = 0, int threads = 1) {
  const Eigen::VectorXd stats =
      jacobi_deviation_statistics(p, replicates, master_seed, cell_index, threads);
  Eigen::VectorXd grid(1);
  grid[0] = epsilon;
  return tail_estimates_from_stats(stats, grid).front();
}

inline double sample_mean(const Eigen::VectorXd& v) { return v.mean(); }

inline double sample_variance(const Eigen::VectorXd& v) {
  if (v.size() < 2) throw InsufficientDataError("sample_variance: need at least 2 values");
  return (v.array() - v.mean()).square().sum() / static_cast<double>(v.size() - 1);
}

// Per-cell output of the moment experiment: moment means/variances across
// replicates plus tail frequencies of |M1 - mean| over the epsilon grid.
struct MomentCell {
  jacobi::Params params;
  double expected_m1 = 0.0;
  double expected_m2_leading = 0.0;
  double mean_m1 = 0.0;
  double var_m1 = 0.0;
  double mean_m2 = 0.0;
  double var_m2 = 0.0;
  double var_mprime = 0.0;
  std::vector<TailEstimate> m1_tails;
};

// M1 and M2 are computed through the chain identities (equal to the spectral
// moments exactly, which the unit tests pin down to 1e-12), so no eigensolve
// is needed per replicate.
inline std::vector<MomentCell> moment_experiment(const std::vector<jacobi::Params>& grid,
                                                 const Eigen::VectorXd& eps_grid,
                                                 std::uint64_t replicates,
                                                 std::uint64_t master_seed, int threads = 1) {
  if (replicates < 2) throw DomainError("moment_experiment: need at least 2 replicates");
  std::vector<MomentCell> cells;
  cells.reserve(grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) {
    const jacobi::Params& p = grid[c];
    jacobi::validate(p);
    Eigen::VectorXd m1(static_cast<Eigen::Index>(replicates));
    Eigen::VectorXd m2(static_cast<Eigen::Index>(replicates));
    Eigen::VectorXd mp(static_cast<Eigen::Index>(replicates));
    for_each_replicate(replicates, threads, [&](std::uint64_t r) {
      const jacobi::ZChain chain =
          jacobi::sample_z_chain(p, replicate_stream(master_seed, c, r));
      const Eigen::Index i = static_cast<Eigen::Index>(r);
      m1[i] = jacobi::m1_chain_identity(chain);
      m2[i] = jacobi::m2_chain_identity(chain, p);
      mp[i] = jacobi::m_prime(chain);
    });
    MomentCell cell;
    cell.params = p;
    std::tie(cell.expected_m1, cell.expected_m2_leading) = jacobi::expected_moments(p);
    cell.mean_m1 = sample_mean(m1);
    cell.var_m1 = sample_variance(m1);
    cell.mean_m2 = sample_mean(m2);
    cell.var_m2 = sample_variance(m2);
    cell.var_mprime = sample_variance(mp);
    cell.m1_tails =
        tail_estimates_from_stats((m1.array() - cell.mean_m1).abs().matrix(), eps_grid);
    cells.push_back(std::move(cell));
  }
  return cells;
}

// Variance of M' across replicates on an n-doubling grid at fixed (a, b),
// with the fitted slope of log Var M' against log n.
struct MPrimeResult {
  std::vector<std::pair<jacobi::Params, double>> var_mprime;
  LineFit log_var_vs_log_n;
};

inline MPrimeResult mprime_experiment(const std::vector<jacobi::Params>& n_grid,
                                      std::uint64_t replicates, std::uint64_t master_seed,
                                      int threads = 1) {
  if (n_grid.size() < 2)
    throw InsufficientDataError("mprime_experiment: need at least 2 grid cells");
  if (replicates < 2) throw DomainError("mprime_experiment: need at least 2 replicates");
  MPrimeResult out;
  Eigen::VectorXd log_n(static_cast<Eigen::Index>(n_grid.size()));
  Eigen::VectorXd log_var(static_cast<Eigen::Index>(n_grid.size()));
  for (std::size_t c = 0; c < n_grid.size(); ++c) {
    const jacobi::Params& p = n_grid[c];
    jacobi::validate(p);
    const Eigen::VectorXd mp = replicate_statistics(replicates, threads, [&](std::uint64_t r) {
      return jacobi::m_prime(jacobi::sample_z_chain(p, replicate_stream(master_seed, c, r)));
    });
    const double v = sample_variance(mp);
    out.var_mprime.emplace_back(p, v);
    log_n[static_cast<Eigen::Index>(c)] = std::log(static_cast<double>(p.n));
    log_var[static_cast<Eigen::Index>(c)] = std::log(v);
  }
  out.log_var_vs_log_n = fit_line(log_n, log_var, Eigen::VectorXd::Ones(log_n.size()));
  return out;
}

// Empirical mean-tail decay for centered Laplace(r) + Gaussian(s) sums:
// estimates P(|mean of n| > delta) over an n grid and fits log p against n.
struct SubexpResult {
  std::vector<std::pair<double, TailEstimate>> cells;  // (n, estimate)
  RateFit fit;
};

inline SubexpResult subexp_mean_experiment(double r, double s,
                                           const std::vector<int>& n_grid, double delta,
                                           std::uint64_t replicates,
                                           std::uint64_t master_seed, int threads = 1) {
  if (!(r >= 0.0) || !(s >= 0.0) || !(r + s > 0.0))
    throw DomainError("subexp_mean_experiment: need r, s >= 0 with r + s > 0");
  if (!(delta >= 0.0)) throw DomainError("subexp_mean_experiment: delta must be non-negative");
  SubexpResult out;
  for (std::size_t c = 0; c < n_grid.size(); ++c) {
    const int n = n_grid[c];
    if (n < 1) throw DomainError("subexp_mean_experiment: n grid entries must be positive");
    const Eigen::VectorXd stats = replicate_statistics(replicates, threads, [&](std::uint64_t rep) {
      RandomStream stream(replicate_stream(master_seed, c, rep));
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += stream.laplace(r) + s * stream.normal();
      return std::abs(acc / n);
    });
    Eigen::VectorXd grid(1);
    grid[0] = delta;
    out.cells.emplace_back(static_cast<double>(n),
                           tail_estimates_from_stats(stats, grid).front());
  }
  out.fit = fit_rate(out.cells);
  return out;
}

/// CDF of the radius-2 semicircle law.
inline double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + (x * std::sqrt(4.0 - x * x) + 4.0 * std::asin(0.5 * x)) / (4.0 * std::numbers::pi);
}

/// Kolmogorov-Smirnov distance between the empirical CDF of the points and
/// the radius-2 semicircle CDF.
inline double semicircle_distance(const Eigen::VectorXd& points) {
  if (points.size() == 0) throw DomainError("semicircle_distance: empty sample");
  std::vector<double> sorted(points.data(), points.data() + points.size());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(sorted.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = semicircle_cdf(sorted[i]);
    dist = std::max(dist, std::abs(static_cast<double>(i + 1) / m - f));
    dist = std::max(dist, std::abs(static_cast<double>(i) / m - f));
  }
  return dist;
}

}  // namespace rmt
