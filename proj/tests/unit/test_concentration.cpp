#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "rmt/concentration.hpp"
#include "support/oracles.hpp"

using rmt::TailEstimate;

TEST_CASE("tail estimates carry exact clopper-pearson intervals") {
  const TailEstimate e = rmt::make_tail_estimate(10, 100);
  CHECK(e.p_hat == doctest::Approx(0.1));
  CHECK(e.ci_lo <= e.p_hat);
  CHECK(e.ci_hi >= e.p_hat);
  // textbook values for k=10, n=100 at 95%
  CHECK(e.ci_lo == doctest::Approx(0.0490047).epsilon(1e-4));
  CHECK(e.ci_hi == doctest::Approx(0.176223).epsilon(1e-4));

  const TailEstimate all = rmt::make_tail_estimate(50, 50);
  CHECK(all.p_hat == 1.0);
  CHECK(all.ci_hi == 1.0);
  const TailEstimate none = rmt::make_tail_estimate(0, 50);
  CHECK(none.p_hat == 0.0);
  CHECK(none.ci_lo == 0.0);
  CHECK(none.ci_hi > 0.0);
  CHECK_THROWS_AS(rmt::make_tail_estimate(5, 0), rmt::DomainError);
  CHECK_THROWS_AS(rmt::make_tail_estimate(51, 50), rmt::DomainError);
}

TEST_CASE("rate fit") {
  SUBCASE("synthetic exponential decay is recovered almost exactly") {
    std::vector<std::pair<double, TailEstimate>> series;
    const std::uint64_t reps = 1000000000000000ULL;  // 1e15 so p_hat ~= p to 16 digits
    for (const double t : {1.0, 2.0, 4.0, 8.0}) {
      const double p = std::exp(-0.5 * t);
      series.emplace_back(t, rmt::make_tail_estimate(
                              static_cast<std::uint64_t>(std::llround(p * reps)), reps));
    }
    const rmt::RateFit fit = rmt::fit_rate(series);
    CHECK(fit.slope == doctest::Approx(-0.5).epsilon(1e-6));
    CHECK(fit.r_squared > 1.0 - 1e-9);
  }
  SUBCASE("constant series has slope 0") {
    std::vector<std::pair<double, TailEstimate>> series;
    for (const double t : {1.0, 2.0, 3.0}) series.emplace_back(t, rmt::make_tail_estimate(25, 100));
    CHECK(rmt::fit_rate(series).slope == doctest::Approx(0.0));
  }
  SUBCASE("cells below 5 exceedances are excluded") {
    std::vector<std::pair<double, TailEstimate>> series;
    series.emplace_back(1.0, rmt::make_tail_estimate(50, 100));
    series.emplace_back(2.0, rmt::make_tail_estimate(20, 100));
    series.emplace_back(3.0, rmt::make_tail_estimate(4, 100));  // dropped
    CHECK_THROWS_AS(rmt::fit_rate(series), rmt::InsufficientDataError);
    series.emplace_back(4.0, rmt::make_tail_estimate(8, 100));
    CHECK(rmt::fit_rate(series).predictor.size() == 3);
  }
}

TEST_CASE("replicate statistics are independent of the thread count") {
  const auto stat = [](std::uint64_t r) {
    rmt::RandomStream s(rmt::replicate_stream(99, 2, r));
    return s.normal() + s.uniform();
  };
  const Eigen::VectorXd one = rmt::replicate_statistics(1000, 1, stat);
  const Eigen::VectorXd four = rmt::replicate_statistics(1000, 4, stat);
  const Eigen::VectorXd eight = rmt::replicate_statistics(1000, 8, stat);
  CHECK(one == four);
  CHECK(one == eight);
}

TEST_CASE("tail estimates are exactly nested in epsilon") {
  const rmt::laguerre::Params p{4, 2.0, 20.0};
  const Eigen::VectorXd stats = rmt::laguerre_deviation_statistics(p, 2000, 7, 0, 2);
  Eigen::VectorXd grid(4);
  grid << 0.05, 0.1, 0.2, 0.4;
  const auto ests = rmt::tail_estimates_from_stats(stats, grid);
  for (std::size_t j = 1; j < ests.size(); ++j)
    CHECK(ests[j].exceed_count <= ests[j - 1].exceed_count);
}

TEST_CASE("estimate_tail basics") {
  SUBCASE("impossible threshold for the jacobi statistic") {
    const rmt::jacobi::Params p{3, 2.0, 4.0, 4.0};
    const TailEstimate e = rmt::estimate_tail(p, 3.0, 1500, 11);
    CHECK(e.exceed_count == 0);
  }
  SUBCASE("all replicates exceed a negative threshold") {
    const rmt::laguerre::Params p{3, 1.0, 5.0};
    const TailEstimate e = rmt::estimate_tail(p, -1.0, 1200, 12);
    CHECK(e.p_hat == 1.0);
    CHECK(e.ci_hi == 1.0);
  }
  SUBCASE("independently seeded reruns are CP-consistent") {
    const rmt::laguerre::Params p{8, 2.0, 40.0};
    const TailEstimate a = rmt::estimate_tail(p, 0.1, 4000, 21, 0, 2);
    const TailEstimate b = rmt::estimate_tail(p, 0.1, 4000, 22, 0, 2);
    CHECK(b.p_hat >= a.ci_lo);
    CHECK(b.p_hat <= a.ci_hi);
  }
}

TEST_CASE("deviation tails shrink as the divergence parameter grows") {
  SUBCASE("laguerre in alpha") {
    const std::uint64_t reps = 3000;
    TailEstimate prev;
    bool first = true;
    for (const double alpha : {20.0, 40.0, 80.0}) {
      const rmt::laguerre::Params p{8, 2.0, alpha};
      const TailEstimate e = rmt::estimate_tail(p, 0.1, reps, 31, 0, 2);
      if (!first) CHECK(e.ci_lo <= prev.ci_hi);
      prev = e;
      first = false;
    }
  }
  SUBCASE("jacobi in a+b") {
    const std::uint64_t reps = 3000;
    TailEstimate prev;
    bool first = true;
    for (const double ab : {10.0, 20.0, 40.0}) {
      const rmt::jacobi::Params p{8, 2.0, ab, ab};
      const TailEstimate e = rmt::estimate_tail(p, 0.15, reps, 32, 0, 2);
      if (!first) CHECK(e.ci_lo <= prev.ci_hi);
      prev = e;
      first = false;
    }
  }
}

TEST_CASE("moment experiment") {
  SUBCASE("n = 1 variance reduces to the single-eigenvalue variance") {
    const rmt::jacobi::Params p{1, 2.0, 2.0, 3.0};
    Eigen::VectorXd eps(1);
    eps << 0.1;
    const auto cells = rmt::moment_experiment({p}, eps, 20000, 41, 2);
    REQUIRE(cells.size() == 1);
    // M1 = mu_1 at n = 1, so Var M1 is the eigenvalue variance; compare with
    // a direct spectral pass on the same streams
    Eigen::VectorXd mu(20000);
    for (int r = 0; r < 20000; ++r)
      mu[r] = rmt::jacobi::sample_spectrum(p, rmt::replicate_stream(41, 0, r)).values[0];
    const double var_direct = (mu.array() - mu.mean()).square().sum() / (mu.size() - 1.0);
    CHECK(cells[0].var_m1 == doctest::Approx(var_direct).epsilon(1e-9));
  }
  SUBCASE("variance quarters when n and a+b double") {
    Eigen::VectorXd eps(0);
    const std::vector<rmt::jacobi::Params> grid{{6, 2.0, 12.0, 12.0}, {12, 2.0, 24.0, 24.0}};
    const auto cells = rmt::moment_experiment(grid, eps, 30000, 42, 2);
    const double ratio = cells[1].var_m1 / cells[0].var_m1;
    CHECK(ratio == doctest::Approx(0.25).epsilon(0.25));
  }
}

TEST_CASE("mprime experiment") {
  std::vector<rmt::jacobi::Params> grid;
  for (const Eigen::Index n : {8, 16, 32}) grid.push_back({n, 2.0, 4.0, 4.0});
  const auto res = rmt::mprime_experiment(grid, 10000, 43, 2);
  CHECK(res.log_var_vs_log_n.slope == doctest::Approx(-2.0).epsilon(0.2));
  for (const auto& [p, v] : res.var_mprime) {
    CHECK(v > 0.0);
    CHECK(v <= 1.0);  // bounded summands
  }
}

TEST_CASE("subexponential mean experiment") {
  SUBCASE("delta = 0 makes every replicate exceed") {
    const auto res = rmt::subexp_mean_experiment(1.0, 0.0, {2, 4, 8}, 0.0, 2000, 51, 2);
    for (const auto& [n, e] : res.cells) CHECK(e.p_hat == 1.0);
  }
  SUBCASE("gaussian case matches the exact normal tail and its log-ratio") {
    const auto res = rmt::subexp_mean_experiment(0.0, 1.0, {8, 16, 32}, 0.5, 100000, 52, 2);
    const auto exact = [](int n) {
      return 2.0 * (1.0 - rmt::normal_cdf(0.5 * std::sqrt(static_cast<double>(n))));
    };
    for (const auto& [n, e] : res.cells) {
      CHECK(e.ci_lo <= exact(static_cast<int>(n)));
      CHECK(e.ci_hi >= exact(static_cast<int>(n)));
    }
    // p at n and 4n: the log-probability ratio sits near 4
    const double ratio = std::log(res.cells[2].second.p_hat) / std::log(res.cells[0].second.p_hat);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.5));
    // the exact-CDF oracle gives the same ratio regime
    const double exact_ratio = std::log(exact(32)) / std::log(exact(8));
    CHECK(ratio == doctest::Approx(exact_ratio).epsilon(0.15));
  }
  SUBCASE("laplace + gaussian mixture decays with negative slope") {
    const auto res = rmt::subexp_mean_experiment(1.0, 1.0, {4, 8, 16, 32}, 1.0, 50000, 53, 2);
    CHECK(res.fit.slope < 0.0);
    CHECK(res.fit.r_squared >= 0.8);
  }
  CHECK_THROWS_AS(rmt::subexp_mean_experiment(0.0, 0.0, {4}, 0.5, 1000, 1, 1),
                  rmt::DomainError);
}

TEST_CASE("semicircle distance") {
  SUBCASE("cdf closed form differentiates back to the density") {
    for (const double x : {-1.5, -0.4, 0.0, 0.7, 1.9}) {
      const double h = 1e-6;
      const double deriv = (rmt::semicircle_cdf(x + h) - rmt::semicircle_cdf(x - h)) / (2.0 * h);
      const double density = std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
      CHECK(deriv == doctest::Approx(density).epsilon(1e-6));
    }
    CHECK(rmt::semicircle_cdf(-2.0) == 0.0);
    CHECK(rmt::semicircle_cdf(0.0) == doctest::Approx(0.5));
    CHECK(rmt::semicircle_cdf(2.0) == 1.0);
  }
  SUBCASE("quantile construction achieves distance <= 1/(n+1)") {
    const int n = 64;
    Eigen::VectorXd pts(n);
    for (int i = 1; i <= n; ++i) {
      double lo = -2.0, hi = 2.0;
      const double target = static_cast<double>(i) / (n + 1);
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (rmt::semicircle_cdf(mid) < target ? lo : hi) = mid;
      }
      pts[i - 1] = 0.5 * (lo + hi);
    }
    CHECK(rmt::semicircle_distance(pts) <= 1.0 / (n + 1) + 1e-12);
  }
  SUBCASE("point mass at zero is 1/2 away") {
    CHECK(rmt::semicircle_distance(Eigen::VectorXd::Zero(5)) == doctest::Approx(0.5));
  }
  SUBCASE("transformed jacobi zeros approach the semicircle") {
    const rmt::jacobi::Params p{50, 1.0, 4000.0, 4000.0};
    const Eigen::VectorXd t =
        rmt::jacobi::semicircle_transform(rmt::jacobi::polynomial_zeros(p), p);
    CHECK(rmt::semicircle_distance(t) < 0.05);
  }
}

TEST_CASE("fit_line rejects degenerate input") {
  Eigen::VectorXd x(3), y(3), w(3);
  x << 1, 1, 1;
  y << 0, 1, 2;
  w.setOnes();
  CHECK_THROWS_AS(rmt::fit_line(x, y, w), rmt::DomainError);
  x << 1, 2, 3;
  w << 1, -1, 1;
  CHECK_THROWS_AS(rmt::fit_line(x, y, w), rmt::DomainError);
}
