#include "commands.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <thread>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "csv.hpp"
#include "manifest.hpp"
#include "rmt/concentration.hpp"
#include "rmt/distributions.hpp"
#include "rmt/jacobi.hpp"
#include "rmt/laguerre.hpp"

namespace fs = std::filesystem;

namespace rmt::cli {

namespace {

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("RMT_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (errno != 0 || *end != '\0')
    throw ConfigError(std::string("RMT_SEED is not an unsigned integer: '") + raw + "'");
  return v;
}

// Output directories are never created implicitly; pointing a run at a
// missing directory is treated as a usage error.
std::string require_out_dir(const CommonOptions& opts, const std::string& config_out) {
  const std::string dir = opts.out_dir.value_or(config_out);
  if (dir.empty())
    throw ConfigError("no output directory: pass --out or set run.out in the config");
  if (!fs::is_directory(dir)) throw ConfigError("output directory does not exist: " + dir);
  return dir;
}

nlohmann::json base_manifest(const std::string& command, const std::string& digest,
                             std::uint64_t seed, int threads, const std::string& started) {
  return {
      {"schema", "rmt-manifest-v1"},
      {"tool_version", kToolVersion},
      {"command", command},
      {"config_digest", digest},
      {"master_seed", seed},
      {"threads", threads},
      {"started_at", started},
  };
}

std::vector<TailEstimate> cell_tail_estimates(const Eigen::VectorXd& stats,
                                              const std::vector<double>& eps) {
  Eigen::VectorXd grid(static_cast<Eigen::Index>(eps.size()));
  for (std::size_t i = 0; i < eps.size(); ++i) grid[static_cast<Eigen::Index>(i)] = eps[i];
  return tail_estimates_from_stats(stats, grid);
}

int report_error(const std::exception& e, int code) {
  std::cerr << "error: " << e.what() << "\n";
  return code;
}

}  // namespace

std::uint64_t resolve_seed(const CommonOptions& opts, std::optional<std::uint64_t> config_seed) {
  if (opts.seed) return *opts.seed;
  if (config_seed) return *config_seed;
  if (const auto env = env_seed()) return *env;
  return 0;
}

int resolve_threads(const CommonOptions& opts, std::optional<int> config_threads) {
  int t = opts.threads.value_or(config_threads.value_or(0));
  if (t < 0) throw ConfigError("threads must be non-negative");
  if (t == 0) t = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return t;
}

int run_zeros(const std::string& ensemble, std::int64_t n, double beta,
              std::optional<double> alpha, std::optional<double> a, std::optional<double> b,
              const CommonOptions& opts) {
  try {
    const std::string dir = require_out_dir(opts, "");
    Spectrum zeros;
    double closed_mean = 0.0, closed_var = 0.0;
    bool have_closed = false;
    if (ensemble == "laguerre") {
      if (!alpha) throw ConfigError("laguerre zeros require --alpha");
      const laguerre::Params p{n, beta, *alpha};
      zeros = laguerre::polynomial_zeros(p);
    } else if (ensemble == "jacobi") {
      if (!a || !b) throw ConfigError("jacobi zeros require --a and --b");
      const jacobi::Params p{n, beta, *a, *b};
      zeros = jacobi::polynomial_zeros(p);
      std::tie(closed_mean, closed_var) = jacobi::zero_moments_closed_form(p);
      have_closed = true;
    } else {
      throw ConfigError("unknown ensemble '" + ensemble + "' (expected laguerre or jacobi)");
    }

    CsvWriter csv((fs::path(dir) / "zeros.csv").string(), "zeros-v1");
    csv.header({"index", "value", "mean", "variance", "closed_form_mean",
                "closed_form_variance"});
    for (Eigen::Index i = 0; i < zeros.size(); ++i)
      csv.row({CsvWriter::integer(static_cast<std::int64_t>(i + 1)),
               CsvWriter::num(zeros.values[i]), "", "", "", ""});
    const double mean = zeros.values.mean();
    const double var = (zeros.values.array() - mean).square().mean();
    csv.row({"summary", "", CsvWriter::num(mean), CsvWriter::num(var),
             have_closed ? CsvWriter::num(closed_mean) : "",
             have_closed ? CsvWriter::num(closed_var) : ""});
    return kExitOk;
  } catch (const ConfigError& e) {
    return report_error(e, kExitUsage);
  } catch (const DomainError& e) {
    return report_error(e, kExitUsage);
  } catch (const std::exception& e) {
    return report_error(e, kExitUsage);
  }
}

int run_concentration(const std::string& config_path, const CommonOptions& opts) {
  try {
    const Config cfg = Config::load(config_path);
    const std::string ensemble = cfg.get_string("run.ensemble");
    const std::uint64_t replicates = cfg.get_u64("run.replicates");
    if (replicates < 1000) throw ConfigError("run.replicates must be at least 1000");
    const std::optional<std::uint64_t> cfg_seed =
        cfg.has("run.master_seed") ? std::optional(cfg.get_u64("run.master_seed"))
                                   : std::nullopt;
    const std::uint64_t seed = resolve_seed(opts, cfg_seed);
    const int threads = resolve_threads(
        opts, cfg.has("run.threads") ? std::optional(static_cast<int>(cfg.get_int("run.threads")))
                                     : std::nullopt);
    const std::string dir = require_out_dir(opts, cfg.get_string_or("run.out", ""));

    const std::int64_t n = cfg.get_int("grid.n");
    const double beta = cfg.get_double("grid.beta");
    const std::vector<double> eps = cfg.get_double_list("grid.epsilon");
    for (const double e : eps)
      if (!(e > 0.0)) throw ConfigError("grid.epsilon entries must be positive");

    struct Row {
      std::string alpha, a, b;
      double epsilon, predictor;
      TailEstimate est;
    };
    std::vector<Row> rows;
    std::string predictor_label;

    if (ensemble == "laguerre") {
      predictor_label = "alpha*eps*min(eps;1)";
      const std::vector<double> alphas = cfg.get_double_list("grid.alpha");
      for (std::size_t c = 0; c < alphas.size(); ++c) {
        const laguerre::Params p{n, beta, alphas[c]};
        laguerre::validate(p);
        const Eigen::VectorXd stats =
            laguerre_deviation_statistics(p, replicates, seed, c, threads);
        const auto ests = cell_tail_estimates(stats, eps);
        for (std::size_t j = 0; j < eps.size(); ++j)
          rows.push_back({CsvWriter::num(alphas[c]), "", "", eps[j],
                          alphas[c] * eps[j] * std::min(eps[j], 1.0), ests[j]});
      }
    } else if (ensemble == "jacobi") {
      predictor_label = "(a+b)*eps^2";
      const std::vector<double> as = cfg.get_double_list("grid.a");
      const std::vector<double> bs = cfg.get_double_list("grid.b");
      if (as.size() != bs.size())
        throw ConfigError("grid.a and grid.b must have the same length");
      for (std::size_t c = 0; c < as.size(); ++c) {
        const jacobi::Params p{n, beta, as[c], bs[c]};
        jacobi::validate(p);
        const Eigen::VectorXd stats =
            jacobi_deviation_statistics(p, replicates, seed, c, threads);
        const auto ests = cell_tail_estimates(stats, eps);
        for (std::size_t j = 0; j < eps.size(); ++j)
          rows.push_back({"", CsvWriter::num(as[c]), CsvWriter::num(bs[c]), eps[j],
                          (as[c] + bs[c]) * eps[j] * eps[j], ests[j]});
      }
    } else {
      throw ConfigError("run.ensemble must be laguerre or jacobi");
    }

    const std::string started = utc_now_iso8601();
    CsvWriter cells((fs::path(dir) / "concentration_cells.csv").string(),
                    "concentration-cells-v1");
    cells.header({"ensemble", "n", "beta", "alpha", "a", "b", "epsilon", "predictor",
                  "replicates", "exceed_count", "p_hat", "ci_lo", "ci_hi"});
    for (const Row& r : rows)
      cells.row({ensemble, CsvWriter::integer(n), CsvWriter::num(beta), r.alpha, r.a, r.b,
                 CsvWriter::num(r.epsilon), CsvWriter::num(r.predictor),
                 CsvWriter::integer(r.est.replicates), CsvWriter::integer(r.est.exceed_count),
                 CsvWriter::num(r.est.p_hat), CsvWriter::num(r.est.ci_lo),
                 CsvWriter::num(r.est.ci_hi)});

    std::vector<std::pair<double, TailEstimate>> series;
    series.reserve(rows.size());
    for (const Row& r : rows) series.emplace_back(r.predictor, r.est);
    RateFit fit;
    try {
      fit = fit_rate(series);
    } catch (const InsufficientDataError& e) {
      return report_error(e, kExitInsufficientData);
    }
    const std::size_t used = static_cast<std::size_t>(fit.predictor.size());

    CsvWriter fitcsv((fs::path(dir) / "concentration_fit.csv").string(),
                     "concentration-fit-v1");
    fitcsv.header({"predictor", "cells_total", "cells_used", "slope", "intercept",
                   "r_squared"});
    fitcsv.row({predictor_label, CsvWriter::integer(static_cast<std::uint64_t>(rows.size())),
                CsvWriter::integer(static_cast<std::uint64_t>(used)), CsvWriter::num(fit.slope),
                CsvWriter::num(fit.intercept), CsvWriter::num(fit.r_squared)});

    cells.close();
    fitcsv.close();
    nlohmann::json manifest = base_manifest("concentration", cfg.digest(), seed, threads, started);
    manifest["finished_at"] = utc_now_iso8601();
    manifest["rows"] = {{"concentration_cells.csv", cells.rows_written()},
                        {"concentration_fit.csv", fitcsv.rows_written()}};
    write_manifest(dir, manifest);
    std::cout << "slope " << CsvWriter::num(fit.slope) << " r_squared "
              << CsvWriter::num(fit.r_squared) << "\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    return report_error(e, kExitUsage);
  } catch (const DomainError& e) {
    return report_error(e, kExitUsage);
  } catch (const InsufficientDataError& e) {
    return report_error(e, kExitInsufficientData);
  } catch (const std::exception& e) {
    return report_error(e, kExitUsage);
  }
}

int run_moments(const std::string& config_path, const CommonOptions& opts) {
  try {
    const Config cfg = Config::load(config_path);
    const std::uint64_t replicates = cfg.get_u64("run.replicates");
    if (replicates < 1000) throw ConfigError("run.replicates must be at least 1000");
    const std::optional<std::uint64_t> cfg_seed =
        cfg.has("run.master_seed") ? std::optional(cfg.get_u64("run.master_seed"))
                                   : std::nullopt;
    const std::uint64_t seed = resolve_seed(opts, cfg_seed);
    const int threads = resolve_threads(
        opts, cfg.has("run.threads") ? std::optional(static_cast<int>(cfg.get_int("run.threads")))
                                     : std::nullopt);
    const std::string dir = require_out_dir(opts, cfg.get_string_or("run.out", ""));

    const std::vector<std::int64_t> ns = cfg.get_int_list("grid.n");
    const double beta = cfg.get_double("grid.beta");
    const std::vector<double> as = cfg.get_double_list("grid.a");
    const std::vector<double> bs = cfg.get_double_list("grid.b");
    if (ns.size() != as.size() || ns.size() != bs.size())
      throw ConfigError("grid.n, grid.a, grid.b must have the same length");
    std::vector<jacobi::Params> grid;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const jacobi::Params p{ns[i], beta, as[i], bs[i]};
      jacobi::validate(p);
      grid.push_back(p);
    }
    std::vector<double> eps;
    if (cfg.has("tails.epsilon")) {
      eps = cfg.get_double_list("tails.epsilon");
      for (const double e : eps)
        if (!(e > 0.0)) throw ConfigError("tails.epsilon entries must be positive");
    }
    Eigen::VectorXd eps_grid(static_cast<Eigen::Index>(eps.size()));
    for (std::size_t i = 0; i < eps.size(); ++i) eps_grid[static_cast<Eigen::Index>(i)] = eps[i];

    const std::string started = utc_now_iso8601();
    const std::vector<MomentCell> cells =
        moment_experiment(grid, eps_grid, replicates, seed, threads);

    CsvWriter cellcsv((fs::path(dir) / "moments_cells.csv").string(), "moments-cells-v1");
    cellcsv.header({"n", "beta", "a", "b", "big_n", "replicates", "expected_m1",
                    "expected_m2_leading", "mean_m1", "var_m1", "mean_m2", "var_m2",
                    "var_mprime", "var_m1_ratio_prev"});
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const MomentCell& c = cells[i];
      cellcsv.row({CsvWriter::integer(static_cast<std::int64_t>(c.params.n)),
                   CsvWriter::num(c.params.beta), CsvWriter::num(c.params.a),
                   CsvWriter::num(c.params.b), CsvWriter::num(jacobi::scale_n(c.params)),
                   CsvWriter::integer(replicates), CsvWriter::num(c.expected_m1),
                   CsvWriter::num(c.expected_m2_leading), CsvWriter::num(c.mean_m1),
                   CsvWriter::num(c.var_m1), CsvWriter::num(c.mean_m2),
                   CsvWriter::num(c.var_m2), CsvWriter::num(c.var_mprime),
                   i == 0 ? "" : CsvWriter::num(c.var_m1 / cells[i - 1].var_m1)});
    }

    std::size_t tail_rows = 0;
    if (!eps.empty()) {
      CsvWriter tailcsv((fs::path(dir) / "moments_tails.csv").string(), "moments-tails-v1");
      tailcsv.header({"n", "beta", "a", "b", "epsilon", "replicates", "exceed_count", "p_hat",
                      "ci_lo", "ci_hi"});
      for (const MomentCell& c : cells)
        for (std::size_t j = 0; j < eps.size(); ++j) {
          const TailEstimate& e = c.m1_tails[j];
          tailcsv.row({CsvWriter::integer(static_cast<std::int64_t>(c.params.n)),
                       CsvWriter::num(c.params.beta), CsvWriter::num(c.params.a),
                       CsvWriter::num(c.params.b), CsvWriter::num(eps[j]),
                       CsvWriter::integer(e.replicates), CsvWriter::integer(e.exceed_count),
                       CsvWriter::num(e.p_hat), CsvWriter::num(e.ci_lo),
                       CsvWriter::num(e.ci_hi)});
        }
      tail_rows = tailcsv.rows_written();
    }

    nlohmann::json rows_json = {{"moments_cells.csv", cellcsv.rows_written()}};
    if (!eps.empty()) rows_json["moments_tails.csv"] = tail_rows;

    if (cfg.has("mprime.n")) {
      const std::vector<std::int64_t> mp_ns = cfg.get_int_list("mprime.n");
      const double mp_beta = cfg.has("mprime.beta") ? cfg.get_double("mprime.beta") : beta;
      const double mp_a = cfg.get_double("mprime.a");
      const double mp_b = cfg.get_double("mprime.b");
      const std::uint64_t mp_reps =
          cfg.has("mprime.replicates") ? cfg.get_u64("mprime.replicates") : replicates;
      if (mp_reps < 1000) throw ConfigError("mprime.replicates must be at least 1000");
      std::vector<jacobi::Params> mp_grid;
      for (const std::int64_t mn : mp_ns) {
        const jacobi::Params p{mn, mp_beta, mp_a, mp_b};
        jacobi::validate(p);
        mp_grid.push_back(p);
      }
      // separate master seed keeps the mprime streams disjoint from the
      // moment cells above
      const std::uint64_t mp_seed = seed ^ 0x4D50524D45ULL;
      const MPrimeResult mp = mprime_experiment(mp_grid, mp_reps, mp_seed, threads);
      CsvWriter mpcsv((fs::path(dir) / "mprime_cells.csv").string(), "mprime-cells-v1");
      mpcsv.header({"n", "beta", "a", "b", "replicates", "var_mprime"});
      for (const auto& [p, v] : mp.var_mprime)
        mpcsv.row({CsvWriter::integer(static_cast<std::int64_t>(p.n)), CsvWriter::num(p.beta),
                   CsvWriter::num(p.a), CsvWriter::num(p.b), CsvWriter::integer(mp_reps),
                   CsvWriter::num(v)});
      CsvWriter mpfit((fs::path(dir) / "mprime_fit.csv").string(), "mprime-fit-v1");
      mpfit.header({"predictor", "slope", "intercept", "r_squared"});
      mpfit.row({"log(n)", CsvWriter::num(mp.log_var_vs_log_n.slope),
                 CsvWriter::num(mp.log_var_vs_log_n.intercept),
                 CsvWriter::num(mp.log_var_vs_log_n.r_squared)});
      rows_json["mprime_cells.csv"] = mpcsv.rows_written();
      rows_json["mprime_fit.csv"] = mpfit.rows_written();
    }

    cellcsv.close();
    nlohmann::json manifest = base_manifest("moments", cfg.digest(), seed, threads, started);
    manifest["finished_at"] = utc_now_iso8601();
    manifest["rows"] = rows_json;
    write_manifest(dir, manifest);
    return kExitOk;
  } catch (const ConfigError& e) {
    return report_error(e, kExitUsage);
  } catch (const DomainError& e) {
    return report_error(e, kExitUsage);
  } catch (const InsufficientDataError& e) {
    return report_error(e, kExitInsufficientData);
  } catch (const std::exception& e) {
    return report_error(e, kExitUsage);
  }
}

int run_semicircle(std::int64_t n, double beta, double a, double b, std::int64_t draws,
                   const CommonOptions& opts) {
  try {
    if (draws < 0) throw ConfigError("draws must be non-negative");
    const std::string dir = require_out_dir(opts, "");
    const std::uint64_t seed = resolve_seed(opts, std::nullopt);
    const jacobi::Params p{n, beta, a, b};
    jacobi::validate(p);

    const std::string started = utc_now_iso8601();
    Eigen::VectorXd points;
    if (draws == 0) {
      // deterministic mode: the transformed polynomial zeros
      points = jacobi::semicircle_transform(jacobi::polynomial_zeros(p), p);
    } else {
      points.resize(draws * n);
      for (std::int64_t d = 0; d < draws; ++d) {
        const Spectrum s = jacobi::sample_spectrum(p, replicate_stream(seed, 0, d));
        points.segment(d * n, n) = jacobi::semicircle_transform(s, p);
      }
    }
    std::sort(points.data(), points.data() + points.size());
    const double ks = semicircle_distance(points);

    CsvWriter csv((fs::path(dir) / "semicircle.csv").string(), "semicircle-v1");
    csv.header({"x", "empirical_cdf", "semicircle_cdf"});
    const double m = static_cast<double>(points.size());
    for (Eigen::Index i = 0; i < points.size(); ++i)
      csv.row({CsvWriter::num(points[i]), CsvWriter::num(static_cast<double>(i + 1) / m),
               CsvWriter::num(semicircle_cdf(points[i]))});

    csv.close();
    nlohmann::json manifest = base_manifest("semicircle", "", seed, 1, started);
    manifest["finished_at"] = utc_now_iso8601();
    manifest["rows"] = {{"semicircle.csv", csv.rows_written()}};
    manifest["ks_distance"] = ks;
    manifest["draws"] = draws;
    write_manifest(dir, manifest);
    std::cout << "ks_distance " << CsvWriter::num(ks) << "\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    return report_error(e, kExitUsage);
  } catch (const DomainError& e) {
    return report_error(e, kExitUsage);
  } catch (const std::exception& e) {
    return report_error(e, kExitUsage);
  }
}

int run_calibrate_bounds(std::uint64_t draws_per_cell, const CommonOptions& opts) {
  try {
    if (draws_per_cell < 1000) throw ConfigError("calibration needs at least 1000 draws per cell");
    const std::string dir = require_out_dir(opts, "");
    const std::uint64_t seed = resolve_seed(opts, std::nullopt);
    const std::string started = utc_now_iso8601();

    bool ok = true;
    std::uint64_t cell = 0;

    // chi-square family against the Laurent-Massart pair
    const double chi_k[] = {1.0, 4.0, 16.0, 64.0};
    const double chi_x[] = {0.5, 1.0, 2.0, 4.0};
    for (const double k : chi_k)
      for (const double x : chi_x) {
        const auto [threshold, bound] = chi_tail_bound(k, x);
        std::uint64_t exceed = 0;
        RandomStream stream(replicate_stream(seed, cell++, 0));
        for (std::uint64_t r = 0; r < draws_per_cell; ++r) {
          const double v = sample_chi(k, stream).value;
          if (v * v > threshold) ++exceed;
        }
        const double p = static_cast<double>(exceed) / static_cast<double>(draws_per_cell);
        const double slack =
            3.0 * std::sqrt(bound * (1.0 - bound) / static_cast<double>(draws_per_cell));
        if (p > bound + slack) {
          ok = false;
          std::cerr << "chi-square dominance violated at k=" << k << " x=" << x
                    << ": p_hat=" << p << " bound=" << bound << "\n";
        }
      }

    // symmetric-beta family against 4*exp(-c*k*delta^2) with the calibrated
    // c, for the plain deviation |Z - E Z| and the sqrt(1 +- Z) shifts
    const std::pair<double, double> beta_kl[] = {{1, 1},   {2, 1},    {3, 7},
                                                 {5, 5},   {10, 2},   {20, 20},
                                                 {50, 10}, {100, 100}, {1000, 50}};
    const double beta_delta[] = {0.05, 0.1, 0.2, 0.3, 0.5, 1.0};
    double min_headroom_c = std::numeric_limits<double>::infinity();
    for (const auto& [k, l] : beta_kl)
      for (const double delta : beta_delta) {
        const double hi = std::max(k, l), lo = std::min(k, l);
        const double bound = sym_beta_tail_bound(hi, lo, delta);
        const double mean = (l - k) / (k + l);
        std::uint64_t exceed = 0, exceed_sp = 0, exceed_sm = 0;
        RandomStream stream(replicate_stream(seed, cell++, 0));
        for (std::uint64_t r = 0; r < draws_per_cell; ++r) {
          const double z = sample_sym_beta(k, l, stream).value;
          if (std::abs(z - mean) > delta) ++exceed;
          if (std::abs(std::sqrt(1.0 + z) - std::sqrt(1.0 + mean)) > delta) ++exceed_sp;
          if (std::abs(std::sqrt(1.0 - z) - std::sqrt(1.0 - mean)) > delta) ++exceed_sm;
        }
        const double slack =
            3.0 * std::sqrt(bound * (1.0 - bound) / static_cast<double>(draws_per_cell));
        const char* const family[] = {"sym-beta", "sqrt(1+Z) shift", "sqrt(1-Z) shift"};
        const std::uint64_t counts[] = {exceed, exceed_sp, exceed_sm};
        for (int f = 0; f < 3; ++f) {
          const double p = static_cast<double>(counts[f]) / static_cast<double>(draws_per_cell);
          if (p > bound + slack) {
            ok = false;
            std::cerr << family[f] << " dominance violated at k=" << k << " l=" << l
                      << " delta=" << delta << ": p_hat=" << p << " bound=" << bound << "\n";
          }
          if (p > 0.0) {
            const double c_max = -std::log(std::min(1.0, p + slack) / 4.0) / (hi * delta * delta);
            min_headroom_c = std::min(min_headroom_c, c_max);
          }
        }
      }

    if (!ok) {
      std::cerr << "calibration failed: recorded constants do not dominate the grid\n";
      return kExitInsufficientData;
    }

    const fs::path fixture = fs::path(dir) / "bound_constants.txt";
    {
      std::ofstream out(fixture, std::ios::binary);
      if (!out) throw ConfigError("cannot write fixture: " + fixture.string());
      out << "# schema bound-constants-v1\n";
      out << "# bound family -> constant; chi_square uses the constant-free\n";
      out << "# Laurent-Massart pair, sym_beta the constant of 4*exp(-c*k*delta^2).\n";
      out << "# Regenerate with: rmt calibrate-bounds --out <dir>\n";
      out << "chi_square = laurent_massart\n";
      out << "sym_beta = " << CsvWriter::num(kSymBetaBoundConstant) << "\n";
    }
    std::cout << "dominance holds on the calibration grid; smallest admissible sym-beta "
                 "constant observed "
              << CsvWriter::num(min_headroom_c) << " (recorded "
              << CsvWriter::num(kSymBetaBoundConstant) << ")\n";
    std::cout << "wrote " << fixture.string() << "\n";
    (void)started;
    return kExitOk;
  } catch (const ConfigError& e) {
    return report_error(e, kExitUsage);
  } catch (const DomainError& e) {
    return report_error(e, kExitUsage);
  } catch (const std::exception& e) {
    return report_error(e, kExitUsage);
  }
}

}  // namespace rmt::cli
