// Command-line driver for the beta-ensemble sampling and concentration
// experiment library.  Subcommands: zeros, concentration, moments,
// semicircle, calibrate-bounds.

#include <CLI11.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"beta-Laguerre / beta-Jacobi tridiagonal ensembles: polynomial zeros, "
               "Monte Carlo concentration experiments, moment scaling"};
  app.set_version_flag("--version", std::string("rmt ") + rmt::cli::kToolVersion);
  app.require_subcommand(1);

  struct SubOpts {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> threads;
  };
  const auto add_common = [](CLI::App* sub, SubOpts& o) {
    sub->add_option("--seed", o.seed, "master seed (overrides config and RMT_SEED)");
    sub->add_option("--out", o.out, "output directory (must exist)");
    sub->add_option("--threads", o.threads, "worker threads; 0 = all cores (results do not depend on this)");
  };
  const auto common = [](const SubOpts& o) {
    return rmt::cli::CommonOptions{o.seed, o.out, o.threads};
  };

  // zeros
  auto* zeros = app.add_subcommand("zeros", "orthogonal polynomial zeros of an ensemble");
  std::string z_ensemble;
  std::int64_t z_n = 1;
  double z_beta = 1.0;
  std::optional<double> z_alpha, z_a, z_b;
  SubOpts z_opts;
  zeros->add_option("--ensemble", z_ensemble, "laguerre or jacobi")->required();
  zeros->add_option("--n", z_n, "matrix order")->required();
  zeros->add_option("--beta", z_beta, "Dyson index")->required();
  zeros->add_option("--alpha", z_alpha, "Laguerre alpha");
  zeros->add_option("--a", z_a, "Jacobi a");
  zeros->add_option("--b", z_b, "Jacobi b");
  add_common(zeros, z_opts);

  // concentration
  auto* conc = app.add_subcommand("concentration", "tail-probability experiment from a config file");
  std::string c_config;
  SubOpts c_opts;
  conc->add_option("--config", c_config, "experiment config file")->required();
  add_common(conc, c_opts);

  // moments
  auto* mom = app.add_subcommand("moments", "Jacobi moment-concentration experiment from a config file");
  std::string m_config;
  SubOpts m_opts;
  mom->add_option("--config", m_config, "experiment config file")->required();
  add_common(mom, m_opts);

  // semicircle
  auto* semi = app.add_subcommand("semicircle", "semicircle-law distance of transformed Jacobi spectra");
  std::int64_t s_n = 1, s_draws = 0;
  double s_beta = 1.0, s_a = 1.0, s_b = 1.0;
  SubOpts s_opts;
  semi->add_option("--n", s_n, "matrix order")->required();
  semi->add_option("--beta", s_beta, "Dyson index")->required();
  semi->add_option("--a", s_a, "Jacobi a")->required();
  semi->add_option("--b", s_b, "Jacobi b")->required();
  semi->add_option("--draws", s_draws, "sampled spectra to pool; 0 = use polynomial zeros");
  add_common(semi, s_opts);

  // calibrate-bounds
  auto* cal = app.add_subcommand("calibrate-bounds", "re-verify tail-bound constants and rewrite the fixture");
  std::uint64_t cal_draws = 1000000;
  SubOpts cal_opts;
  cal->add_option("--draws", cal_draws, "Monte Carlo draws per grid cell");
  add_common(cal, cal_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // CLI11 returns 0 for --help/--version; anything else is a usage error
    return code == 0 ? 0 : rmt::cli::kExitUsage;
  }

  if (zeros->parsed())
    return rmt::cli::run_zeros(z_ensemble, z_n, z_beta, z_alpha, z_a, z_b, common(z_opts));
  if (conc->parsed()) return rmt::cli::run_concentration(c_config, common(c_opts));
  if (mom->parsed()) return rmt::cli::run_moments(m_config, common(m_opts));
  if (semi->parsed())
    return rmt::cli::run_semicircle(s_n, s_beta, s_a, s_b, s_draws, common(s_opts));
  if (cal->parsed()) return rmt::cli::run_calibrate_bounds(cal_draws, common(cal_opts));
  return rmt::cli::kExitUsage;
}
