#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace rmt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;           // invalid parameters, config, or paths
inline constexpr int kExitInsufficientData = 3;  // too few usable cells for a fit
inline constexpr const char* kToolVersion = "0.1.0";

struct CommonOptions {
  std::optional<std::uint64_t> seed;  // --seed; overrides config and RMT_SEED
  std::optional<std::string> out_dir;  // --out; overrides config
  std::optional<int> threads;          // --threads; 0 or absent = all cores
};

// Seed precedence: --seed, then the config's master_seed, then RMT_SEED,
// then 0.
std::uint64_t resolve_seed(const CommonOptions& opts,
                           std::optional<std::uint64_t> config_seed);
int resolve_threads(const CommonOptions& opts, std::optional<int> config_threads);

int run_zeros(const std::string& ensemble, std::int64_t n, double beta,
              std::optional<double> alpha, std::optional<double> a,
              std::optional<double> b, const CommonOptions& opts);
int run_concentration(const std::string& config_path, const CommonOptions& opts);
int run_moments(const std::string& config_path, const CommonOptions& opts);
int run_semicircle(std::int64_t n, double beta, double a, double b, std::int64_t draws,
                   const CommonOptions& opts);
int run_calibrate_bounds(std::uint64_t draws_per_cell, const CommonOptions& opts);

}  // namespace rmt::cli
