#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmt::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Key/value experiment configuration with [section] scoping.  Keys are
// addressed as "section.key"; list values are whitespace-separated.  The
// digest is FNV-1a over the raw file bytes, so the manifest pins the exact
// configuration text that produced a run.
class Config {
 public:
  static Config load(const std::string& path);
  static Config parse(const std::string& text, const std::string& origin);

  const std::string& digest() const { return digest_; }
  const std::string& origin() const { return origin_; }

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<std::int64_t> get_int_list(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
  std::string digest_;
  std::string origin_;
};

std::string fnv1a64_hex(const std::string& bytes);

}  // namespace rmt::cli
