#include "manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace rmt::cli {

std::string utc_now_iso8601() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const std::string& dir, const nlohmann::json& manifest) {
  namespace fs = std::filesystem;
  const fs::path target = fs::path(dir) / "manifest.json";
  const fs::path tmp = fs::path(dir) / "manifest.json.tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open manifest file: " + tmp.string());
    out << manifest.dump(2) << "\n";
  }
  fs::rename(tmp, target);
}

}  // namespace rmt::cli
