#include "config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rmt::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

Config Config::parse(const std::string& text, const std::string& origin) {
  Config cfg;
  cfg.digest_ = fnv1a64_hex(text);
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    const std::string full = section.empty() ? key : section + "." + key;
    if (cfg.values_.count(full))
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + full + "'");
    cfg.values_[full] = value;
  }
  return cfg;
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError(origin_ + ": missing required key '" + key + "'");
  return it->second;
}

std::string Config::get_string_or(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key) const {
  const std::string raw = get_string(key);
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(raw.c_str(), &end);
  if (errno != 0 || end == raw.c_str() || *end != '\0')
    throw ConfigError(origin_ + ": key '" + key + "' is not a number: '" + raw + "'");
  return v;
}

std::int64_t Config::get_int(const std::string& key) const {
  const std::string raw = get_string(key);
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(raw.c_str(), &end, 10);
  if (errno != 0 || end == raw.c_str() || *end != '\0')
    throw ConfigError(origin_ + ": key '" + key + "' is not an integer: '" + raw + "'");
  return v;
}

std::uint64_t Config::get_u64(const std::string& key) const {
  const std::string raw = get_string(key);
  if (!raw.empty() && raw.front() == '-')
    throw ConfigError(origin_ + ": key '" + key + "' must be non-negative: '" + raw + "'");
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw.c_str(), &end, 10);
  if (errno != 0 || end == raw.c_str() || *end != '\0')
    throw ConfigError(origin_ + ": key '" + key + "' is not an unsigned integer: '" + raw + "'");
  return v;
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  const auto tokens = split_ws(get_string(key));
  if (tokens.empty()) throw ConfigError(origin_ + ": key '" + key + "' has an empty list");
  std::vector<double> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (errno != 0 || end == tok.c_str() || *end != '\0')
      throw ConfigError(origin_ + ": key '" + key + "' has a non-numeric entry: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> Config::get_int_list(const std::string& key) const {
  const auto tokens = split_ws(get_string(key));
  if (tokens.empty()) throw ConfigError(origin_ + ": key '" + key + "' has an empty list");
  std::vector<std::int64_t> out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (errno != 0 || end == tok.c_str() || *end != '\0')
      throw ConfigError(origin_ + ": key '" + key + "' has a non-integer entry: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace rmt::cli
