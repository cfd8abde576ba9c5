#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace rmt::cli {

// CSV emitter with a versioned schema comment line and fixed
// 17-significant-digit floats, so identical runs produce identical bytes.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& schema_token);

  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& fields);
  /// Flushes and closes the file; call before emitting the run manifest.
  void close();
  std::size_t rows_written() const { return rows_; }
  const std::string& path() const { return path_; }

  static std::string num(double v);
  static std::string integer(std::uint64_t v);
  static std::string integer(std::int64_t v);

 private:
  std::ofstream out_;
  std::string path_;
  std::size_t columns_ = 0;
  std::size_t rows_ = 0;
};

}  // namespace rmt::cli
