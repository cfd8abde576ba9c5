#include "csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace rmt::cli {

CsvWriter::CsvWriter(const std::string& path, const std::string& schema_token)
    : out_(path, std::ios::binary), path_(path) {
  if (!out_) throw std::runtime_error("cannot open output file: " + path);
  out_ << "# schema " << schema_token << "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  columns_ = columns.size();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << columns[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (columns_ != 0 && fields.size() != columns_)
    throw std::logic_error("csv row width does not match header: " + path_);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << fields[i];
  }
  out_ << '\n';
  ++rows_;
}

void CsvWriter::close() {
  if (out_.is_open()) out_.close();
}

std::string CsvWriter::num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string CsvWriter::integer(std::uint64_t v) {
  return std::to_string(v);
}

std::string CsvWriter::integer(std::int64_t v) {
  return std::to_string(v);
}

}  // namespace rmt::cli
