#include "rgp/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rgp {

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(columns.size()) {
  if (columns.empty()) throw std::invalid_argument("CsvWriter: no columns");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) buffer_ += ',';
    buffer_ += columns[i];
  }
  buffer_ += '\n';
}

void CsvWriter::begin_row() {
  if (row_open_ && cell_in_row_ != columns_)
    throw std::logic_error("CsvWriter: row ended with wrong cell count");
  row_open_ = true;
  cell_in_row_ = 0;
}

void CsvWriter::separator() {
  if (!row_open_) throw std::logic_error("CsvWriter: cell outside a row");
  if (cell_in_row_ > 0) buffer_ += ',';
  ++cell_in_row_;
  if (cell_in_row_ > columns_) throw std::logic_error("CsvWriter: too many cells in a row");
  if (cell_in_row_ == columns_) {
    // closed after the caller appends this cell's text
  }
}

void CsvWriter::add(double value) {
  separator();
  buffer_ += format_double(value);
  if (cell_in_row_ == columns_) buffer_ += '\n';
}

void CsvWriter::add(long long value) {
  separator();
  char tmp[32];
  std::snprintf(tmp, sizeof(tmp), "%lld", value);
  buffer_ += tmp;
  if (cell_in_row_ == columns_) buffer_ += '\n';
}

void CsvWriter::add(std::uint64_t value) {
  separator();
  char tmp[32];
  std::snprintf(tmp, sizeof(tmp), "%llu", static_cast<unsigned long long>(value));
  buffer_ += tmp;
  if (cell_in_row_ == columns_) buffer_ += '\n';
}

void CsvWriter::add(const std::string& value) {
  separator();
  buffer_ += value;
  if (cell_in_row_ == columns_) buffer_ += '\n';
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char tmp[40];
  std::snprintf(tmp, sizeof(tmp), "%.17g", value);
  return tmp;
}

std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char tmp[24];
  std::snprintf(tmp, sizeof(tmp), "%016llx", static_cast<unsigned long long>(h));
  return tmp;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rgp
