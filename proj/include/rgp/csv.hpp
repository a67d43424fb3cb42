#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rgp {

/// Deterministic CSV assembly: header row plus typed cells, '.' decimal
/// separator, doubles in round-trip %.17g form.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);

  void begin_row();
  void add(double value);
  void add(long long value);
  void add(int value) { add(static_cast<long long>(value)); }
  void add(std::uint64_t value);
  void add(const std::string& value);

  const std::string& str() const { return buffer_; }

 private:
  void separator();
  std::size_t columns_;
  std::size_t cell_in_row_ = 0;
  bool row_open_ = false;
  std::string buffer_;
};

std::string format_double(double value);

/// FNV-1a 64-bit content hash, hex encoded.
std::string content_hash(const std::string& bytes);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace rgp
