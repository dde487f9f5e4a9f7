#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gispec::cli {

/// 17 significant digits, '.' decimal separator, locale independent.
std::string format_double(double v);

/// CSV with a schema-versioned comment line, then the column header.
class CsvWriter {
 public:
  CsvWriter(std::string schema, std::vector<std::string> columns);
  void row(const std::vector<double>& values);
  void row_mixed(const std::vector<std::string>& values);
  const std::string& text() const { return text_; }
  void write(const std::string& path) const;

 private:
  std::string text_;
  std::size_t n_cols_;
};

/// Run manifest written alongside every output; reruns with an identical
/// manifest are byte-identical, so no timestamps or host data go in.
struct Manifest {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> config;  // resolved flags
  std::vector<std::string> outputs;
};

std::string manifest_json(const Manifest& m);
void write_manifest(const Manifest& m, const std::string& primary_output_path);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace gispec::cli
