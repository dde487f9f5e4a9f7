#include "cli/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "gispec/version.hpp"
#include "json.hpp"

namespace gispec::cli {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::string schema, std::vector<std::string> columns)
    : n_cols_(columns.size()) {
  text_ = "# schema: " + schema + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    text_ += columns[i];
    text_ += (i + 1 < columns.size()) ? ',' : '\n';
  }
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != n_cols_) throw std::invalid_argument("CsvWriter: column count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    text_ += format_double(values[i]);
    text_ += (i + 1 < values.size()) ? ',' : '\n';
  }
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
  if (values.size() != n_cols_) throw std::invalid_argument("CsvWriter: column count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    text_ += values[i];
    text_ += (i + 1 < values.size()) ? ',' : '\n';
  }
}

void CsvWriter::write(const std::string& path) const { write_text_file(path, text_); }

std::string manifest_json(const Manifest& m) {
  nlohmann::json doc;
  doc["schema"] = "gi-spec/manifest/v1";
  doc["tool"] = "gi-spec";
  doc["version"] = kVersion;
  doc["command"] = m.command;
  doc["seed"] = m.seed;
  nlohmann::json cfg = nlohmann::json::object();
  for (const auto& [k, v] : m.config) cfg[k] = v;
  doc["config"] = cfg;
  doc["outputs"] = m.outputs;
  return doc.dump(2) + "\n";
}

void write_manifest(const Manifest& m, const std::string& primary_output_path) {
  write_text_file(primary_output_path + ".manifest.json", manifest_json(m));
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gispec::cli
