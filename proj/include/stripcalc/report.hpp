#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "stripcalc/verifier.hpp"

namespace stripcalc {

using nlohmann::json;

/// git-style content hash: SHA-1 of "blob <len>\0<bytes>".
std::string content_hash(const std::string& bytes);

/// Locale-independent float formatting ('.' decimal, round-trip precision).
std::string format_double(double v);

/// CSV writer: '.' decimal separator, deterministic row order, no locale.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);
  void add_row(const std::vector<std::string>& cells);
  void add_row(const std::vector<double>& cells);
  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

json to_json(const AssumptionParams& p);
json to_json(const VerificationReport& rep);

/// GridFunction CSV interchange (columns x, re, im).
void write_grid_function(const GridFunction& f, const std::string& path);
GridFunction read_grid_function(const std::string& path);

void write_text_file(const std::string& path, const std::string& body);
std::string read_text_file(const std::string& path);

}  // namespace stripcalc
