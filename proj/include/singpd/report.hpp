#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace singpd {

/// Display rounding: half away from zero, one decimal.
double round1(double x);

/// "15.5" style fixed one-decimal rendering of round1(x).
std::string format_fixed1(double x);

/// Shortest decimal string that parses back to exactly x.
std::string format_full(double x);

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const TextTable& table);
std::string render_markdown(const TextTable& table);

/// Splits CSV text back into a table (no quoting; fields never contain
/// commas in this project's schemas).
TextTable parse_csv_text(const std::string& text);

/// Throws std::runtime_error with the path on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace singpd
