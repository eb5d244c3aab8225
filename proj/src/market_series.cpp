#include "singpd/market_series.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace singpd {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line,
                             const std::string& message) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + message);
}

double parse_positive(const std::filesystem::path& path, std::size_t line,
                      const std::string& text, const char* what) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    parse_fail(path, line, std::string("cannot parse ") + what + " '" + text + "'");
  if (!(value > 0.0))
    parse_fail(path, line, std::string(what) + " must be positive, got " + text);
  return value;
}

// Reads non-empty lines, tolerating trailing '\r' from CRLF files.
std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void expect_header(const std::filesystem::path& path,
                   const std::vector<std::string>& lines, const std::string& expected) {
  if (lines.empty() || trim(lines.front()) != expected)
    parse_fail(path, 1, "expected header '" + expected + "'");
}

YearMonth parse_month_at(const std::filesystem::path& path, std::size_t line,
                         const std::string& text) {
  try {
    return parse_month(text);
  } catch (const std::exception& e) {
    parse_fail(path, line, e.what());
  }
}

void check_increasing(const std::filesystem::path& path, std::size_t line,
                      YearMonth prev, YearMonth cur) {
  if (!(prev < cur))
    parse_fail(path, line, "dates must be strictly increasing (" + to_string(prev) +
                               " then " + to_string(cur) + ")");
}

}  // namespace

YearMonth parse_month(const std::string& text) {
  const std::string t = trim(text);
  YearMonth ym;
  bool ok = t.size() == 7 && t[4] == '-';
  if (ok) {
    const auto year_result = std::from_chars(t.data(), t.data() + 4, ym.year);
    const auto month_result = std::from_chars(t.data() + 5, t.data() + 7, ym.month);
    ok = year_result.ec == std::errc{} && year_result.ptr == t.data() + 4 &&
         month_result.ec == std::errc{} && month_result.ptr == t.data() + 7 &&
         ym.month >= 1 && ym.month <= 12;
  }
  if (!ok) throw std::runtime_error("invalid month '" + text + "' (expected YYYY-MM)");
  return ym;
}

std::string to_string(YearMonth ym) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%04d-%02d", ym.year, ym.month);
  return buf;
}

YearMonth next_month(YearMonth ym) {
  if (ym.month == 12) return {ym.year + 1, 1};
  return {ym.year, ym.month + 1};
}

ShillerSeries load_shiller_csv(const std::filesystem::path& path) {
  const auto lines = read_lines(path);
  expect_header(path, lines, "month,price,dividend");
  ShillerSeries s;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 3)
      parse_fail(path, i + 1, "expected 3 fields, got " + std::to_string(fields.size()));
    const YearMonth ym = parse_month_at(path, i + 1, fields[0]);
    if (!s.months.empty()) check_increasing(path, i + 1, s.months.back(), ym);
    s.months.push_back(ym);
    s.price.push_back(parse_positive(path, i + 1, fields[1], "price"));
    s.dividend.push_back(parse_positive(path, i + 1, fields[2], "dividend"));
  }
  return s;
}

MarketSeries load_index_csv(const std::filesystem::path& path, const std::string& label) {
  const auto lines = read_lines(path);
  expect_header(path, lines, "month,close");
  MarketSeries series;
  series.label = label;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 2)
      parse_fail(path, i + 1, "expected 2 fields, got " + std::to_string(fields.size()));
    const YearMonth ym = parse_month_at(path, i + 1, fields[0]);
    if (!series.observations.empty())
      check_increasing(path, i + 1, series.observations.back().first, ym);
    series.observations.emplace_back(ym, parse_positive(path, i + 1, fields[1], "close"));
  }
  return series;
}

MarketSeries trailing_pd_series(const ShillerSeries& s) {
  constexpr std::size_t kWindow = 12;
  if (s.months.size() < kWindow)
    throw std::runtime_error("trailing P/D needs at least 12 monthly observations, got " +
                             std::to_string(s.months.size()));
  for (std::size_t i = 1; i < s.months.size(); ++i) {
    if (s.months[i] != next_month(s.months[i - 1]))
      throw std::runtime_error("months must be consecutive; gap after " +
                               to_string(s.months[i - 1]));
  }
  MarketSeries out;
  out.label = "pd";
  double window_sum = 0.0;
  for (std::size_t i = 0; i < s.months.size(); ++i) {
    window_sum += s.dividend[i];
    if (i >= kWindow) window_sum -= s.dividend[i - kWindow];
    if (i + 1 >= kWindow) out.observations.emplace_back(s.months[i], s.price[i] / window_sum);
  }
  return out;
}

MarketSeries rebased_ratio_series(const MarketSeries& numerator,
                                  const MarketSeries& denominator, YearMonth rebase) {
  std::map<YearMonth, double> den;
  for (const auto& [ym, v] : denominator.observations) den.emplace(ym, v);

  const auto base_num = std::find_if(
      numerator.observations.begin(), numerator.observations.end(),
      [&](const auto& obs) { return obs.first == rebase; });
  const auto base_den = den.find(rebase);
  if (base_num == numerator.observations.end() || base_den == den.end()) {
    throw std::runtime_error("rebase month " + to_string(rebase) + " missing from " +
                             (base_num == numerator.observations.end()
                                  ? numerator.label
                                  : denominator.label) +
                             " series");
  }
  const double base_ratio = base_num->second / base_den->second;

  MarketSeries out;
  out.label = "ratio_rebased";
  for (const auto& [ym, v] : numerator.observations) {
    const auto it = den.find(ym);
    if (it == den.end()) continue;
    out.observations.emplace_back(ym, (v / it->second) / base_ratio * 100.0);
  }
  return out;
}

}  // namespace singpd
