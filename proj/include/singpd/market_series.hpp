#pragma once

#include <compare>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace singpd {

/// Calendar month, parsed from and rendered as "YYYY-MM".
struct YearMonth {
  int year = 0;
  int month = 0;  // 1..12
  friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

YearMonth parse_month(const std::string& text);
std::string to_string(YearMonth ym);
YearMonth next_month(YearMonth ym);

/// A labelled monthly series with strictly increasing dates.
struct MarketSeries {
  std::string label;
  std::vector<std::pair<YearMonth, double>> observations;
};

/// Columns of a price-and-dividend file (header `month,price,dividend`).
struct ShillerSeries {
  std::vector<YearMonth> months;
  std::vector<double> price;
  std::vector<double> dividend;
};

/// Parse errors carry the file path and 1-based line number.
ShillerSeries load_shiller_csv(const std::filesystem::path& path);

/// Index file with header `month,close`.
MarketSeries load_index_csv(const std::filesystem::path& path, const std::string& label);

/// Monthly price divided by the trailing 12-month dividend sum; the series
/// starts at the 12th observation. Months must be consecutive.
MarketSeries trailing_pd_series(const ShillerSeries& s);

/// numerator/denominator joined on common months, rebased so the rebase
/// month equals 100. Throws when the rebase month is missing from either
/// series.
MarketSeries rebased_ratio_series(const MarketSeries& numerator,
                                  const MarketSeries& denominator,
                                  YearMonth rebase);

}  // namespace singpd
