#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "singpd/config.hpp"
#include "singpd/market_series.hpp"

namespace singpd::cli {

/// Every command writes into cfg.output_dir (created on demand) and returns
/// the paths it wrote.

struct Table1Options {
  std::vector<double> p_list;   ///< empty: reference grid
  std::vector<double> xi_list;  ///< empty: reference grid
};

/// Rounded grid table (csv or markdown per cfg.format) plus an unrounded CSV
/// companion.
std::vector<std::filesystem::path> cmd_table1(const RunConfig& cfg,
                                              const Table1Options& opts = {});

struct VetoOptions {
  bool gamma_scan = false;
  double gamma_lo = 1.5;
  double gamma_hi = 20.0;
  double tol = 1e-6;
};

std::filesystem::path cmd_veto(const RunConfig& cfg, const VetoOptions& opts = {});

struct TransferOptions {
  double tau_max = 0.5;
  double tau_step = 0.01;
};

std::vector<std::filesystem::path> cmd_transfers(const RunConfig& cfg,
                                                 const TransferOptions& opts = {});

struct McCheckOptions {
  std::vector<double> p_list;            ///< empty: reference grid
  std::vector<double> xi_list;           ///< empty: reference grid
  std::optional<std::int64_t> horizon;   ///< empty: per-cell tail-bounded horizon
  double tail_rel_bound = 1e-4;
};

std::filesystem::path cmd_mc_check(const RunConfig& cfg, const McCheckOptions& opts = {});

struct Figure1Options {
  std::filesystem::path shiller_csv;
  std::filesystem::path nasdaq_csv;
  std::filesystem::path spx_csv;
  YearMonth rebase{2015, 1};
};

std::vector<std::filesystem::path> cmd_figure1(const RunConfig& cfg,
                                               const Figure1Options& opts);

}  // namespace singpd::cli
