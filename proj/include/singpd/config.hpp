#pragma once

#include <filesystem>
#include <string>

#include "singpd/mc_oracle.hpp"
#include "singpd/model.hpp"
#include "singpd/transfers.hpp"
#include "singpd/veto.hpp"

namespace singpd {

enum class OutputFormat { Csv, Markdown };

/// One run's worth of configuration. Each analysis block starts from its own
/// defaults; config keys override the shared model fields across all blocks
/// at once (setting `gamma` changes it everywhere), while block-specific
/// keys (alpha, q, kappa, tau, delta, seed, n_paths, horizon) touch only
/// their block.
struct RunConfig {
  ModelParams model;
  VetoParams veto;
  TransferParams transfer;
  PathConfig mc;
  std::filesystem::path output_dir = "out";
  OutputFormat format = OutputFormat::Csv;
};

/// Applies one `key = value` assignment. Throws std::runtime_error for
/// unknown keys or unparseable values.
void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

/// Flat key-value text: one `key = value` per line, `#` starts a comment,
/// blank lines ignored. All blocks are validated after the last assignment.
RunConfig parse_config_text(const std::string& text);

RunConfig load_config(const std::filesystem::path& path);

}  // namespace singpd
