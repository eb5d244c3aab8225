#pragma once

#include <cstdint>
#include <vector>

#include "singpd/model.hpp"

namespace singpd {

/// Configuration of the Monte Carlo pricing check.
///
/// Every path draws from its own RNG stream keyed by (seed, path index), so
/// results are byte-identical across runs and independent of evaluation
/// order.
struct PathConfig {
  std::uint64_t seed = 42;
  std::int64_t n_paths = 100000;
  std::int64_t horizon = 400;  ///< periods per path
  ModelParams params;

  void validate() const;
};

/// One simulated period. Growth factors are multiplicative on the previous
/// level: household consumption, AI dividends, and non-AI dividends each grow
/// by their factor. An extinction step carries zero factors and ends the
/// path.
struct PathStep {
  bool singularity;
  bool extinct;
  double household_growth;
  double dividend_growth_ai;
  double dividend_growth_n;
};

/// Per-period records for one path; shorter than the horizon only when the
/// path hits extinction. Deterministic in (cfg.seed, path_index).
std::vector<PathStep> simulate_path(const PathConfig& cfg, std::int64_t path_index);

struct MCPrice {
  AssetKind asset;
  double mean_pd;
  double std_error;
  std::int64_t n_effective;
};

/// Analytic bound on the expected mass of the discounted dividend sum beyond
/// the horizon, relative to the scale of the price:
/// A^horizon / (1 - A) with A the asset's existence factor at the initial
/// share (the largest factor along the share chain). +infinity when A >= 1.
double truncation_tail(const PathConfig& cfg, AssetKind asset);

/// Smallest horizon whose truncation_tail is at or below tail_rel_bound.
std::int64_t min_horizon(const ModelParams& params, AssetKind asset, double tail_rel_bound);

/// Simulated mean of the truncated discounted dividend sum
/// sum_t beta^t (c_t/c_0)^(-gamma) D_t/D_0 across paths, with its standard
/// error. Aggregation is sequential in path-index order, so the result does
/// not depend on how paths are scheduled. Throws std::domain_error when the
/// horizon's truncation tail exceeds tail_rel_bound.
MCPrice mc_price(const PathConfig& cfg, AssetKind asset, double tail_rel_bound = 1e-3);

}  // namespace singpd
