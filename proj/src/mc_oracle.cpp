#include "singpd/mc_oracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace singpd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t path_stream_seed(std::uint64_t seed, std::int64_t path_index) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(path_index)));
}

// Uniform in [0,1) straight from the engine's bits; distribution classes are
// not bit-portable across standard libraries.
double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Single definition of the per-period dynamics so the inspectable records
// and the pricing accumulation can never drift apart.
template <typename OnStep>
void walk_path(const PathConfig& cfg, std::int64_t path_index, OnStep&& on_step) {
  const ModelParams& m = cfg.params;
  std::mt19937_64 engine(path_stream_seed(cfg.seed, path_index));
  const double growth = 1.0 + m.g;
  const double jump = 1.0 + m.eta;
  double theta = m.theta;
  for (std::int64_t t = 0; t < cfg.horizon; ++t) {
    if (uniform01(engine) < m.p) {
      if (uniform01(engine) < m.xi) {
        on_step(PathStep{true, true, 0.0, 0.0, 0.0});
        return;
      }
      const double gamma_ai = (theta + m.delta_theta * (1.0 - theta)) / theta * jump;
      const double gamma_n = (1.0 - m.delta_theta) * jump;
      on_step(PathStep{true, false, m.phi * growth * jump, gamma_ai * growth,
                       gamma_n * growth});
      theta += m.delta_theta * (1.0 - theta);
    } else {
      on_step(PathStep{false, false, growth, growth, growth});
    }
  }
}

}  // namespace

void PathConfig::validate() const {
  params.validate();
  if (n_paths < 1)
    throw std::invalid_argument("n_paths must be at least 1, got " + std::to_string(n_paths));
  if (horizon < 1)
    throw std::invalid_argument("horizon must be at least 1, got " + std::to_string(horizon));
}

std::vector<PathStep> simulate_path(const PathConfig& cfg, std::int64_t path_index) {
  cfg.validate();
  if (path_index < 0 || path_index >= cfg.n_paths)
    throw std::invalid_argument("path_index out of range");
  std::vector<PathStep> steps;
  steps.reserve(static_cast<std::size_t>(cfg.horizon));
  walk_path(cfg, path_index, [&](const PathStep& s) { steps.push_back(s); });
  return steps;
}

double truncation_tail(const PathConfig& cfg, AssetKind asset) {
  cfg.validate();
  const double a = existence_factor(cfg.params, asset);
  if (a >= 1.0) return std::numeric_limits<double>::infinity();
  return std::pow(a, static_cast<double>(cfg.horizon)) / (1.0 - a);
}

std::int64_t min_horizon(const ModelParams& params, AssetKind asset,
                         double tail_rel_bound) {
  params.validate();
  if (!(tail_rel_bound > 0.0))
    throw std::invalid_argument("tail_rel_bound must be positive");
  const double a = existence_factor(params, asset);
  if (a >= 1.0)
    throw std::domain_error("no horizon bounds the tail: existence factor " +
                            std::to_string(a) + " >= 1");
  const double t = std::ceil(std::log(tail_rel_bound * (1.0 - a)) / std::log(a));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(t));
}

MCPrice mc_price(const PathConfig& cfg, AssetKind asset, double tail_rel_bound) {
  cfg.validate();
  const double tail = truncation_tail(cfg, asset);
  if (!(tail < tail_rel_bound)) {
    throw std::domain_error("horizon too short: truncation tail " +
                            std::to_string(tail) + " exceeds bound " +
                            std::to_string(tail_rel_bound));
  }

  const ModelParams& m = cfg.params;
  // Per-period multipliers of beta^t * (c_t/c_0)^(-gamma).
  const double sdf_quiet = m.beta * std::pow(1.0 + m.g, -m.gamma);
  const double sdf_jump =
      m.beta * std::pow(m.phi * (1.0 + m.g) * (1.0 + m.eta), -m.gamma);

  double mean = 0.0;
  double m2 = 0.0;
  std::int64_t n = 0;
  for (std::int64_t i = 0; i < cfg.n_paths; ++i) {
    double sdf = 1.0;
    double dividend = 1.0;
    double discounted_sum = 0.0;
    walk_path(cfg, i, [&](const PathStep& s) {
      if (s.extinct) {
        dividend = 0.0;
        return;
      }
      sdf *= s.singularity ? sdf_jump : sdf_quiet;
      dividend *= asset == AssetKind::AI ? s.dividend_growth_ai : s.dividend_growth_n;
      discounted_sum += sdf * dividend;
    });

    ++n;
    const double delta = discounted_sum - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (discounted_sum - mean);
  }

  const double variance = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  const double std_error = std::sqrt(variance / static_cast<double>(n));
  return {asset, mean, std_error, n};
}

}  // namespace singpd
