#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "singpd/model.hpp"

namespace singpd {

/// The chain of AI dividend shares reachable through repeated non-extinction
/// singularities: theta_{k+1} = theta_k + delta_theta*(1-theta_k), so the
/// remaining gap 1-theta shrinks by the factor 1-delta_theta per jump.
struct ThetaChain {
  std::vector<double> thetas;  ///< strictly increasing; size = transitions + 1
  double terminal_gap;         ///< 1 - thetas.back()
};

/// Shortest chain whose terminal gap falls at or below epsilon. The number
/// of transitions is ceil(log(eps/(1-theta0)) / log(1-delta_theta)); an
/// epsilon at or above 1-theta0 yields the single-state chain {theta0}.
///
/// Throws std::domain_error when delta_theta is zero (the chain never moves
/// and the stationary closed form is already exact), std::invalid_argument
/// for arguments outside their domain.
ThetaChain build_theta_chain(double theta0, double delta_theta, double epsilon);

/// Backward-recursion solution for the AI price-dividend ratio.
///
/// State k carries the P/D value v_k that prevails once k singularities have
/// occurred. Seeding v_K with the closed form at theta_K (whose error
/// vanishes as theta -> 1), each step solves the Euler equation
///
///   v_k = [A_no + A_sing(theta_k)*(v_{k+1}+1)] / (1 - A_no)
///
/// with A_no = beta*(1+g)^(1-gamma)*(1-p) and A_sing(theta) the singularity
/// term of the existence factor evaluated at Gamma^AI(theta).
///
/// Divergence is reported in-band: `diverged_at` is 0 when the
/// no-singularity sum alone diverges (A_no >= 1) and the terminal index when
/// the terminal closed form diverges; `pd_initial` is +infinity then.
struct RecursionResult {
  std::vector<double> pd_by_state;  ///< v_k per chain state; empty if divergent
  double pd_initial;                ///< v_0, the quoted value
  bool finite;
  std::optional<std::size_t> diverged_at;
};

RecursionResult exact_pd_ai(const ModelParams& params, double epsilon = 1e-10);

/// pd_initial of exact_pd_ai without materializing the per-state path;
/// +infinity when divergent. Intended for parameter sweeps.
double exact_pd_ai_value(const ModelParams& params, double epsilon = 1e-10);

/// One grid cell: exact-recursion AI quote, closed-form non-AI quote (exact
/// for non-AI), and their ratio when both are finite.
struct Table1Row {
  double p;
  double xi;
  PDQuote ai;
  PDQuote non_ai;
  std::optional<double> ratio;
};

/// Evaluates the grid in row-major (p outer, xi inner) order. Divergence
/// flags propagate per row; no error is raised for divergent cells.
std::vector<Table1Row> table1_grid(const ModelParams& base,
                                   std::span<const double> p_list,
                                   std::span<const double> xi_list,
                                   double epsilon = 1e-10);

/// The reference grid axes.
inline constexpr std::array<double, 5> kDefaultPGrid{0.001, 0.002, 0.005, 0.008, 0.010};
inline constexpr std::array<double, 4> kDefaultXiGrid{0.0, 0.05, 0.10, 0.20};

}  // namespace singpd
