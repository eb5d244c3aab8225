#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singpd/exact_pricer.hpp"
#include "singpd/model.hpp"

namespace singpd {

/// Post-singularity tax-and-transfer policy: a tax at rate tau on AI owners'
/// post-singularity consumption is rebated to the household, with a fraction
/// delta*tau of the transferred amount lost to deadweight costs.
struct TransferParams {
  ModelParams base;
  double tau = 0.30;    ///< tax rate, in [0,1)
  double delta = 0.5;   ///< deadweight severity, >= 0
  double alpha = 0.70;  ///< household consumption share, in (0,1)

  void validate() const;
};

/// tau*(1 - delta*tau): the share of AI-owner surplus that actually reaches
/// the household. Negative when delta*tau > 1 (waste exceeds the transfer);
/// reports flag that region rather than clamping it.
double net_transfer_fraction(const TransferParams& tp);

/// Household consumption in a non-extinction singularity state given
/// pre-singularity aggregate consumption c_t:
///
///   phi*alpha*(1+eta)*c_t*(1+g) + tau*(1-delta*tau)*(1-phi*alpha)*(1+eta)*c_t*(1+g)
double post_transfer_consumption(const TransferParams& tp, double c_t);

/// Effective displacement under transfers, evaluated at the initial share:
///
///   phi_eff = phi + tau*(1-delta*tau)*(1-phi*alpha)/alpha
///
/// phi_eff replaces phi in every pricing formula. It may exceed one for
/// large transfers (a singularity-state consumption gain); the algebra stays
/// valid and the value is passed through unclamped.
double phi_effective(const TransferParams& tp);

/// Post- to no-transfer singularity-state consumption ratio,
/// 1 + tau*(1-delta*tau)*(1-phi*alpha)/(phi*alpha) = phi_eff/phi.
/// Independent of the productivity jump eta.
double transfer_ratio(const TransferParams& tp);

/// Valuations and consumption outcomes at one tax rate.
struct TransferOutcome {
  double phi_eff;
  double consumption_multiple;  ///< singularity-state consumption relative to the pre-singularity level, = phi_eff*(1+eta)
  double transfer_ratio;
  PDQuote ai;      ///< exact recursion under phi_eff (closed form when delta_theta = 0)
  PDQuote non_ai;  ///< closed form under phi_eff (exact)
};

TransferOutcome pd_with_transfers(const TransferParams& tp, double epsilon = 1e-10);

/// Smallest tau restoring a finite AI price (stationary condition A^AI < 1),
/// located by bisection to `tol` over [0, min(1, 1/(2*delta))) where the net
/// transfer is increasing in tau. Returns 0 when the price is already finite
/// at tau = 0 and nullopt when no admissible tau restores existence. The
/// `tau` field of `tp` is ignored.
std::optional<double> existence_frontier(const TransferParams& tp, double tol = 1e-10);

struct TransferScenario {
  std::string name;
  TransferParams params;  ///< per-row tau is substituted over the grid
};

struct TransferPanelRow {
  std::string scenario;
  double tau;
  PDQuote ai;
  double consumption_multiple;
};

/// Panel data over a tau grid: AI P/D (or its divergence flag) and the
/// singularity-state consumption multiple, per scenario per tax rate.
std::vector<TransferPanelRow> figure2_panels(std::span<const TransferScenario> scenarios,
                                             std::span<const double> taus,
                                             double epsilon = 1e-10);

/// The two standard scenarios, sharing alpha = 0.70, p = 0.5%, xi = 5%,
/// gamma = 4: "baseline" (eta = 0.5, phi = 0.5) and "large" (eta = 9,
/// phi = 0.05).
std::vector<TransferScenario> default_figure2_scenarios(double delta = 0.5);

/// Default tau grid 0, 0.01, ..., tau_max.
std::vector<double> tau_grid(double tau_max = 0.5, double step = 0.01);

}  // namespace singpd
