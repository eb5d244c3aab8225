#include "singpd/transfers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace singpd {

void TransferParams::validate() const {
  base.validate();
  if (!(tau >= 0.0 && tau < 1.0))
    throw std::invalid_argument("tau must lie in [0,1), got " + std::to_string(tau));
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("delta must be nonnegative, got " + std::to_string(delta));
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0,1), got " + std::to_string(alpha));
}

double net_transfer_fraction(const TransferParams& tp) {
  tp.validate();
  return tp.tau * (1.0 - tp.delta * tp.tau);
}

double post_transfer_consumption(const TransferParams& tp, double c_t) {
  tp.validate();
  if (!(c_t > 0.0)) throw std::invalid_argument("c_t must be positive");
  const ModelParams& m = tp.base;
  const double scale = (1.0 + m.eta) * c_t * (1.0 + m.g);
  const double displaced = m.phi * tp.alpha * scale;
  const double transfer =
      tp.tau * (1.0 - tp.delta * tp.tau) * (1.0 - m.phi * tp.alpha) * scale;
  return displaced + transfer;
}

double phi_effective(const TransferParams& tp) {
  tp.validate();
  const ModelParams& m = tp.base;
  return m.phi +
         tp.tau * (1.0 - tp.delta * tp.tau) * (1.0 - m.phi * tp.alpha) / tp.alpha;
}

double transfer_ratio(const TransferParams& tp) {
  tp.validate();
  const ModelParams& m = tp.base;
  return 1.0 + tp.tau * (1.0 - tp.delta * tp.tau) * (1.0 - m.phi * tp.alpha) /
                   (m.phi * tp.alpha);
}

TransferOutcome pd_with_transfers(const TransferParams& tp, double epsilon) {
  tp.validate();
  ModelParams priced = tp.base;
  priced.phi = phi_effective(tp);

  TransferOutcome out;
  out.phi_eff = priced.phi;
  out.consumption_multiple = priced.phi * (1.0 + priced.eta);
  out.transfer_ratio = transfer_ratio(tp);
  if (priced.delta_theta > 0.0) {
    const double v = exact_pd_ai_value(priced, epsilon);
    out.ai = {AssetKind::AI, existence_factor(priced, AssetKind::AI), v, std::isfinite(v)};
  } else {
    out.ai = closed_form_pd(priced, AssetKind::AI);
  }
  out.non_ai = closed_form_pd(priced, AssetKind::NonAI);
  return out;
}

std::optional<double> existence_frontier(const TransferParams& tp, double tol) {
  tp.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  const auto factor_at = [&](double tau) {
    TransferParams probe = tp;
    probe.tau = tau;
    ModelParams priced = probe.base;
    priced.phi = phi_effective(probe);
    return existence_factor(priced, AssetKind::AI);
  };

  if (factor_at(0.0) < 1.0) return 0.0;

  // The net transfer rises in tau only up to its peak at 1/(2*delta); beyond
  // it the map is non-monotone and the search refuses to extrapolate.
  const double tau_hi =
      tp.delta > 0.0 ? std::min(1.0 - 1e-12, 1.0 / (2.0 * tp.delta)) : 1.0 - 1e-12;
  if (factor_at(tau_hi) >= 1.0) return std::nullopt;

  double lo = 0.0, hi = tau_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (factor_at(mid) < 1.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

std::vector<TransferPanelRow> figure2_panels(std::span<const TransferScenario> scenarios,
                                             std::span<const double> taus,
                                             double epsilon) {
  std::vector<TransferPanelRow> rows;
  rows.reserve(scenarios.size() * taus.size());
  for (const TransferScenario& sc : scenarios) {
    for (double tau : taus) {
      TransferParams tp = sc.params;
      tp.tau = tau;
      const TransferOutcome out = pd_with_transfers(tp, epsilon);
      rows.push_back({sc.name, tau, out.ai, out.consumption_multiple});
    }
  }
  return rows;
}

std::vector<TransferScenario> default_figure2_scenarios(double delta) {
  TransferParams baseline;
  baseline.base.eta = 0.5;
  baseline.base.phi = 0.5;
  baseline.delta = delta;

  TransferParams large = baseline;
  large.base.eta = 9.0;
  large.base.phi = 0.05;

  return {{"baseline", baseline}, {"large", large}};
}

std::vector<double> tau_grid(double tau_max, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (!(tau_max >= 0.0 && tau_max < 1.0))
    throw std::invalid_argument("tau_max must lie in [0,1)");
  const int n = static_cast<int>(std::floor(tau_max / step + 1e-9));
  // Prefer i/round(1/step) over accumulated i*step: it lands on the exact
  // representable grid points for steps like 0.01.
  const double inv = std::round(1.0 / step);
  const bool reciprocal_step = std::abs(inv * step - 1.0) < 1e-9 && inv > 0.0;
  std::vector<double> taus;
  taus.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    taus.push_back(reciprocal_step ? static_cast<double>(i) / inv
                                   : static_cast<double>(i) * step);
  }
  return taus;
}

}  // namespace singpd
