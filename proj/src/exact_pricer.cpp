#include "singpd/exact_pricer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace singpd {

namespace {

// Number of share transitions needed to push 1-theta at or below epsilon.
std::size_t chain_transitions(double theta0, double delta_theta, double epsilon) {
  const double gap0 = 1.0 - theta0;
  if (epsilon >= gap0) return 0;
  const double k = std::ceil(std::log(epsilon / gap0) / std::log(1.0 - delta_theta));
  return static_cast<std::size_t>(k);
}

struct RecursionCore {
  double v0;
  bool finite;
  std::optional<std::size_t> diverged_at;
};

// Backward pass over the share chain. theta_k is recovered from the gap
// identity 1-theta_k = (1-theta0)*(1-delta_theta)^k instead of a stored
// chain, so sweeps with tiny delta_theta (tens of millions of states) run in
// constant memory unless a caller asks for the per-state path.
RecursionCore run_recursion(const ModelParams& m, double epsilon,
                            std::vector<double>* path_out) {
  m.validate();
  if (!(m.delta_theta > 0.0)) {
    throw std::domain_error(
        "exact_pd_ai requires delta_theta > 0; the stationary closed form is "
        "already exact when the share never moves");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  const double disc = discounted_growth_factor(m);
  const double a_no = disc * (1.0 - m.p);
  const double hedge = disc * m.p * (1.0 - m.xi) *
                       std::pow(1.0 + m.eta, -m.gamma) * std::pow(m.phi, -m.gamma);
  const double jump = 1.0 + m.eta;
  const double keep = 1.0 - m.delta_theta;

  std::size_t k_max = chain_transitions(m.theta, m.delta_theta, epsilon);

  if (a_no >= 1.0) return {std::numeric_limits<double>::infinity(), false, 0};

  double gap = (1.0 - m.theta) * std::pow(keep, static_cast<double>(k_max));
  while (gap > epsilon && epsilon < 1.0 - m.theta) {  // guard against ceil rounding
    gap *= keep;
    ++k_max;
  }
  const double theta_terminal = 1.0 - gap;
  const double gamma_terminal = (theta_terminal + m.delta_theta * gap) / theta_terminal * jump;
  const double a_terminal = a_no + hedge * gamma_terminal;
  if (a_terminal >= 1.0) return {std::numeric_limits<double>::infinity(), false, k_max};

  double v = a_terminal / (1.0 - a_terminal);
  if (path_out) {
    path_out->assign(k_max + 1, 0.0);
    (*path_out)[k_max] = v;
  }
  for (std::size_t k = k_max; k-- > 0;) {
    gap /= keep;
    const double theta_k = 1.0 - gap;
    const double gamma_k = (theta_k + m.delta_theta * gap) / theta_k * jump;
    v = (a_no + hedge * gamma_k * (v + 1.0)) / (1.0 - a_no);
    if (path_out) (*path_out)[k] = v;
  }
  return {v, true, std::nullopt};
}

}  // namespace

ThetaChain build_theta_chain(double theta0, double delta_theta, double epsilon) {
  if (!(theta0 > 0.0 && theta0 < 1.0))
    throw std::invalid_argument("theta0 must lie in (0,1), got " + std::to_string(theta0));
  if (delta_theta == 0.0)
    throw std::domain_error(
        "degenerate chain: delta_theta = 0 never moves the share; use the "
        "stationary closed form");
  if (!(delta_theta > 0.0 && delta_theta < 1.0))
    throw std::invalid_argument("delta_theta must lie in (0,1), got " +
                                std::to_string(delta_theta));
  if (!(epsilon > 0.0))
    throw std::invalid_argument("epsilon must be positive, got " + std::to_string(epsilon));

  ThetaChain chain;
  chain.thetas.reserve(chain_transitions(theta0, delta_theta, epsilon) + 2);
  chain.thetas.push_back(theta0);
  double theta = theta0;
  while (1.0 - theta > epsilon) {
    theta += delta_theta * (1.0 - theta);
    chain.thetas.push_back(theta);
  }
  chain.terminal_gap = 1.0 - chain.thetas.back();
  return chain;
}

RecursionResult exact_pd_ai(const ModelParams& params, double epsilon) {
  RecursionResult result;
  const RecursionCore core = run_recursion(params, epsilon, &result.pd_by_state);
  result.pd_initial = core.v0;
  result.finite = core.finite;
  result.diverged_at = core.diverged_at;
  if (!core.finite) result.pd_by_state.clear();
  return result;
}

double exact_pd_ai_value(const ModelParams& params, double epsilon) {
  return run_recursion(params, epsilon, nullptr).v0;
}

std::vector<Table1Row> table1_grid(const ModelParams& base,
                                   std::span<const double> p_list,
                                   std::span<const double> xi_list,
                                   double epsilon) {
  std::vector<Table1Row> rows;
  rows.reserve(p_list.size() * xi_list.size());
  for (double p : p_list) {
    for (double xi : xi_list) {
      ModelParams m = base;
      m.p = p;
      m.xi = xi;
      m.validate();

      Table1Row row;
      row.p = p;
      row.xi = xi;
      if (m.delta_theta > 0.0) {
        const double v = exact_pd_ai_value(m, epsilon);
        row.ai = {AssetKind::AI, existence_factor(m, AssetKind::AI), v, std::isfinite(v)};
      } else {
        row.ai = closed_form_pd(m, AssetKind::AI);
      }
      row.non_ai = closed_form_pd(m, AssetKind::NonAI);
      if (row.ai.finite && row.non_ai.finite) row.ratio = row.ai.pd / row.non_ai.pd;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace singpd
