#include "singpd/veto.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace singpd {

namespace {

double crra_u(double c, double gamma) {
  return std::pow(c, 1.0 - gamma) / (1.0 - gamma);
}

void require_convergent(const ModelParams& m) {
  if (discounted_growth_factor(m) >= 1.0) {
    throw std::domain_error(
        "divergent lifetime-utility sum: beta*(1+g)^(1-gamma) >= 1");
  }
}

}  // namespace

void VetoParams::validate() const {
  base.validate();
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0,1), got " + std::to_string(alpha));
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("q must lie in (0,1), got " + std::to_string(q));
  if (!(kappa >= 0.0 && kappa < 1.0))
    throw std::invalid_argument("kappa must lie in [0,1), got " + std::to_string(kappa));
}

double boosted_share(double alpha, double phi) {
  return std::min(1.0, alpha / phi);
}

double delta_u(const VetoParams& vp) {
  vp.validate();
  const ModelParams& m = vp.base;
  const double jump = 1.0 + m.eta;
  const double alpha_plus = boosted_share(vp.alpha, m.phi);
  return vp.q * crra_u(alpha_plus * jump, m.gamma) +
         (1.0 - vp.q) * crra_u(m.phi * vp.alpha * jump, m.gamma) -
         crra_u(vp.alpha, m.gamma);
}

double value_veto(const VetoParams& vp, double c0) {
  vp.validate();
  if (!(c0 > 0.0)) throw std::invalid_argument("c0 must be positive");
  require_convergent(vp.base);
  const ModelParams& m = vp.base;
  return crra_u((1.0 - vp.kappa) * vp.alpha * c0, m.gamma) /
         (1.0 - discounted_growth_factor(m));
}

double value_develop(const VetoParams& vp, Market market, double c0) {
  vp.validate();
  if (!(c0 > 0.0)) throw std::invalid_argument("c0 must be positive");
  require_convergent(vp.base);
  const ModelParams& m = vp.base;
  const double bg = discounted_growth_factor(m);
  const double jump = 1.0 + m.eta;

  // Deterministic-growth continuation value entered one period ahead with
  // share a: consumption a*(1+eta)*(1+g)*c0 and growth g thereafter.
  const auto post_value = [&](double a) {
    return crra_u(a * jump * (1.0 + m.g) * c0, m.gamma) / (1.0 - bg);
  };
  const double expected_post =
      market == Market::Incomplete
          ? vp.q * post_value(boosted_share(vp.alpha, m.phi)) +
                (1.0 - vp.q) * post_value(m.phi * vp.alpha)
          : post_value(vp.alpha);

  // Extinction contributes the normalized utility 0.
  return (crra_u(vp.alpha * c0, m.gamma) +
          m.beta * m.p * (1.0 - m.xi) * expected_post) /
         (1.0 - bg * (1.0 - m.p));
}

VetoReport analyze_veto(const VetoParams& vp, double c0) {
  VetoReport report;
  report.v_veto = value_veto(vp, c0);
  report.v_develop_im = value_develop(vp, Market::Incomplete, c0);
  report.v_develop_cm = value_develop(vp, Market::Complete, c0);
  report.vetoes_im = report.v_veto > report.v_develop_im;
  report.vetoes_cm = report.v_veto > report.v_develop_cm;
  return report;
}

GammaThreshold gamma_threshold(const VetoParams& vp, double gamma_lo,
                               double gamma_hi, double tol) {
  vp.validate();
  if (!(vp.base.phi * (1.0 + vp.base.eta) < 1.0)) {
    throw std::domain_error(
        "threshold search requires phi*(1+eta) < 1 (consumption must fall in "
        "the negative singularity)");
  }
  if (!(gamma_lo > 1.0))
    throw std::invalid_argument("gamma_lo must exceed 1, got " + std::to_string(gamma_lo));
  if (!(gamma_hi > gamma_lo))
    throw std::invalid_argument("gamma_hi must exceed gamma_lo");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

  const auto gap = [&](double gamma) {
    VetoParams probe = vp;
    probe.base.gamma = gamma;
    return value_veto(probe) - value_develop(probe, Market::Incomplete);
  };

  constexpr double kScanStep = 0.25;
  GammaThreshold result;

  double prev_gamma = gamma_lo;
  double prev_gap = gap(gamma_lo);
  if (prev_gap > 0.0) result.threshold = gamma_lo;

  for (double g = gamma_lo + kScanStep;; g += kScanStep) {
    const double here = std::min(g, gamma_hi);
    const double cur_gap = gap(here);
    if ((prev_gap > 0.0) != (cur_gap > 0.0)) {
      double lo = prev_gamma, hi = here;
      bool hi_vetoes = cur_gap > 0.0;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if ((gap(mid) > 0.0) == hi_vetoes)
          hi = mid;
        else
          lo = mid;
      }
      const double crossing = 0.5 * (lo + hi);
      result.crossings.push_back(crossing);
      if (!result.threshold && hi_vetoes) result.threshold = crossing;
    }
    prev_gamma = here;
    prev_gap = cur_gap;
    if (here >= gamma_hi) break;
  }
  return result;
}

}  // namespace singpd
