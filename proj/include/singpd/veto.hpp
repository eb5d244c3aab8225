#pragma once

#include <optional>
#include <vector>

#include "singpd/model.hpp"

namespace singpd {

enum class Market { Incomplete, Complete };

/// Model calibration used by the veto analysis: higher risk aversion and a
/// higher singularity probability than the pricing grid.
inline ModelParams default_veto_base() {
  ModelParams m;
  m.gamma = 10.0;
  m.p = 0.01;
  return m;
}

/// Parameters for the development-veto analysis.
///
/// A non-extinction singularity is positive with probability q (the
/// household share rises to min(1, alpha/phi)) and negative with probability
/// 1-q (the share falls to phi*alpha). The household may instead veto
/// development, giving up a permanent consumption fraction kappa in exchange
/// for never facing a singularity.
///
/// The maintained assumption q > 1/2 (the positive outcome is the more
/// likely one) is not enforced; reports flag configurations that drop it.
struct VetoParams {
  ModelParams base = default_veto_base();
  double alpha = 0.70;  ///< household consumption share, in (0,1)
  double q = 0.70;      ///< probability the non-extinction singularity is positive
  double kappa = 0.01;  ///< permanent consumption fraction lost to a veto, in [0,1)

  void validate() const;
};

/// min(1, alpha/phi): the household share after a positive singularity.
double boosted_share(double alpha, double phi);

/// Expected one-period utility gain from a non-extinction singularity under
/// incomplete markets:
///
///   q*u(alpha_plus*(1+eta)) + (1-q)*u(phi*alpha*(1+eta)) - u(alpha)
///
/// with u(c) = c^(1-gamma)/(1-gamma). Diverges to -infinity as gamma grows
/// whenever phi*(1+eta) < 1: the uninsurable downside dominates.
double delta_u(const VetoParams& vp);

/// Lifetime utility when the household vetoes development: it consumes
/// (1-kappa)*alpha*C_t forever along the deterministic growth path. Throws
/// std::domain_error when the deterministic sum diverges
/// (beta*(1+g)^(1-gamma) >= 1).
double value_veto(const VetoParams& vp, double c0 = 1.0);

/// Lifetime utility when development proceeds, treating the singularity as a
/// one-shot event: before it arrives the share is constant; after the first
/// realization the economy grows deterministically at the new share, and
/// extinction contributes the normalized utility 0. Closed form:
///
///   V = [u(alpha*c0) + beta*p*(1-xi)*EW] / (1 - beta*(1-p)*(1+g)^(1-gamma))
///
/// where EW averages the post-singularity deterministic-growth values over
/// the share outcomes: min(1, alpha/phi) w.p. q and phi*alpha w.p. 1-q under
/// incomplete markets, alpha with certainty under complete markets.
double value_develop(const VetoParams& vp, Market market, double c0 = 1.0);

/// Value-function levels and decision bits of the veto comparison.
struct VetoReport {
  double v_veto;
  double v_develop_im;
  double v_develop_cm;
  bool vetoes_im;  ///< v_veto > v_develop_im
  bool vetoes_cm;  ///< v_veto > v_develop_cm
};

VetoReport analyze_veto(const VetoParams& vp, double c0 = 1.0);

/// Result of the risk-aversion threshold search. `threshold` is the smallest
/// gamma in range at which the household vetoes under incomplete markets
/// (gamma_lo itself when it already vetoes there); empty when the veto
/// region is never entered. `crossings` lists every sign change the coarse
/// scan found, refined by bisection, since monotonicity of the value gap in
/// gamma is not guaranteed.
struct GammaThreshold {
  std::optional<double> threshold;
  std::vector<double> crossings;
};

/// Coarse scan (step 0.25) then bisection on the sign of
/// value_veto - value_develop(Incomplete) as a function of gamma. Requires
/// the displacement hypothesis phi*(1+eta) < 1 and gamma_lo > 1; throws
/// std::domain_error / std::invalid_argument otherwise.
GammaThreshold gamma_threshold(const VetoParams& vp, double gamma_lo,
                               double gamma_hi, double tol = 1e-6);

}  // namespace singpd
