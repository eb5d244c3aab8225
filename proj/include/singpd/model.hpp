#pragma once

#include <cmath>
#include <string>

namespace singpd {

/// The two publicly traded asset classes.
enum class AssetKind { AI, NonAI };

std::string to_string(AssetKind kind);

/// Full parameter vector for the singularity pricing model.
///
/// Each period a singularity arrives with probability `p`. Conditional on
/// arrival it triggers extinction with probability `xi` (consumption is zero
/// forever after); otherwise aggregate consumption jumps by a factor 1+eta,
/// the household keeps a fraction `phi` of its consumption share, and the AI
/// dividend share moves from theta to theta + delta_theta*(1-theta). Absent
/// a singularity, consumption grows at the constant rate g.
///
/// Defaults are the quantitative-grid calibration (single-point p and xi).
struct ModelParams {
  double beta = 0.96;        ///< discount factor, in (0,1)
  double g = 0.02;           ///< baseline consumption growth, 1+g > 0
  double gamma = 4.0;        ///< relative risk aversion, > 1
  double p = 0.005;          ///< singularity probability per period, in [0,1]
  double xi = 0.05;          ///< extinction probability given singularity, in [0,1]
  double eta = 0.5;          ///< aggregate productivity jump, >= 0
  double phi = 0.5;          ///< displacement factor on the household share; economically (0,1], effective values above 1 arise under transfers and price as singularity-state gains
  double theta = 0.15;       ///< current AI dividend share, in (0,1)
  double delta_theta = 0.2;  ///< AI-share jump parameter, in [0,1)

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// beta*(1+g)^(1-gamma): the per-period factor of every deterministic-growth
/// discounted sum in the model.
inline double discounted_growth_factor(const ModelParams& m) {
  return m.beta * std::pow(1.0 + m.g, 1.0 - m.gamma);
}

/// Dividend growth factors conditional on a non-extinction singularity.
///
/// gamma_ai = (theta + delta_theta*(1-theta))/theta * (1+eta)
/// gamma_n  = (1 - delta_theta) * (1+eta)
///
/// They satisfy theta*gamma_ai + (1-theta)*gamma_n = 1+eta: reallocation of
/// dividend shares never creates or destroys aggregate dividends.
struct GammaPair {
  double gamma_ai;
  double gamma_n;
};

GammaPair growth_factors(const ModelParams& params);

/// SDF-weighted expected dividend growth per period for one asset:
///
///   A^j = beta*(1+g)^(1-gamma) * [(1-p) + p*(1-xi)*(1+eta)^-gamma*phi^-gamma*Gamma^j]
///
/// The geometric pricing sum converges iff A^j < 1.
double existence_factor(const ModelParams& params, AssetKind asset);

/// A price-dividend valuation for one asset.
///
/// A divergent quote (existence_factor >= 1) is data, not an error: the
/// transfer sweeps deliberately pass through the divergent region. `pd` is
/// +infinity when `finite` is false.
///
/// For quotes produced by the backward recursion, `existence_factor` is the
/// stationary diagnostic evaluated at the initial AI share; because the AI
/// growth advantage shrinks as the share rises, the recursion can price some
/// states where that stationary factor exceeds one.
struct PDQuote {
  AssetKind asset;
  double existence_factor;
  double pd;
  bool finite;
};

/// Stationary closed-form price-dividend ratio, pd = A^j / (1 - A^j).
///
/// Exact for the non-AI stock. For the AI stock it treats the post-jump P/D
/// as equal to the current one, which is exact only in the limit
/// delta_theta -> 0; use the backward recursion for exact AI values.
PDQuote closed_form_pd(const ModelParams& params, AssetKind asset);

/// AI-to-non-AI valuation ratio. Throws std::domain_error if either quote is
/// divergent.
double pd_ratio(const PDQuote& ai, const PDQuote& n);

}  // namespace singpd
