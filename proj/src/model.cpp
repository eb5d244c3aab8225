#include "singpd/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace singpd {

namespace {

[[noreturn]] void fail_field(const char* field, const char* requirement, double value) {
  throw std::invalid_argument(std::string(field) + " must " + requirement +
                              ", got " + std::to_string(value));
}

}  // namespace

std::string to_string(AssetKind kind) {
  return kind == AssetKind::AI ? "AI" : "NonAI";
}

void ModelParams::validate() const {
  const struct {
    const char* name;
    double value;
  } fields[] = {{"beta", beta},   {"g", g},     {"gamma", gamma},
                {"p", p},         {"xi", xi},   {"eta", eta},
                {"phi", phi},     {"theta", theta}, {"delta_theta", delta_theta}};
  for (const auto& f : fields) {
    if (!std::isfinite(f.value)) fail_field(f.name, "be finite", f.value);
  }
  if (!(beta > 0.0 && beta < 1.0)) fail_field("beta", "lie in (0,1)", beta);
  if (!(1.0 + g > 0.0)) fail_field("g", "satisfy 1+g > 0", g);
  if (!(gamma > 1.0)) fail_field("gamma", "exceed 1", gamma);
  if (!(p >= 0.0 && p <= 1.0)) fail_field("p", "lie in [0,1]", p);
  if (!(xi >= 0.0 && xi <= 1.0)) fail_field("xi", "lie in [0,1]", xi);
  if (!(eta >= 0.0)) fail_field("eta", "be nonnegative", eta);
  if (!(phi > 0.0)) fail_field("phi", "be positive", phi);
  if (!(theta > 0.0 && theta < 1.0)) fail_field("theta", "lie in (0,1)", theta);
  if (!(delta_theta >= 0.0 && delta_theta < 1.0))
    fail_field("delta_theta", "lie in [0,1)", delta_theta);
}

GammaPair growth_factors(const ModelParams& m) {
  m.validate();
  const double jump = 1.0 + m.eta;
  return {
      (m.theta + m.delta_theta * (1.0 - m.theta)) / m.theta * jump,
      (1.0 - m.delta_theta) * jump,
  };
}

double existence_factor(const ModelParams& m, AssetKind asset) {
  const GammaPair gp = growth_factors(m);
  const double gamma_j = asset == AssetKind::AI ? gp.gamma_ai : gp.gamma_n;
  const double hedge = std::pow(1.0 + m.eta, -m.gamma) * std::pow(m.phi, -m.gamma);
  return discounted_growth_factor(m) *
         ((1.0 - m.p) + m.p * (1.0 - m.xi) * hedge * gamma_j);
}

PDQuote closed_form_pd(const ModelParams& m, AssetKind asset) {
  const double a = existence_factor(m, asset);
  if (a < 1.0) return {asset, a, a / (1.0 - a), true};
  return {asset, a, std::numeric_limits<double>::infinity(), false};
}

double pd_ratio(const PDQuote& ai, const PDQuote& n) {
  if (!ai.finite || !n.finite) {
    throw std::domain_error("pd_ratio undefined: " +
                            to_string(!ai.finite ? ai.asset : n.asset) +
                            " quote is divergent");
  }
  return ai.pd / n.pd;
}

}  // namespace singpd
