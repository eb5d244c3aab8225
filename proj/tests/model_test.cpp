#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "singpd/model.hpp"
#include "testutil.hpp"

using namespace singpd;

namespace {

bool mentions(const std::exception& e, const std::string& token) {
  return std::string(e.what()).find(token) != std::string::npos;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("growth factors match direct substitution") {
  ModelParams m;  // theta=0.15, delta_theta=0.2, eta=0.5
  const GammaPair gp = growth_factors(m);
  // (0.15 + 0.2*0.85)/0.15 * 1.5 and (1-0.2)*1.5
  CHECK(gp.gamma_ai == doctest::Approx(3.2).epsilon(1e-12));
  CHECK(gp.gamma_n == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(0.15 * gp.gamma_ai + 0.85 * gp.gamma_n == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("no share reallocation means both factors equal the jump") {
  ModelParams m;
  m.delta_theta = 0.0;
  for (double theta : {0.05, 0.5, 0.95}) {
    m.theta = theta;
    const GammaPair gp = growth_factors(m);
    CHECK(gp.gamma_ai == 1.0 + m.eta);
    CHECK(gp.gamma_n == 1.0 + m.eta);
  }
}

TEST_CASE("share-weighted growth identity holds across random draws") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const ModelParams m = test::random_params(rng);
    const GammaPair gp = growth_factors(m);
    const double recombined = m.theta * gp.gamma_ai + (1.0 - m.theta) * gp.gamma_n;
    CHECK(std::abs(recombined - (1.0 + m.eta)) <= 1e-12);
  }
}

TEST_CASE("existence factor: p = 0 leaves only the discounted growth term") {
  ModelParams m;
  m.p = 0.0;
  const double expected = 0.96 * std::pow(1.02, -3.0);
  CHECK(existence_factor(m, AssetKind::AI) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(existence_factor(m, AssetKind::NonAI) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.9046).epsilon(1e-4));
}

TEST_CASE("existence factor: certain extinction removes the singularity term") {
  ModelParams m;
  m.xi = 1.0;
  m.p = 0.3;
  const double expected = 0.96 * std::pow(1.02, -3.0) * 0.7;
  CHECK(existence_factor(m, AssetKind::AI) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(existence_factor(m, AssetKind::NonAI) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("large singularity pushes the AI factor past one") {
  ModelParams m;
  m.eta = 9.0;
  m.phi = 0.05;
  m.p = 0.005;
  m.xi = 0.05;
  CHECK(std::pow(m.phi, -m.gamma) == doctest::Approx(160000.0).epsilon(1e-10));
  CHECK(existence_factor(m, AssetKind::AI) > 1.0);
  CHECK_FALSE(closed_form_pd(m, AssetKind::AI).finite);
}

TEST_CASE("non-AI closed form reproduces the reference cells") {
  ModelParams m;
  m.xi = 0.0;

  m.p = 0.005;
  const PDQuote q5 = closed_form_pd(m, AssetKind::NonAI);
  CHECK(q5.finite);
  CHECK(std::abs(q5.pd - 11.09) <= 0.01);

  m.p = 0.010;
  const PDQuote q10 = closed_form_pd(m, AssetKind::NonAI);
  CHECK(std::abs(q10.pd - 13.3) <= 0.05);
}

TEST_CASE("AI closed form overstates the exact value at the baseline") {
  ModelParams m;
  m.p = 0.005;
  m.xi = 0.0;
  const PDQuote q = closed_form_pd(m, AssetKind::AI);
  CHECK(q.finite);
  CHECK(std::abs(q.pd - 17.5) <= 0.05);  // vs the exact 15.5
}

TEST_CASE("pd_ratio") {
  const PDQuote ai{AssetKind::AI, 0.9, 26.5, true};
  const PDQuote n{AssetKind::NonAI, 0.9, 13.3, true};
  CHECK(pd_ratio(ai, n) == doctest::Approx(26.5 / 13.3));
  CHECK(std::round(pd_ratio(ai, n) * 10.0) / 10.0 == doctest::Approx(2.0));

  const PDQuote ai2{AssetKind::AI, 0.9, 15.5, true};
  const PDQuote n2{AssetKind::NonAI, 0.9, 11.1, true};
  CHECK(std::round(pd_ratio(ai2, n2) * 10.0) / 10.0 == doctest::Approx(1.4));

  CHECK(pd_ratio(n2, n2) == 1.0);

  const PDQuote divergent{AssetKind::AI, 1.5,
                          std::numeric_limits<double>::infinity(), false};
  CHECK_THROWS_AS(pd_ratio(divergent, n), std::domain_error);
  CHECK_THROWS_AS(pd_ratio(ai, divergent), std::domain_error);
}

TEST_CASE("degeneracies collapse the spread exactly") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    ModelParams m = test::random_params(rng);
    for (int mode = 0; mode < 3; ++mode) {
      ModelParams d = m;
      if (mode == 0) d.p = 0.0;
      if (mode == 1) d.delta_theta = 0.0;
      if (mode == 2) d.xi = 1.0;
      const PDQuote ai = closed_form_pd(d, AssetKind::AI);
      const PDQuote n = closed_form_pd(d, AssetKind::NonAI);
      CHECK(ai.existence_factor == n.existence_factor);
      CHECK(ai.pd == n.pd);
    }
  }
}

TEST_CASE("existence factor is monotone in the growth factor and in xi") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    ModelParams m = test::random_params(rng);
    m.p = test::uniform(rng, 0.001, 0.02);
    m.xi = test::uniform(rng, 0.0, 0.9);

    // Gamma^AI > Gamma^N, so the factor ordering checks monotonicity in Gamma.
    CHECK(existence_factor(m, AssetKind::AI) > existence_factor(m, AssetKind::NonAI));

    ModelParams bumped = m;
    bumped.xi = m.xi + 0.05;
    CHECK(existence_factor(bumped, AssetKind::AI) < existence_factor(m, AssetKind::AI));
    CHECK(existence_factor(bumped, AssetKind::NonAI) <
          existence_factor(m, AssetKind::NonAI));
  }
}

TEST_CASE("finite flag mirrors the existence condition") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    ModelParams m = test::random_params(rng);
    if (i % 3 == 0) {  // visit the divergent region too
      m.eta = 9.0;
      m.phi = 0.05;
      m.p = 0.005;
      m.xi = 0.05;
    }
    for (AssetKind asset : {AssetKind::AI, AssetKind::NonAI}) {
      const PDQuote q = closed_form_pd(m, asset);
      CHECK(q.finite == (q.existence_factor < 1.0));
      if (q.finite) {
        CHECK(q.pd > 0.0);
        CHECK(q.pd ==
              doctest::Approx(q.existence_factor / (1.0 - q.existence_factor)));
      } else {
        CHECK(std::isinf(q.pd));
      }
    }
  }
}

TEST_CASE("hedging order: severe displacement ranks AI above non-AI") {
  std::mt19937_64 rng(37);
  int checked = 0;
  while (checked < 50) {
    ModelParams m = test::random_params(rng);
    m.p = test::uniform(rng, 0.001, 0.02);
    m.xi = test::uniform(rng, 0.0, 0.9);
    if (!(m.phi * (1.0 + m.eta) < 1.0) || !(m.delta_theta > 0.0)) continue;
    const PDQuote ai = closed_form_pd(m, AssetKind::AI);
    const PDQuote n = closed_form_pd(m, AssetKind::NonAI);
    if (!ai.finite || !n.finite) continue;
    CHECK(ai.pd > n.pd);
    ++checked;
  }
}

TEST_CASE("validation names the offending field") {
  ModelParams m;

  m.beta = 1.2;
  CHECK_THROWS_WITH_AS(m.validate(), doctest::Contains("beta"), std::invalid_argument);
  m.beta = 0.96;

  m.gamma = 1.0;
  CHECK_THROWS_WITH_AS(m.validate(), doctest::Contains("gamma"), std::invalid_argument);
  m.gamma = 4.0;

  m.theta = 0.0;
  CHECK_THROWS_WITH_AS(m.validate(), doctest::Contains("theta"), std::invalid_argument);
  m.theta = 0.15;

  m.g = -1.0;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m.g = 0.02;

  m.phi = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_WITH_AS(m.validate(), doctest::Contains("phi"), std::invalid_argument);
  m.phi = 1.0;  // no displacement is admitted (complete-markets limit)
  CHECK_NOTHROW(m.validate());

  try {
    ModelParams bad;
    bad.delta_theta = 1.0;
    growth_factors(bad);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(mentions(e, "delta_theta"));
  }
}

}  // TEST_SUITE
