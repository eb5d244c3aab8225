#include "singpd/commands.hpp"

#include <cmath>
#include <iostream>
#include <span>
#include <sstream>

#include "singpd/exact_pricer.hpp"
#include "singpd/report.hpp"

namespace singpd::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kDivergentMarker = "divergent";

fs::path prepare_output_dir(const RunConfig& cfg) {
  fs::create_directories(cfg.output_dir);
  return cfg.output_dir;
}

fs::path write_table(const RunConfig& cfg, const fs::path& dir,
                     const std::string& stem, const TextTable& table) {
  const bool markdown = cfg.format == OutputFormat::Markdown;
  const fs::path path = dir / (stem + (markdown ? ".md" : ".csv"));
  write_text_file(path, markdown ? render_markdown(table) : render_csv(table));
  return path;
}

std::vector<double> or_default(const std::vector<double>& list,
                               std::span<const double> fallback) {
  if (!list.empty()) return list;
  return {fallback.begin(), fallback.end()};
}

std::string quote_cell(const PDQuote& q, bool rounded) {
  if (!q.finite) return kDivergentMarker;
  return rounded ? format_fixed1(q.pd) : format_full(q.pd);
}

}  // namespace

std::vector<fs::path> cmd_table1(const RunConfig& cfg, const Table1Options& opts) {
  const auto p_list = or_default(opts.p_list, kDefaultPGrid);
  const auto xi_list = or_default(opts.xi_list, kDefaultXiGrid);
  const auto rows = table1_grid(cfg.model, p_list, xi_list);

  const std::vector<std::string> header{"p", "xi", "pd_ai", "pd_n", "ratio"};
  TextTable rounded{header, {}};
  TextTable unrounded{header, {}};
  for (const auto& row : rows) {
    const std::string p = format_full(row.p);
    const std::string xi = format_full(row.xi);
    const std::string ratio_full =
        row.ratio ? format_full(*row.ratio) : kDivergentMarker;
    const std::string ratio_rounded =
        row.ratio ? format_fixed1(*row.ratio) : kDivergentMarker;
    rounded.rows.push_back(
        {p, xi, quote_cell(row.ai, true), quote_cell(row.non_ai, true), ratio_rounded});
    unrounded.rows.push_back(
        {p, xi, quote_cell(row.ai, false), quote_cell(row.non_ai, false), ratio_full});
  }

  const fs::path dir = prepare_output_dir(cfg);
  std::vector<fs::path> written;
  written.push_back(write_table(cfg, dir, "table1", rounded));
  const fs::path companion = dir / "table1_unrounded.csv";
  write_text_file(companion, render_csv(unrounded));
  written.push_back(companion);
  return written;
}

fs::path cmd_veto(const RunConfig& cfg, const VetoOptions& opts) {
  const VetoParams& vp = cfg.veto;
  const VetoReport report = analyze_veto(vp);
  if (vp.q <= 0.5) {
    std::cerr << "note: q = " << format_full(vp.q)
              << " drops the maintained assumption q > 1/2\n";
  }

  TextTable table{{"field", "value"}, {}};
  table.rows.push_back({"v_veto", format_full(report.v_veto)});
  table.rows.push_back({"v_develop_im", format_full(report.v_develop_im)});
  table.rows.push_back({"v_develop_cm", format_full(report.v_develop_cm)});
  table.rows.push_back({"vetoes_im", report.vetoes_im ? "true" : "false"});
  table.rows.push_back({"vetoes_cm", report.vetoes_cm ? "true" : "false"});

  if (opts.gamma_scan) {
    if (!(vp.base.phi * (1.0 + vp.base.eta) < 1.0)) {
      // The threshold result has no guarantee outside its hypothesis; report
      // instead of failing the whole command.
      table.rows.push_back({"gamma_threshold", "hypothesis-violated"});
    } else {
      const GammaThreshold gt =
          gamma_threshold(vp, opts.gamma_lo, opts.gamma_hi, opts.tol);
      table.rows.push_back(
          {"gamma_threshold",
           gt.threshold ? format_full(*gt.threshold) : "not-found"});
      std::ostringstream crossings;
      for (std::size_t i = 0; i < gt.crossings.size(); ++i) {
        if (i) crossings << ';';
        crossings << format_full(gt.crossings[i]);
      }
      table.rows.push_back({"gamma_crossings", crossings.str()});
    }
  }

  const fs::path dir = prepare_output_dir(cfg);
  return write_table(cfg, dir, "veto", table);
}

std::vector<fs::path> cmd_transfers(const RunConfig& cfg, const TransferOptions& opts) {
  // Config drives everything except the scenario-defining (eta, phi) pairs.
  std::vector<TransferScenario> scenarios{{"baseline", cfg.transfer},
                                          {"large", cfg.transfer}};
  scenarios[0].params.base.eta = 0.5;
  scenarios[0].params.base.phi = 0.5;
  scenarios[1].params.base.eta = 9.0;
  scenarios[1].params.base.phi = 0.05;
  const auto taus = tau_grid(opts.tau_max, opts.tau_step);
  const auto rows = figure2_panels(scenarios, taus);

  TextTable table{{"scenario", "tau", "pd_ai", "multiple"}, {}};
  for (const auto& row : rows) {
    table.rows.push_back({row.scenario, format_full(row.tau),
                          row.ai.finite ? format_full(row.ai.pd) : kDivergentMarker,
                          format_full(row.consumption_multiple)});
  }
  bool phi_eff_above_one = false;
  for (const auto& sc : scenarios) {
    for (double tau : taus) {
      TransferParams probe = sc.params;
      probe.tau = tau;
      if (phi_effective(probe) > 1.0) phi_eff_above_one = true;
    }
  }
  if (phi_eff_above_one) {
    std::cerr << "note: phi_eff exceeds 1 for part of the tau grid "
                 "(singularity-state consumption gain); values passed through "
                 "unclamped\n";
  }
  if (cfg.transfer.delta * taus.back() >= 1.0) {
    std::cerr << "note: delta*tau reaches 1 within the grid; the net transfer "
                 "is fully consumed by waste there\n";
  }

  const fs::path dir = prepare_output_dir(cfg);
  return {write_table(cfg, dir, "transfers", table)};
}

fs::path cmd_mc_check(const RunConfig& cfg, const McCheckOptions& opts) {
  const auto p_list = or_default(opts.p_list, kDefaultPGrid);
  const auto xi_list = or_default(opts.xi_list, kDefaultXiGrid);

  TextTable table{
      {"p", "xi", "asset", "closed_form", "recursion", "mc_mean", "mc_se", "status"}, {}};
  for (double p : p_list) {
    for (double xi : xi_list) {
      ModelParams m = cfg.model;
      m.p = p;
      m.xi = xi;
      for (AssetKind asset : {AssetKind::AI, AssetKind::NonAI}) {
        const PDQuote closed = closed_form_pd(m, asset);
        // The non-AI closed form is exact, so it doubles as the recursion
        // column for that asset.
        const double reference =
            asset == AssetKind::AI && m.delta_theta > 0.0 ? exact_pd_ai_value(m)
                                                          : closed.pd;
        std::vector<std::string> row{format_full(p), format_full(xi), to_string(asset),
                                     closed.finite ? format_full(closed.pd)
                                                   : kDivergentMarker,
                                     std::isfinite(reference) ? format_full(reference)
                                                              : kDivergentMarker};
        if (!closed.finite) {
          // No horizon bounds the simulated sum's tail for a divergent price.
          row.insert(row.end(), {"", "", kDivergentMarker});
        } else {
          try {
            PathConfig pc = cfg.mc;
            pc.params = m;
            pc.horizon = opts.horizon ? *opts.horizon
                                      : min_horizon(m, asset, opts.tail_rel_bound);
            const MCPrice mc = mc_price(pc, asset, opts.tail_rel_bound);
            const bool pass = std::abs(mc.mean_pd - reference) <=
                              3.0 * mc.std_error + truncation_tail(pc, asset);
            row.insert(row.end(), {format_full(mc.mean_pd), format_full(mc.std_error),
                                   pass ? "pass" : "fail"});
          } catch (const std::domain_error&) {
            row.insert(row.end(), {"", "", "horizon-too-short"});
          }
        }
        table.rows.push_back(std::move(row));
      }
    }
  }

  const fs::path dir = prepare_output_dir(cfg);
  return write_table(cfg, dir, "mc_check", table);
}

std::vector<fs::path> cmd_figure1(const RunConfig& cfg, const Figure1Options& opts) {
  const ShillerSeries shiller = load_shiller_csv(opts.shiller_csv);
  MarketSeries nasdaq = load_index_csv(opts.nasdaq_csv, "nasdaq");
  MarketSeries spx = load_index_csv(opts.spx_csv, "spx");

  const MarketSeries pd = trailing_pd_series(shiller);
  const MarketSeries ratio = rebased_ratio_series(nasdaq, spx, opts.rebase);

  TextTable pd_table{{"month", "pd"}, {}};
  for (const auto& [ym, v] : pd.observations)
    pd_table.rows.push_back({to_string(ym), format_full(v)});
  TextTable ratio_table{{"month", "ratio_rebased"}, {}};
  for (const auto& [ym, v] : ratio.observations)
    ratio_table.rows.push_back({to_string(ym), format_full(v)});

  const fs::path dir = prepare_output_dir(cfg);
  return {write_table(cfg, dir, "figure1_pd", pd_table),
          write_table(cfg, dir, "figure1_ratio", ratio_table)};
}

}  // namespace singpd::cli
