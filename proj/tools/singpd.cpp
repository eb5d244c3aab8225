#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "singpd/commands.hpp"
#include "singpd/config.hpp"

namespace {

void print_written(const std::vector<std::filesystem::path>& paths) {
  for (const auto& p : paths) std::cout << "wrote " << p.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asset pricing under AI-singularity displacement risk"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand name

  std::string config_path;
  std::string out_dir = "out";
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "Key-value config file");
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--format", format, "Output table format")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "RNG seed for simulation commands");

  auto* table1 = app.add_subcommand(
      "table1", "Price-dividend grid: exact AI, closed-form non-AI, ratio");
  singpd::cli::Table1Options table1_opts;
  table1->add_option("--p", table1_opts.p_list, "Singularity probabilities");
  table1->add_option("--xi", table1_opts.xi_list, "Extinction probabilities");

  auto* veto = app.add_subcommand(
      "veto", "Development-veto value functions and decisions");
  singpd::cli::VetoOptions veto_opts;
  veto->add_flag("--gamma-scan", veto_opts.gamma_scan,
                 "Locate the risk-aversion veto threshold");
  veto->add_option("--gamma-lo", veto_opts.gamma_lo, "Scan lower bound")
      ->capture_default_str();
  veto->add_option("--gamma-hi", veto_opts.gamma_hi, "Scan upper bound")
      ->capture_default_str();

  auto* transfers = app.add_subcommand(
      "transfers", "Taxed-transfer outcomes over a tau grid, both scenarios");
  singpd::cli::TransferOptions transfer_opts;
  transfers->add_option("--tau-max", transfer_opts.tau_max, "Grid upper end")
      ->capture_default_str();
  transfers->add_option("--tau-step", transfer_opts.tau_step, "Grid step")
      ->capture_default_str();
  std::optional<double> delta_override;
  transfers->add_option("--delta", delta_override, "Deadweight severity override");

  auto* mc_check = app.add_subcommand(
      "mc-check", "Monte Carlo cross-check of closed form and recursion");
  singpd::cli::McCheckOptions mc_opts;
  mc_check->add_option("--p", mc_opts.p_list, "Singularity probabilities");
  mc_check->add_option("--xi", mc_opts.xi_list, "Extinction probabilities");
  std::optional<std::int64_t> mc_paths;
  mc_check->add_option("--paths", mc_paths, "Paths per cell");
  mc_check->add_option("--horizon", mc_opts.horizon,
                       "Fixed horizon (default: per-cell tail bound)");

  auto* figure1 = app.add_subcommand(
      "figure1", "Market-data series: trailing P/D and rebased index ratio");
  singpd::cli::Figure1Options fig1_opts;
  std::string rebase_text = "2015-01";
  figure1->add_option("--shiller", fig1_opts.shiller_csv, "month,price,dividend file")
      ->required();
  figure1->add_option("--nasdaq", fig1_opts.nasdaq_csv, "month,close file")->required();
  figure1->add_option("--spx", fig1_opts.spx_csv, "month,close file")->required();
  figure1->add_option("--rebase", rebase_text, "Rebase month, YYYY-MM")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    singpd::RunConfig cfg =
        config_path.empty() ? singpd::RunConfig{} : singpd::load_config(config_path);
    cfg.output_dir = out_dir;
    cfg.format = format == "markdown" ? singpd::OutputFormat::Markdown
                                      : singpd::OutputFormat::Csv;
    if (seed) cfg.mc.seed = *seed;

    if (table1->parsed()) {
      print_written(singpd::cli::cmd_table1(cfg, table1_opts));
    } else if (veto->parsed()) {
      print_written({singpd::cli::cmd_veto(cfg, veto_opts)});
    } else if (transfers->parsed()) {
      if (delta_override) cfg.transfer.delta = *delta_override;
      print_written(singpd::cli::cmd_transfers(cfg, transfer_opts));
    } else if (mc_check->parsed()) {
      if (mc_paths) cfg.mc.n_paths = *mc_paths;
      print_written({singpd::cli::cmd_mc_check(cfg, mc_opts)});
    } else if (figure1->parsed()) {
      fig1_opts.rebase = singpd::parse_month(rebase_text);
      print_written(singpd::cli::cmd_figure1(cfg, fig1_opts));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
