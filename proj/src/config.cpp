#include "singpd/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace singpd {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    throw std::runtime_error("cannot parse value '" + value + "' for key '" + key + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end)
    throw std::runtime_error("cannot parse value '" + value + "' for key '" + key + "'");
  return out;
}

}  // namespace

void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  // Model fields apply to every block so one file describes one economy.
  const auto set_model_field = [&](double ModelParams::* field) {
    const double v = parse_double(key, value);
    cfg.model.*field = v;
    cfg.veto.base.*field = v;
    cfg.transfer.base.*field = v;
    cfg.mc.params.*field = v;
  };

  if (key == "beta") return set_model_field(&ModelParams::beta);
  if (key == "g") return set_model_field(&ModelParams::g);
  if (key == "gamma") return set_model_field(&ModelParams::gamma);
  if (key == "p") return set_model_field(&ModelParams::p);
  if (key == "xi") return set_model_field(&ModelParams::xi);
  if (key == "eta") return set_model_field(&ModelParams::eta);
  if (key == "phi") return set_model_field(&ModelParams::phi);
  if (key == "theta") return set_model_field(&ModelParams::theta);
  if (key == "delta_theta") return set_model_field(&ModelParams::delta_theta);

  if (key == "alpha") {
    const double v = parse_double(key, value);
    cfg.veto.alpha = v;
    cfg.transfer.alpha = v;
    return;
  }
  if (key == "q") {
    cfg.veto.q = parse_double(key, value);
    return;
  }
  if (key == "kappa") {
    cfg.veto.kappa = parse_double(key, value);
    return;
  }
  if (key == "tau") {
    cfg.transfer.tau = parse_double(key, value);
    return;
  }
  if (key == "delta") {
    cfg.transfer.delta = parse_double(key, value);
    return;
  }
  if (key == "seed") {
    cfg.mc.seed = parse_u64(key, value);
    return;
  }
  if (key == "n_paths") {
    cfg.mc.n_paths = static_cast<std::int64_t>(parse_u64(key, value));
    return;
  }
  if (key == "horizon") {
    cfg.mc.horizon = static_cast<std::int64_t>(parse_u64(key, value));
    return;
  }
  throw std::runtime_error("unknown config key '" + key + "'");
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 'key = value', got '" + line + "'");
    try {
      set_config_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  cfg.model.validate();
  cfg.veto.validate();
  cfg.transfer.validate();
  cfg.mc.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config_text(text.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace singpd
