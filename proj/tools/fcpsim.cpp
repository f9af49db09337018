// Command-line front end: closed-form market tables, burst-traffic
// synthesis, the timeslot simulation ledger, and the gamma-vs-beta
// sweep, all emitted as plot-ready CSV.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcpsim/config.hpp"
#include "fcpsim/csv.hpp"
#include "fcpsim/market.hpp"
#include "fcpsim/sim.hpp"
#include "fcpsim/traffic.hpp"

namespace {

using namespace fcpsim;

struct WindowRange {
  long lo = 0;
  long hi = 0;
};

WindowRange parse_window(const std::string& text, long n_slots) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw ConfigError("window: expected A:B, got '" + text + "'");
  WindowRange w;
  try {
    w.lo = std::stol(text.substr(0, colon));
    w.hi = std::stol(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw ConfigError("window: expected integers A:B, got '" + text + "'");
  }
  if (w.lo < 0 || w.hi < w.lo || w.hi >= n_slots)
    throw ConfigError("window: range " + text + " outside 0.." +
                      std::to_string(n_slots - 1));
  return w;
}

std::vector<double> linspace(double lo, double hi, long steps) {
  std::vector<double> grid;
  grid.reserve(steps);
  if (steps == 1) {
    grid.push_back(lo);
    return grid;
  }
  for (long i = 0; i < steps; ++i)
    grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                            static_cast<double>(steps - 1));
  return grid;
}

int cmd_market(const Config& cfg, const std::string& out_path) {
  std::vector<double> grid;
  if (cfg.has("market", "c")) {
    grid.push_back(cfg.get_double("market", "c"));
  } else {
    const double c_min = cfg.get_double("market", "c_min", 0.1);
    const double c_max = cfg.get_double("market", "c_max", 2.0);
    const long steps = cfg.get_long("market", "c_steps", 100);
    if (steps < 1 || c_min <= 0.0 || c_max < c_min)
      throw ConfigError("config: bad [market] grid");
    grid = linspace(c_min, c_max, steps);
  }
  const double sweep_c = cfg.get_double("market", "xsweep_c", 1.0);
  const double e_min = cfg.get_double("market", "xsweep_e_min", 0.05);
  const double e_max = cfg.get_double("market", "xsweep_e_max", 1.0);
  const long e_steps = cfg.get_long("market", "xsweep_steps", 100);
  if (e_steps < 1 || e_min <= 0.0 || e_max < e_min)
    throw ConfigError("config: bad [market] ratio sweep");

  CsvWriter region(out_path);
  region.echo_config(cfg.resolved());
  region.row("c,e_lower,e_upper,region_empty");
  for (const ValidityRow& r : validity_region(grid)) {
    region.row(format_sig(r.c) + "," + format_sig(r.e_lower) + "," +
               format_sig(r.e_upper) + "," + (r.region_empty ? "1" : "0"));
  }
  region.commit();

  CsvWriter sweep(path_with_suffix(out_path, "_xsweep"));
  sweep.echo_config(cfg.resolved());
  sweep.row("e,x_raw,x_valid");
  for (double e : linspace(e_min, e_max, e_steps)) {
    const SplitResult x = primary_split(e, sweep_c);
    sweep.row(format_sig(e) + "," + format_sig(x.value) + "," +
              (x.valid ? "1" : "0"));
  }
  sweep.commit();
  return 0;
}

int cmd_traffic(const Config& cfg, const std::string& out_path,
                std::optional<std::uint64_t> seed) {
  const TrafficSpec spec = traffic_spec_from_config(cfg, seed);
  const TrafficTrace trace = generate(spec);

  CsvWriter out(out_path);
  out.echo_config(cfg.resolved());
  out.comment("rng = mt19937_64+box-muller");
  out.comment("mean = " + format_sig(trace.samples.mean()));
  if (trace.samples.size() >= 256)
    out.comment("hurst_rs = " + format_sig(estimate_hurst(trace.samples)));
  out.row("slot,demand");
  for (long k = 0; k < trace.samples.size(); ++k)
    out.row(std::to_string(k) + "," + format_sig(trace.samples[k]));
  out.commit();
  return 0;
}

std::string ledger_line(const SlotRecord& r) {
  return std::to_string(r.slot) + "," + std::to_string(r.user) + "," +
         format_sig(r.demand) + "," + format_sig(r.alpha) + "," +
         format_sig(r.allocated) + "," + format_sig(r.shortfall) + "," +
         format_sig(r.penalty) + "," + format_sig(r.utility.total) + "," +
         format_sig(r.gamma);
}

int cmd_simulate(const Config& cfg, const std::string& out_path,
                 std::optional<std::uint64_t> seed,
                 const std::optional<std::string>& window) {
  const Scenario scenario = scenario_from_config(cfg, seed);
  std::optional<WindowRange> range;
  if (window) range = parse_window(*window, scenario.n_slots);

  const RunResult result = run(scenario);
  const RunSummary& s = result.summary;

  const std::string header =
      "slot,user,demand,alpha,allocated,shortfall,penalty,utility,gamma";
  CsvWriter ledger(out_path);
  ledger.echo_config(cfg.resolved());
  ledger.row(header);
  for (const SlotRecord& r : result.records) ledger.row(ledger_line(r));
  ledger.commit();

  const std::vector<std::pair<std::string, std::string>> summary_kv = {
      {"mean_allocated", format_sig(s.mean_allocated)},
      {"mean_demand", format_sig(s.mean_demand)},
      {"shortfall_fraction", format_sig(s.shortfall_fraction)},
      {"total_penalty", format_sig(s.total_penalty)},
      {"saved_bandwidth", format_sig(s.saved_bandwidth)},
      {"final_gamma", format_sig(s.final_gamma)},
      {"secondary_qos_uplift", format_sig(s.secondary_qos_uplift)},
      {"capacity_violated", s.capacity_violated ? "1" : "0"}};

  CsvWriter summary(path_with_suffix(out_path, "_summary"));
  summary.echo_config(cfg.resolved());
  std::string head, row;
  for (const auto& [key, value] : summary_kv) {
    head += (head.empty() ? "" : ",") + key;
    row += (row.empty() ? "" : ",") + value;
  }
  summary.row(head);
  summary.row(row);
  summary.commit();

  for (const auto& [key, value] : summary_kv)
    std::cout << key << " = " << value << '\n';

  if (range) {
    CsvWriter extract(path_with_suffix(out_path, "_window"));
    extract.echo_config(cfg.resolved());
    extract.comment("window = " + std::to_string(range->lo) + ":" +
                    std::to_string(range->hi));
    extract.row(header);
    for (const SlotRecord& r : result.records)
      if (r.slot >= range->lo && r.slot <= range->hi)
        extract.row(ledger_line(r));
    extract.commit();
  }
  return 0;
}

int cmd_sweep(const Config& cfg, const std::string& out_path,
              std::optional<std::uint64_t> seed) {
  const Scenario base = scenario_from_config(cfg, seed);
  const std::vector<double> betas = cfg.get_double_list("sweep", "beta_values");
  const std::vector<std::uint64_t> seeds = cfg.get_u64_list("sweep", "seeds");
  if (betas.empty()) throw ConfigError("config: [sweep] beta_values is empty");
  if (seeds.empty()) throw ConfigError("config: [sweep] seeds is empty");

  const std::vector<SweepRow> rows = beta_sweep(base, betas, seeds);
  CsvWriter out(out_path);
  out.echo_config(cfg.resolved());
  out.row("beta_b,gamma_mean");
  for (const SweepRow& r : rows) {
    out.row(format_sig(r.beta_b) + "," + format_sig(r.gamma_mean));
    std::cout << "beta_b = " << format_sig(r.beta_b)
              << "  gamma_mean = " << format_sig(r.gamma_mean) << '\n';
  }
  out.commit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-class bandwidth market and adaptive rate-limiter simulator"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "csv";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> window;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file")->required();
    sub->add_option("--out", out_path, "output CSV path")->required();
    sub->add_option("--seed", seed, "override the config seed");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv"}));
  };

  CLI::App* market = app.add_subcommand("market", "validity region and split sweep");
  add_common(market);
  CLI::App* traffic = app.add_subcommand("traffic", "generate one demand trace");
  add_common(traffic);
  CLI::App* simulate = app.add_subcommand("simulate", "run the timeslot ledger");
  add_common(simulate);
  simulate->add_option("--window", window, "emit an extract for slots A:B");
  CLI::App* sweep = app.add_subcommand("sweep", "mean final gamma per beta");
  add_common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a config error
  }

  try {
    const fcpsim::Config cfg = fcpsim::Config::parse_file(config_path);
    if (market->parsed()) return cmd_market(cfg, out_path);
    if (traffic->parsed()) return cmd_traffic(cfg, out_path, seed);
    if (simulate->parsed()) return cmd_simulate(cfg, out_path, seed, window);
    if (sweep->parsed()) return cmd_sweep(cfg, out_path, seed);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const fcpsim::ConfigError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 3;
  }
}
