#pragma once

#include <cstdint>
#include <vector>

#include "fcpsim/estimator.hpp"
#include "fcpsim/market.hpp"
#include "fcpsim/traffic.hpp"
#include "fcpsim/utility.hpp"

namespace fcpsim {

// Initial values and step size for every per-user estimator.
struct EstimatorDefaults {
  double step_rho = 0.05;
  double gamma_init = 0.5;
  double omega_init = 0.5;
  double gamma_min = 0.05;
};

struct PrimaryUserSetup {
  PrimaryContract contract;
  TrafficSpec traffic;
};

struct Scenario {
  IspConfig isp;
  std::vector<PrimaryUserSetup> users;
  long n_slots = 10000;
  std::uint64_t seed = 42;
  EstimatorDefaults estimator;

  void validate() const;  // throws std::invalid_argument
};

// One ledger line.
struct SlotRecord {
  long slot = 0;
  int user = 0;
  double demand = 0.0;
  double alpha = 0.0;      // window statistic used for this slot's allocation
  double allocated = 0.0;
  double shortfall = 0.0;  // max(0, demand - allocated)
  double penalty = 0.0;    // lambda * shortfall
  UtilityBreakdown utility;
  double gamma = 0.0;      // exponent after this slot's update
};

struct RunSummary {
  double mean_allocated = 0.0;
  double mean_demand = 0.0;
  double shortfall_fraction = 0.0;  // fraction of slots with shortfall > 0
  double total_penalty = 0.0;
  double saved_bandwidth = 0.0;     // mean(r_p - allocated)
  double final_gamma = 0.0;         // mean over users of the final exponent
  double secondary_qos_uplift = 0.0;
  bool capacity_violated = false;   // any slot allocated more than the primary pool
};

struct RunResult {
  std::vector<SlotRecord> records;  // ordered by user, then slot
  RunSummary summary;
};

// Full run: generates each user's trace from the scenario seed, then
// drives the slot loop.  Per-user trace seeds are derived by mixing
// the scenario seed with the user's own traffic seed, so identical
// user setups receive identical traces.
RunResult run(const Scenario& scenario);

// Slot loop against externally supplied traces (one per user).
RunResult run_with_traces(const Scenario& scenario,
                          const std::vector<TrafficTrace>& traces);

// QoS gain for secondary users when extra bandwidth is pooled into c_s:
//   z_s/c_s - z_s/(c_s + extra).
double qos_uplift(double z_s, double c_s, double extra_bandwidth);

// Mean secondary QoS uplift from the saved per-primary-user rate,
// converted to per-user bandwidth through the equilibrium split.
double secondary_uplift(const IspConfig& isp, double saved_bandwidth, double z_s);

struct SweepRow {
  double beta_b = 0.0;
  double gamma_mean = 0.0;  // final gamma averaged over users and seeds
};

// Re-run the scenario for each beta_b value and seed; average the
// final exponent.
std::vector<SweepRow> beta_sweep(const Scenario& base,
                                 const std::vector<double>& beta_b_values,
                                 const std::vector<std::uint64_t>& seeds);

}  // namespace fcpsim
