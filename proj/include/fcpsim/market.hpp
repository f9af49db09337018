#pragma once

#include <vector>

namespace fcpsim {

// One ISP's offered secondary-service plan.
struct OfferedPlan {
  double price_s = 0.4;   // flat secondary price per contract
  double qos_min = 0.8;   // guaranteed minimum QoS, in (0, 1]
  double price_p = 0.1;   // primary price per bandwidth unit

  void validate() const;  // throws std::invalid_argument
};

// Per-ISP configuration, normalized per potential user.
struct IspConfig {
  double total_bw_per_user = 1.0;  // c, in (0, inf)
  OfferedPlan plan;
  double r_min = 0.2;              // guaranteed primary floor rate, in (0, 1)
  double lambda_penalty = 1.0;     // compensation per unit of unmet demand
  double tau_cost = 0.0;           // per-unit bandwidth cost; carried as metadata only
  int window_t = 10;               // shortfall window length

  void validate() const;
};

// Closed-form equilibrium quantities for one price-to-QoS ratio E.
struct MarketEquilibrium {
  double ratio_e = 0.0;   // E
  double z_s_star = 0.0;  // income-maximizing secondary population
  double c_s = 0.0;       // secondary bandwidth matching that population
  double split_x = 0.0;   // raw primary share of total bandwidth
  bool split_valid = false;  // split_x within [0, 1]
  double e_lower = 0.0;
  double e_upper = 0.0;
};

// Market-wide ratio E: minimum over ISPs of price_s / qos_min.
// Throws std::domain_error on an empty list.
double market_ratio(const std::vector<OfferedPlan>& plans);

// QoS perceived by secondary users: 1 - z_s / c_s.  May go negative
// under overload; callers decide validity.
double qos_secondary(double z_s, double c_s);

// Population z_s* maximizing mean secondary income at bandwidth c_s.
double optimal_secondary_population(double c_s);

// Secondary bandwidth c_s sustaining participation threshold E:
//   1 - (3/2) E + 1 / (2 E).
double secondary_bandwidth_for_ratio(double e);

// Raw primary bandwidth share plus an in-[0,1] validity flag.
struct SplitResult {
  double value = 0.0;
  bool valid = false;
};

// x = 1 + (3E - 1/E - 1) / (2 c_total); valid when x lands in [0,1].
SplitResult primary_split(double e, double c_total);

struct RatioBounds {
  double lower = 0.0;  // E_l, where the split hits 0
  double upper = 0.0;  // E_u, where the split hits 1 (independent of c)
};

RatioBounds ratio_bounds(double c_total);

// One row of the validity-region table.
struct ValidityRow {
  double c = 0.0;
  double e_lower = 0.0;
  double e_upper = 0.0;
  bool region_empty = false;
};

std::vector<ValidityRow> validity_region(const std::vector<double>& c_grid);

// Mean income from secondary contracts at population z_s:
//   (1 / (2 c_s)) (c_s - z_s) (1 - (1 - z_s)^2).
double mean_secondary_income(double z_s, double c_s);

// Mean secondary utility over the admissible type range [1 - z_s, 1]:
//   mean income minus price_s * z_s.
double mean_secondary_utility(double z_s, double c_s, double price_s);

// Assemble the full equilibrium record for ratio E at bandwidth c.
// E >= 1 leaves no admissible secondary types: z_s* = 0.
MarketEquilibrium solve_equilibrium(double e, double c_total);
MarketEquilibrium solve_equilibrium(const IspConfig& isp);

}  // namespace fcpsim
