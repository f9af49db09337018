#pragma once

namespace fcpsim {

// Contract terms of one primary user.
struct PrimaryContract {
  double purchased_rate = 0.6;  // r_p, in (0, 1]
  double theta = 0.9;           // QoS valuation type, in [0, 1]
  double price_p = 0.1;         // price per bandwidth unit
  double lambda_penalty = 1.0;  // compensation per unit of unmet demand

  void validate() const;  // throws std::invalid_argument
};

// Per-slot utility, term by term.
struct UtilityBreakdown {
  double service_value = 0.0;  // theta * allocated
  double payment = 0.0;        // purchased_rate * price_p
  double compensation = 0.0;   // lambda * max(0, demand - allocated)
  double total = 0.0;          // service_value - payment + compensation
};

UtilityBreakdown primary_utility(const PrimaryContract& contract, double allocated,
                                 double demand);

// Lowest type that is always served with nonnegative utility under
// the conservative bound: price_p / r_min.
double primary_participation_bound(double price_p, double r_min);

struct MeanPrimaryUtility {
  double value = 0.0;
  bool empty_range = false;  // participation threshold at or above 1
};

// Utility averaged over participating types theta in [price_p/r_min, 1]:
//   (1 - (p/r_min)^2)/2 * allocated
//   + (lambda * max(0, demand - allocated) - r_p * price_p) * (1 - p/r_min).
MeanPrimaryUtility mean_primary_utility(double price_p, double r_min,
                                        double purchased_rate, double lambda_penalty,
                                        double allocated, double demand);

}  // namespace fcpsim
