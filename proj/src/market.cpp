#include "fcpsim/market.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fcpsim {

void OfferedPlan::validate() const {
  if (!(price_s > 0.0)) throw std::invalid_argument("plan: price_s must be > 0");
  if (!(qos_min > 0.0 && qos_min <= 1.0))
    throw std::invalid_argument("plan: qos_min must lie in (0, 1]");
  if (!(price_p > 0.0)) throw std::invalid_argument("plan: price_p must be > 0");
}

void IspConfig::validate() const {
  if (!(total_bw_per_user > 0.0))
    throw std::invalid_argument("isp: total_bw_per_user must be > 0");
  plan.validate();
  if (!(r_min > 0.0 && r_min < 1.0))
    throw std::invalid_argument("isp: r_min must lie in (0, 1)");
  if (!(lambda_penalty >= 0.0))
    throw std::invalid_argument("isp: lambda_penalty must be >= 0");
  if (window_t < 1) throw std::invalid_argument("isp: window_t must be >= 1");
}

double market_ratio(const std::vector<OfferedPlan>& plans) {
  if (plans.empty()) throw std::domain_error("market_ratio: empty plan list");
  double e = std::numeric_limits<double>::infinity();
  for (const auto& p : plans) {
    p.validate();
    e = std::min(e, p.price_s / p.qos_min);
  }
  return e;
}

double qos_secondary(double z_s, double c_s) {
  if (!(c_s > 0.0)) throw std::domain_error("qos_secondary: c_s must be > 0");
  return 1.0 - z_s / c_s;
}

double optimal_secondary_population(double c_s) {
  if (!(c_s > 0.0))
    throw std::domain_error("optimal_secondary_population: c_s must be > 0");
  const double u = 1.0 - c_s;
  return 1.0 - (u + std::sqrt(u * u + 3.0)) / 3.0;
}

double secondary_bandwidth_for_ratio(double e) {
  if (!(e > 0.0))
    throw std::domain_error("secondary_bandwidth_for_ratio: E must be > 0");
  return 1.0 - 1.5 * e + 0.5 / e;
}

SplitResult primary_split(double e, double c_total) {
  if (!(e > 0.0)) throw std::domain_error("primary_split: E must be > 0");
  if (!(c_total > 0.0)) throw std::domain_error("primary_split: c must be > 0");
  SplitResult r;
  r.value = 1.0 + (3.0 * e - 1.0 / e - 1.0) / (2.0 * c_total);
  r.valid = r.value >= 0.0 && r.value <= 1.0;
  return r;
}

RatioBounds ratio_bounds(double c_total) {
  if (!(c_total > 0.0)) throw std::domain_error("ratio_bounds: c must be > 0");
  RatioBounds b;
  const double u = 1.0 - 2.0 * c_total;
  b.lower = (u + std::sqrt(u * u + 12.0)) / 6.0;
  b.upper = (1.0 + std::sqrt(13.0)) / 6.0;  // split hits 1; independent of c
  return b;
}

std::vector<ValidityRow> validity_region(const std::vector<double>& c_grid) {
  std::vector<ValidityRow> rows;
  rows.reserve(c_grid.size());
  for (double c : c_grid) {
    const RatioBounds b = ratio_bounds(c);
    rows.push_back({c, b.lower, b.upper, b.lower >= b.upper});
  }
  return rows;
}

double mean_secondary_income(double z_s, double c_s) {
  if (!(c_s > 0.0)) throw std::domain_error("mean_secondary_income: c_s must be > 0");
  const double out = 1.0 - z_s;
  return (c_s - z_s) * (1.0 - out * out) / (2.0 * c_s);
}

double mean_secondary_utility(double z_s, double c_s, double price_s) {
  if (!(price_s >= 0.0))
    throw std::domain_error("mean_secondary_utility: price must be >= 0");
  return mean_secondary_income(z_s, c_s) - price_s * z_s;
}

MarketEquilibrium solve_equilibrium(double e, double c_total) {
  MarketEquilibrium eq;
  eq.ratio_e = e;
  // E >= 1 empties the admissible type range [E, 1]: no secondary users.
  eq.z_s_star = e < 1.0 ? 1.0 - e : 0.0;
  eq.c_s = e <= 1.0 ? secondary_bandwidth_for_ratio(e) : 0.0;
  const SplitResult split = primary_split(e, c_total);
  eq.split_x = split.value;
  eq.split_valid = split.valid;
  const RatioBounds b = ratio_bounds(c_total);
  eq.e_lower = b.lower;
  eq.e_upper = b.upper;
  return eq;
}

MarketEquilibrium solve_equilibrium(const IspConfig& isp) {
  isp.validate();
  return solve_equilibrium(market_ratio({isp.plan}), isp.total_bw_per_user);
}

}  // namespace fcpsim
