#include "fcpsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fcpsim/rng.hpp"

namespace fcpsim {

void Scenario::validate() const {
  isp.validate();
  if (users.empty()) throw std::invalid_argument("scenario: need at least one user");
  if (n_slots < 1) throw std::invalid_argument("scenario: n_slots must be >= 1");
  for (const auto& u : users) {
    u.contract.validate();
    u.traffic.validate();
    if (u.traffic.n_slots != n_slots)
      throw std::invalid_argument("scenario: trace length differs from n_slots");
    if (u.traffic.purchased_rate != u.contract.purchased_rate)
      throw std::invalid_argument("scenario: trace and contract rates differ");
    if (!(isp.r_min < u.contract.purchased_rate))
      throw std::invalid_argument("scenario: r_min must stay below purchased_rate");
    if (u.contract.lambda_penalty != isp.lambda_penalty)
      throw std::invalid_argument("scenario: user and ISP penalty rates differ");
  }
}

RunResult run(const Scenario& scenario) {
  scenario.validate();
  std::vector<TrafficTrace> traces;
  traces.reserve(scenario.users.size());
  for (const auto& u : scenario.users) {
    TrafficSpec spec = u.traffic;
    // Mix the scenario seed with the user's own trace seed; identical
    // user setups then see identical traces, distinct seeds diverge.
    spec.seed = derive_seed(scenario.seed, u.traffic.seed);
    traces.push_back(generate(spec));
  }
  return run_with_traces(scenario, traces);
}

RunResult run_with_traces(const Scenario& scenario,
                          const std::vector<TrafficTrace>& traces) {
  scenario.validate();
  if (traces.size() != scenario.users.size())
    throw std::invalid_argument("run: one trace per user required");
  for (const auto& t : traces)
    if (t.samples.size() != scenario.n_slots)
      throw std::invalid_argument("run: trace length differs from n_slots");

  RunResult result;
  result.records.reserve(scenario.users.size() * scenario.n_slots);
  const EstimatorDefaults& est = scenario.estimator;
  double gamma_sum = 0.0;

  for (std::size_t i = 0; i < scenario.users.size(); ++i) {
    const PrimaryContract& contract = scenario.users[i].contract;
    const LimiterParams base{est.gamma_init, scenario.isp.r_min,
                             contract.purchased_rate};
    base.validate();
    EstimatorState state = make_estimator(scenario.isp.window_t, est.omega_init,
                                          est.gamma_init, est.step_rho, est.gamma_min);

    for (long k = 0; k < scenario.n_slots; ++k) {
      const double alpha = window_alpha(state.window);
      const double allocated = limiter(effective_params(state, base), alpha);
      const double demand = traces[i].samples[k];
      const double shortfall = indicator_ramp(demand - allocated);

      SlotRecord rec;
      rec.slot = k;
      rec.user = static_cast<int>(i);
      rec.demand = demand;
      rec.alpha = alpha;
      rec.allocated = allocated;
      rec.shortfall = shortfall;
      rec.penalty = scenario.isp.lambda_penalty * shortfall;
      rec.utility = primary_utility(contract, allocated, demand);

      push_slot(state.window, demand, allocated);
      update(state, base, demand);
      rec.gamma = state.gamma;
      result.records.push_back(rec);
    }
    gamma_sum += state.gamma;
  }

  RunSummary& s = result.summary;
  const double count = static_cast<double>(result.records.size());
  long unmet = 0;
  for (const auto& rec : result.records) {
    s.mean_allocated += rec.allocated;
    s.mean_demand += rec.demand;
    s.total_penalty += rec.penalty;
    s.saved_bandwidth +=
        scenario.users[rec.user].contract.purchased_rate - rec.allocated;
    if (rec.shortfall > 0.0) ++unmet;
  }
  s.mean_allocated /= count;
  s.mean_demand /= count;
  s.saved_bandwidth /= count;
  s.shortfall_fraction = static_cast<double>(unmet) / count;
  s.final_gamma = gamma_sum / static_cast<double>(scenario.users.size());

  // Allocations are normalized by the primary pool, so the per-slot
  // capacity check is a unit sum across users.
  const long n_users = static_cast<long>(scenario.users.size());
  for (long k = 0; k < scenario.n_slots && !s.capacity_violated; ++k) {
    double slot_total = 0.0;
    for (long i = 0; i < n_users; ++i)
      slot_total += result.records[i * scenario.n_slots + k].allocated;
    if (slot_total > 1.0 + 1e-12) s.capacity_violated = true;
  }

  const MarketEquilibrium eq = solve_equilibrium(scenario.isp);
  s.secondary_qos_uplift = secondary_uplift(scenario.isp, s.saved_bandwidth,
                                            eq.z_s_star);
  return result;
}

double qos_uplift(double z_s, double c_s, double extra_bandwidth) {
  if (!(c_s > 0.0)) throw std::domain_error("qos_uplift: c_s must be > 0");
  if (!(extra_bandwidth >= 0.0))
    throw std::domain_error("qos_uplift: extra bandwidth must be >= 0");
  return z_s / c_s - z_s / (c_s + extra_bandwidth);
}

double secondary_uplift(const IspConfig& isp, double saved_bandwidth, double z_s) {
  if (!(saved_bandwidth >= 0.0))
    throw std::domain_error("secondary_uplift: saved bandwidth must be >= 0");
  const double e = market_ratio({isp.plan});
  if (e >= 1.0) return 0.0;  // no admissible secondary types
  const double c_s = secondary_bandwidth_for_ratio(e);
  if (!(c_s > 0.0)) return 0.0;
  const double split = std::clamp(primary_split(e, isp.total_bw_per_user).value,
                                  0.0, 1.0);
  const double extra = saved_bandwidth * split * isp.total_bw_per_user;
  return qos_uplift(z_s, c_s, extra);
}

std::vector<SweepRow> beta_sweep(const Scenario& base,
                                 const std::vector<double>& beta_b_values,
                                 const std::vector<std::uint64_t>& seeds) {
  if (beta_b_values.empty())
    throw std::invalid_argument("beta_sweep: empty beta list");
  if (seeds.empty()) throw std::invalid_argument("beta_sweep: empty seed list");

  std::vector<SweepRow> rows;
  rows.reserve(beta_b_values.size());
  for (double beta_b : beta_b_values) {
    double acc = 0.0;
    for (std::uint64_t seed : seeds) {
      Scenario s = base;
      s.seed = seed;
      for (auto& u : s.users) u.traffic.beta_b = beta_b;
      acc += run(s).summary.final_gamma;
    }
    rows.push_back({beta_b, acc / static_cast<double>(seeds.size())});
  }
  return rows;
}

}  // namespace fcpsim
