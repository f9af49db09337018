#include "fcpsim/utility.hpp"

#include <stdexcept>

#include "fcpsim/limiter.hpp"

namespace fcpsim {

void PrimaryContract::validate() const {
  if (!(purchased_rate > 0.0 && purchased_rate <= 1.0))
    throw std::invalid_argument("contract: purchased_rate must lie in (0, 1]");
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::invalid_argument("contract: theta must lie in [0, 1]");
  if (!(price_p >= 0.0)) throw std::invalid_argument("contract: price_p must be >= 0");
  if (!(lambda_penalty >= 0.0))
    throw std::invalid_argument("contract: lambda_penalty must be >= 0");
}

UtilityBreakdown primary_utility(const PrimaryContract& contract, double allocated,
                                 double demand) {
  UtilityBreakdown u;
  u.service_value = contract.theta * allocated;
  u.payment = contract.purchased_rate * contract.price_p;
  u.compensation = contract.lambda_penalty * indicator_ramp(demand - allocated);
  u.total = u.service_value - u.payment + u.compensation;
  return u;
}

double primary_participation_bound(double price_p, double r_min) {
  if (!(r_min > 0.0))
    throw std::domain_error("participation bound: r_min must be > 0");
  return price_p / r_min;
}

MeanPrimaryUtility mean_primary_utility(double price_p, double r_min,
                                        double purchased_rate, double lambda_penalty,
                                        double allocated, double demand) {
  MeanPrimaryUtility out;
  const double theta_low = primary_participation_bound(price_p, r_min);
  if (theta_low >= 1.0) {
    out.empty_range = true;  // no participating types
    return out;
  }
  const double width = 1.0 - theta_low;
  out.value = 0.5 * (1.0 - theta_low * theta_low) * allocated +
              (lambda_penalty * indicator_ramp(demand - allocated) -
               purchased_rate * price_p) *
                  width;
  return out;
}

}  // namespace fcpsim
