#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace fcpsim {

// Number of leading filter outputs discarded to wash out transients.
inline constexpr long kTrafficBurnIn = 1000;

// Parameters of the burst-demand generator.
struct TrafficSpec {
  double beta_a = 3.0;          // beta marginal shape a, > 0
  double beta_b = 4.0;          // beta marginal shape b, > 0
  double hurst = 0.8;           // target long-range-dependence index, in (0.5, 1)
  int ar_order = 10;            // autoregressive filter order (fixed)
  double purchased_rate = 0.6;  // peak rate scaling the marginal, in (0, 1]
  long n_slots = 10000;
  std::uint64_t seed = 42;

  void validate() const;  // throws std::invalid_argument
};

struct TrafficTrace {
  Eigen::VectorXd samples;  // one demand per slot, each in [0, purchased_rate]
  TrafficSpec spec;
};

// Autocorrelation of fractional Gaussian noise at integer lag k:
//   rho(k) = ((k+1)^(2H) - 2 k^(2H) + (k-1)^(2H)) / 2.
double fgn_autocorrelation(double hurst, long lag);

// Yule-Walker fit of an AR(order) filter to the fGn autocorrelation.
// Throws std::runtime_error if the system is singular or the fitted
// filter is not stationary.
Eigen::VectorXd ar_coefficients(double hurst, int order);

// Largest characteristic-root magnitude of the AR filter; < 1 means
// stationary.
double ar_spectral_radius(const Eigen::VectorXd& coeffs);

// Standard normal CDF.
double normal_cdf(double z);

// Inverse CDF of the Beta(a, b) distribution.
double beta_quantile(double a, double b, double u);

// Generate one trace: AR-filtered unit Gaussian innovations with a
// burn-in, standardized, then mapped through the normal CDF and the
// inverse beta CDF, and scaled by the purchased rate.  Deterministic
// in the settings (including the seed).
TrafficTrace generate(const TrafficSpec& spec);

// Rescaled-range (R/S) Hurst estimate: regression slope of
// log mean(R/S) against log block size over dyadic block sizes from 8
// to n/4.  Throws std::domain_error for inputs shorter than 256
// samples or with a degenerate (constant) block structure.
double estimate_hurst(const Eigen::Ref<const Eigen::VectorXd>& samples);

// Trace export/import: '#'-prefixed settings echo plus `slot,demand` rows.
void write_trace_csv(const std::string& path, const TrafficTrace& trace);
TrafficTrace read_trace_csv(const std::string& path);

}  // namespace fcpsim
