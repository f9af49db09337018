#pragma once

#include <deque>

#include <Eigen/Dense>

namespace fcpsim {

// Lower clamp applied to the window statistic before it feeds any
// path that takes its logarithm or a negative power.
inline constexpr double kAlphaEpsilon = 1e-6;

// Hard threshold: 1 when x >= 0, else 0.
double indicator_step(double x);

// One-sided ramp: x when x >= 0, else 0.
double indicator_ramp(double x);

// Static parameters of the rate limiter.
struct LimiterParams {
  double gamma = 0.5;           // power-law exponent, in (0, 1]
  double r_min = 0.2;           // guaranteed floor rate, in (0, purchased_rate)
  double purchased_rate = 0.9;  // contracted peak rate, in (0, 1]

  void validate() const;  // throws std::invalid_argument on bad fields
};

// Allocated rate for a window statistic alpha in [0, 1]:
//   (purchased_rate - r_min) * alpha^gamma + r_min.
// Throws std::domain_error if alpha is outside [0, 1].
double limiter(const LimiterParams& params, double alpha);

// Sliding window of unmet-demand flags with one weight per slot
// position.  Flags and weights are kept oldest-first.
struct ShortfallWindow {
  int window_t = 0;
  std::deque<double> flags;  // binary history, oldest first
  Eigen::VectorXd weights;   // per-position weights, oldest first
};

ShortfallWindow make_window(int window_t, double initial_weight);

// True once window_t flags have been observed.
bool window_full(const ShortfallWindow& w);

// Weighted mean of the stored flags.  Returns 1.0 during warm-up
// (fewer than window_t flags seen) so early slots allocate the full
// purchased rate.
double window_alpha(const ShortfallWindow& w);

// Clamp a raw window statistic into [kAlphaEpsilon, 1].
double clamp_alpha(double alpha);

// Record one finished slot: pushes the flag 1(demand - allocated)
// and drops the oldest flag when the window is already full.
void push_slot(ShortfallWindow& w, double demand, double allocated);

}  // namespace fcpsim
