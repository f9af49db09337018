#pragma once

#include <string>

#include <Eigen/Dense>

#include "fcpsim/limiter.hpp"

namespace fcpsim {

// Online steepest-descent state for one primary user.  The window
// owns the weight vector; gamma is a single scalar exponent.
struct EstimatorState {
  ShortfallWindow window;
  double gamma = 0.5;
  double step_rho = 0.05;
  double gamma_min = 0.05;
};

EstimatorState make_estimator(int window_t, double omega_init, double gamma_init,
                              double step_rho, double gamma_min);

// Limiter parameters with the exponent taken from the estimator
// state (the estimator owns gamma; base.gamma is ignored).
LimiterParams effective_params(const EstimatorState& state, const LimiterParams& base);

struct EstimatorGradient {
  Eigen::VectorXd d_weights;
  double d_gamma = 0.0;
};

// Squared tracking error of the current allocation against demand.
double tracking_error(const EstimatorState& state, const LimiterParams& base,
                      double demand);

// Analytic gradient of the tracking error with respect to (weights,
// gamma).  Shortfall flags are frozen constants; the window statistic
// is clamped to [kAlphaEpsilon, 1] before powers and logs.  During
// warm-up the statistic is pinned at 1, so the error does not depend
// on the parameters and the gradient is identically zero.
EstimatorGradient gradient(const EstimatorState& state, const LimiterParams& base,
                           double demand);

// One steepest-descent step followed by projection of the weights
// onto [0,1]^t and gamma onto [gamma_min, 1].
void update(EstimatorState& state, const LimiterParams& base, double demand);

// One dumped estimator row.
struct EstimatorRow {
  long slot = 0;
  double gamma = 0.0;
  Eigen::VectorXd weights;
};

// CSV dump/restore of the adapted parameters:
//   slot,gamma,omega_0..omega_{t-1}
std::string estimator_row_header(int window_t);
std::string format_estimator_row(long slot, const EstimatorState& state);
EstimatorRow parse_estimator_row(const std::string& line);

}  // namespace fcpsim
