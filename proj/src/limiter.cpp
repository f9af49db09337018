#include "fcpsim/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fcpsim {

void LimiterParams::validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::invalid_argument("limiter: gamma must lie in (0, 1]");
  if (!(r_min > 0.0 && r_min < purchased_rate))
    throw std::invalid_argument("limiter: need 0 < r_min < purchased_rate");
  if (!(purchased_rate <= 1.0))
    throw std::invalid_argument("limiter: purchased_rate must lie in (r_min, 1]");
}

double indicator_step(double x) { return x < 0.0 ? 0.0 : 1.0; }

double indicator_ramp(double x) { return x < 0.0 ? 0.0 : x; }

double limiter(const LimiterParams& params, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::domain_error("limiter: alpha outside [0, 1]");
  return (params.purchased_rate - params.r_min) * std::pow(alpha, params.gamma) +
         params.r_min;
}

ShortfallWindow make_window(int window_t, double initial_weight) {
  if (window_t < 1) throw std::invalid_argument("window: t must be >= 1");
  ShortfallWindow w;
  w.window_t = window_t;
  w.weights = Eigen::VectorXd::Constant(window_t, initial_weight);
  return w;
}

bool window_full(const ShortfallWindow& w) {
  return static_cast<int>(w.flags.size()) >= w.window_t;
}

double window_alpha(const ShortfallWindow& w) {
  if (!window_full(w)) return 1.0;  // warm-up: allocate the full rate
  double acc = 0.0;
  for (int j = 0; j < w.window_t; ++j) acc += w.weights[j] * w.flags[j];
  return acc / static_cast<double>(w.window_t);
}

double clamp_alpha(double alpha) {
  return std::clamp(alpha, kAlphaEpsilon, 1.0);
}

void push_slot(ShortfallWindow& w, double demand, double allocated) {
  w.flags.push_back(indicator_step(demand - allocated));
  while (static_cast<int>(w.flags.size()) > w.window_t) w.flags.pop_front();
}

}  // namespace fcpsim
