#include "fcpsim/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fcpsim/csv.hpp"

namespace fcpsim {

EstimatorState make_estimator(int window_t, double omega_init, double gamma_init,
                              double step_rho, double gamma_min) {
  if (!(step_rho > 0.0)) throw std::invalid_argument("estimator: rho must be > 0");
  if (!(gamma_min > 0.0 && gamma_min <= 1.0))
    throw std::invalid_argument("estimator: gamma_min must lie in (0, 1]");
  if (!(gamma_init >= gamma_min && gamma_init <= 1.0))
    throw std::invalid_argument("estimator: gamma_init must lie in [gamma_min, 1]");
  if (!(omega_init >= 0.0 && omega_init <= 1.0))
    throw std::invalid_argument("estimator: omega_init must lie in [0, 1]");
  EstimatorState s;
  s.window = make_window(window_t, omega_init);
  s.gamma = gamma_init;
  s.step_rho = step_rho;
  s.gamma_min = gamma_min;
  return s;
}

LimiterParams effective_params(const EstimatorState& state, const LimiterParams& base) {
  LimiterParams p = base;
  p.gamma = state.gamma;
  return p;
}

double tracking_error(const EstimatorState& state, const LimiterParams& base,
                      double demand) {
  const double g = limiter(effective_params(state, base), window_alpha(state.window));
  const double e = g - demand;
  return e * e;
}

EstimatorGradient gradient(const EstimatorState& state, const LimiterParams& base,
                           double demand) {
  const ShortfallWindow& w = state.window;
  EstimatorGradient grad;
  grad.d_weights = Eigen::VectorXd::Zero(w.window_t);
  // Warm-up pins the statistic at 1, so the error is flat in (w, gamma).
  if (!window_full(w)) return grad;

  const double span = base.purchased_rate - base.r_min;
  const double a = clamp_alpha(window_alpha(w));
  const double g = span * std::pow(a, state.gamma) + base.r_min;
  const double e = g - demand;

  const double common = 2.0 * e * span;
  const double dalpha = common * state.gamma * std::pow(a, state.gamma - 1.0);
  for (int j = 0; j < w.window_t; ++j)
    grad.d_weights[j] = dalpha * w.flags[j] / static_cast<double>(w.window_t);
  grad.d_gamma = common * std::pow(a, state.gamma) * std::log(a);
  return grad;
}

void update(EstimatorState& state, const LimiterParams& base, double demand) {
  const EstimatorGradient grad = gradient(state, base, demand);
  ShortfallWindow& w = state.window;
  for (int j = 0; j < w.window_t; ++j) {
    w.weights[j] = std::clamp(w.weights[j] - state.step_rho * grad.d_weights[j],
                              0.0, 1.0);
  }
  state.gamma = std::clamp(state.gamma - state.step_rho * grad.d_gamma,
                           state.gamma_min, 1.0);
}

std::string estimator_row_header(int window_t) {
  std::ostringstream os;
  os << "slot,gamma";
  for (int j = 0; j < window_t; ++j) os << ",omega_" << j;
  return os.str();
}

std::string format_estimator_row(long slot, const EstimatorState& state) {
  std::ostringstream os;
  os << slot << ',' << format_sig(state.gamma);
  for (int j = 0; j < state.window.window_t; ++j)
    os << ',' << format_sig(state.window.weights[j]);
  return os.str();
}

EstimatorRow parse_estimator_row(const std::string& line) {
  const std::vector<std::string> fields = split_csv_line(line);
  if (fields.size() < 3)
    throw std::invalid_argument("estimator row: expected slot,gamma,omega_0..");
  EstimatorRow row;
  row.slot = std::stol(fields[0]);
  row.gamma = std::stod(fields[1]);
  row.weights.resize(static_cast<long>(fields.size()) - 2);
  for (std::size_t j = 2; j < fields.size(); ++j)
    row.weights[static_cast<long>(j) - 2] = std::stod(fields[j]);
  return row;
}

}  // namespace fcpsim
