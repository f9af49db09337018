#include "fcpsim/traffic.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

#include "fcpsim/csv.hpp"
#include "fcpsim/rng.hpp"

namespace fcpsim {

void TrafficSpec::validate() const {
  if (!(beta_a > 0.0 && beta_b > 0.0))
    throw std::invalid_argument("traffic: beta shapes must be > 0");
  if (!(hurst > 0.5 && hurst < 1.0))
    throw std::invalid_argument("traffic: hurst must lie in (0.5, 1)");
  if (ar_order != 10)
    throw std::invalid_argument("traffic: ar_order is fixed at 10");
  if (!(purchased_rate > 0.0 && purchased_rate <= 1.0))
    throw std::invalid_argument("traffic: purchased_rate must lie in (0, 1]");
  if (n_slots < 1) throw std::invalid_argument("traffic: n_slots must be >= 1");
}

double fgn_autocorrelation(double hurst, long lag) {
  const double k = static_cast<double>(lag < 0 ? -lag : lag);
  const double h2 = 2.0 * hurst;
  return 0.5 * (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) +
                (lag == 0 ? 1.0 : std::pow(k - 1.0, h2)));
}

Eigen::VectorXd ar_coefficients(double hurst, int order) {
  if (!(hurst > 0.5 && hurst < 1.0))
    throw std::invalid_argument("ar_coefficients: hurst must lie in (0.5, 1)");
  if (order < 1) throw std::invalid_argument("ar_coefficients: order must be >= 1");

  Eigen::MatrixXd toeplitz(order, order);
  Eigen::VectorXd rhs(order);
  for (int i = 0; i < order; ++i) {
    rhs[i] = fgn_autocorrelation(hurst, i + 1);
    for (int j = 0; j < order; ++j)
      toeplitz(i, j) = fgn_autocorrelation(hurst, i - j);
  }
  const Eigen::LDLT<Eigen::MatrixXd> solver(toeplitz);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("ar_coefficients: Yule-Walker system not solvable");
  const Eigen::VectorXd coeffs = solver.solve(rhs);
  if ((toeplitz * coeffs - rhs).norm() > 1e-8 * rhs.norm())
    throw std::runtime_error("ar_coefficients: Yule-Walker solve failed");
  if (ar_spectral_radius(coeffs) >= 1.0)
    throw std::runtime_error("ar_coefficients: fitted filter is not stationary");
  return coeffs;
}

double ar_spectral_radius(const Eigen::VectorXd& coeffs) {
  const long p = coeffs.size();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
  companion.row(0) = coeffs.transpose();
  for (long i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
  const Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double beta_quantile(double a, double b, double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return boost::math::ibeta_inv(a, b, u);
}

TrafficTrace generate(const TrafficSpec& spec) {
  spec.validate();
  const int p = spec.ar_order;
  const Eigen::VectorXd coeffs = ar_coefficients(spec.hurst, p);

  // Variance of the filtered series with unit innovations, from the
  // fitted autocorrelations; used to standardize before the CDF map.
  double acc = 0.0;
  for (int j = 0; j < p; ++j) acc += coeffs[j] * fgn_autocorrelation(spec.hurst, j + 1);
  const double sigma_x = std::sqrt(1.0 / (1.0 - acc));

  GaussianSampler noise(spec.seed);
  std::vector<double> history(p, 0.0);  // most recent first
  TrafficTrace trace;
  trace.spec = spec;
  trace.samples.resize(spec.n_slots);

  const long total = kTrafficBurnIn + spec.n_slots;
  for (long k = 0; k < total; ++k) {
    double x = noise.next();
    for (int j = 0; j < p; ++j) x += coeffs[j] * history[j];
    for (int j = p - 1; j > 0; --j) history[j] = history[j - 1];
    history[0] = x;
    if (k < kTrafficBurnIn) continue;
    const double u = normal_cdf(x / sigma_x);
    trace.samples[k - kTrafficBurnIn] =
        spec.purchased_rate * beta_quantile(spec.beta_a, spec.beta_b, u);
  }
  return trace;
}

double estimate_hurst(const Eigen::Ref<const Eigen::VectorXd>& samples) {
  const long n = samples.size();
  if (n < 256) throw std::domain_error("estimate_hurst: need at least 256 samples");

  std::vector<double> log_m, log_rs;
  for (long m = 8; m <= n / 4; m *= 2) {
    const long blocks = n / m;
    double rs_sum = 0.0;
    long rs_count = 0;
    for (long b = 0; b < blocks; ++b) {
      const auto block = samples.segment(b * m, m);
      const double mean = block.mean();
      double cum = 0.0, lo = 0.0, hi = 0.0, sq = 0.0;
      for (long i = 0; i < m; ++i) {
        const double dev = block[i] - mean;
        cum += dev;
        lo = std::min(lo, cum);
        hi = std::max(hi, cum);
        sq += dev * dev;
      }
      const double stddev = std::sqrt(sq / static_cast<double>(m));
      if (stddev <= 0.0) continue;  // degenerate block carries no information
      rs_sum += (hi - lo) / stddev;
      ++rs_count;
    }
    if (rs_count == 0)
      throw std::domain_error("estimate_hurst: degenerate (constant) series");
    log_m.push_back(std::log(static_cast<double>(m)));
    log_rs.push_back(std::log(rs_sum / static_cast<double>(rs_count)));
  }
  if (log_m.size() < 2)
    throw std::domain_error("estimate_hurst: not enough block sizes");

  // Least-squares slope of log mean(R/S) against log block size.
  const long k = static_cast<long>(log_m.size());
  double mx = 0.0, my = 0.0;
  for (long i = 0; i < k; ++i) {
    mx += log_m[i];
    my += log_rs[i];
  }
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxx = 0.0, sxy = 0.0;
  for (long i = 0; i < k; ++i) {
    sxx += (log_m[i] - mx) * (log_m[i] - mx);
    sxy += (log_m[i] - mx) * (log_rs[i] - my);
  }
  return sxy / sxx;
}

void write_trace_csv(const std::string& path, const TrafficTrace& trace) {
  CsvWriter out(path);
  const TrafficSpec& s = trace.spec;
  out.echo_config({{"traffic.beta_a", format_sig(s.beta_a)},
                   {"traffic.beta_b", format_sig(s.beta_b)},
                   {"traffic.hurst", format_sig(s.hurst)},
                   {"traffic.ar_order", std::to_string(s.ar_order)},
                   {"traffic.purchased_rate", format_sig(s.purchased_rate)},
                   {"traffic.n_slots", std::to_string(s.n_slots)},
                   {"traffic.seed", std::to_string(s.seed)}});
  out.row("slot,demand");
  for (long k = 0; k < trace.samples.size(); ++k)
    out.row(std::to_string(k) + "," + format_sig(trace.samples[k]));
  out.commit();
}

TrafficTrace read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("trace import: cannot open " + path);
  TrafficTrace trace;
  TrafficSpec& s = trace.spec;
  std::vector<double> samples;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string key, eq, value;
      if (ls >> key >> eq >> value && eq == "=") {
        if (key == "traffic.beta_a") s.beta_a = std::stod(value);
        else if (key == "traffic.beta_b") s.beta_b = std::stod(value);
        else if (key == "traffic.hurst") s.hurst = std::stod(value);
        else if (key == "traffic.ar_order") s.ar_order = std::stoi(value);
        else if (key == "traffic.purchased_rate") s.purchased_rate = std::stod(value);
        else if (key == "traffic.n_slots") s.n_slots = std::stol(value);
        else if (key == "traffic.seed") s.seed = std::stoull(value);
      }
      continue;
    }
    if (!header_seen) {  // `slot,demand` column header
      header_seen = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 2)
      throw std::runtime_error("trace import: malformed row: " + line);
    samples.push_back(std::stod(fields[1]));
  }
  trace.samples = Eigen::Map<Eigen::VectorXd>(samples.data(),
                                              static_cast<long>(samples.size()));
  s.n_slots = static_cast<long>(samples.size());
  return trace;
}

}  // namespace fcpsim
