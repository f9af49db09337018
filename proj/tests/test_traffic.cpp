#include <stdexcept>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include <doctest.h>

#include <boost/math/special_functions/beta.hpp>

#include "fcpsim/rng.hpp"
#include "fcpsim/traffic.hpp"
#include "oracles.hpp"

using namespace fcpsim;

TEST_CASE("fGn autocorrelation: unit lag-0, known lag-1, symmetry, white limit") {
  CHECK(fgn_autocorrelation(0.8, 0) == doctest::Approx(1.0));
  CHECK(fgn_autocorrelation(0.8, 1) ==
        doctest::Approx(std::pow(2.0, 0.6) - 1.0).epsilon(1e-12));  // ~0.5157
  CHECK(fgn_autocorrelation(0.8, 5) == doctest::Approx(fgn_autocorrelation(0.8, -5)));
  for (long k = 1; k <= 20; ++k)
    CHECK(std::abs(fgn_autocorrelation(0.5001, k)) < 1e-3);
}

TEST_CASE("Yule-Walker filter: length, near-white limit, stationarity") {
  const Eigen::VectorXd coeffs = ar_coefficients(0.8, 10);
  REQUIRE(coeffs.size() == 10);
  CHECK(ar_spectral_radius(coeffs) < 1.0);

  const Eigen::VectorXd faint = ar_coefficients(0.501, 10);
  for (int j = 0; j < faint.size(); ++j) CHECK(std::abs(faint[j]) < 0.01);

  for (double h : {0.55, 0.65, 0.75, 0.85, 0.95})
    CHECK(ar_spectral_radius(ar_coefficients(h, 10)) < 1.0);

  CHECK_THROWS_AS(ar_coefficients(0.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(ar_coefficients(1.0, 10), std::invalid_argument);
}

TEST_CASE("filtered series reproduces the target lag-1 autocorrelation") {
  const int p = 10;
  const Eigen::VectorXd coeffs = ar_coefficients(0.8, p);
  GaussianSampler noise(99);
  std::vector<double> history(p, 0.0);
  const long n = 100000;
  std::vector<double> xs;
  xs.reserve(n);
  for (long k = 0; k < n + 1000; ++k) {
    double x = noise.next();
    for (int j = 0; j < p; ++j) x += coeffs[j] * history[j];
    for (int j = p - 1; j > 0; --j) history[j] = history[j - 1];
    history[0] = x;
    if (k >= 1000) xs.push_back(x);
  }
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(n);
  double var = 0.0, lag1 = 0.0;
  for (long k = 0; k < n; ++k) {
    var += (xs[k] - mean) * (xs[k] - mean);
    if (k > 0) lag1 += (xs[k] - mean) * (xs[k - 1] - mean);
  }
  const double rho1 = lag1 / var;
  CHECK(std::abs(rho1 - (std::pow(2.0, 0.6) - 1.0)) <= 0.03);
}

TEST_CASE("trace generation: range, mean, determinism") {
  TrafficSpec spec;  // defaults: beta(3,4), H=0.8, r_p=0.6, n=10000
  spec.seed = 7;
  const TrafficTrace trace = generate(spec);
  REQUIRE(trace.samples.size() == 10000);
  CHECK(trace.samples.minCoeff() >= 0.0);
  CHECK(trace.samples.maxCoeff() <= 0.6);
  CHECK(std::abs(trace.samples.mean() - 0.6 * 3.0 / 7.0) <= 0.02);

  const TrafficTrace again = generate(spec);
  CHECK((trace.samples - again.samples).norm() == 0.0);

  TrafficSpec other = spec;
  other.seed = 8;
  CHECK((trace.samples - generate(other).samples).norm() > 0.0);
}

TEST_CASE("trace marginal passes a KS test against the beta law") {
  TrafficSpec spec;
  spec.seed = 7;
  const TrafficTrace trace = generate(spec);
  std::vector<double> unscaled(trace.samples.size());
  for (long k = 0; k < trace.samples.size(); ++k)
    unscaled[k] = trace.samples[k] / spec.purchased_rate;
  const double d = oracles::ks_distance(unscaled, [&](double x) {
    return boost::math::ibeta(spec.beta_a, spec.beta_b, std::clamp(x, 0.0, 1.0));
  });
  CHECK(d <= 0.05);
}

TEST_CASE("R/S estimator: validation, short-memory band, LRD band and ordering") {
  CHECK_THROWS_AS(estimate_hurst(Eigen::VectorXd::Random(255)),
                  std::domain_error);
  CHECK_THROWS_AS(estimate_hurst(Eigen::VectorXd::Constant(1000, 0.3)),
                  std::domain_error);

  // Independent uniforms: short memory, estimate near one half.
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int round = 0; round < 20; ++round) {
    Eigen::VectorXd iid(10000);
    for (long k = 0; k < iid.size(); ++k) iid[k] = unit(rng);
    const double h = estimate_hurst(iid);
    CHECK(h >= 0.45);
    CHECK(h <= 0.6);
  }

  TrafficSpec spec;
  spec.seed = 1;
  const double h_high = estimate_hurst(generate(spec).samples);
  CHECK(h_high >= 0.7);
  CHECK(h_high <= 0.9);

  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    TrafficSpec strong;  // H = 0.8
    strong.seed = seed;
    strong.n_slots = 4096;
    TrafficSpec weak = strong;
    weak.hurst = 0.55;
    if (estimate_hurst(generate(strong).samples) >
        estimate_hurst(generate(weak).samples))
      ++wins;
  }
  CHECK(wins > 5);
}

TEST_CASE("trace CSV round-trip") {
  TrafficSpec spec;
  spec.n_slots = 500;
  spec.seed = 3;
  const TrafficTrace trace = generate(spec);
  const std::string path =
      (std::filesystem::temp_directory_path() / "fcpsim_trace_test.csv").string();
  write_trace_csv(path, trace);
  const TrafficTrace back = read_trace_csv(path);
  REQUIRE(back.samples.size() == trace.samples.size());
  for (long k = 0; k < trace.samples.size(); ++k)
    CHECK(back.samples[k] == doctest::Approx(trace.samples[k]).epsilon(1e-11));
  CHECK(back.spec.beta_a == doctest::Approx(spec.beta_a));
  CHECK(back.spec.beta_b == doctest::Approx(spec.beta_b));
  CHECK(back.spec.hurst == doctest::Approx(spec.hurst));
  CHECK(back.spec.purchased_rate == doctest::Approx(spec.purchased_rate));
  CHECK(back.spec.n_slots == 500);
  CHECK(back.spec.seed == 3);
  std::remove(path.c_str());
}

TEST_CASE("spec validation rejects out-of-range fields") {
  TrafficSpec spec;
  spec.hurst = 0.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.hurst = 0.8;
  spec.ar_order = 5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.ar_order = 10;
  spec.beta_a = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.beta_a = 3.0;
  spec.purchased_rate = 1.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.purchased_rate = 0.6;
  spec.n_slots = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}
