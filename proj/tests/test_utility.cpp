#include <stdexcept>
#include <cmath>
#include <random>

#include <doctest.h>

#include "fcpsim/limiter.hpp"
#include "fcpsim/market.hpp"
#include "fcpsim/utility.hpp"
#include "oracles.hpp"

using namespace fcpsim;

TEST_CASE("contract validation") {
  CHECK_NOTHROW((PrimaryContract{0.6, 0.9, 0.1, 1.0}).validate());
  CHECK_THROWS_AS((PrimaryContract{0.0, 0.9, 0.1, 1.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS((PrimaryContract{0.6, 1.2, 0.1, 1.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS((PrimaryContract{0.6, 0.9, -0.1, 1.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS((PrimaryContract{0.6, 0.9, 0.1, -1.0}).validate(),
                  std::invalid_argument);
}

TEST_CASE("per-slot utility: full allocation, hand example, no-shortfall branch") {
  const PrimaryContract full{0.6, 1.0, 0.1, 1.0};
  const UtilityBreakdown a = primary_utility(full, 0.6, 0.3);
  CHECK(a.total == doctest::Approx(0.6 * 0.9).epsilon(1e-12));
  CHECK(a.compensation == doctest::Approx(0.0));

  const PrimaryContract hand{0.6, 0.5, 0.2, 1.0};
  const UtilityBreakdown b = primary_utility(hand, 0.4, 0.5);
  CHECK(b.service_value == doctest::Approx(0.2));
  CHECK(b.payment == doctest::Approx(0.12));
  CHECK(b.compensation == doctest::Approx(0.1));
  CHECK(b.total == doctest::Approx(0.18).epsilon(1e-12));

  const UtilityBreakdown c = primary_utility(hand, 0.5, 0.4);
  CHECK(c.compensation == doctest::Approx(0.0));
}

TEST_CASE("breakdown identity holds for random draws") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const PrimaryContract contract{0.2 + 0.8 * unit(rng), unit(rng),
                                   0.5 * unit(rng), 2.0 * unit(rng)};
    const UtilityBreakdown u = primary_utility(
        contract, contract.purchased_rate * unit(rng),
        contract.purchased_rate * unit(rng));
    CHECK(u.total ==
          doctest::Approx(u.service_value - u.payment + u.compensation)
              .epsilon(1e-14));
  }
}

TEST_CASE("participation bound: degenerate points and the always-served check") {
  CHECK(primary_participation_bound(0.0, 0.2) == doctest::Approx(0.0));
  CHECK(primary_participation_bound(0.2, 0.2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(primary_participation_bound(0.1, 0.0), std::domain_error);

  // At the threshold type with no compensation, utility never goes
  // negative whatever the window does.
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r_min = 0.2, price_p = 0.1;
  const double theta = primary_participation_bound(price_p, r_min);
  for (int i = 0; i < 1000; ++i) {
    const double r_p = r_min + (1.0 - r_min) * unit(rng);
    const double alpha = unit(rng);
    const LimiterParams params{0.05 + 0.95 * unit(rng), r_min, r_p};
    const double g = limiter(params, alpha);
    const PrimaryContract contract{r_p, theta, price_p, 0.0};
    CHECK(primary_utility(contract, g, r_p * unit(rng)).total >= -1e-15);
  }
}

TEST_CASE("mean primary utility: plug-ins, empty range, quadrature oracle") {
  // Zero price: half the allocation plus the compensation term.
  const MeanPrimaryUtility free_plan =
      mean_primary_utility(0.0, 0.2, 0.6, 1.0, 0.4, 0.55);
  CHECK_FALSE(free_plan.empty_range);
  CHECK(free_plan.value == doctest::Approx(0.5 * 0.4 + 0.15).epsilon(1e-12));

  // Exact tracking: the ramp vanishes at zero.
  const MeanPrimaryUtility tracked =
      mean_primary_utility(0.1, 0.2, 0.6, 1.0, 0.4, 0.4);
  const double theta_low = 0.5;
  CHECK(tracked.value ==
        doctest::Approx(0.5 * (1.0 - theta_low * theta_low) * 0.4 -
                        0.6 * 0.1 * (1.0 - theta_low))
            .epsilon(1e-12));

  const MeanPrimaryUtility empty = mean_primary_utility(0.3, 0.2, 0.6, 1.0, 0.4, 0.5);
  CHECK(empty.empty_range);
  CHECK(empty.value == doctest::Approx(0.0));

  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double r_min = 0.1 + 0.4 * unit(rng);
    const double price_p = 0.9 * r_min * unit(rng);  // keep the range non-empty
    const double r_p = r_min + (1.0 - r_min) * unit(rng);
    const double lambda = 2.0 * unit(rng);
    const double allocated = r_min + (r_p - r_min) * unit(rng);
    const double demand = r_p * unit(rng);
    const double lo = price_p / r_min;
    const double integral = oracles::simpson(
        [&](double theta) {
          return theta * allocated - r_p * price_p +
                 lambda * indicator_ramp(demand - allocated);
        },
        lo, 1.0, 10000);
    CHECK(mean_primary_utility(price_p, r_min, r_p, lambda, allocated, demand)
              .value == doctest::Approx(integral).epsilon(1e-10));
  }
}

TEST_CASE("mean primary utility is non-decreasing in allocation when demand is met") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double demand = 0.3 * unit(rng);
    const double a1 = demand + (1.0 - demand) * unit(rng);
    const double a2 = a1 + (1.0 - a1) * unit(rng);
    const double u1 = mean_primary_utility(0.1, 0.2, 0.9, 1.0, a1, demand).value;
    const double u2 = mean_primary_utility(0.1, 0.2, 0.9, 1.0, a2, demand).value;
    CHECK(u2 >= u1 - 1e-14);
  }
}

TEST_CASE("both participation thresholds are price-over-minimum-quality ratios") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double price = 0.05 + unit(rng);
    const double quality_floor = 0.05 + 0.95 * unit(rng);
    CHECK(market_ratio({{price, quality_floor, 0.1}}) ==
          doctest::Approx(primary_participation_bound(price, quality_floor))
              .epsilon(1e-14));
  }
}
