#include "fcpsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace fcpsim {

double GaussianSampler::uniform01() {
  // Top 53 bits, shifted into (0, 1] so log() below stays finite.
  return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianSampler::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

}  // namespace fcpsim
