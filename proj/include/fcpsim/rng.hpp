#pragma once

#include <cstdint>
#include <random>

namespace fcpsim {

// One step of the splitmix64 sequence.  Used to derive independent
// sub-stream seeds from a single run seed so that adding a user or a
// trace never perturbs the draws of another.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Combine a run-level seed with a stream-level seed into one
// well-mixed 64-bit seed.
inline std::uint64_t derive_seed(std::uint64_t run_seed, std::uint64_t stream_seed) {
  std::uint64_t s = run_seed;
  std::uint64_t a = splitmix64(s);
  s ^= stream_seed;
  std::uint64_t b = splitmix64(s);
  return a ^ (b + 0x9E3779B97F4A7C15ULL);
}

// Deterministic standard-normal sampler: mt19937_64 driving a
// Box-Muller transform.  Fully specified so that traces are
// bit-reproducible across platforms for a given seed.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform draw in (0, 1] with 53 random bits.
  double uniform01();

  // One standard-normal draw.
  double next();

 private:
  std::mt19937_64 rng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fcpsim
