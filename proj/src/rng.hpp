#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace roe {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of trial `trial` under `master`; independent of any other trial.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return mix64(mix64(master) ^ mix64(trial + 0x9e3779b97f4a7c15ULL));
}

// Counter-based stream: the k-th draw is a pure function of (key, k), so a
// trial's draws never depend on what other trials or threads consumed.
// Gaussians use Box-Muller rather than std::normal_distribution, whose
// output is implementation-defined.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(seed ^ mix64(stream * 0xd1b54a32d192ed03ULL + 1))) {}

  std::uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform on the open interval (0, 1).
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // exp of a uniform draw on [ln lo, ln hi].
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Uniform index in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace roe
