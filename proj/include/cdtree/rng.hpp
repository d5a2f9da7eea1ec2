#pragma once

#include <cstdint>
#include <random>

namespace cdtree {

// Mixes a master seed and a stream index into an independent 64-bit seed
// (splitmix64 finalizer applied twice).
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

// Random source with distribution mappings written out explicitly.
// std::mt19937_64 output is fixed by the standard but the std::*_distribution
// algorithms are not, so generated datasets would otherwise differ between
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform integer on the closed range [lo, hi]. Requires lo <= hi.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  // Uniform on the open interval (0, 1).
  double UniformOpen01();

  // Uniform on the open interval (lo, hi).
  double UniformOpen(double lo, double hi);

  double StandardNormal();

  bool Bernoulli(double p);

 private:
  std::mt19937_64 engine_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace cdtree
