#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdtree/core.hpp"
#include "cdtree/rng.hpp"

namespace cdtree {

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 5;
inline constexpr int kMaxCoefficient = 10;

// coefficients[i] multiplies x^i.
struct Polynomial {
  std::vector<std::int64_t> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  double operator()(double x) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial SamplePolynomial(Rng& rng);

enum class NoiseFamily {
  kDiscreteUniform,
  kDiscreteGaussian,
  kContinuousUniform,
  kContinuousGaussian,
};

struct NoiseSpec {
  NoiseFamily family = NoiseFamily::kDiscreteUniform;
  std::uint32_t cardinality = 20;  // only read by the discrete families

  bool discrete() const {
    return family == NoiseFamily::kDiscreteUniform ||
           family == NoiseFamily::kDiscreteGaussian;
  }
  DataKind kind() const {
    return discrete() ? DataKind::kDiscrete : DataKind::kContinuous;
  }

  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

// Integer support {lowest, ..., lowest + R - 1} of the discrete families,
// lowest = -floor(R/2).
std::int64_t DiscreteSupportLow(std::uint32_t cardinality);

// DiscreteUniform: uniform over the integer support. DiscreteGaussian: N(0,1)
// draws binned into R equal-width bins over the sample range, reported as
// bin index + DiscreteSupportLow(R). ContinuousUniform: U(-1, 1) open.
// ContinuousGaussian: N(0, 1).
std::vector<double> SampleNoise(const NoiseSpec& spec, std::size_t n, Rng& rng);

enum class NoiseMode { kAdditive, kMultiplicative };

struct GenConfig {
  std::uint32_t n_samples = 1000;
  NoiseSpec noise_x;
  NoiseSpec noise_y;
  NoiseMode mode = NoiseMode::kAdditive;
  double flip_probability = 0.5;
  std::uint64_t seed = 0;
};

// Throws kConfigInvalid on zero samples, R < 2, mixed kinds, a flip
// probability outside [0, 1], or discrete settings whose effect values could
// exceed the exactly representable integer range.
void ValidateGenConfig(const GenConfig& cfg);

// Everything needed to replay a dataset. Stored in cause -> effect orientation
// regardless of the flip.
struct Mechanism {
  std::uint64_t seed = 0;
  NoiseSpec noise_x;
  NoiseSpec noise_y;
  NoiseMode mode = NoiseMode::kAdditive;
  Polynomial f_cause;  // f_Y^X
  Polynomial f_noise;  // f_Y^N
  bool flipped = false;
  std::vector<double> noise_effect;  // U_Y draws

  friend bool operator==(const Mechanism&, const Mechanism&) = default;
};

// Effect column recomputed from the cause column and the recorded noise.
std::vector<double> ReplayEffect(const Mechanism& mechanism,
                                 std::span<const double> cause);

struct LabeledDataset {
  PairDataset data;
  Direction truth;
  Mechanism mechanism;
};

// X = U_X, Y = f(X) + g(U_Y) or f(X) * g(U_Y); with flip_probability the
// columns are exchanged and truth becomes YtoX. Pure function of cfg.
LabeledDataset GenerateDataset(const GenConfig& cfg);

// Dataset `index` of a collection generated from one master seed.
LabeledDataset GenerateDataset(const GenConfig& cfg, std::uint64_t index);

}  // namespace cdtree
