#include "cdtree/scmgen.hpp"

#include <cmath>
#include <string>

#include "cdtree/binning.hpp"

namespace cdtree {

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + static_cast<double>(*it);
  }
  return acc;
}

Polynomial SamplePolynomial(Rng& rng) {
  const auto degree = rng.UniformInt(kMinDegree, kMaxDegree);
  Polynomial p;
  p.coefficients.reserve(static_cast<std::size_t>(degree) + 1);
  for (std::int64_t i = 0; i <= degree; ++i) {
    p.coefficients.push_back(rng.UniformInt(-kMaxCoefficient, kMaxCoefficient));
  }
  return p;
}

std::int64_t DiscreteSupportLow(std::uint32_t cardinality) {
  return -static_cast<std::int64_t>(cardinality / 2);
}

std::vector<double> SampleNoise(const NoiseSpec& spec, std::size_t n, Rng& rng) {
  std::vector<double> out(n);
  switch (spec.family) {
    case NoiseFamily::kDiscreteUniform: {
      const std::int64_t low = DiscreteSupportLow(spec.cardinality);
      const std::int64_t high = low + spec.cardinality - 1;
      for (double& v : out) v = static_cast<double>(rng.UniformInt(low, high));
      break;
    }
    case NoiseFamily::kDiscreteGaussian: {
      for (double& v : out) v = rng.StandardNormal();
      if (out.empty()) break;
      const BinSpec spec_bins = FitBins(out, spec.cardinality);
      const std::int64_t low = DiscreteSupportLow(spec.cardinality);
      for (double& v : out) v = static_cast<double>(ApplyBin(v, spec_bins) + low);
      break;
    }
    case NoiseFamily::kContinuousUniform:
      for (double& v : out) v = rng.UniformOpen(-1.0, 1.0);
      break;
    case NoiseFamily::kContinuousGaussian:
      for (double& v : out) v = rng.StandardNormal();
      break;
  }
  return out;
}

namespace {

// Largest |p(x)| over sampled polynomials when |x| <= m.
double PolynomialBound(double m) {
  double sum = 0.0;
  double power = 1.0;
  for (int i = 0; i <= kMaxDegree; ++i) {
    sum += power;
    power *= m;
  }
  return kMaxCoefficient * sum;
}

double Combine(NoiseMode mode, double cause_part, double noise_part) {
  return mode == NoiseMode::kAdditive ? cause_part + noise_part
                                      : cause_part * noise_part;
}

}  // namespace

void ValidateGenConfig(const GenConfig& cfg) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kConfigInvalid, why);
  };
  if (cfg.n_samples < 2) fail("n_samples must be at least 2");
  if (cfg.noise_x.discrete() != cfg.noise_y.discrete()) {
    fail("noise_x and noise_y must both be discrete or both continuous");
  }
  if (!(cfg.flip_probability >= 0.0 && cfg.flip_probability <= 1.0)) {
    fail("flip_probability must lie in [0, 1]");
  }
  if (!cfg.noise_x.discrete()) return;
  for (const NoiseSpec* spec : {&cfg.noise_x, &cfg.noise_y}) {
    if (spec->cardinality < 2) fail("discrete noise cardinality must be >= 2");
  }
  const double bx = PolynomialBound(static_cast<double>(cfg.noise_x.cardinality / 2));
  const double by = PolynomialBound(static_cast<double>(cfg.noise_y.cardinality / 2));
  const double bound = cfg.mode == NoiseMode::kAdditive ? bx + by : bx * by;
  if (!(bound <= kMaxDiscreteMagnitude)) {
    fail("discrete effect values could exceed 2^53 for these cardinalities");
  }
}

std::vector<double> ReplayEffect(const Mechanism& mechanism,
                                 std::span<const double> cause) {
  if (cause.size() != mechanism.noise_effect.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "cause column does not match the recorded noise length");
  }
  std::vector<double> effect(cause.size());
  for (std::size_t i = 0; i < cause.size(); ++i) {
    effect[i] = Combine(mechanism.mode, mechanism.f_cause(cause[i]),
                        mechanism.f_noise(mechanism.noise_effect[i]));
  }
  return effect;
}

LabeledDataset GenerateDataset(const GenConfig& cfg) {
  ValidateGenConfig(cfg);
  Rng rng(cfg.seed);

  Mechanism mech;
  mech.seed = cfg.seed;
  mech.noise_x = cfg.noise_x;
  mech.noise_y = cfg.noise_y;
  mech.mode = cfg.mode;
  mech.f_cause = SamplePolynomial(rng);
  mech.f_noise = SamplePolynomial(rng);
  std::vector<double> cause = SampleNoise(cfg.noise_x, cfg.n_samples, rng);
  mech.noise_effect = SampleNoise(cfg.noise_y, cfg.n_samples, rng);
  mech.flipped = rng.Bernoulli(cfg.flip_probability);

  std::vector<double> effect = ReplayEffect(mech, cause);
  const DataKind kind = cfg.noise_x.kind();
  const Direction truth = mech.flipped ? Direction::kYtoX : Direction::kXtoY;
  PairDataset data = mech.flipped
                         ? ValidateDataset(std::move(effect), std::move(cause), kind)
                         : ValidateDataset(std::move(cause), std::move(effect), kind);
  return LabeledDataset{std::move(data), truth, std::move(mech)};
}

LabeledDataset GenerateDataset(const GenConfig& cfg, std::uint64_t index) {
  GenConfig derived = cfg;
  derived.seed = DeriveSeed(cfg.seed, index);
  return GenerateDataset(derived);
}

}  // namespace cdtree
