#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdtree/binning.hpp"
#include "cdtree/cart.hpp"
#include "cdtree/core.hpp"

namespace cdtree {

// Which variable a fitted model predicts from which.
enum class ModelDirection { kXtoY, kYtoX };

// Orientation multiplier per (criterion, data kind). A criterion's raw value
// is measure(X->Y model) - measure(Y->X model); multiplying by the sign makes
// a positive score point at X->Y.
class SignConfig {
 public:
  // TD, PL: -1. TN, TL: -1 discrete, +1 continuous. RE: -1 discrete,
  // +1 continuous. IH: +1.
  static SignConfig Default();

  int sign(CriterionKind kind, DataKind data) const;
  // Throws kInvalidArgument unless sign is +1 or -1.
  void set(CriterionKind kind, DataKind data, int sign);

  friend bool operator==(const SignConfig&, const SignConfig&) = default;

 private:
  std::array<int, 6> discrete_{};
  std::array<int, 6> continuous_{};
};

// How the residual-entropy measure is normalized. kCardinality divides by
// log2 of the number of distinct target values (the target's entropy under a
// uniform law on its observed support); kShannon divides by the plug-in
// entropy of the target.
enum class EntropyNormalization { kCardinality, kShannon };

struct EvalOptions {
  std::uint32_t n_bins = kDefaultBins;
  SignConfig signs = SignConfig::Default();
  EntropyNormalization normalization = EntropyNormalization::kCardinality;
};

// One variable as the trees see it: class labels plus the numeric value each
// label stands for (the integer itself, or the bin midpoint).
struct VariableRepr {
  std::vector<Label> labels;
  std::vector<double> values;
  std::optional<BinSpec> bins;  // set for continuous data

  double ValueOf(Label label) const;
  // Numeric difference between the values two labels stand for. On a bin grid
  // this is (target - predicted) * width, which keeps equal label gaps equal.
  double Difference(Label target, Label predicted) const;
};

struct FittedPair {
  DataKind kind = DataKind::kDiscrete;
  VariableRepr x;
  VariableRepr y;
  Tree tree_xy;  // predicts y from x
  Tree tree_yx;  // predicts x from y
};

// Continuous columns are binned into n_bins equal-width bins each; discrete
// columns use their integer values as labels.
FittedPair FitBoth(const PairDataset& data, std::uint32_t n_bins = kDefaultBins);

// Per-direction quantity behind each criterion, for the model in `dir`:
//   TD depth, TN node count, TL leaf count, PL mean path length over the
//   training inputs, RE normalized entropy decrease 1 - H(residual)/norm
//   (0 when the normalizer is 0), IH training misclassification (discrete)
//   or mean squared error on the numeric representation (continuous).
double DirectionMeasure(const FittedPair& fp, CriterionKind kind, ModelDirection dir,
                        EntropyNormalization norm = EntropyNormalization::kCardinality);
std::array<double, 6> DirectionMeasures(
    const FittedPair& fp, ModelDirection dir,
    EntropyNormalization norm = EntropyNormalization::kCardinality);

struct CriterionScore {
  CriterionKind kind = CriterionKind::kTD;
  double j_raw = 0.0;       // measure_xy - measure_yx
  double j_oriented = 0.0;  // sign * j_raw
  double measure_xy = 0.0;
  double measure_yx = 0.0;
  Direction decision = Direction::kAbstain;

  friend bool operator==(const CriterionScore&, const CriterionScore&) = default;
};

// > 0 -> X->Y, < 0 -> Y->X, exactly 0 -> abstain. Throws kNonFinite.
Direction Decide(double j);

// Builds a score from already computed per-direction measures.
CriterionScore MakeScore(CriterionKind kind, double measure_xy, double measure_yx,
                         int sign);

CriterionScore ScoreCriterion(
    const FittedPair& fp, CriterionKind kind, const SignConfig& signs,
    EntropyNormalization norm = EntropyNormalization::kCardinality);

using CriterionScores = std::array<CriterionScore, 6>;

// All six scores from a single FittedPair, in kAllCriteria order.
CriterionScores EvaluateAll(const PairDataset& data, const EvalOptions& options = {});

}  // namespace cdtree
