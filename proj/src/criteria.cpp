#include "cdtree/criteria.hpp"

#include <cmath>
#include <string>

#include "cdtree/stats.hpp"

namespace cdtree {

SignConfig SignConfig::Default() {
  SignConfig s;
  //                TD  TN  TL  PL  RE  IH
  s.discrete_ = {-1, -1, -1, -1, -1, +1};
  s.continuous_ = {-1, +1, +1, -1, +1, +1};
  return s;
}

int SignConfig::sign(CriterionKind kind, DataKind data) const {
  const auto& row = data == DataKind::kDiscrete ? discrete_ : continuous_;
  return row[CriterionIndex(kind)];
}

void SignConfig::set(CriterionKind kind, DataKind data, int sign) {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::kInvalidArgument,
                "orientation sign must be +1 or -1, got " + std::to_string(sign));
  }
  auto& row = data == DataKind::kDiscrete ? discrete_ : continuous_;
  row[CriterionIndex(kind)] = sign;
}

double VariableRepr::ValueOf(Label label) const {
  return bins ? Midpoint(*bins, label) : static_cast<double>(label);
}

double VariableRepr::Difference(Label target, Label predicted) const {
  if (bins) return static_cast<double>(target - predicted) * bins->width;
  return static_cast<double>(target - predicted);
}

namespace {

VariableRepr Represent(std::span<const double> column, DataKind kind,
                       std::uint32_t n_bins) {
  VariableRepr repr;
  if (kind == DataKind::kDiscrete) {
    repr.values.assign(column.begin(), column.end());
    repr.labels.reserve(column.size());
    for (double v : column) repr.labels.push_back(static_cast<Label>(v));
    return repr;
  }
  const BinSpec spec = FitBins(column, n_bins);
  repr.labels = ApplyBins(column, spec).labels;
  repr.values.reserve(column.size());
  for (Label l : repr.labels) repr.values.push_back(Midpoint(spec, l));
  repr.bins = spec;
  return repr;
}

}  // namespace

FittedPair FitBoth(const PairDataset& data, std::uint32_t n_bins) {
  FittedPair fp;
  fp.kind = data.kind();
  fp.x = Represent(data.x(), data.kind(), n_bins);
  fp.y = Represent(data.y(), data.kind(), n_bins);
  fp.tree_xy = FitTree(fp.x.values, fp.y.labels);
  fp.tree_yx = FitTree(fp.y.values, fp.x.labels);
  return fp;
}

std::array<double, 6> DirectionMeasures(const FittedPair& fp, ModelDirection dir,
                                        EntropyNormalization norm) {
  const bool forward = dir == ModelDirection::kXtoY;
  const Tree& tree = forward ? fp.tree_xy : fp.tree_yx;
  const VariableRepr& input = forward ? fp.x : fp.y;
  const VariableRepr& target = forward ? fp.y : fp.x;

  const std::vector<Label> predicted = tree.Predict(input.values);

  std::array<double, 6> m{};
  m[CriterionIndex(CriterionKind::kTD)] = static_cast<double>(tree.Depth());
  m[CriterionIndex(CriterionKind::kTN)] = static_cast<double>(tree.NodeCount());
  m[CriterionIndex(CriterionKind::kTL)] = static_cast<double>(tree.LeafCount());
  m[CriterionIndex(CriterionKind::kPL)] = tree.MeanPathLength(input.values);

  double residual_entropy = 0.0;
  if (fp.kind == DataKind::kDiscrete) {
    std::vector<Label> residuals(predicted.size());
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      residuals[i] = target.labels[i] - predicted[i];
    }
    residual_entropy = Entropy(std::span<const Label>(residuals));
    m[CriterionIndex(CriterionKind::kIH)] = Misclassification(target.labels, predicted);
  } else {
    std::vector<double> residuals(predicted.size());
    double squares = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      residuals[i] = target.Difference(target.labels[i], predicted[i]);
      squares += residuals[i] * residuals[i];
    }
    residual_entropy = Entropy(std::span<const double>(residuals));
    m[CriterionIndex(CriterionKind::kIH)] =
        squares / static_cast<double>(predicted.size());
  }

  const auto target_dist = Tabulate(std::span<const Label>(target.labels));
  const double normalizer =
      norm == EntropyNormalization::kCardinality
          ? std::log2(static_cast<double>(target_dist.counts.size()))
          : Entropy(std::span<const Label>(target.labels));
  m[CriterionIndex(CriterionKind::kRE)] =
      normalizer > 0.0 ? 1.0 - residual_entropy / normalizer : 0.0;
  return m;
}

double DirectionMeasure(const FittedPair& fp, CriterionKind kind, ModelDirection dir,
                        EntropyNormalization norm) {
  return DirectionMeasures(fp, dir, norm)[CriterionIndex(kind)];
}

Direction Decide(double j) {
  if (!std::isfinite(j)) {
    throw Error(ErrorCode::kNonFinite, "criterion score is not finite");
  }
  if (j > 0.0) return Direction::kXtoY;
  if (j < 0.0) return Direction::kYtoX;
  return Direction::kAbstain;
}

CriterionScore MakeScore(CriterionKind kind, double measure_xy, double measure_yx,
                         int sign) {
  CriterionScore score;
  score.kind = kind;
  score.measure_xy = measure_xy;
  score.measure_yx = measure_yx;
  score.j_raw = measure_xy - measure_yx;
  // + 0.0 turns a negated zero into +0 so ties print and compare as 0.
  score.j_oriented = static_cast<double>(sign) * score.j_raw + 0.0;
  score.decision = Decide(score.j_oriented);
  return score;
}

CriterionScore ScoreCriterion(const FittedPair& fp, CriterionKind kind,
                              const SignConfig& signs, EntropyNormalization norm) {
  return MakeScore(kind, DirectionMeasure(fp, kind, ModelDirection::kXtoY, norm),
                   DirectionMeasure(fp, kind, ModelDirection::kYtoX, norm),
                   signs.sign(kind, fp.kind));
}

CriterionScores EvaluateAll(const PairDataset& data, const EvalOptions& options) {
  const FittedPair fp = FitBoth(data, options.n_bins);
  const auto forward = DirectionMeasures(fp, ModelDirection::kXtoY, options.normalization);
  const auto backward = DirectionMeasures(fp, ModelDirection::kYtoX, options.normalization);
  CriterionScores scores;
  for (CriterionKind kind : kAllCriteria) {
    const std::size_t i = CriterionIndex(kind);
    scores[i] = MakeScore(kind, forward[i], backward[i],
                          options.signs.sign(kind, data.kind()));
  }
  return scores;
}

}  // namespace cdtree
