#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "cdtree/criteria.hpp"
#include "cdtree/scmgen.hpp"

namespace cdtree {

inline constexpr std::uint32_t kDefaultHistogramBins = 50;

struct BenchConfig {
  std::uint32_t n_datasets = 1000;
  GenConfig gen;  // gen.seed is the master seed
  std::uint32_t n_bins = kDefaultBins;
  std::uint32_t histogram_bins = kDefaultHistogramBins;
  SignConfig signs = SignConfig::Default();
  EntropyNormalization normalization = EntropyNormalization::kCardinality;
  // Worker threads; 0 picks the hardware concurrency. Results do not depend
  // on it.
  unsigned threads = 0;
};

// Equal-width histogram of scores over [min, max], split by true direction.
// bin_edges has n_bins + 1 entries; a zero-width range puts every score in
// the first bin.
struct FigureData {
  std::vector<double> bin_edges;
  std::vector<std::uint64_t> counts_truth_xy;
  std::vector<std::uint64_t> counts_truth_yx;

  friend bool operator==(const FigureData&, const FigureData&) = default;
};

struct CriterionSummary {
  CriterionKind kind = CriterionKind::kTD;
  std::uint64_t n_correct = 0;
  std::uint64_t n_incorrect = 0;
  std::uint64_t n_abstain = 0;
  double accuracy = 0.0;  // abstentions count as wrong
  double accuracy_excluding_abstentions = 0.0;  // 0 when every case abstains
  double abstention_rate = 0.0;
  // Measures of the model fit in the true causal direction, and against it.
  double mean_measure_causal = 0.0;
  double mean_measure_anticausal = 0.0;
  FigureData histogram;  // of oriented scores

  friend bool operator==(const CriterionSummary&, const CriterionSummary&) = default;
};

struct DatasetRecord {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  Direction truth = Direction::kXtoY;
  CriterionScores scores{};
};

struct BenchReport {
  BenchConfig config;
  std::array<CriterionSummary, 6> summaries{};
  double duration_seconds = 0.0;

  const CriterionSummary& summary(CriterionKind kind) const {
    return summaries[CriterionIndex(kind)];
  }
};

// Throws kConfigInvalid.
void ValidateBenchConfig(const BenchConfig& cfg);

// Generates and scores datasets [0, n_datasets) in parallel. Records come
// back in index order. A failing dataset aborts the run with its index and
// seed in the message.
std::vector<DatasetRecord> EvaluateDatasets(const BenchConfig& cfg);

FigureData HistogramScores(std::span<const double> scores,
                           std::span<const Direction> truths, std::uint32_t n_bins);

std::array<CriterionSummary, 6> Aggregate(std::span<const DatasetRecord> records,
                                          std::uint32_t histogram_bins);

BenchReport RunBenchmark(const BenchConfig& cfg);

}  // namespace cdtree
