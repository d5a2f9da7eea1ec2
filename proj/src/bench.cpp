#include "cdtree/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>

#include "cdtree/binning.hpp"

namespace cdtree {

void ValidateBenchConfig(const BenchConfig& cfg) {
  if (cfg.n_datasets == 0) {
    throw Error(ErrorCode::kConfigInvalid, "n_datasets must be at least 1");
  }
  if (cfg.n_bins == 0) throw Error(ErrorCode::kConfigInvalid, "n_bins must be >= 1");
  if (cfg.histogram_bins == 0) {
    throw Error(ErrorCode::kConfigInvalid, "histogram_bins must be >= 1");
  }
  ValidateGenConfig(cfg.gen);
}

std::vector<DatasetRecord> EvaluateDatasets(const BenchConfig& cfg) {
  ValidateBenchConfig(cfg);
  const std::size_t n = cfg.n_datasets;
  std::vector<DatasetRecord> records(n);
  std::vector<std::optional<Error>> failures(n);

  const EvalOptions options{cfg.n_bins, cfg.signs, cfg.normalization};
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      DatasetRecord& rec = records[i];
      rec.index = i;
      rec.seed = DeriveSeed(cfg.gen.seed, i);
      try {
        const LabeledDataset ds = GenerateDataset(cfg.gen, i);
        rec.truth = ds.truth;
        rec.scores = EvaluateAll(ds.data, options);
      } catch (const Error& e) {
        failures[i].emplace(e.code(), e.what());
      } catch (const std::exception& e) {
        failures[i].emplace(ErrorCode::kInvalidArgument, e.what());
      }
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, n));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (failures[i]) {
      throw Error(failures[i]->code(),
                  "dataset " + std::to_string(i) + " (seed " +
                      std::to_string(records[i].seed) + "): " + failures[i]->what());
    }
  }
  return records;
}

FigureData HistogramScores(std::span<const double> scores,
                           std::span<const Direction> truths, std::uint32_t n_bins) {
  if (scores.size() != truths.size()) {
    throw Error(ErrorCode::kLengthMismatch, "histogram: scores and truths differ in length");
  }
  if (scores.empty()) throw Error(ErrorCode::kEmptyInput, "histogram: no scores");
  if (n_bins == 0) throw Error(ErrorCode::kInvalidArgument, "histogram: zero bins");

  const BinSpec spec = FitBins(scores, n_bins);
  FigureData fig;
  fig.bin_edges.resize(n_bins + 1);
  for (std::uint32_t b = 0; b < n_bins; ++b) {
    fig.bin_edges[b] = spec.lo + static_cast<double>(b) * spec.width;
  }
  fig.bin_edges[n_bins] = spec.hi;
  fig.counts_truth_xy.assign(n_bins, 0);
  fig.counts_truth_yx.assign(n_bins, 0);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const auto bin = static_cast<std::size_t>(ApplyBin(scores[i], spec));
    switch (truths[i]) {
      case Direction::kXtoY: ++fig.counts_truth_xy[bin]; break;
      case Direction::kYtoX: ++fig.counts_truth_yx[bin]; break;
      case Direction::kAbstain:
        throw Error(ErrorCode::kInvalidArgument, "abstain is not a ground truth");
    }
  }
  return fig;
}

std::array<CriterionSummary, 6> Aggregate(std::span<const DatasetRecord> records,
                                          std::uint32_t histogram_bins) {
  if (records.empty()) throw Error(ErrorCode::kEmptyInput, "no records to aggregate");
  const double n = static_cast<double>(records.size());

  std::vector<Direction> truths;
  truths.reserve(records.size());
  for (const DatasetRecord& rec : records) truths.push_back(rec.truth);

  std::array<CriterionSummary, 6> out;
  for (CriterionKind kind : kAllCriteria) {
    const std::size_t k = CriterionIndex(kind);
    CriterionSummary& s = out[k];
    s.kind = kind;
    double causal_sum = 0.0;
    double anticausal_sum = 0.0;
    std::vector<double> scores;
    scores.reserve(records.size());
    for (const DatasetRecord& rec : records) {
      const CriterionScore& score = rec.scores[k];
      if (score.decision == Direction::kAbstain) {
        ++s.n_abstain;
      } else if (score.decision == rec.truth) {
        ++s.n_correct;
      } else {
        ++s.n_incorrect;
      }
      const bool forward = rec.truth == Direction::kXtoY;
      causal_sum += forward ? score.measure_xy : score.measure_yx;
      anticausal_sum += forward ? score.measure_yx : score.measure_xy;
      scores.push_back(score.j_oriented);
    }
    s.accuracy = static_cast<double>(s.n_correct) / n;
    s.abstention_rate = static_cast<double>(s.n_abstain) / n;
    const std::uint64_t decided = s.n_correct + s.n_incorrect;
    s.accuracy_excluding_abstentions =
        decided ? static_cast<double>(s.n_correct) / static_cast<double>(decided) : 0.0;
    s.mean_measure_causal = causal_sum / n;
    s.mean_measure_anticausal = anticausal_sum / n;
    s.histogram = HistogramScores(scores, truths, histogram_bins);
  }
  return out;
}

BenchReport RunBenchmark(const BenchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<DatasetRecord> records = EvaluateDatasets(cfg);
  BenchReport report;
  report.config = cfg;
  report.summaries = Aggregate(records, cfg.histogram_bins);
  report.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cdtree
