// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion,
// preceded by the measured numbers, and exits non-zero if any criterion
// fails. All runs use the master seed 42.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cdtree/bench.hpp"
#include "cdtree/io.hpp"
#include "cdtree/stats.hpp"
#include "oracle.hpp"

using namespace cdtree;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Expected {
  double accuracy;
  double excluding;
};

// reference accuracies for the discrete benchmark, in criterion order
constexpr std::array<Expected, 6> kDiscreteReference = {{
    {0.988, 0.995}, {0.986, 0.998}, {0.986, 0.998},
    {0.989, 0.996}, {0.974, 0.986}, {0.986, 0.998},
}};
constexpr double kDiscreteTolerance = 0.02;
constexpr double kContinuousTreeWidth = 0.909;
constexpr double kContinuousWidthTolerance = 0.05;

int g_failures = 0;

void Verdict(bool ok, int id, const std::string& title) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, title.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

void Note(const char* fmt, auto... args) {
  std::printf("  ");
  std::printf(fmt, args...);
  std::printf("\n");
}

bool Check(bool ok, const std::string& what) {
  if (!ok) Note("violated: %s", what.c_str());
  return ok;
}

BenchConfig Discrete(std::uint32_t effect_cardinality = 20) {
  BenchConfig cfg;
  cfg.gen.seed = kSeed;
  cfg.gen.noise_y.cardinality = effect_cardinality;
  return cfg;
}

BenchConfig Continuous(NoiseMode mode) {
  BenchConfig cfg;
  cfg.gen.seed = kSeed;
  cfg.gen.noise_x.family = NoiseFamily::kContinuousUniform;
  cfg.gen.noise_y.family = NoiseFamily::kContinuousUniform;
  cfg.gen.mode = mode;
  return cfg;
}

void PrintReport(const BenchReport& r) {
  Note("%-6s %8s %8s %8s %12s %12s", "", "acc", "acc_excl", "abstain", "mean_causal",
       "mean_anti");
  for (const CriterionSummary& s : r.summaries) {
    Note("%-6s %8.3f %8.3f %8.3f %12.4f %12.4f", std::string(CriterionName(s.kind)).c_str(),
         s.accuracy, s.accuracy_excluding_abstentions, s.abstention_rate,
         s.mean_measure_causal, s.mean_measure_anticausal);
  }
}

void CriterionDiscreteBenchmark(const BenchReport& r) {
  PrintReport(r);
  bool ok = true;
  for (CriterionKind k : kAllCriteria) {
    const CriterionSummary& s = r.summary(k);
    const Expected& e = kDiscreteReference[CriterionIndex(k)];
    const std::string name(CriterionName(k));
    ok &= Check(std::fabs(s.accuracy - e.accuracy) <= kDiscreteTolerance,
                name + " accuracy near " + std::to_string(e.accuracy));
    ok &= Check(std::fabs(s.accuracy_excluding_abstentions - e.excluding) <= kDiscreteTolerance,
                name + " accuracy excluding abstentions near " + std::to_string(e.excluding));
  }
  for (CriterionKind k : {CriterionKind::kTD, CriterionKind::kTN, CriterionKind::kTL,
                          CriterionKind::kPL, CriterionKind::kRE}) {
    ok &= Check(r.summary(k).mean_measure_causal < r.summary(k).mean_measure_anticausal,
                std::string(CriterionName(k)) + " causal mean below anti-causal mean");
  }
  ok &= Check(r.summary(CriterionKind::kIH).mean_measure_causal >
                  r.summary(CriterionKind::kIH).mean_measure_anticausal,
              "J_IH causal mean above anti-causal mean");
  Verdict(ok, 1, "discrete benchmark (uniform noise, R=20, additive) accuracies and mean orderings");
}

void CriterionContinuousBenchmark(const BenchReport& r) {
  PrintReport(r);
  bool ok = true;
  auto acc = [&](CriterionKind k) { return r.summary(k).accuracy; };
  ok &= Check(acc(CriterionKind::kRE) >= 0.95, "J_RE accuracy >= 0.95");
  ok &= Check(acc(CriterionKind::kIH) >= 0.97, "J_IH accuracy >= 0.97");
  for (CriterionKind k : {CriterionKind::kTN, CriterionKind::kTL}) {
    ok &= Check(std::fabs(acc(k) - kContinuousTreeWidth) <= kContinuousWidthTolerance,
                std::string(CriterionName(k)) + " accuracy within 0.05 of 0.909");
  }
  for (CriterionKind k : {CriterionKind::kTD, CriterionKind::kPL}) {
    ok &= Check(acc(k) >= 0.55 && acc(k) <= 0.70,
                std::string(CriterionName(k)) + " accuracy in [0.55, 0.70]");
  }
  Verdict(ok, 2, "continuous benchmark (uniform noise, additive, 100 bins) accuracies");
}

void CriterionQualitative(const BenchReport& additive) {
  const BenchReport mult = RunBenchmark(Continuous(NoiseMode::kMultiplicative));
  bool ok = true;
  for (CriterionKind k : {CriterionKind::kRE, CriterionKind::kIH}) {
    const double m = mult.summary(k).accuracy;
    const double a = additive.summary(k).accuracy;
    Note("%s continuous multiplicative %.3f vs additive %.3f", std::string(CriterionName(k)).c_str(),
         m, a);
    ok &= Check(m >= a, std::string(CriterionName(k)) + " multiplicative >= additive");
  }

  const BenchReport wide = RunBenchmark(Discrete(100));
  Note("%s", "discrete, effect noise cardinality 100:");
  PrintReport(wide);
  for (const CriterionSummary& s : wide.summaries) {
    ok &= Check(s.accuracy >= 0.995, std::string(CriterionName(s.kind)) +
                                         " accuracy >= 0.995 with effect noise cardinality 100");
  }
  Verdict(ok, 3, "multiplicative noise helps J_RE/J_IH; wide effect noise drives discrete accuracy to >= 0.995");
}

void CriterionOracle() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> len(1, 50);
  std::uniform_int_distribution<int> card(1, 8);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = len(rng);
    std::uniform_int_distribution<int> xv(0, card(rng) - 1);
    std::uniform_int_distribution<int> yv(0, card(rng) - 1);
    std::vector<double> x(n);
    std::vector<Label> y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = xv(rng);
      y[i] = yv(rng);
    }
    const Tree t = FitTree(x, y);
    mismatches += oracle::TreeErrors(t, x, y) != oracle::GroupByErrors(x, y);
  }
  Note("%d of 1000 datasets disagree with the group-by majority loss", mismatches);
  Verdict(mismatches == 0, 4, "tree training loss equals the group-by-x majority oracle");
}

void CriterionProperties(const BenchReport& discrete) {
  bool ok = true;
  // antisymmetry and structural identities on generated data of both kinds
  for (const BenchConfig& cfg : {Discrete(), Continuous(NoiseMode::kAdditive)}) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      const LabeledDataset ds = GenerateDataset(cfg.gen, i);
      const auto a = EvaluateAll(ds.data);
      const auto b = EvaluateAll(ds.data.Swapped());
      for (std::size_t k = 0; k < a.size(); ++k) {
        ok &= Check(a[k].j_raw == -b[k].j_raw && a[k].decision == Opposite(b[k].decision),
                    "antisymmetry on dataset " + std::to_string(i));
        ok &= Check(a[k].decision == Decide(a[k].j_oriented), "decision mapping");
      }
      const FittedPair fp = FitBoth(ds.data);
      for (const auto* pair : {&fp.tree_xy, &fp.tree_yx}) {
        const VariableRepr& input = pair == &fp.tree_xy ? fp.x : fp.y;
        std::size_t longest = 0;
        for (double v : input.values) longest = std::max(longest, pair->PathLength(v));
        ok &= Check(pair->LeafCount() == pair->InternalCount() + 1, "leaves = internal + 1");
        ok &= Check(pair->Depth() == longest, "depth = longest path");
      }
    }
  }
  // decision mapping
  ok &= Check(Decide(1e-12) == Direction::kXtoY && Decide(-1e-12) == Direction::kYtoX &&
                  Decide(0.0) == Direction::kAbstain && Decide(-0.0) == Direction::kAbstain,
              "sign-to-direction mapping");
  // entropy bounds and zero iff constant
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> len(1, 30), val(0, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Label> v(len(rng));
    for (auto& e : v) e = val(rng);
    const double h = Entropy(std::span<const Label>(v));
    const std::size_t k = Tabulate(std::span<const Label>(v)).counts.size();
    ok &= Check(h >= 0.0 && h <= std::log2(static_cast<double>(k)) + 1e-12, "entropy bounds");
    ok &= Check((h == 0.0) == (k == 1), "zero entropy iff constant");
  }
  // seed determinism
  for (std::uint64_t i = 0; i < 20; ++i) {
    const BenchConfig cfg = Discrete();
    const LabeledDataset a = GenerateDataset(cfg.gen, i);
    const LabeledDataset b = GenerateDataset(cfg.gen, i);
    ok &= Check(a.data == b.data && a.mechanism == b.mechanism, "generator determinism");
  }
  const BenchReport again = RunBenchmark(Discrete());
  ok &= Check(ReportToJson(again, false) == ReportToJson(discrete, false),
              "benchmark rerun is bit-identical");
  // abstention on exactly symmetric inputs
  for (DataKind kind : {DataKind::kDiscrete, DataKind::kContinuous}) {
    std::vector<double> v{3, 1, 4, 1, 5, 9, 2, 6, 5, 3};
    for (const CriterionScore& s : EvaluateAll(ValidateDataset(v, v, kind))) {
      ok &= Check(s.decision == Direction::kAbstain, "abstain on y = x");
    }
  }
  Verdict(ok, 5, "property suite (antisymmetry, decision rule, tree identities, entropy, determinism, symmetric abstention)");
}

bool NoThrow(const std::string& what, const std::function<void()>& fn) {
  try {
    fn();
    return true;
  } catch (const std::exception& e) {
    Note("%s threw: %s", what.c_str(), e.what());
    return false;
  }
}

void CriterionDegenerate() {
  bool ok = true;
  const std::vector<CriterionKind> structural{CriterionKind::kTD, CriterionKind::kTN,
                                              CriterionKind::kTL, CriterionKind::kPL};
  for (DataKind kind : {DataKind::kDiscrete, DataKind::kContinuous}) {
    ok &= NoThrow("constant x", [&] {
      const auto s = EvaluateAll(ValidateDataset({2, 2, 2, 2}, {1, 5, 1, 7}, kind));
      for (CriterionKind k : structural) {
        ok &= Check(s[CriterionIndex(k)].decision == Direction::kAbstain,
                    "constant x: single-leaf trees both ways");
      }
      for (const CriterionScore& c : s) ok &= Check(std::isfinite(c.j_oriented), "finite score");
    });
    ok &= NoThrow("constant y", [&] {
      const auto s = EvaluateAll(ValidateDataset({1, 5, 1, 7}, {3, 3, 3, 3}, kind));
      for (CriterionKind k : structural) {
        ok &= Check(s[CriterionIndex(k)].decision == Direction::kAbstain,
                    "constant y: single-leaf trees both ways");
      }
    });
    ok &= NoThrow("n = 2", [&] {
      const auto s = EvaluateAll(ValidateDataset({0, 1}, {1, 0}, kind));
      for (const CriterionScore& c : s) ok &= Check(c.decision == Direction::kAbstain, "n = 2 pair abstains");
    });
  }
  ok &= NoThrow("equal histogram scores", [&] {
    const std::vector<double> scores(5, 0.0);
    const std::vector<Direction> truths(5, Direction::kYtoX);
    const FigureData fig = HistogramScores(scores, truths, 10);
    ok &= Check(fig.counts_truth_yx[0] == 5 && fig.bin_edges.size() == 11,
                "equal scores land in the first bin");
  });
  ok &= NoThrow("too-small input", [&] {
    try {
      ValidateDataset({1}, {1}, DataKind::kDiscrete);
      ok &= Check(false, "n = 1 rejected");
    } catch (const Error& e) {
      ok &= Check(e.code() == ErrorCode::kTooSmall, "n = 1 rejected with TooSmall");
    }
  });
  Verdict(ok, 6, "degenerate inputs (constant columns, n = 2, equal histogram scores)");
}

}  // namespace

int main() {
  const BenchReport discrete = RunBenchmark(Discrete());
  CriterionDiscreteBenchmark(discrete);
  const BenchReport continuous = RunBenchmark(Continuous(NoiseMode::kAdditive));
  CriterionContinuousBenchmark(continuous);
  CriterionQualitative(continuous);
  CriterionOracle();
  CriterionProperties(discrete);
  CriterionDegenerate();
  std::printf("%d of 6 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
