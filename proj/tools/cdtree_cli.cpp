// cdtree command-line tool: generate synthetic cause-effect datasets, infer
// the causal direction of a CSV pair, and run the synthetic benchmark.
//
// Exit codes: 0 success, 1 runtime or I/O failure, 2 usage error.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdtree/cdtree.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Check(cdt_status status) {
  if (status != CDT_OK) {
    throw RuntimeError(std::string(cdt_status_name(status)) + ": " + cdt_last_error());
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using DatasetPtr = std::unique_ptr<cdt_dataset, Deleter<cdt_dataset, cdt_dataset_free>>;
using LabeledPtr =
    std::unique_ptr<cdt_labeled_dataset, Deleter<cdt_labeled_dataset, cdt_labeled_free>>;
using ManifestPtr = std::unique_ptr<cdt_manifest, Deleter<cdt_manifest, cdt_manifest_free>>;
using ReportPtr = std::unique_ptr<cdt_report, Deleter<cdt_report, cdt_report_free>>;

std::string Number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v + 0.0);
  return std::string(buf, res.ptr);
}

const std::map<std::string, cdt_kind> kKinds = {{"discrete", CDT_DISCRETE},
                                                {"continuous", CDT_CONTINUOUS}};
const std::map<std::string, bool> kNoiseShapes = {{"uniform", true}, {"gaussian", false}};
const std::map<std::string, cdt_noise_mode> kModes = {{"additive", CDT_ADDITIVE},
                                                      {"multiplicative", CDT_MULTIPLICATIVE}};

// Generator flags shared by `generate` and `benchmark`.
struct GenFlags {
  cdt_kind kind = CDT_DISCRETE;
  bool noise_x_uniform = true;
  bool noise_y_uniform = true;
  cdt_noise_mode mode = CDT_ADDITIVE;
  std::optional<std::uint32_t> cardinality;
  std::optional<std::uint32_t> cardinality_y;
  std::uint32_t samples = 1000;
  double flip_probability = 0.5;
  std::uint64_t seed = kDefaultSeed;

  void Register(CLI::App* app) {
    app->add_option("--kind", kind, "discrete or continuous variables")
        ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case).description(""))
        ->option_text("discrete|continuous [discrete]");
    app->add_option("--noise-x", noise_x_uniform, "cause noise: uniform or gaussian")
        ->transform(CLI::CheckedTransformer(kNoiseShapes, CLI::ignore_case).description(""))
        ->option_text("uniform|gaussian [uniform]");
    app->add_option("--noise-y", noise_y_uniform, "effect noise: uniform or gaussian")
        ->transform(CLI::CheckedTransformer(kNoiseShapes, CLI::ignore_case).description(""))
        ->option_text("uniform|gaussian [uniform]");
    app->add_option("--mode", mode, "additive or multiplicative noise")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case).description(""))
        ->option_text("additive|multiplicative [additive]");
    app->add_option("--cardinality", cardinality,
                    "cardinality R of discrete noise (default 20)")
        ->check(CLI::Range(2u, 1u << 20));
    app->add_option("--cardinality-y", cardinality_y,
                    "cardinality of the effect noise (default: --cardinality)")
        ->check(CLI::Range(2u, 1u << 20));
    app->add_option("--samples", samples, "pairs per dataset")
        ->check(CLI::Range(2u, 100000000u))
        ->capture_default_str();
    app->add_option("--flip-probability", flip_probability,
                    "probability of swapping cause and effect columns")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app->add_option("--seed", seed, "master seed")->capture_default_str();
  }

  cdt_gen_config ToConfig() const {
    if (kind == CDT_CONTINUOUS && (cardinality || cardinality_y)) {
      throw UsageError("--cardinality applies to discrete data only");
    }
    cdt_gen_config cfg;
    cdt_gen_config_default(&cfg);
    const std::uint32_t rx = cardinality.value_or(20);
    const std::uint32_t ry = cardinality_y.value_or(rx);
    auto family = [&](bool uniform) {
      if (kind == CDT_DISCRETE) {
        return uniform ? CDT_NOISE_DISCRETE_UNIFORM : CDT_NOISE_DISCRETE_GAUSSIAN;
      }
      return uniform ? CDT_NOISE_CONTINUOUS_UNIFORM : CDT_NOISE_CONTINUOUS_GAUSSIAN;
    };
    cfg.n_samples = samples;
    cfg.noise_x = {family(noise_x_uniform), rx};
    cfg.noise_y = {family(noise_y_uniform), ry};
    cfg.mode = mode;
    cfg.flip_probability = flip_probability;
    cfg.seed = seed;
    return cfg;
  }
};

int RunGenerate(const GenFlags& flags, std::uint32_t datasets, const std::string& out) {
  const cdt_gen_config cfg = flags.ToConfig();
  const std::filesystem::path dir(out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw RuntimeError("cannot create " + dir.string() + ": " + ec.message());

  cdt_manifest* raw_manifest = nullptr;
  Check(cdt_manifest_create(&cfg, &raw_manifest));
  ManifestPtr manifest(raw_manifest);
  for (std::uint32_t i = 0; i < datasets; ++i) {
    cdt_labeled_dataset* raw = nullptr;
    Check(cdt_generate(&cfg, i, &raw));
    LabeledPtr ds(raw);
    char name[32];
    std::snprintf(name, sizeof name, "dataset_%05u.csv", i);
    Check(cdt_dataset_write_csv(cdt_labeled_data(ds.get()), (dir / name).string().c_str()));
    Check(cdt_manifest_add(manifest.get(), ds.get(), i, name));
  }
  const std::filesystem::path manifest_path = dir / "manifest.json";
  Check(cdt_manifest_write(manifest.get(), manifest_path.string().c_str()));
  std::printf("wrote %u dataset(s) and %s\n", datasets, manifest_path.string().c_str());
  return 0;
}

int RunInfer(const std::string& input, cdt_kind kind, std::uint32_t bins,
             const std::vector<std::string>& criteria) {
  std::vector<cdt_criterion> wanted;
  for (const std::string& name : criteria) {
    cdt_criterion c;
    if (cdt_parse_criterion(name.c_str(), &c) != CDT_OK) {
      throw UsageError("unknown criterion '" + name + "'");
    }
    wanted.push_back(c);
  }
  if (wanted.empty()) {
    for (int c = CDT_TD; c <= CDT_IH; ++c) wanted.push_back(static_cast<cdt_criterion>(c));
  }

  cdt_dataset* raw = nullptr;
  Check(cdt_dataset_read_csv(input.c_str(), kind, &raw));
  DatasetPtr data(raw);
  cdt_eval_options options;
  cdt_eval_options_default(&options);
  options.n_bins = bins;
  cdt_score scores[CDT_CRITERION_COUNT];
  Check(cdt_evaluate(data.get(), &options, scores));
  for (cdt_criterion c : wanted) {
    const cdt_score& s = scores[c];
    std::printf("%s\t%s\t%s\n", cdt_criterion_name(c), Number(s.j_oriented).c_str(),
                cdt_direction_name(s.decision));
  }
  return 0;
}

struct BenchFlags {
  std::uint32_t datasets = 1000;
  std::uint32_t bins = 100;
  std::uint32_t hist_bins = 50;
  std::uint32_t threads = 0;
  std::string report;
};

int RunBenchmark(const GenFlags& gen, const BenchFlags& flags) {
  cdt_bench_config cfg;
  cdt_bench_config_default(&cfg);
  cfg.gen = gen.ToConfig();
  cfg.n_datasets = flags.datasets;
  cfg.n_bins = flags.bins;
  cfg.histogram_bins = flags.hist_bins;
  cfg.threads = flags.threads;

  cdt_report* raw = nullptr;
  Check(cdt_benchmark_run(&cfg, &raw));
  ReportPtr report(raw);
  Check(cdt_report_write_json(report.get(), flags.report.c_str()));

  std::printf("%-9s %9s %22s\n", "criterion", "accuracy", "accuracy_excl_abstain");
  for (int c = CDT_TD; c <= CDT_IH; ++c) {
    cdt_summary s;
    Check(cdt_report_summary(report.get(), static_cast<cdt_criterion>(c), &s));
    std::printf("%-9s %9.3f %22.3f\n", cdt_criterion_name(s.criterion), s.accuracy,
                s.accuracy_excluding_abstentions);
  }
  std::printf("%u datasets in %.2fs, report written to %s\n", flags.datasets,
              cdt_report_duration(report.get()), flags.report.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Infer causal direction between two variables from decision-tree complexity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cdt_version()));

  GenFlags gen_flags;
  std::uint32_t gen_datasets = 1;
  std::string gen_out;
  CLI::App* generate = app.add_subcommand("generate", "write synthetic datasets and a manifest");
  gen_flags.Register(generate);
  generate->add_option("--datasets", gen_datasets, "number of datasets")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--out", gen_out, "output directory")->required();

  std::string infer_input;
  cdt_kind infer_kind = CDT_DISCRETE;
  std::uint32_t infer_bins = 100;
  std::vector<std::string> infer_criteria;
  CLI::App* infer = app.add_subcommand("infer", "score a two-column CSV with every criterion");
  infer->add_option("--input", infer_input, "CSV file with header x,y")->required();
  infer->add_option("--kind", infer_kind, "discrete or continuous")
      ->required()
      ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case).description(""))
      ->option_text("discrete|continuous REQUIRED");
  infer->add_option("--bins", infer_bins, "equal-width bins for continuous data")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  infer->add_option("--criterion", infer_criteria, "criteria to report (default all)");

  GenFlags bench_gen;
  BenchFlags bench_flags;
  CLI::App* benchmark =
      app.add_subcommand("benchmark", "score many generated datasets and report accuracy");
  bench_gen.Register(benchmark);
  benchmark->add_option("--datasets", bench_flags.datasets, "number of datasets")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  benchmark->add_option("--bins", bench_flags.bins, "equal-width bins for continuous data")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  benchmark->add_option("--hist-bins", bench_flags.hist_bins, "histogram bins per criterion")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  benchmark->add_option("--threads", bench_flags.threads, "worker threads (0 = all cores)")
      ->capture_default_str();
  benchmark->add_option("--report", bench_flags.report, "JSON report path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return RunGenerate(gen_flags, gen_datasets, gen_out);
    if (infer->parsed()) return RunInfer(infer_input, infer_kind, infer_bins, infer_criteria);
    return RunBenchmark(bench_gen, bench_flags);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
}
