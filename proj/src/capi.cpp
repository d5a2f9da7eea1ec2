#include "cdtree/cdtree.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cdtree/bench.hpp"
#include "cdtree/criteria.hpp"
#include "cdtree/io.hpp"
#include "cdtree/scmgen.hpp"

using namespace cdtree;

struct cdt_dataset {
  PairDataset data;
};

struct cdt_labeled_dataset {
  cdt_dataset data;
  Direction truth;
  Mechanism mechanism;
};

struct cdt_manifest {
  Manifest manifest;
};

struct cdt_report {
  BenchReport report;
};

namespace {

thread_local std::string g_last_error;

cdt_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return CDT_ERR_INVALID_ARGUMENT;
    case ErrorCode::kLengthMismatch: return CDT_ERR_LENGTH_MISMATCH;
    case ErrorCode::kNonFinite: return CDT_ERR_NON_FINITE;
    case ErrorCode::kNonInteger: return CDT_ERR_NON_INTEGER;
    case ErrorCode::kTooSmall: return CDT_ERR_TOO_SMALL;
    case ErrorCode::kEmptyInput: return CDT_ERR_EMPTY_INPUT;
    case ErrorCode::kLabelOutOfRange: return CDT_ERR_LABEL_OUT_OF_RANGE;
    case ErrorCode::kConfigInvalid: return CDT_ERR_CONFIG_INVALID;
    case ErrorCode::kIo: return CDT_ERR_IO;
    case ErrorCode::kParse: return CDT_ERR_PARSE;
  }
  return CDT_ERR_INTERNAL;
}

cdt_status Fail(cdt_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating any exception into a status code.
template <typename Fn>
cdt_status Guard(Fn&& fn) {
  try {
    fn();
    return CDT_OK;
  } catch (const Error& e) {
    return Fail(StatusOf(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CDT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CDT_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(CDT_ERR_INTERNAL, "unknown failure");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

DataKind ToKind(cdt_kind kind) {
  Require(kind == CDT_DISCRETE || kind == CDT_CONTINUOUS, "unknown data kind");
  return kind == CDT_DISCRETE ? DataKind::kDiscrete : DataKind::kContinuous;
}

cdt_direction FromDirection(Direction dir) {
  switch (dir) {
    case Direction::kXtoY: return CDT_X_TO_Y;
    case Direction::kYtoX: return CDT_Y_TO_X;
    case Direction::kAbstain: return CDT_ABSTAIN;
  }
  return CDT_ABSTAIN;
}

CriterionKind ToCriterion(cdt_criterion c) {
  Require(c >= CDT_TD && c <= CDT_IH, "unknown criterion");
  return static_cast<CriterionKind>(c);
}

SignConfig ToSigns(const cdt_sign_config& in) {
  SignConfig s;
  for (CriterionKind k : kAllCriteria) {
    s.set(k, DataKind::kDiscrete, in.discrete[CriterionIndex(k)]);
    s.set(k, DataKind::kContinuous, in.continuous[CriterionIndex(k)]);
  }
  return s;
}

EntropyNormalization ToNormalization(cdt_normalization n) {
  Require(n == CDT_NORM_CARDINALITY || n == CDT_NORM_SHANNON,
          "unknown entropy normalization");
  return n == CDT_NORM_CARDINALITY ? EntropyNormalization::kCardinality
                                   : EntropyNormalization::kShannon;
}

NoiseSpec ToNoise(const cdt_noise_spec& in) {
  Require(in.family >= CDT_NOISE_DISCRETE_UNIFORM &&
              in.family <= CDT_NOISE_CONTINUOUS_GAUSSIAN,
          "unknown noise family");
  return NoiseSpec{static_cast<NoiseFamily>(in.family), in.cardinality};
}

GenConfig ToGen(const cdt_gen_config& in) {
  Require(in.mode == CDT_ADDITIVE || in.mode == CDT_MULTIPLICATIVE, "unknown noise mode");
  GenConfig g;
  g.n_samples = in.n_samples;
  g.noise_x = ToNoise(in.noise_x);
  g.noise_y = ToNoise(in.noise_y);
  g.mode = in.mode == CDT_ADDITIVE ? NoiseMode::kAdditive : NoiseMode::kMultiplicative;
  g.flip_probability = in.flip_probability;
  g.seed = in.seed;
  return g;
}

const CriterionSummary& SummaryOf(const cdt_report* report, cdt_criterion c) {
  Require(report != nullptr, "report is null");
  return report->report.summary(ToCriterion(c));
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* cdt_version(void) { return "1.0.0"; }

const char* cdt_last_error(void) { return g_last_error.c_str(); }

const char* cdt_status_name(cdt_status status) {
  switch (status) {
    case CDT_OK: return "ok";
    case CDT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CDT_ERR_LENGTH_MISMATCH: return "length mismatch";
    case CDT_ERR_NON_FINITE: return "non-finite value";
    case CDT_ERR_NON_INTEGER: return "non-integer value";
    case CDT_ERR_TOO_SMALL: return "too few samples";
    case CDT_ERR_EMPTY_INPUT: return "empty input";
    case CDT_ERR_LABEL_OUT_OF_RANGE: return "label out of range";
    case CDT_ERR_CONFIG_INVALID: return "invalid configuration";
    case CDT_ERR_IO: return "i/o error";
    case CDT_ERR_PARSE: return "parse error";
    case CDT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cdt_criterion_name(cdt_criterion criterion) {
  if (criterion < CDT_TD || criterion > CDT_IH) return "unknown";
  return CriterionName(static_cast<CriterionKind>(criterion)).data();
}

const char* cdt_direction_name(cdt_direction direction) {
  switch (direction) {
    case CDT_X_TO_Y: return "x->y";
    case CDT_Y_TO_X: return "y->x";
    case CDT_ABSTAIN: return "abstain";
  }
  return "unknown";
}

cdt_status cdt_parse_criterion(const char* text, cdt_criterion* out) {
  return Guard([&] {
    Require(text && out, "null argument");
    *out = static_cast<cdt_criterion>(ParseCriterion(text));
  });
}

void cdt_sign_config_default(cdt_sign_config* out) {
  if (!out) return;
  const SignConfig s = SignConfig::Default();
  for (CriterionKind k : kAllCriteria) {
    out->discrete[CriterionIndex(k)] = static_cast<int8_t>(s.sign(k, DataKind::kDiscrete));
    out->continuous[CriterionIndex(k)] =
        static_cast<int8_t>(s.sign(k, DataKind::kContinuous));
  }
}

void cdt_eval_options_default(cdt_eval_options* out) {
  if (!out) return;
  out->n_bins = kDefaultBins;
  cdt_sign_config_default(&out->signs);
  out->normalization = CDT_NORM_CARDINALITY;
}

void cdt_gen_config_default(cdt_gen_config* out) {
  if (!out) return;
  const GenConfig g;
  out->n_samples = g.n_samples;
  out->noise_x = {CDT_NOISE_DISCRETE_UNIFORM, g.noise_x.cardinality};
  out->noise_y = {CDT_NOISE_DISCRETE_UNIFORM, g.noise_y.cardinality};
  out->mode = CDT_ADDITIVE;
  out->flip_probability = g.flip_probability;
  out->seed = g.seed;
}

void cdt_bench_config_default(cdt_bench_config* out) {
  if (!out) return;
  const BenchConfig b;
  out->n_datasets = b.n_datasets;
  cdt_gen_config_default(&out->gen);
  out->n_bins = b.n_bins;
  out->histogram_bins = b.histogram_bins;
  cdt_sign_config_default(&out->signs);
  out->normalization = CDT_NORM_CARDINALITY;
  out->threads = 0;
}

cdt_status cdt_dataset_create(const double* x, const double* y, size_t n, cdt_kind kind,
                              cdt_dataset** out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    Require(n == 0 || (x && y), "column pointer is null");
    std::vector<double> xs(x, x + n);
    std::vector<double> ys(y, y + n);
    *out = new cdt_dataset{ValidateDataset(std::move(xs), std::move(ys), ToKind(kind))};
  });
}

cdt_status cdt_dataset_read_csv(const char* path, cdt_kind kind, cdt_dataset** out) {
  return Guard([&] {
    Require(path && out, "null argument");
    *out = new cdt_dataset{ReadCsv(path, ToKind(kind))};
  });
}

cdt_status cdt_dataset_write_csv(const cdt_dataset* data, const char* path) {
  return Guard([&] {
    Require(data && path, "null argument");
    WriteCsv(data->data, path);
  });
}

size_t cdt_dataset_size(const cdt_dataset* data) { return data ? data->data.size() : 0; }

cdt_kind cdt_dataset_kind(const cdt_dataset* data) {
  return data && data->data.kind() == DataKind::kContinuous ? CDT_CONTINUOUS
                                                            : CDT_DISCRETE;
}

cdt_status cdt_dataset_columns(const cdt_dataset* data, double* x, double* y) {
  return Guard([&] {
    Require(data && x && y, "null argument");
    std::memcpy(x, data->data.x().data(), data->data.size() * sizeof(double));
    std::memcpy(y, data->data.y().data(), data->data.size() * sizeof(double));
  });
}

void cdt_dataset_free(cdt_dataset* data) { delete data; }

cdt_status cdt_evaluate(const cdt_dataset* data, const cdt_eval_options* options,
                        cdt_score out[CDT_CRITERION_COUNT]) {
  return Guard([&] {
    Require(data && out, "null argument");
    EvalOptions opts;
    if (options) {
      opts.n_bins = options->n_bins;
      opts.signs = ToSigns(options->signs);
      opts.normalization = ToNormalization(options->normalization);
    }
    Require(opts.n_bins > 0, "n_bins must be positive");
    const CriterionScores scores = EvaluateAll(data->data, opts);
    for (std::size_t i = 0; i < scores.size(); ++i) {
      const CriterionScore& s = scores[i];
      out[i] = cdt_score{static_cast<cdt_criterion>(s.kind), s.j_raw, s.j_oriented,
                         s.measure_xy, s.measure_yx, FromDirection(s.decision)};
    }
  });
}

cdt_status cdt_decide(double j, cdt_direction* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = FromDirection(Decide(j));
  });
}

cdt_status cdt_generate(const cdt_gen_config* config, uint64_t index,
                        cdt_labeled_dataset** out) {
  return Guard([&] {
    Require(config && out, "null argument");
    LabeledDataset ds = GenerateDataset(ToGen(*config), index);
    *out = new cdt_labeled_dataset{cdt_dataset{std::move(ds.data)}, ds.truth,
                                   std::move(ds.mechanism)};
  });
}

const cdt_dataset* cdt_labeled_data(const cdt_labeled_dataset* ds) {
  return ds ? &ds->data : nullptr;
}

cdt_direction cdt_labeled_truth(const cdt_labeled_dataset* ds) {
  return ds ? FromDirection(ds->truth) : CDT_ABSTAIN;
}

uint64_t cdt_labeled_seed(const cdt_labeled_dataset* ds) {
  return ds ? ds->mechanism.seed : 0;
}

void cdt_labeled_free(cdt_labeled_dataset* ds) { delete ds; }

cdt_status cdt_manifest_create(const cdt_gen_config* config, cdt_manifest** out) {
  return Guard([&] {
    Require(config && out, "null argument");
    const GenConfig gen = ToGen(*config);
    ValidateGenConfig(gen);
    *out = new cdt_manifest{Manifest(gen)};
  });
}

cdt_status cdt_manifest_add(cdt_manifest* manifest, const cdt_labeled_dataset* ds,
                            uint64_t index, const char* file_name) {
  return Guard([&] {
    Require(manifest && ds && file_name, "null argument");
    manifest->manifest.Add(LabeledDataset{ds->data.data, ds->truth, ds->mechanism},
                           index, file_name);
  });
}

cdt_status cdt_manifest_write(const cdt_manifest* manifest, const char* path) {
  return Guard([&] {
    Require(manifest && path, "null argument");
    manifest->manifest.Write(path);
  });
}

void cdt_manifest_free(cdt_manifest* manifest) { delete manifest; }

cdt_status cdt_benchmark_run(const cdt_bench_config* config, cdt_report** out) {
  return Guard([&] {
    Require(config && out, "null argument");
    BenchConfig cfg;
    cfg.n_datasets = config->n_datasets;
    cfg.gen = ToGen(config->gen);
    cfg.n_bins = config->n_bins;
    cfg.histogram_bins = config->histogram_bins;
    cfg.signs = ToSigns(config->signs);
    cfg.normalization = ToNormalization(config->normalization);
    cfg.threads = config->threads;
    *out = new cdt_report{RunBenchmark(cfg)};
  });
}

cdt_status cdt_report_summary(const cdt_report* report, cdt_criterion criterion,
                              cdt_summary* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    const CriterionSummary& s = SummaryOf(report, criterion);
    *out = cdt_summary{criterion,
                       s.n_correct,
                       s.n_incorrect,
                       s.n_abstain,
                       s.accuracy,
                       s.accuracy_excluding_abstentions,
                       s.abstention_rate,
                       s.mean_measure_causal,
                       s.mean_measure_anticausal};
  });
}

cdt_status cdt_report_histogram(const cdt_report* report, cdt_criterion criterion,
                                const double** edges, const uint64_t** counts_xy,
                                const uint64_t** counts_yx, size_t* n_bins) {
  return Guard([&] {
    Require(edges && counts_xy && counts_yx && n_bins, "null argument");
    const FigureData& fig = SummaryOf(report, criterion).histogram;
    *edges = fig.bin_edges.data();
    *counts_xy = fig.counts_truth_xy.data();
    *counts_yx = fig.counts_truth_yx.data();
    *n_bins = fig.counts_truth_xy.size();
  });
}

double cdt_report_duration(const cdt_report* report) {
  return report ? report->report.duration_seconds : 0.0;
}

cdt_status cdt_report_to_json(const cdt_report* report, int include_duration, char** out) {
  return Guard([&] {
    Require(report && out, "null argument");
    *out = CopyString(ReportToJson(report->report, include_duration != 0));
  });
}

cdt_status cdt_report_write_json(const cdt_report* report, const char* path) {
  return Guard([&] {
    Require(report && path, "null argument");
    WriteReport(report->report, path);
  });
}

void cdt_report_free(cdt_report* report) { delete report; }

void cdt_string_free(char* text) { std::free(text); }

}  // extern "C"
