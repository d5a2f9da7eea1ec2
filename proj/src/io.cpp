#include "cdtree/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace cdtree {

using nlohmann::ordered_json;

std::string FormatValue(double value) {
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, value + 0.0,
                                 std::chars_format::fixed);
  if (res.ec != std::errc{}) {
    // Fixed notation of extreme magnitudes can exceed the buffer.
    const auto alt = std::to_chars(buf, buf + sizeof buf, value + 0.0);
    return std::string(buf, alt.ptr);
  }
  return std::string(buf, res.ptr);
}

std::string ToCsv(const PairDataset& data) {
  std::string out = "x,y\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    out += FormatValue(data.x()[i]);
    out += ',';
    out += FormatValue(data.y()[i]);
    out += '\n';
  }
  return out;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

void WriteCsv(const PairDataset& data, const std::filesystem::path& path) {
  WriteTextFile(path, ToCsv(data));
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool ParseNumber(std::string_view field, double& out) {
  field = Trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return false;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), out);
  return res.ec == std::errc{} && res.ptr == field.data() + field.size();
}

[[noreturn]] void ParseFail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

PairDataset ParseCsv(std::string_view text, DataKind kind) {
  std::vector<double> xs;
  std::vector<double> ys;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = Trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty()) continue;
    if (!seen_header) {
      seen_header = true;
      if (line != "x,y") ParseFail(line_no, "expected header 'x,y'");
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      ParseFail(line_no, "expected exactly two comma-separated fields");
    }
    double x = 0.0;
    double y = 0.0;
    if (!ParseNumber(line.substr(0, comma), x) || !ParseNumber(line.substr(comma + 1), y)) {
      ParseFail(line_no, "fields must be decimal numbers");
    }
    xs.push_back(x);
    ys.push_back(y);
  }
  if (!seen_header) ParseFail(line_no + 1, "missing header 'x,y'");
  return ValidateDataset(std::move(xs), std::move(ys), kind);
}

PairDataset ReadCsv(const std::filesystem::path& path, DataKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseCsv(buf.str(), kind);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string_view NoiseFamilyName(NoiseFamily family) {
  switch (family) {
    case NoiseFamily::kDiscreteUniform: return "discrete-uniform";
    case NoiseFamily::kDiscreteGaussian: return "discrete-gaussian";
    case NoiseFamily::kContinuousUniform: return "continuous-uniform";
    case NoiseFamily::kContinuousGaussian: return "continuous-gaussian";
  }
  return "unknown";
}

std::string_view NoiseModeName(NoiseMode mode) {
  return mode == NoiseMode::kAdditive ? "additive" : "multiplicative";
}

std::string_view NormalizationName(EntropyNormalization norm) {
  return norm == EntropyNormalization::kCardinality ? "cardinality" : "shannon";
}

namespace {

ordered_json NoiseJson(const NoiseSpec& spec) {
  ordered_json j;
  j["family"] = NoiseFamilyName(spec.family);
  if (spec.discrete()) j["cardinality"] = spec.cardinality;
  return j;
}

ordered_json GenJson(const GenConfig& gen) {
  ordered_json j;
  j["kind"] = DataKindName(gen.noise_x.kind());
  j["samples"] = gen.n_samples;
  j["noise_x"] = NoiseJson(gen.noise_x);
  j["noise_y"] = NoiseJson(gen.noise_y);
  j["mode"] = NoiseModeName(gen.mode);
  j["flip_probability"] = gen.flip_probability;
  j["seed"] = gen.seed;
  return j;
}

std::string Dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

void Manifest::Add(const LabeledDataset& ds, std::uint64_t index, std::string file_name) {
  entries_.push_back(Entry{std::move(file_name), index, ds.truth, ds.mechanism});
}

std::string Manifest::ToJson() const {
  ordered_json root;
  root["format"] = "cdtree-manifest";
  root["version"] = 1;
  root["generator"] = GenJson(generator_);
  ordered_json list = ordered_json::array();
  for (const Entry& e : entries_) {
    ordered_json j;
    j["file"] = e.file;
    j["index"] = e.index;
    j["truth"] = DirectionName(e.truth);
    j["seed"] = e.mechanism.seed;
    j["noise_x"] = NoiseJson(e.mechanism.noise_x);
    j["noise_y"] = NoiseJson(e.mechanism.noise_y);
    j["mode"] = NoiseModeName(e.mechanism.mode);
    j["f_cause"] = e.mechanism.f_cause.coefficients;
    j["f_noise"] = e.mechanism.f_noise.coefficients;
    j["flipped"] = e.mechanism.flipped;
    list.push_back(std::move(j));
  }
  root["datasets"] = std::move(list);
  return Dump(root);
}

void Manifest::Write(const std::filesystem::path& path) const {
  WriteTextFile(path, ToJson());
}

std::string ReportToJson(const BenchReport& report, bool include_duration) {
  const BenchConfig& cfg = report.config;
  ordered_json root;
  root["format"] = "cdtree-benchmark-report";
  root["version"] = 1;

  ordered_json config;
  config["datasets"] = cfg.n_datasets;
  config["generator"] = GenJson(cfg.gen);
  config["bins"] = cfg.n_bins;
  config["histogram_bins"] = cfg.histogram_bins;
  config["entropy_normalization"] = NormalizationName(cfg.normalization);
  ordered_json signs;
  for (DataKind kind : {DataKind::kDiscrete, DataKind::kContinuous}) {
    ordered_json row;
    for (CriterionKind c : kAllCriteria) row[std::string(CriterionName(c))] = cfg.signs.sign(c, kind);
    signs[std::string(DataKindName(kind))] = std::move(row);
  }
  config["signs"] = std::move(signs);
  root["config"] = std::move(config);

  ordered_json criteria = ordered_json::array();
  for (const CriterionSummary& s : report.summaries) {
    ordered_json j;
    j["criterion"] = CriterionName(s.kind);
    j["accuracy"] = s.accuracy;
    j["accuracy_excluding_abstentions"] = s.accuracy_excluding_abstentions;
    j["abstention_rate"] = s.abstention_rate;
    j["correct"] = s.n_correct;
    j["incorrect"] = s.n_incorrect;
    j["abstained"] = s.n_abstain;
    j["mean_measure_causal"] = s.mean_measure_causal;
    j["mean_measure_anticausal"] = s.mean_measure_anticausal;
    ordered_json hist;
    hist["bin_edges"] = s.histogram.bin_edges;
    hist["counts_truth_xy"] = s.histogram.counts_truth_xy;
    hist["counts_truth_yx"] = s.histogram.counts_truth_yx;
    j["histogram"] = std::move(hist);
    criteria.push_back(std::move(j));
  }
  root["criteria"] = std::move(criteria);
  if (include_duration) root["duration_seconds"] = report.duration_seconds;
  return Dump(root);
}

void WriteReport(const BenchReport& report, const std::filesystem::path& path) {
  WriteTextFile(path, ReportToJson(report));
}

}  // namespace cdtree
