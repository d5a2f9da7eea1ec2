#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cdtree/bench.hpp"
#include "cdtree/core.hpp"
#include "cdtree/scmgen.hpp"

namespace cdtree {

// Shortest decimal (fixed notation) that reads back to the same double;
// integral values carry no fractional part.
std::string FormatValue(double value);

// Two-column CSV with header "x,y".
std::string ToCsv(const PairDataset& data);
void WriteCsv(const PairDataset& data, const std::filesystem::path& path);

// Throws kParse with the 1-based line number on malformed input, kIo when the
// file cannot be read, and the ValidateDataset errors for bad content.
PairDataset ParseCsv(std::string_view text, DataKind kind);
PairDataset ReadCsv(const std::filesystem::path& path, DataKind kind);

std::string_view NoiseFamilyName(NoiseFamily family);  // e.g. "discrete-uniform"
std::string_view NoiseModeName(NoiseMode mode);        // "additive" / "multiplicative"
std::string_view NormalizationName(EntropyNormalization norm);

// Ground truth for a generated collection, kept apart from the data files.
class Manifest {
 public:
  explicit Manifest(const GenConfig& generator) : generator_(generator) {}

  void Add(const LabeledDataset& ds, std::uint64_t index, std::string file_name);
  std::size_t size() const { return entries_.size(); }

  std::string ToJson() const;
  void Write(const std::filesystem::path& path) const;

 private:
  struct Entry {
    std::string file;
    std::uint64_t index;
    Direction truth;
    Mechanism mechanism;
  };
  GenConfig generator_;
  std::vector<Entry> entries_;
};

std::string ReportToJson(const BenchReport& report, bool include_duration = true);
void WriteReport(const BenchReport& report, const std::filesystem::path& path);

void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace cdtree
