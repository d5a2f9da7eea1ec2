#include "cdtree/binning.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cdtree/core.hpp"

namespace cdtree {

BinSpec FitBins(std::span<const double> values, std::uint32_t n_bins) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "cannot bin no values");
  if (n_bins == 0) {
    throw Error(ErrorCode::kInvalidArgument, "number of bins must be positive");
  }
  if (!std::all_of(values.begin(), values.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::kInvalidArgument, "cannot bin non-finite values");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  BinSpec spec;
  spec.lo = *lo;
  spec.hi = *hi;
  spec.n_bins = n_bins;
  spec.width = (spec.hi - spec.lo) / n_bins;
  return spec;
}

std::int64_t ApplyBin(double value, const BinSpec& spec) {
  if (spec.degenerate() || !(value > spec.lo)) return 0;
  const std::int64_t last = static_cast<std::int64_t>(spec.n_bins) - 1;
  if (value >= spec.hi) return last;
  const double position = std::floor((value - spec.lo) / spec.width);
  return std::clamp(static_cast<std::int64_t>(position), std::int64_t{0}, last);
}

BinnedVariable ApplyBins(std::span<const double> values, const BinSpec& spec) {
  BinnedVariable out;
  out.spec = spec;
  out.labels.reserve(values.size());
  for (double v : values) out.labels.push_back(ApplyBin(v, spec));
  return out;
}

double Midpoint(const BinSpec& spec, std::int64_t label) {
  if (label < 0 || label >= static_cast<std::int64_t>(spec.n_bins)) {
    throw Error(ErrorCode::kLabelOutOfRange,
                "bin " + std::to_string(label) + " outside [0, " +
                    std::to_string(spec.n_bins) + ")");
  }
  if (spec.degenerate()) return spec.lo;
  return spec.lo + (static_cast<double>(label) + 0.5) * spec.width;
}

}  // namespace cdtree
