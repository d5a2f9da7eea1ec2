#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cdtree {

inline constexpr std::uint32_t kDefaultBins = 100;

// Equal-width partition of [lo, hi] into n_bins bins. Bin b covers
// [lo + b*width, lo + (b+1)*width); the last bin is also closed on the right.
// A degenerate spec (lo == hi) has width 0 and maps everything to bin 0.
struct BinSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::uint32_t n_bins = 1;
  double width = 0.0;

  bool degenerate() const { return width == 0.0; }

  friend bool operator==(const BinSpec&, const BinSpec&) = default;
};

struct BinnedVariable {
  std::vector<std::int64_t> labels;
  BinSpec spec;
};

// Fits the range to the observed min/max. Throws kEmptyInput on no values and
// kInvalidArgument when n_bins == 0 or a value is non-finite.
BinSpec FitBins(std::span<const double> values, std::uint32_t n_bins);

// Out-of-range values clamp to the first/last bin.
std::int64_t ApplyBin(double value, const BinSpec& spec);
BinnedVariable ApplyBins(std::span<const double> values, const BinSpec& spec);

// Centre of a bin; lo for a degenerate spec. Throws kLabelOutOfRange.
double Midpoint(const BinSpec& spec, std::int64_t label);

}  // namespace cdtree
