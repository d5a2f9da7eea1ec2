#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cdtree {

// Occurrence counts of the distinct values of a sample, in ascending value
// order. Every count is >= 1 and the counts sum to `total`.
template <typename T>
struct EmpiricalDistribution {
  std::vector<std::pair<T, std::uint64_t>> counts;
  std::uint64_t total = 0;
};

// Reals are grouped after rounding to this many significant digits so that
// floating-point noise in grid arithmetic does not split a category.
inline constexpr int kCategoryDigits = 12;

double RoundToSignificant(double value, int digits = kCategoryDigits);

EmpiricalDistribution<double> Tabulate(std::span<const double> values);
EmpiricalDistribution<std::int64_t> Tabulate(std::span<const std::int64_t> values);

// Plug-in Shannon entropy in bits. Throws kEmptyInput.
double Entropy(std::span<const double> values);
double Entropy(std::span<const std::int64_t> values);

// Fraction of positions where the labels differ. Throws kLengthMismatch or
// kEmptyInput.
double Misclassification(std::span<const std::int64_t> y,
                         std::span<const std::int64_t> yhat);

double MeanSquaredError(std::span<const double> y, std::span<const double> yhat);

// Element-wise target - predicted. Throws kLengthMismatch.
std::vector<double> Residuals(std::span<const double> target,
                              std::span<const double> predicted);

}  // namespace cdtree
