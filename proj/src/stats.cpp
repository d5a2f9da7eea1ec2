#include "cdtree/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cdtree/core.hpp"

namespace cdtree {

namespace {

template <typename T>
EmpiricalDistribution<T> TabulateSorted(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  EmpiricalDistribution<T> dist;
  dist.total = values.size();
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    dist.counts.emplace_back(values[i], j - i);
    i = j;
  }
  return dist;
}

template <typename T>
double EntropyOf(const EmpiricalDistribution<T>& dist) {
  if (dist.total == 0) {
    throw Error(ErrorCode::kEmptyInput, "entropy of an empty sample is undefined");
  }
  if (dist.counts.size() == 1) return 0.0;
  const double n = static_cast<double>(dist.total);
  double weighted = 0.0;
  for (const auto& [value, count] : dist.counts) {
    const double c = static_cast<double>(count);
    weighted += c * std::log2(c);
  }
  // H = log2 n - (1/n) sum c log2 c
  return std::max(0.0, std::log2(n) - weighted / n);
}

void CheckPaired(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::kLengthMismatch,
                std::string(what) + ": lengths " + std::to_string(a) + " and " +
                    std::to_string(b) + " differ");
  }
  if (a == 0) throw Error(ErrorCode::kEmptyInput, std::string(what) + ": no values");
}

}  // namespace

double RoundToSignificant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(value))));
  const int shift = digits - 1 - magnitude;
  // Near the ends of the double range the scale factor would overflow.
  if (shift > 300 || shift < -300) return value;
  const double scale = std::pow(10.0, shift);
  return std::round(value * scale) / scale;
}

EmpiricalDistribution<double> Tabulate(std::span<const double> values) {
  std::vector<double> keys;
  keys.reserve(values.size());
  for (double v : values) keys.push_back(RoundToSignificant(v));
  return TabulateSorted(std::move(keys));
}

EmpiricalDistribution<std::int64_t> Tabulate(std::span<const std::int64_t> values) {
  return TabulateSorted(std::vector<std::int64_t>(values.begin(), values.end()));
}

double Entropy(std::span<const double> values) { return EntropyOf(Tabulate(values)); }

double Entropy(std::span<const std::int64_t> values) {
  return EntropyOf(Tabulate(values));
}

double Misclassification(std::span<const std::int64_t> y,
                         std::span<const std::int64_t> yhat) {
  CheckPaired(y.size(), yhat.size(), "misclassification");
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < y.size(); ++i) wrong += y[i] != yhat[i];
  return static_cast<double>(wrong) / static_cast<double>(y.size());
}

double MeanSquaredError(std::span<const double> y, std::span<const double> yhat) {
  CheckPaired(y.size(), yhat.size(), "mean squared error");
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double d = y[i] - yhat[i];
    sum += d * d;
  }
  return sum / static_cast<double>(y.size());
}

std::vector<double> Residuals(std::span<const double> target,
                              std::span<const double> predicted) {
  if (target.size() != predicted.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "residuals: lengths " + std::to_string(target.size()) + " and " +
                    std::to_string(predicted.size()) + " differ");
  }
  std::vector<double> out(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) out[i] = target[i] - predicted[i];
  return out;
}

}  // namespace cdtree
