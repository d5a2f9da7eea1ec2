#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdtree {

enum class ErrorCode {
  kInvalidArgument,
  kLengthMismatch,
  kNonFinite,
  kNonInteger,
  kTooSmall,
  kEmptyInput,
  kLabelOutOfRange,
  kConfigInvalid,
  kIo,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// C layer can map it onto a stable status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class DataKind { kDiscrete, kContinuous };

enum class Direction { kXtoY, kYtoX, kAbstain };

enum class CriterionKind { kTD, kTN, kTL, kPL, kRE, kIH };

inline constexpr std::array<CriterionKind, 6> kAllCriteria = {
    CriterionKind::kTD, CriterionKind::kTN, CriterionKind::kTL,
    CriterionKind::kPL, CriterionKind::kRE, CriterionKind::kIH};

inline constexpr std::size_t CriterionIndex(CriterionKind kind) {
  return static_cast<std::size_t>(kind);
}

std::string_view DataKindName(DataKind kind);
std::string_view DirectionName(Direction dir);  // "x->y", "y->x", "abstain"
std::string_view CriterionName(CriterionKind kind);  // "J_TD", ...

// Inverse of the *Name functions. Throws kInvalidArgument on unknown text.
DataKind ParseDataKind(std::string_view text);
Direction ParseDirection(std::string_view text);
CriterionKind ParseCriterion(std::string_view text);  // "TD" or "J_TD"

Direction Opposite(Direction dir);

// An observed sample of (x, y) pairs. Instances only come out of
// ValidateDataset, so every PairDataset satisfies:
//   - |x| == |y| >= 2
//   - all values finite
//   - for kDiscrete, all values integral with magnitude <= 2^53
class PairDataset {
 public:
  std::span<const double> x() const { return x_; }
  std::span<const double> y() const { return y_; }
  DataKind kind() const { return kind_; }
  std::size_t size() const { return x_.size(); }

  // Returns the dataset with the two columns exchanged.
  PairDataset Swapped() const;

  friend bool operator==(const PairDataset&, const PairDataset&) = default;

 private:
  friend PairDataset ValidateDataset(std::vector<double>, std::vector<double>,
                                     DataKind);
  PairDataset(std::vector<double> x, std::vector<double> y, DataKind kind)
      : x_(std::move(x)), y_(std::move(y)), kind_(kind) {}

  std::vector<double> x_;
  std::vector<double> y_;
  DataKind kind_;
};

PairDataset ValidateDataset(std::vector<double> x, std::vector<double> y,
                            DataKind kind);

// Largest magnitude accepted for discrete values; every integer up to it is
// exactly representable as a double.
inline constexpr double kMaxDiscreteMagnitude = 9007199254740992.0;  // 2^53

}  // namespace cdtree
