#include "cdtree/core.hpp"

#include <cmath>
#include <string>

namespace cdtree {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNonInteger: return "NonInteger";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kLabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

std::string_view DataKindName(DataKind kind) {
  return kind == DataKind::kDiscrete ? "discrete" : "continuous";
}

std::string_view DirectionName(Direction dir) {
  switch (dir) {
    case Direction::kXtoY: return "x->y";
    case Direction::kYtoX: return "y->x";
    case Direction::kAbstain: return "abstain";
  }
  return "abstain";
}

std::string_view CriterionName(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::kTD: return "J_TD";
    case CriterionKind::kTN: return "J_TN";
    case CriterionKind::kTL: return "J_TL";
    case CriterionKind::kPL: return "J_PL";
    case CriterionKind::kRE: return "J_RE";
    case CriterionKind::kIH: return "J_IH";
  }
  return "J_??";
}

DataKind ParseDataKind(std::string_view text) {
  if (text == "discrete") return DataKind::kDiscrete;
  if (text == "continuous") return DataKind::kContinuous;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown data kind '" + std::string(text) + "'");
}

Direction ParseDirection(std::string_view text) {
  for (Direction d : {Direction::kXtoY, Direction::kYtoX, Direction::kAbstain}) {
    if (DirectionName(d) == text) return d;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown direction '" + std::string(text) + "'");
}

CriterionKind ParseCriterion(std::string_view text) {
  if (text.starts_with("J_")) text.remove_prefix(2);
  for (CriterionKind k : kAllCriteria) {
    if (CriterionName(k).substr(2) == text) return k;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown criterion '" + std::string(text) + "'");
}

Direction Opposite(Direction dir) {
  switch (dir) {
    case Direction::kXtoY: return Direction::kYtoX;
    case Direction::kYtoX: return Direction::kXtoY;
    case Direction::kAbstain: return Direction::kAbstain;
  }
  return Direction::kAbstain;
}

PairDataset PairDataset::Swapped() const { return PairDataset(y_, x_, kind_); }

namespace {

void CheckColumn(const std::vector<double>& values, DataKind kind,
                 const char* name) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFinite, std::string("non-finite value in ") +
                                             name + " at row " +
                                             std::to_string(i));
    }
    if (kind == DataKind::kDiscrete &&
        (v != std::trunc(v) || std::fabs(v) > kMaxDiscreteMagnitude)) {
      throw Error(ErrorCode::kNonInteger,
                  std::string("discrete column ") + name +
                      " has a non-integer value at row " + std::to_string(i));
    }
  }
}

}  // namespace

PairDataset ValidateDataset(std::vector<double> x, std::vector<double> y,
                            DataKind kind) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "x has " + std::to_string(x.size()) + " values, y has " +
                    std::to_string(y.size()));
  }
  CheckColumn(x, kind, "x");
  CheckColumn(y, kind, "y");
  if (x.size() < 2) {
    throw Error(ErrorCode::kTooSmall, "a dataset needs at least 2 pairs, got " +
                                          std::to_string(x.size()));
  }
  return PairDataset(std::move(x), std::move(y), kind);
}

}  // namespace cdtree
