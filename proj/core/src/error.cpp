#include "postage/error.hpp"

namespace postage {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidFormat: return "InvalidFormat";
    case ErrorCode::NotStartingAtOne: return "NotStartingAtOne";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::WeightExceedsH0: return "WeightExceedsH0";
    case ErrorCode::UsesTopElement: return "UsesTopElement";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace postage
