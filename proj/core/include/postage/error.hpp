#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace postage {

enum class ErrorCode {
  InvalidFormat,
  NotStartingAtOne,
  NotIncreasing,
  NonPositive,
  Overflow,
  NotRepresentable,
  TooLarge,
  NotSymmetric,
  WeightExceedsH0,
  UsesTopElement,
  OutOfRange,
  BadParameter,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// CLI maps onto exit statuses; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace postage
