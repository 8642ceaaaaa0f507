#pragma once

#include <cstdint>
#include <string>

#include "postage/error.hpp"

namespace postage {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow, std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
  if (b > a)
    throw Error(ErrorCode::Overflow, std::to_string(a) + " - " + std::to_string(b));
  return a - b;
}

}  // namespace postage
