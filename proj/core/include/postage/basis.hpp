#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace postage {

/// A set of stamp denominations {1, a_2, ..., a_k}, strictly increasing.
///
/// Construction validates the invariants, so any Basis value in hand is
/// well formed. Elements are addressed 0-based in code; a_i in the usual
/// notation is `basis[i - 1]`.
class Basis {
 public:
  /// Throws Error{NotStartingAtOne | NotIncreasing | NonPositive | InvalidArgument}.
  explicit Basis(std::vector<std::uint64_t> elements);

  std::size_t k() const noexcept { return elements_.size(); }
  std::uint64_t top() const noexcept { return elements_.back(); }
  std::uint64_t operator[](std::size_t i) const noexcept { return elements_[i]; }
  std::span<const std::uint64_t> elements() const noexcept { return elements_; }

  /// Comma-separated text form, e.g. "1,3,6,10".
  std::string to_string() const;

  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis&, const Basis&) = default;

 private:
  std::vector<std::uint64_t> elements_;
};

/// Parses the comma-separated text format. Whitespace around tokens is ignored.
Basis parse_basis(std::string_view text);

/// Consecutive differences a_i - a_{i-1} with a_0 = 0.
std::vector<std::uint64_t> differences(const Basis& basis);

}  // namespace postage
