#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "postage/basis.hpp"

namespace postage {

/// Stamp counts are small; values (amounts) are 64-bit.
using StampCount = std::uint32_t;

/// A representation value = sum_i coefficients[i] * basis[i].
struct Generation {
  std::vector<std::uint64_t> coefficients;  // one per basis element
  std::uint64_t value = 0;
  std::uint64_t weight = 0;  // number of stamps used

  /// Builds a generation and computes value/weight with overflow checks.
  static Generation from_coefficients(const Basis& basis, std::vector<std::uint64_t> coefficients);

  /// True iff the coefficient vector matches the basis and reproduces value/weight.
  bool consistent_with(const Basis& basis) const;

  friend bool operator==(const Generation&, const Generation&) = default;
};

/// Largest table the engine will allocate (entries, not bytes).
inline constexpr std::uint64_t kMaxTableBound = std::uint64_t{1} << 28;

/// min_stamps[x] for 0 <= x <= bound: the fewest stamps summing to exactly x.
class MinStampTable {
 public:
  static constexpr StampCount kUnreachable = std::numeric_limits<StampCount>::max();

  /// Forward DP in O(bound * k). Throws Overflow past kMaxTableBound.
  MinStampTable(const Basis& basis, std::uint64_t bound);

  const Basis& basis() const noexcept { return basis_; }
  std::uint64_t bound() const noexcept { return min_stamps_.size() - 1; }
  StampCount operator[](std::uint64_t x) const noexcept { return min_stamps_[x]; }
  std::span<const StampCount> values() const noexcept { return min_stamps_; }

  /// n(h): the longest prefix 1..n of values each needing at most h stamps.
  /// Throws InvalidArgument when the table is too short to locate the first gap.
  std::uint64_t cover(StampCount h) const;

  /// Minimal-weight generation of x, breaking ties toward the largest
  /// denomination at each step. Throws OutOfRange if x > bound.
  Generation witness(std::uint64_t x) const;

 private:
  Basis basis_;
  std::vector<StampCount> min_stamps_;
};

struct CoverRow {
  StampCount h;
  std::uint64_t n;
  bool saturated;  // n == h * a_k

  friend bool operator==(const CoverRow&, const CoverRow&) = default;
};

struct CoverProfile {
  Basis basis;
  std::vector<CoverRow> rows;
};

/// Table bound that is guaranteed to contain the first gap for h stamps: h*a_k + 1.
std::uint64_t cover_table_bound(const Basis& basis, StampCount h);

MinStampTable min_stamp_table(const Basis& basis, std::uint64_t bound);

/// n(h, A_k). Satisfies h <= n <= h * a_k.
std::uint64_t cover(const Basis& basis, StampCount h);

/// Covers for h = 1..h_max from a single table.
CoverProfile cover_profile(const Basis& basis, StampCount h_max);

/// Minimal generation of x using at most h stamps; throws NotRepresentable otherwise.
Generation find_generation(const Basis& basis, std::uint64_t x, StampCount h);

inline constexpr std::uint64_t kDefaultBruteForceCeiling = 100'000'000;

/// Independent oracle: enumerates every coefficient vector with sum <= h.
/// Throws TooLarge when C(h + k, k) exceeds `ceiling`.
std::uint64_t brute_force_cover(const Basis& basis, StampCount h,
                                std::uint64_t ceiling = kDefaultBruteForceCeiling);

}  // namespace postage
