#pragma once

#include <cstdint>
#include <optional>

#include "postage/basis.hpp"
#include "postage/cover.hpp"

namespace postage {

/// a_i + a_{k-i} = a_k for 1 <= i <= k-1. Vacuously true for k = 1.
bool is_symmetric(const Basis& basis);

/// Extends {a_1..a_m} to the symmetric basis of 2m-1 elements with a_k = a_m + a_{m-1}.
Basis symmetrize_odd(const Basis& half);

/// Extends {a_1..a_m} to the symmetric basis of 2m elements with a_k = 2 a_m.
Basis symmetrize_even(const Basis& half);

/// Smallest h with n(h) > a_k. Always >= 2.
StampCount compute_h0(const Basis& basis);
StampCount compute_h0(const MinStampTable& table);

/// Smallest h in [h0, cap] with n(h) = h * a_k, or nullopt.
/// Requires cap >= h0.
std::optional<StampCount> compute_h1(const Basis& basis, StampCount cap);

/// max(h0, 2 h0 - 2): the guaranteed ceiling on h1 for a symmetric basis.
StampCount theorem_bound(StampCount h0) noexcept;

/// Maps an h0-generation of x < a_k to an h0-generation of h0 a_k - x by
/// reversing coefficients and topping up with copies of a_k.
///
/// Preconditions are checked: NotSymmetric, UsesTopElement (c_k != 0),
/// OutOfRange (x >= a_k), WeightExceedsH0.
Generation reflect_generation(const Basis& basis, const Generation& gen, StampCount h0);

/// a_{k-1} = a_k - 1. False for k = 1.
bool meure_applicable(const Basis& basis);

/// Result of checking that every 0 <= x <= h a_k with h = max(h0, 2h0-2)
/// has an h-generation.
struct TheoremCheck {
  StampCount h0;
  StampCount h;
  bool covered;
  std::optional<std::uint64_t> first_gap;
};
TheoremCheck check_theorem_range(const Basis& basis);

inline constexpr StampCount kDefaultH1Cap = 64;

struct BasisReport {
  Basis basis;
  bool symmetric;
  StampCount h0;
  std::optional<StampCount> h1;
  StampCount theorem_bound;
  bool conjecture_holds;  // h1 == h0
  bool counterexample;    // symmetric && h1 > h0

  bool h1_found() const noexcept { return h1.has_value(); }
  friend bool operator==(const BasisReport&, const BasisReport&) = default;
};

/// Full report. The h1 search cap is `cap` when given; otherwise
/// max(h0, 2h0-2) for symmetric bases and kDefaultH1Cap for the rest.
BasisReport analyze(const Basis& basis, std::optional<StampCount> cap = std::nullopt);

}  // namespace postage
