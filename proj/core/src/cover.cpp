#include "postage/cover.hpp"

#include <algorithm>
#include <string>

#include "binomial.hpp"
#include "postage/checked.hpp"
#include "postage/error.hpp"

namespace postage {

Generation Generation::from_coefficients(const Basis& basis,
                                         std::vector<std::uint64_t> coefficients) {
  if (coefficients.size() != basis.k())
    throw Error(ErrorCode::InvalidArgument, "generation has " +
                                                std::to_string(coefficients.size()) +
                                                " coefficients for k = " +
                                                std::to_string(basis.k()));
  Generation g;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    g.value = checked_add(g.value, checked_mul(coefficients[i], basis[i]));
    g.weight = checked_add(g.weight, coefficients[i]);
  }
  g.coefficients = std::move(coefficients);
  return g;
}

bool Generation::consistent_with(const Basis& basis) const {
  if (coefficients.size() != basis.k()) return false;
  try {
    auto rebuilt = from_coefficients(basis, coefficients);
    return rebuilt.value == value && rebuilt.weight == weight;
  } catch (const Error&) {
    return false;
  }
}

MinStampTable::MinStampTable(const Basis& basis, std::uint64_t bound) : basis_(basis) {
  if (bound > kMaxTableBound)
    throw Error(ErrorCode::Overflow, "table of " + std::to_string(bound) +
                                         " entries required; limit is " +
                                         std::to_string(kMaxTableBound));
  min_stamps_.assign(bound + 1, kUnreachable);
  min_stamps_[0] = 0;
  auto elems = basis_.elements();
  for (std::uint64_t x = 1; x <= bound; ++x) {
    StampCount best = kUnreachable;
    for (auto a : elems) {
      if (a > x) break;
      StampCount prev = min_stamps_[x - a];
      if (prev != kUnreachable && prev + 1 < best) best = prev + 1;
    }
    min_stamps_[x] = best;
  }
}

std::uint64_t MinStampTable::cover(StampCount h) const {
  for (std::uint64_t x = 1; x < min_stamps_.size(); ++x)
    if (min_stamps_[x] > h) return x - 1;
  throw Error(ErrorCode::InvalidArgument,
              "table bound " + std::to_string(bound()) + " too small for h = " + std::to_string(h));
}

Generation MinStampTable::witness(std::uint64_t x) const {
  if (x > bound())
    throw Error(ErrorCode::OutOfRange,
                std::to_string(x) + " beyond table bound " + std::to_string(bound()));
  if (min_stamps_[x] == kUnreachable)
    throw Error(ErrorCode::NotRepresentable, std::to_string(x) + " is unreachable");
  std::vector<std::uint64_t> coeffs(basis_.k(), 0);
  std::uint64_t rest = x;
  while (rest > 0) {
    StampCount need = min_stamps_[rest] - 1;
    std::size_t i = basis_.k();
    while (i-- > 0) {
      auto a = basis_[i];
      if (a <= rest && min_stamps_[rest - a] == need) break;
    }
    ++coeffs[i];
    rest -= basis_[i];
  }
  return Generation::from_coefficients(basis_, std::move(coeffs));
}

std::uint64_t cover_table_bound(const Basis& basis, StampCount h) {
  return checked_add(checked_mul(h, basis.top()), 1);
}

MinStampTable min_stamp_table(const Basis& basis, std::uint64_t bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "table bound must be >= 1");
  return MinStampTable(basis, bound);
}

std::uint64_t cover(const Basis& basis, StampCount h) {
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  return MinStampTable(basis, cover_table_bound(basis, h)).cover(h);
}

CoverProfile cover_profile(const Basis& basis, StampCount h_max) {
  if (h_max < 1) throw Error(ErrorCode::InvalidArgument, "h_max must be >= 1");
  MinStampTable table(basis, cover_table_bound(basis, h_max));
  auto ms = table.values();
  CoverProfile profile{basis, {}};
  profile.rows.reserve(h_max);
  // Covers are monotone in h, so one sweep of the table serves every row.
  std::uint64_t x = 1;
  for (StampCount h = 1; h <= h_max; ++h) {
    while (ms[x] <= h) ++x;
    std::uint64_t n = x - 1;
    profile.rows.push_back({h, n, n == std::uint64_t{h} * basis.top()});
  }
  return profile;
}

Generation find_generation(const Basis& basis, std::uint64_t x, StampCount h) {
  if (x == 0) return Generation::from_coefficients(basis, std::vector<std::uint64_t>(basis.k(), 0));
  MinStampTable table(basis, x);
  if (table[x] > h)
    throw Error(ErrorCode::NotRepresentable,
                std::to_string(x) + " needs " + std::to_string(table[x]) + " stamps, h = " +
                    std::to_string(h));
  return table.witness(x);
}

namespace {

void enumerate_sums(std::span<const std::uint64_t> elems, std::size_t index,
                    std::uint64_t stamps_left, std::uint64_t sum, std::vector<bool>& reached) {
  if (index == elems.size()) {
    reached[sum] = true;
    return;
  }
  for (std::uint64_t c = 0; c <= stamps_left; ++c)
    enumerate_sums(elems, index + 1, stamps_left - c, sum + c * elems[index], reached);
}

}  // namespace

std::uint64_t brute_force_cover(const Basis& basis, StampCount h, std::uint64_t ceiling) {
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "h must be >= 1");
  // Vectors (c_1..c_k) with sum <= h number C(h + k, k).
  auto vectors = detail::binomial_capped(std::uint64_t{h} + basis.k(), basis.k(), ceiling);
  if (vectors > ceiling)
    throw Error(ErrorCode::TooLarge, "enumeration exceeds ceiling of " + std::to_string(ceiling));
  auto max_sum = checked_mul(h, basis.top());
  if (max_sum > kMaxTableBound)
    throw Error(ErrorCode::Overflow, "sum range " + std::to_string(max_sum) + " too large");
  std::vector<bool> reached(max_sum + 2, false);
  enumerate_sums(basis.elements(), 0, h, 0, reached);
  std::uint64_t n = 0;
  while (reached[n + 1]) ++n;
  return n;
}

}  // namespace postage
