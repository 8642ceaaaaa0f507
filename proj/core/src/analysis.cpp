#include "postage/analysis.hpp"

#include <algorithm>
#include <string>

#include "postage/checked.hpp"
#include "postage/error.hpp"

namespace postage {

bool is_symmetric(const Basis& basis) {
  const auto k = basis.k();
  for (std::size_t i = 1; i < k; ++i)
    if (basis[i - 1] + basis[k - 1 - i] != basis.top()) return false;
  return true;
}

Basis symmetrize_odd(const Basis& half) {
  const auto m = half.k();
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "odd symmetrization needs at least 2 elements");
  const auto k = 2 * m - 1;
  std::vector<std::uint64_t> out(k);
  std::copy(half.elements().begin(), half.elements().end(), out.begin());
  out[k - 1] = checked_add(half[m - 1], half[m - 2]);
  for (std::size_t i = 1; i + 1 <= m - 1; ++i) out[k - 1 - i] = out[k - 1] - out[i - 1];
  return Basis(std::move(out));
}

Basis symmetrize_even(const Basis& half) {
  const auto m = half.k();
  const auto k = 2 * m;
  std::vector<std::uint64_t> out(k);
  std::copy(half.elements().begin(), half.elements().end(), out.begin());
  out[k - 1] = checked_mul(2, half[m - 1]);
  for (std::size_t i = 1; i + 1 <= m; ++i) out[k - 1 - i] = out[k - 1] - out[i - 1];
  return Basis(std::move(out));
}

StampCount compute_h0(const MinStampTable& table) {
  const auto top = table.basis().top();
  if (table.bound() < top + 1)
    throw Error(ErrorCode::InvalidArgument, "table must reach a_k + 1");
  // n(h) > a_k exactly when every value in 1..a_k+1 has an h-generation.
  auto ms = table.values();
  return *std::max_element(ms.begin() + 1, ms.begin() + static_cast<std::ptrdiff_t>(top) + 2);
}

StampCount compute_h0(const Basis& basis) {
  return compute_h0(MinStampTable(basis, checked_add(basis.top(), 1)));
}

namespace {

// Smallest h in [from, cap] with every x in 1..h*a_k needing <= h stamps.
std::optional<StampCount> first_saturation(const MinStampTable& table, StampCount from,
                                           StampCount cap) {
  const auto top = table.basis().top();
  auto ms = table.values();
  StampCount running_max = 0;
  std::uint64_t scanned = 0;
  for (StampCount h = from; h <= cap; ++h) {
    const std::uint64_t end = std::uint64_t{h} * top;
    for (; scanned < end; ++scanned) running_max = std::max(running_max, ms[scanned + 1]);
    if (running_max <= h) return h;
  }
  return std::nullopt;
}

}  // namespace

std::optional<StampCount> compute_h1(const Basis& basis, StampCount cap) {
  const auto h0 = compute_h0(basis);
  if (cap < h0)
    throw Error(ErrorCode::InvalidArgument,
                "cap " + std::to_string(cap) + " is below h0 = " + std::to_string(h0));
  MinStampTable table(basis, checked_mul(cap, basis.top()));
  return first_saturation(table, h0, cap);
}

StampCount theorem_bound(StampCount h0) noexcept { return std::max(h0, 2 * h0 - 2); }

Generation reflect_generation(const Basis& basis, const Generation& gen, StampCount h0) {
  const auto k = basis.k();
  if (!is_symmetric(basis)) throw Error(ErrorCode::NotSymmetric, basis.to_string());
  if (!gen.consistent_with(basis))
    throw Error(ErrorCode::InvalidArgument, "generation does not match basis");
  if (gen.coefficients[k - 1] != 0)
    throw Error(ErrorCode::UsesTopElement, "generation uses a_k");
  if (gen.value >= basis.top())
    throw Error(ErrorCode::OutOfRange,
                std::to_string(gen.value) + " is not below a_k = " + std::to_string(basis.top()));
  if (gen.weight > h0)
    throw Error(ErrorCode::WeightExceedsH0,
                "weight " + std::to_string(gen.weight) + " > h0 = " + std::to_string(h0));

  // With c_k = 0 and a_i = a_k - a_{k-i}:  (sum c) a_k - x = sum_i c_{k-i} a_i.
  std::vector<std::uint64_t> reflected(k, 0);
  for (std::size_t i = 1; i <= k - 1; ++i) reflected[i - 1] = gen.coefficients[k - 1 - i];
  reflected[k - 1] = h0 - gen.weight;
  auto out = Generation::from_coefficients(basis, std::move(reflected));
  if (out.value != checked_mul(h0, basis.top()) - gen.value || out.weight != h0)
    throw Error(ErrorCode::InvalidArgument, "reflection identity failed");
  return out;
}

bool meure_applicable(const Basis& basis) {
  const auto k = basis.k();
  return k >= 2 && basis[k - 2] + 1 == basis.top();
}

TheoremCheck check_theorem_range(const Basis& basis) {
  const auto h0 = compute_h0(basis);
  const auto h = theorem_bound(h0);
  MinStampTable table(basis, checked_mul(h, basis.top()));
  TheoremCheck result{h0, h, true, std::nullopt};
  auto ms = table.values();
  for (std::uint64_t x = 0; x < ms.size(); ++x) {
    if (ms[x] > h) {
      result.covered = false;
      result.first_gap = x;
      break;
    }
  }
  return result;
}

BasisReport analyze(const Basis& basis, std::optional<StampCount> cap) {
  const bool symmetric = is_symmetric(basis);
  const auto h0 = compute_h0(basis);
  const auto bound = theorem_bound(h0);
  StampCount effective = cap ? *cap : (symmetric ? bound : kDefaultH1Cap);

  std::optional<StampCount> h1;
  if (effective >= h0) {
    MinStampTable table(basis, checked_mul(effective, basis.top()));
    h1 = first_saturation(table, h0, effective);
  }
  return BasisReport{basis,
                     symmetric,
                     h0,
                     h1,
                     bound,
                     h1 && *h1 == h0,
                     symmetric && h1 && *h1 > h0};
}

}  // namespace postage
