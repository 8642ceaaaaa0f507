#pragma once

#include <algorithm>
#include <cstdint>

namespace postage::detail {

// C(n, r), or limit + 1 once the value is known to exceed `limit`.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t limit) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) is divisible by i: it is C(n - r + i, i) * i.
    std::uint64_t product;
    if (__builtin_mul_overflow(acc, n - r + i, &product)) return limit + 1;
    acc = product / i;
    if (acc > limit) return limit + 1;
  }
  return acc;
}

}  // namespace postage::detail
