#include "postage/families.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "postage/analysis.hpp"
#include "postage/checked.hpp"
#include "postage/error.hpp"

namespace postage {

FamilyKind parse_family_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "a5") return FamilyKind::A5;
  if (lower == "a9") return FamilyKind::A9;
  if (lower == "a10") return FamilyKind::A10;
  throw Error(ErrorCode::BadParameter, "unknown family '" + std::string(text) + "'");
}

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::A5: return "a5";
    case FamilyKind::A9: return "a9";
    case FamilyKind::A10: return "a10";
  }
  return "?";
}

namespace {

void require_odd_at_least(std::uint64_t p, std::uint64_t min, std::string_view family) {
  if (p % 2 == 0 || p < min)
    throw Error(ErrorCode::BadParameter, std::string(family) + " needs odd p >= " +
                                             std::to_string(min) + ", got " + std::to_string(p));
}

}  // namespace

Basis family_a5(std::uint64_t p) {
  require_odd_at_least(p, 3, "A5");
  // 3p^2 + 3p + 4 is even for odd p.
  auto top = checked_add(checked_add(checked_mul(3, checked_mul(p, p)), checked_mul(3, p)), 4) / 2;
  return Basis({1, p, checked_add(p, 2), checked_add(checked_mul(2, p), 2), top});
}

Basis family_a9(std::uint64_t p) {
  require_odd_at_least(p, 3, "A9");
  return symmetrize_odd(family_a5(p));
}

Basis family_a10(std::uint64_t p) {
  require_odd_at_least(p, 5, "A10");
  return symmetrize_even(family_a5(p));
}

Basis family(FamilyKind kind, std::uint64_t p) {
  switch (kind) {
    case FamilyKind::A5: return family_a5(p);
    case FamilyKind::A9: return family_a9(p);
    case FamilyKind::A10: return family_a10(p);
  }
  throw Error(ErrorCode::BadParameter, "unknown family");
}

}  // namespace postage
