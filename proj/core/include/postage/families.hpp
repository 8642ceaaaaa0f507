#pragma once

#include <cstdint>
#include <string_view>

#include "postage/basis.hpp"

namespace postage {

enum class FamilyKind { A5, A9, A10 };

/// "a5" | "a9" | "a10" (case-insensitive); BadParameter otherwise.
FamilyKind parse_family_kind(std::string_view text);
std::string_view to_string(FamilyKind kind) noexcept;

/// {1, p, p+2, 2p+2, (3p^2+3p+4)/2} for odd p >= 3.
Basis family_a5(std::uint64_t p);

/// Odd symmetric extension of A5(p): 9 elements, odd p >= 3.
Basis family_a9(std::uint64_t p);

/// Even symmetric extension of A5(p): 10 elements, odd p >= 5.
Basis family_a10(std::uint64_t p);

Basis family(FamilyKind kind, std::uint64_t p);

}  // namespace postage
