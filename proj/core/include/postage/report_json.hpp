#pragma once

#include <string>
#include <string_view>

#include "postage/analysis.hpp"

namespace postage {

/// One-line JSON object with keys, in order: basis, k, symmetric, h0, h1,
/// h1_found, theorem_bound, conjecture_holds, counterexample. `basis` uses the
/// comma-separated text form; `h1` is null when not found.
std::string report_to_json(const BasisReport& report);

/// Inverse of report_to_json. Throws InvalidFormat on malformed input.
BasisReport report_from_json(std::string_view line);

}  // namespace postage
