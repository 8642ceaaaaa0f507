#pragma once

#include <json.hpp>

#include "postage/analysis.hpp"

namespace postage::detail {

nlohmann::ordered_json report_object(const BasisReport& r);
BasisReport report_from_object(const nlohmann::ordered_json& j);

}  // namespace postage::detail
