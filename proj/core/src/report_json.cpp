#include "postage/report_json.hpp"

#include <json.hpp>

#include "postage/error.hpp"
#include "json_detail.hpp"

namespace postage {

using ojson = nlohmann::ordered_json;

namespace detail {

ojson report_object(const BasisReport& r) {
  ojson j;
  j["basis"] = r.basis.to_string();
  j["k"] = r.basis.k();
  j["symmetric"] = r.symmetric;
  j["h0"] = r.h0;
  j["h1"] = r.h1 ? ojson(*r.h1) : ojson(nullptr);
  j["h1_found"] = r.h1_found();
  j["theorem_bound"] = r.theorem_bound;
  j["conjecture_holds"] = r.conjecture_holds;
  j["counterexample"] = r.counterexample;
  return j;
}

BasisReport report_from_object(const ojson& j) {
  try {
    BasisReport r{parse_basis(j.at("basis").get<std::string>()),
                  j.at("symmetric").get<bool>(),
                  j.at("h0").get<StampCount>(),
                  std::nullopt,
                  j.at("theorem_bound").get<StampCount>(),
                  j.at("conjecture_holds").get<bool>(),
                  j.at("counterexample").get<bool>()};
    if (j.at("h1_found").get<bool>()) r.h1 = j.at("h1").get<StampCount>();
    if (j.at("k").get<std::size_t>() != r.basis.k())
      throw Error(ErrorCode::InvalidFormat, "k does not match basis");
    return r;
  } catch (const ojson::exception& e) {
    throw Error(ErrorCode::InvalidFormat, e.what());
  }
}

}  // namespace detail

std::string report_to_json(const BasisReport& report) {
  return detail::report_object(report).dump();
}

BasisReport report_from_json(std::string_view line) {
  ojson j;
  try {
    j = ojson::parse(line);
  } catch (const ojson::exception& e) {
    throw Error(ErrorCode::InvalidFormat, e.what());
  }
  return detail::report_from_object(j);
}

}  // namespace postage
