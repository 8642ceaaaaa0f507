#include "postage/basis.hpp"

#include <charconv>

#include "postage/error.hpp"

namespace postage {

Basis::Basis(std::vector<std::uint64_t> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorCode::InvalidArgument, "basis has no elements");
  for (auto e : elements_)
    if (e == 0) throw Error(ErrorCode::NonPositive, "element 0 in basis");
  if (elements_.front() != 1)
    throw Error(ErrorCode::NotStartingAtOne,
                "first element is " + std::to_string(elements_.front()));
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i] <= elements_[i - 1])
      throw Error(ErrorCode::NotIncreasing, "element " + std::to_string(elements_[i]) +
                                                " follows " + std::to_string(elements_[i - 1]));
  }
}

std::string Basis::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_element(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw Error(ErrorCode::InvalidFormat, "empty element");
  if (token.front() == '-') {
    // Still reject garbage like "-x" as a format problem.
    auto digits = token.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw Error(ErrorCode::InvalidFormat, "'" + std::string(token) + "' is not an integer");
    throw Error(ErrorCode::NonPositive, "element " + std::string(token));
  }
  if (token.front() == '+') token.remove_prefix(1);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw Error(ErrorCode::Overflow, "element " + std::string(token) + " exceeds 64 bits");
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorCode::InvalidFormat, "'" + std::string(token) + "' is not an integer");
  if (value == 0) throw Error(ErrorCode::NonPositive, "element 0");
  return value;
}

}  // namespace

Basis parse_basis(std::string_view text) {
  if (trim(text).empty()) throw Error(ErrorCode::InvalidFormat, "empty basis text");
  std::vector<std::uint64_t> elements;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    elements.push_back(parse_element(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Basis(std::move(elements));
}

std::vector<std::uint64_t> differences(const Basis& basis) {
  std::vector<std::uint64_t> out;
  out.reserve(basis.k());
  std::uint64_t prev = 0;
  for (auto e : basis.elements()) {
    out.push_back(e - prev);
    prev = e;
  }
  return out;
}

}  // namespace postage
