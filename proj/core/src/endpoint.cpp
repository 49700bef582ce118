#include "cobordia/endpoint.hpp"

#include <utility>

#include "cobordia/errors.hpp"

namespace cobordia {

std::string Endpoint::label() const {
  return (side == Side::Dom ? "d" : "c") + std::to_string(index);
}

std::optional<Endpoint> Endpoint::parse_label(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  Side side;
  if (text[0] == 'd') {
    side = Side::Dom;
  } else if (text[0] == 'c') {
    side = Side::Cod;
  } else {
    return std::nullopt;
  }
  if (text[1] == '0') return std::nullopt;  // indices are 1-based
  std::uint64_t value = 0;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    if (value > UINT32_MAX) return std::nullopt;
  }
  return Endpoint{side, static_cast<std::uint32_t>(value)};
}

Strand::Strand(Endpoint a, Endpoint b) : first_(a), second_(b) {
  if (a == b)
    throw ValidationError("strand endpoints must be distinct, got " + a.label() + " twice");
  if (second_ < first_) std::swap(first_, second_);
}

std::string Strand::label() const { return first_.label() + "-" + second_.label(); }

}  // namespace cobordia
