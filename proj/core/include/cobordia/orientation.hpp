#pragma once

#include <cstdint>

namespace cobordia {

/// Orientation of a single point: the two-element sign alphabet.
enum class Orientation : std::uint8_t { Plus, Minus };

constexpr Orientation flip(Orientation o) noexcept {
  return o == Orientation::Plus ? Orientation::Minus : Orientation::Plus;
}

constexpr char to_char(Orientation o) noexcept {
  return o == Orientation::Plus ? '+' : '-';
}

}  // namespace cobordia
