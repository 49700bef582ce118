#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cobordia {

/// Which boundary word a point belongs to.
enum class Side : std::uint8_t { Dom, Cod };

/// A boundary point: a side plus a 1-based position within that side's word.
/// Endpoints order domain points before codomain points, ascending by index;
/// this is the total order behind every canonical form in the library.
struct Endpoint {
  Side side;
  std::uint32_t index;  // 1-based

  static constexpr Endpoint dom(std::uint32_t i) noexcept { return {Side::Dom, i}; }
  static constexpr Endpoint cod(std::uint32_t i) noexcept { return {Side::Cod, i}; }

  /// "d3" / "c3" — the interchange encoding.
  std::string label() const;

  /// Parses "d3"/"c3". Returns nullopt for anything else, including index 0.
  static std::optional<Endpoint> parse_label(std::string_view text);

  friend constexpr bool operator==(const Endpoint&, const Endpoint&) = default;
  friend constexpr auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

/// An unordered pair of distinct endpoints, stored in endpoint order.
class Strand {
 public:
  Strand(Endpoint a, Endpoint b);  // throws ValidationError when a == b

  Endpoint first() const noexcept { return first_; }
  Endpoint second() const noexcept { return second_; }

  bool contains(Endpoint e) const noexcept { return e == first_ || e == second_; }

  /// The endpoint other than `e`; call only with e in the strand.
  Endpoint other(Endpoint e) const noexcept { return e == first_ ? second_ : first_; }

  std::string label() const;  // "d1-c2"

  friend bool operator==(const Strand&, const Strand&) = default;
  friend auto operator<=>(const Strand&, const Strand&) = default;

 private:
  Endpoint first_;
  Endpoint second_;
};

}  // namespace cobordia
