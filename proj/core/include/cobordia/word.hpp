#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cobordia/orientation.hpp"

namespace cobordia {

/// A finite sequence of point orientations. The empty word is the unit object.
///
/// Immutable after construction; all operations on words are pure.
class ObjWord {
 public:
  ObjWord() = default;
  explicit ObjWord(std::vector<Orientation> orientations)
      : orientations_(std::move(orientations)) {}

  /// Parses a word from text over {+,-}. The empty string is the unit.
  /// Throws ParseError naming the 1-based position of any other character.
  static ObjWord parse(std::string_view text);

  std::size_t length() const noexcept { return orientations_.size(); }
  bool empty() const noexcept { return orientations_.empty(); }

  /// 0-based access.
  Orientation operator[](std::size_t i) const { return orientations_[i]; }

  const std::vector<Orientation>& orientations() const noexcept { return orientations_; }

  auto begin() const noexcept { return orientations_.begin(); }
  auto end() const noexcept { return orientations_.end(); }

  std::string str() const;

  friend bool operator==(const ObjWord&, const ObjWord&) = default;
  friend auto operator<=>(const ObjWord&, const ObjWord&) = default;

 private:
  std::vector<Orientation> orientations_;
};

/// The reversal of `w` with every orientation flipped.
ObjWord dual(const ObjWord& w);

/// Concatenation; strictly associative with the empty word as unit.
ObjWord tensor(const ObjWord& w1, const ObjWord& w2);

}  // namespace cobordia
