#pragma once

#include <cstddef>
#include <vector>

#include "cobordia/pairing.hpp"
#include "cobordia/word.hpp"

namespace cobordia {

inline constexpr std::size_t kDefaultMaxEnumerationPoints = 16;

/// Exhaustively enumerates every total sign-compatible pairing between the
/// points of `dom` and `cod`, in canonical order and without duplicates.
/// Returns the empty list when the combined point count is odd. Refuses with
/// ResourceLimitError when the combined point count exceeds `max_points`.
std::vector<Pairing> enumerate_pairings(const ObjWord& dom, const ObjWord& cod,
                                        std::size_t max_points = kDefaultMaxEnumerationPoints);

}  // namespace cobordia
