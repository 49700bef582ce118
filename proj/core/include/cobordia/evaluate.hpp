#pragma once

#include <cstdint>
#include <string>

#include "cobordia/morphism.hpp"
#include "cobordia/tensor_array.hpp"

namespace cobordia {

inline constexpr std::size_t kDefaultMaxLegs = 8;

/// The matrix-valued evaluation of a diagram at dimension `dim`: orientations
/// map + to a Plain leg and - to a Dual leg, every strand couples its two leg
/// indices by a Kronecker delta, and the whole array is scaled by
/// dim^circles. This is the action on morphisms of the strict symmetric
/// monoidal functor determined by sending the generator to the standard
/// d-dimensional object.
///
/// Throws ValidationError for dim < 1 and ResourceLimitError when the leg
/// count exceeds `max_legs`.
template <Semiring S>
TensorArray<S> evaluate(const DiagMorphism& m, std::uint32_t dim,
                        std::size_t max_legs = kDefaultMaxLegs) {
  if (dim < 1) throw ValidationError("evaluation dimension must be at least 1");
  const std::size_t legs = m.dom().length() + m.cod().length();
  if (legs > max_legs) {
    throw ResourceLimitError("evaluation over " + std::to_string(legs) +
                             " legs exceeds the bound of " + std::to_string(max_legs));
  }

  const typename S::Value scale =
      semiring_pow<S>(semiring_from_count<S>(dim), m.circles());

  TensorArray<S> out(legs_of(m.cod()), legs_of(m.dom()), dim);
  const std::size_t cod_rank = m.cod().length();

  // Global position of an endpoint in the flat index tuple (cod legs first).
  const auto position = [&](Endpoint e) -> std::size_t {
    return e.side == Side::Cod ? e.index - 1 : cod_rank + e.index - 1;
  };

  std::vector<std::uint32_t> idx(legs, 0);
  do {
    bool coupled = true;
    for (const Strand& s : m.pairing()) {
      if (idx[position(s.first())] != idx[position(s.second())]) {
        coupled = false;
        break;
      }
    }
    if (coupled) {
      const std::span<const std::uint32_t> cod_idx(idx.data(), cod_rank);
      const std::span<const std::uint32_t> dom_idx(idx.data() + cod_rank, legs - cod_rank);
      out.at(cod_idx, dom_idx) = scale;
    }
  } while (detail::advance_indices(idx, dim));

  return out;
}

}  // namespace cobordia
