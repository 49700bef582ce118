#pragma once

#include <cstdint>
#include <vector>

#include "cobordia/morphism.hpp"

namespace cobordia {

DiagMorphism identity(const ObjWord& w);

/// The braiding w1 □ w2 -> w2 □ w1.
DiagMorphism symmetry(const ObjWord& w1, const ObjWord& w2);

/// The unit of the duality on `w`: () -> dual(w) □ w, as nested cups
/// (codomain point i paired with codomain point 2n+1-i), zero circles.
/// The nested shape is the one satisfying both zig-zag identities.
DiagMorphism eta(const ObjWord& w);

/// The counit of the duality on `w`: w □ dual(w) -> (), as nested caps
/// (domain point i paired with domain point 2n+1-i), zero circles.
DiagMorphism epsilon(const ObjWord& w);

/// Everything path tracing learns about one composition: the composite
/// pairing, the number of closed loops confined to the middle word, and the
/// order in which middle points were consumed (each exactly once).
struct CompositionTrace {
  Pairing composite;
  std::uint64_t closed_loops = 0;
  std::vector<std::uint32_t> middle_visits;
};

/// Traces compose(h, g) (g applied first) through the middle word: starting
/// from each boundary point, alternately follow g-strands and h-strands until
/// another boundary point is reached; middle points not on any such path form
/// closed loops. Start order is fixed (g-domain points ascending, then
/// h-codomain points ascending, then remaining middle points ascending) but
/// the result is independent of it. Throws BoundaryMismatchError when
/// g.cod != h.dom.
CompositionTrace trace_composition(const DiagMorphism& h, const DiagMorphism& g);

/// Applicative-order composition: `g` first, then `h`. Circles add across the
/// parts plus one per closed loop created in the middle, with overflow
/// checked.
DiagMorphism compose(const DiagMorphism& h, const DiagMorphism& g);

/// The count-triple circle formula: h_cups + g_cups - composite_cups, as a
/// raw signed value. Diagnostic only; compose() never consults it. It
/// disagrees with traced loop counting on zig-zag composites.
std::int64_t cir_formula(const DiagMorphism& h, const DiagMorphism& g);

/// Tensor product of morphisms: boundaries concatenate, the second factor's
/// strand indices shift by the first factor's boundary lengths, circles add.
DiagMorphism tensor(const DiagMorphism& g, const DiagMorphism& j);

/// The dual of f : C -> D, built literally as the composite
/// (epsilon □ id) . (id □ f □ id) . (id □ eta) : dual(D) -> dual(C).
/// Preserves circles; an involution.
DiagMorphism dual(const DiagMorphism& f);

}  // namespace cobordia
