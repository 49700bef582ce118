#pragma once

#include <cstdint>

#include "cobordia/pairing.hpp"
#include "cobordia/word.hpp"

namespace cobordia {

/// A morphism: boundary words, a total sign-compatible pairing of their
/// points, and a nonnegative circle count. Construction validates the pairing
/// and throws ValidationError on any violation, so a DiagMorphism value is
/// always well formed. Values are immutable and freely shareable.
///
/// Equality is structural: same boundary words, same strand set, same circle
/// count. Morphisms with equal pairings but different circle counts are
/// distinct.
class DiagMorphism {
 public:
  DiagMorphism(ObjWord dom, ObjWord cod, Pairing pairing, std::uint64_t circles = 0);

  const ObjWord& dom() const noexcept { return dom_; }
  const ObjWord& cod() const noexcept { return cod_; }
  const Pairing& pairing() const noexcept { return pairing_; }
  std::uint64_t circles() const noexcept { return circles_; }

  /// Same pairing, different circle annotation.
  DiagMorphism with_circles(std::uint64_t circles) const;

  friend bool operator==(const DiagMorphism&, const DiagMorphism&) = default;

 private:
  ObjWord dom_;
  ObjWord cod_;
  Pairing pairing_;
  std::uint64_t circles_;
};

/// Strands sorted by the fixed endpoint order. Construction already
/// canonicalizes, so this is the identity on any reachable value; equality of
/// morphisms is equality of canonical forms.
DiagMorphism canonical_form(const DiagMorphism& m);

SectionCounts classify_sections(const DiagMorphism& m);

}  // namespace cobordia
