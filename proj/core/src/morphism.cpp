#include "cobordia/morphism.hpp"

#include "cobordia/errors.hpp"

namespace cobordia {

DiagMorphism::DiagMorphism(ObjWord dom, ObjWord cod, Pairing pairing, std::uint64_t circles)
    : dom_(std::move(dom)), cod_(std::move(cod)), pairing_(std::move(pairing)), circles_(circles) {
  const ValidationReport report = validate_pairing(dom_, cod_, pairing_, Totality::Required);
  if (!report.ok()) {
    throw ValidationError("invalid morphism \"" + dom_.str() + "\" -> \"" + cod_.str() +
                          "\": " + report.summary());
  }
}

DiagMorphism DiagMorphism::with_circles(std::uint64_t circles) const {
  DiagMorphism copy = *this;
  copy.circles_ = circles;
  return copy;
}

DiagMorphism canonical_form(const DiagMorphism& m) {
  return DiagMorphism(m.dom(), m.cod(), Pairing(m.pairing().strands()), m.circles());
}

SectionCounts classify_sections(const DiagMorphism& m) { return classify_sections(m.pairing()); }

}  // namespace cobordia
