#include "cobordia/algebra.hpp"

#include <utility>

#include "cobordia/checked.hpp"
#include "cobordia/errors.hpp"

namespace cobordia {

DiagMorphism identity(const ObjWord& w) {
  std::vector<Strand> strands;
  strands.reserve(w.length());
  for (std::uint32_t i = 1; i <= w.length(); ++i)
    strands.emplace_back(Endpoint::dom(i), Endpoint::cod(i));
  return DiagMorphism(w, w, Pairing(std::move(strands)), 0);
}

DiagMorphism symmetry(const ObjWord& w1, const ObjWord& w2) {
  const auto n1 = static_cast<std::uint32_t>(w1.length());
  const auto n2 = static_cast<std::uint32_t>(w2.length());
  std::vector<Strand> strands;
  strands.reserve(n1 + n2);
  for (std::uint32_t i = 1; i <= n1; ++i)
    strands.emplace_back(Endpoint::dom(i), Endpoint::cod(n2 + i));
  for (std::uint32_t j = 1; j <= n2; ++j)
    strands.emplace_back(Endpoint::dom(n1 + j), Endpoint::cod(j));
  return DiagMorphism(tensor(w1, w2), tensor(w2, w1), Pairing(std::move(strands)), 0);
}

DiagMorphism eta(const ObjWord& w) {
  const auto n = static_cast<std::uint32_t>(w.length());
  std::vector<Strand> cups;
  cups.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i)
    cups.emplace_back(Endpoint::cod(i), Endpoint::cod(2 * n + 1 - i));
  return DiagMorphism(ObjWord(), tensor(dual(w), w), Pairing(std::move(cups)), 0);
}

DiagMorphism epsilon(const ObjWord& w) {
  const auto n = static_cast<std::uint32_t>(w.length());
  std::vector<Strand> caps;
  caps.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i)
    caps.emplace_back(Endpoint::dom(i), Endpoint::dom(2 * n + 1 - i));
  return DiagMorphism(tensor(w, dual(w)), ObjWord(), Pairing(std::move(caps)), 0);
}

namespace {

/// Strand lookup per boundary point, built once per diagram. Totality of the
/// pairing guarantees every slot is filled exactly once.
struct StrandIndex {
  std::vector<const Strand*> at_dom;  // [i-1] -> strand containing d(i)
  std::vector<const Strand*> at_cod;

  explicit StrandIndex(const DiagMorphism& m)
      : at_dom(m.dom().length(), nullptr), at_cod(m.cod().length(), nullptr) {
    for (const Strand& s : m.pairing()) {
      for (Endpoint e : {s.first(), s.second()}) {
        auto& slot = e.side == Side::Dom ? at_dom[e.index - 1] : at_cod[e.index - 1];
        slot = &s;
      }
    }
  }
};

}  // namespace

CompositionTrace trace_composition(const DiagMorphism& h, const DiagMorphism& g) {
  if (g.cod() != h.dom()) throw BoundaryMismatchError(g.cod().str(), h.dom().str());

  const StrandIndex gi(g);
  const StrandIndex hi(h);
  const std::size_t middle = g.cod().length();

  CompositionTrace trace;
  trace.middle_visits.reserve(middle);
  std::vector<bool> middle_seen(middle, false);
  std::vector<bool> start_seen(g.dom().length() + h.cod().length(), false);
  std::vector<Strand> composite;

  // Walks from a boundary endpoint to the matching one, alternating between
  // the two diagrams through the middle word.
  const auto follow = [&](Endpoint start_in_g_or_h, bool start_in_g) -> Endpoint {
    bool in_g = start_in_g;
    Endpoint current = start_in_g_or_h;
    for (;;) {
      const StrandIndex& index = in_g ? gi : hi;
      const auto& slots = current.side == Side::Dom ? index.at_dom : index.at_cod;
      const Endpoint next = slots[current.index - 1]->other(current);
      if (in_g) {
        if (next.side == Side::Dom) return next;  // composite domain point
        middle_seen[next.index - 1] = true;
        trace.middle_visits.push_back(next.index);
        current = Endpoint::dom(next.index);
        in_g = false;
      } else {
        if (next.side == Side::Cod) return next;  // composite codomain point
        middle_seen[next.index - 1] = true;
        trace.middle_visits.push_back(next.index);
        current = Endpoint::cod(next.index);
        in_g = true;
      }
    }
  };

  const auto mark_start = [&](Endpoint boundary, bool in_g) {
    const std::size_t slot =
        in_g ? boundary.index - 1 : g.dom().length() + boundary.index - 1;
    start_seen[slot] = true;
  };

  // A path ends on a g-domain point or an h-codomain point; either way its
  // composite coordinates coincide with its own.
  for (std::uint32_t i = 1; i <= g.dom().length(); ++i) {
    if (start_seen[i - 1]) continue;
    mark_start(Endpoint::dom(i), true);
    const Endpoint end = follow(Endpoint::dom(i), true);
    mark_start(end, end.side == Side::Dom);
    composite.emplace_back(Endpoint::dom(i), end);
  }
  for (std::uint32_t j = 1; j <= h.cod().length(); ++j) {
    if (start_seen[g.dom().length() + j - 1]) continue;
    mark_start(Endpoint::cod(j), false);
    const Endpoint end = follow(Endpoint::cod(j), false);
    mark_start(end, end.side == Side::Dom);
    composite.emplace_back(Endpoint::cod(j), end);
  }

  // Remaining middle points lie on closed loops.
  for (std::uint32_t b = 1; b <= middle; ++b) {
    if (middle_seen[b - 1]) continue;
    ++trace.closed_loops;
    middle_seen[b - 1] = true;
    trace.middle_visits.push_back(b);
    // Walk the cycle, leaving b through its g-cup; on a cycle every g-strand
    // is a cup and every h-strand a cap, so it closes through h back onto b.
    bool in_g = true;
    Endpoint current = Endpoint::cod(b);
    for (;;) {
      const StrandIndex& index = in_g ? gi : hi;
      const auto& slots = current.side == Side::Dom ? index.at_dom : index.at_cod;
      const Endpoint next = slots[current.index - 1]->other(current);
      if (!in_g && next.index == b) break;  // cycle closed
      middle_seen[next.index - 1] = true;
      trace.middle_visits.push_back(next.index);
      current = in_g ? Endpoint::dom(next.index) : Endpoint::cod(next.index);
      in_g = !in_g;
    }
  }

  trace.composite = Pairing(std::move(composite));
  return trace;
}

DiagMorphism compose(const DiagMorphism& h, const DiagMorphism& g) {
  CompositionTrace trace = trace_composition(h, g);
  const std::uint64_t circles =
      checked_add(checked_add(g.circles(), h.circles()), trace.closed_loops);
  return DiagMorphism(g.dom(), h.cod(), std::move(trace.composite), circles);
}

std::int64_t cir_formula(const DiagMorphism& h, const DiagMorphism& g) {
  const CompositionTrace trace = trace_composition(h, g);
  const auto h_cups = static_cast<std::int64_t>(classify_sections(h.pairing()).codomain_cups);
  const auto g_cups = static_cast<std::int64_t>(classify_sections(g.pairing()).codomain_cups);
  const auto composite_cups =
      static_cast<std::int64_t>(classify_sections(trace.composite).codomain_cups);
  return h_cups + g_cups - composite_cups;
}

DiagMorphism tensor(const DiagMorphism& g, const DiagMorphism& j) {
  const auto dom_shift = static_cast<std::uint32_t>(g.dom().length());
  const auto cod_shift = static_cast<std::uint32_t>(g.cod().length());
  std::vector<Strand> strands(g.pairing().strands());
  strands.reserve(g.pairing().size() + j.pairing().size());
  for (const Strand& s : j.pairing()) {
    const auto shifted = [&](Endpoint e) {
      return Endpoint{e.side, e.index + (e.side == Side::Dom ? dom_shift : cod_shift)};
    };
    strands.emplace_back(shifted(s.first()), shifted(s.second()));
  }
  return DiagMorphism(tensor(g.dom(), j.dom()), tensor(g.cod(), j.cod()),
                      Pairing(std::move(strands)), checked_add(g.circles(), j.circles()));
}

DiagMorphism dual(const DiagMorphism& f) {
  const ObjWord dual_dom = dual(f.dom());
  const ObjWord dual_cod = dual(f.cod());
  // (epsilon □ id) . (id □ f □ id) . (id □ eta), with the unit bent to land
  // in f.dom □ dual(f.dom) and the counit fed from dual(f.cod) □ f.cod.
  const DiagMorphism bend_in = tensor(identity(dual_cod), eta(dual(f.dom())));
  const DiagMorphism through = tensor(tensor(identity(dual_cod), f), identity(dual_dom));
  const DiagMorphism bend_out = tensor(epsilon(dual_cod), identity(dual_dom));
  return compose(bend_out, compose(through, bend_in));
}

}  // namespace cobordia
