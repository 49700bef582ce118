#include "cobordia/pairing.hpp"

#include <algorithm>

namespace cobordia {

Pairing::Pairing(std::vector<Strand> strands) : strands_(std::move(strands)) {
  std::sort(strands_.begin(), strands_.end());
  strands_.erase(std::unique(strands_.begin(), strands_.end()), strands_.end());
}

SectionCounts classify_sections(const Pairing& p) {
  SectionCounts counts;
  for (const Strand& s : p) {
    const Side a = s.first().side;
    const Side b = s.second().side;
    if (a != b) {
      ++counts.external;
    } else if (a == Side::Dom) {
      ++counts.domain_caps;
    } else {
      ++counts.codomain_cups;
    }
  }
  return counts;
}

Orientation orientation_at(const ObjWord& dom, const ObjWord& cod, Endpoint e) {
  const ObjWord& w = e.side == Side::Dom ? dom : cod;
  return w[e.index - 1];
}

bool sign_compatible(const ObjWord& dom, const ObjWord& cod, const Strand& s) {
  const Orientation a = orientation_at(dom, cod, s.first());
  const Orientation b = orientation_at(dom, cod, s.second());
  return s.first().side == s.second().side ? a != b : a == b;
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.detail;
  }
  return out;
}

namespace {

bool in_range(const ObjWord& dom, const ObjWord& cod, Endpoint e) {
  const std::size_t len = e.side == Side::Dom ? dom.length() : cod.length();
  return e.index >= 1 && e.index <= len;
}

}  // namespace

ValidationReport validate_pairing(const ObjWord& dom, const ObjWord& cod, const Pairing& p,
                                  Totality totality) {
  ValidationReport report;
  // covered[side][index-1]: how many strands claim the point
  std::vector<int> dom_claims(dom.length(), 0);
  std::vector<int> cod_claims(cod.length(), 0);

  for (const Strand& s : p) {
    bool ranged = true;
    for (Endpoint e : {s.first(), s.second()}) {
      if (!in_range(dom, cod, e)) {
        ranged = false;
        report.violations.push_back(
            {ViolationKind::IndexOutOfRange,
             "endpoint " + e.label() + " out of range for dom=\"" + dom.str() + "\" cod=\"" +
                 cod.str() + "\""});
      }
    }
    if (!ranged) continue;
    if (!sign_compatible(dom, cod, s)) {
      report.violations.push_back(
          {ViolationKind::SignMismatch, "strand " + s.label() + " joins incompatible signs"});
    }
    for (Endpoint e : {s.first(), s.second()}) {
      auto& claims = e.side == Side::Dom ? dom_claims : cod_claims;
      if (++claims[e.index - 1] == 2) {
        report.violations.push_back(
            {ViolationKind::OverlappingStrands,
             "point " + e.label() + " belongs to more than one strand"});
      }
    }
  }

  if (totality == Totality::Required) {
    for (std::size_t i = 0; i < dom_claims.size(); ++i) {
      if (dom_claims[i] == 0)
        report.violations.push_back(
            {ViolationKind::UncoveredPoint, "point d" + std::to_string(i + 1) + " is unmatched"});
    }
    for (std::size_t i = 0; i < cod_claims.size(); ++i) {
      if (cod_claims[i] == 0)
        report.violations.push_back(
            {ViolationKind::UncoveredPoint, "point c" + std::to_string(i + 1) + " is unmatched"});
    }
  } else {
    // Maximality: no sign-compatible strand may fit between uncovered points.
    std::vector<Endpoint> free_points;
    for (std::size_t i = 0; i < dom_claims.size(); ++i)
      if (dom_claims[i] == 0) free_points.push_back(Endpoint::dom(static_cast<std::uint32_t>(i + 1)));
    for (std::size_t i = 0; i < cod_claims.size(); ++i)
      if (cod_claims[i] == 0) free_points.push_back(Endpoint::cod(static_cast<std::uint32_t>(i + 1)));
    for (std::size_t a = 0; a < free_points.size(); ++a) {
      for (std::size_t b = a + 1; b < free_points.size(); ++b) {
        const Strand candidate(free_points[a], free_points[b]);
        if (sign_compatible(dom, cod, candidate)) {
          report.violations.push_back(
              {ViolationKind::NotMaximal,
               "pairing is not maximal: strand " + candidate.label() + " could be added"});
        }
      }
    }
  }

  return report;
}

}  // namespace cobordia
