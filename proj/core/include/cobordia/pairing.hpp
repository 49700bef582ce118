#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cobordia/endpoint.hpp"
#include "cobordia/word.hpp"

namespace cobordia {

/// A set of strands on the points of a domain/codomain pair.
/// Strands are kept sorted and duplicate-free, so two pairings built from
/// any listing of the same strand set compare equal.
class Pairing {
 public:
  Pairing() = default;
  explicit Pairing(std::vector<Strand> strands);

  const std::vector<Strand>& strands() const noexcept { return strands_; }
  std::size_t size() const noexcept { return strands_.size(); }
  bool empty() const noexcept { return strands_.empty(); }

  auto begin() const noexcept { return strands_.begin(); }
  auto end() const noexcept { return strands_.end(); }

  friend bool operator==(const Pairing&, const Pairing&) = default;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;

 private:
  std::vector<Strand> strands_;
};

/// The count triple of a pairing: boundary-to-boundary strands, domain caps,
/// codomain cups.
struct SectionCounts {
  std::size_t external = 0;
  std::size_t domain_caps = 0;
  std::size_t codomain_cups = 0;

  friend bool operator==(const SectionCounts&, const SectionCounts&) = default;
};

SectionCounts classify_sections(const Pairing& p);

/// Orientation of the word point an endpoint refers to. Endpoint must be in
/// range for the corresponding word.
Orientation orientation_at(const ObjWord& dom, const ObjWord& cod, Endpoint e);

/// Sign rule for a single strand, in direct dom/cod coordinates:
/// Dom-Dom and Cod-Cod strands join opposite orientations, Dom-Cod strands
/// join equal ones. Assumes indices are in range.
bool sign_compatible(const ObjWord& dom, const ObjWord& cod, const Strand& s);

enum class Totality : std::uint8_t { Required, Optional };

enum class ViolationKind : std::uint8_t {
  IndexOutOfRange,
  SignMismatch,
  OverlappingStrands,
  UncoveredPoint,
  NotMaximal,
};

struct Violation {
  ViolationKind kind;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;  // one line per violation
};

/// Checks sign compatibility and disjointness of every strand. With
/// Totality::Required additionally checks full coverage of both words;
/// with Totality::Optional checks maximality instead (no sign-compatible
/// strand can be added between uncovered points). Collects every violation
/// rather than stopping at the first.
ValidationReport validate_pairing(const ObjWord& dom, const ObjWord& cod, const Pairing& p,
                                  Totality totality);

}  // namespace cobordia
