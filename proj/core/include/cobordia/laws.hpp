#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cobordia/morphism.hpp"

namespace cobordia::laws {

enum class SuiteId : std::uint8_t {
  Category,
  Monoidal,
  Snake,
  Duals,
  CirclesDiagnostic,
  Inclusion,
  AppendixA,
  EvaluationFunctor,
};

/// Suite ids as spelled on the command line: "category", "monoidal", "snake",
/// "duals", "circles-diagnostic", "inclusion", "appendix-a",
/// "evaluation-functor". Throws UnknownSuiteError otherwise.
SuiteId parse_suite_id(std::string_view name);
std::string_view suite_name(SuiteId id);
std::vector<SuiteId> all_suites();

struct SuiteConfig {
  std::size_t max_len = 3;
  std::uint64_t max_circles = 1;
  std::uint64_t seed = 0;

  /// Per-suite default bounds: snake runs to length 5, inclusion to
  /// permutation size 4, everything else to length 3 with circles 1.
  static SuiteConfig defaults_for(SuiteId id);
};

/// One law (or one diagnostic observation) over one instance family.
/// Failing law reports always carry a replayable counterexample; diagnostic
/// records are informational and never fail a run.
struct LawReport {
  std::string suite;
  std::string law;
  std::string instance;
  bool passed = true;
  bool diagnostic = false;
  std::uint64_t cases = 0;
  std::uint64_t seed = 0;
  nlohmann::ordered_json counterexample;  // null unless failing or diagnostic
};

/// Runs one suite. Deterministic: the same id, bounds and seed produce
/// byte-identical reports; exhaustive parts enumerate in canonical order,
/// randomized parts draw from the seeded generator. Report order is
/// canonicalized before returning.
std::vector<LawReport> run_suite(SuiteId id, const SuiteConfig& cfg);

/// True when every non-diagnostic report passed.
bool all_laws_pass(const std::vector<LawReport>& reports);

/// True when the suite produced any diagnostic record.
bool any_diagnostics(const std::vector<LawReport>& reports);

nlohmann::ordered_json report_to_json(const LawReport& report);

/// One JSON object per line, in canonical report order.
std::string reports_to_json_lines(const std::vector<LawReport>& reports);

/// All 2^0 + ... + 2^max_len words, shortest first, then lexicographic with
/// '+' before '-'.
std::vector<ObjWord> all_words(std::size_t max_len);

/// Every morphism between the two words with circle annotations up to
/// max_circles, generated through the enumeration oracle; canonical order.
std::vector<DiagMorphism> hom_set(const ObjWord& dom, const ObjWord& cod,
                                  std::uint64_t max_circles);

}  // namespace cobordia::laws
