// cobordia: command-line front end for the diagram algebra.
//
// Exit codes: 0 success, 1 law failure, 2 input or typing error,
// 3 resource bound exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cobordia/algebra.hpp"
#include "cobordia/enumerate.hpp"
#include "cobordia/errors.hpp"
#include "cobordia/evaluate.hpp"
#include "cobordia/laws.hpp"
#include "cobordia/morphism_json.hpp"
#include "cobordia/render.hpp"
#include "cobordia/tensor_json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kLawFailure = 1;
constexpr int kInputError = 2;
constexpr int kResourceLimit = 3;

/// Morphism arguments accept inline JSON (first character '{'), "-" for
/// stdin, or a file path.
cobordia::DiagMorphism read_morphism(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return cobordia::morphism_from_json_text(arg);
  if (arg == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return cobordia::morphism_from_json_text(buffer.str());
  }
  std::ifstream in(arg);
  if (!in) throw cobordia::Error("cannot open morphism file \"" + arg + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return cobordia::morphism_from_json_text(buffer.str());
}

std::size_t enumeration_bound_from_env() {
  const char* env = std::getenv("COBORDIA_MAX_POINTS");
  if (env == nullptr) return cobordia::kDefaultMaxEnumerationPoints;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw cobordia::Error("COBORDIA_MAX_POINTS must be a nonnegative integer, got \"" +
                          std::string(env) + "\"");
  return static_cast<std::size_t>(value);
}

int run_compose(const std::vector<std::string>& args, bool show_circles) {
  // Diagrammatic order: the first argument is applied first, so the library
  // call is compose(later, earlier).
  cobordia::DiagMorphism acc = read_morphism(args.front());
  for (std::size_t i = 1; i < args.size(); ++i) {
    const cobordia::DiagMorphism next = read_morphism(args[i]);
    if (show_circles) {
      const auto trace = cobordia::trace_composition(next, acc);
      const auto formula = cobordia::cir_formula(next, acc);
      std::cerr << "step " << i << ": traced_loops=" << trace.closed_loops
                << " cir_formula=" << formula << "\n";
    }
    acc = cobordia::compose(next, acc);
  }
  std::cout << cobordia::morphism_to_json_text(acc) << "\n";
  return kOk;
}

int run_tensor(const std::vector<std::string>& args) {
  cobordia::DiagMorphism acc = read_morphism(args.front());
  for (std::size_t i = 1; i < args.size(); ++i) acc = cobordia::tensor(acc, read_morphism(args[i]));
  std::cout << cobordia::morphism_to_json_text(acc) << "\n";
  return kOk;
}

int run_dual(const std::string& arg) {
  std::cout << cobordia::morphism_to_json_text(cobordia::dual(read_morphism(arg))) << "\n";
  return kOk;
}

int run_eval(const std::string& arg, std::uint32_t dim, const std::string& semiring,
             std::size_t max_legs) {
  const cobordia::DiagMorphism m = read_morphism(arg);
  if (semiring == "int") {
    const auto value = cobordia::evaluate<cobordia::IntSemiring>(m, dim, max_legs);
    if (value.is_scalar()) {
      std::cout << value.entries()[0] << "\n";
    } else {
      std::cout << cobordia::tensor_to_json(value).dump() << "\n";
    }
  } else if (semiring == "rational") {
    const auto value = cobordia::evaluate<cobordia::RationalSemiring>(m, dim, max_legs);
    if (value.is_scalar()) {
      std::cout << value.entries()[0].str() << "\n";
    } else {
      std::cout << cobordia::tensor_to_json(value).dump() << "\n";
    }
  } else {
    throw cobordia::Error("unknown semiring \"" + semiring + "\" (want int or rational)");
  }
  return kOk;
}

int run_enumerate(const std::string& from, const std::string& to, std::size_t max_points) {
  const cobordia::ObjWord dom = cobordia::ObjWord::parse(from);
  const cobordia::ObjWord cod = cobordia::ObjWord::parse(to);
  const auto pairings = cobordia::enumerate_pairings(dom, cod, max_points);
  std::cout << pairings.size() << "\n";
  for (const cobordia::Pairing& p : pairings) {
    nlohmann::ordered_json strands = nlohmann::ordered_json::array();
    for (const cobordia::Strand& s : p) strands.push_back({s.first().label(), s.second().label()});
    std::cout << strands.dump() << "\n";
  }
  return kOk;
}

int run_laws(const std::string& suite, const cobordia::laws::SuiteConfig& cfg, bool strict) {
  const auto id = cobordia::laws::parse_suite_id(suite);
  const auto reports = cobordia::laws::run_suite(id, cfg);
  std::cout << cobordia::laws::reports_to_json_lines(reports);

  std::size_t failed = 0;
  std::size_t diagnostics = 0;
  for (const auto& r : reports) {
    if (r.diagnostic) ++diagnostics;
    if (!r.diagnostic && !r.passed) ++failed;
  }
  std::cerr << reports.size() << " reports, " << failed << " failed, " << diagnostics
            << " diagnostics\n";
  if (failed > 0) return kLawFailure;
  if (strict && diagnostics > 0) return kLawFailure;
  return kOk;
}

int run_render(const std::string& arg, const std::string& format) {
  const cobordia::DiagMorphism m = read_morphism(arg);
  if (format == "dot") {
    std::cout << cobordia::render_dot(m);
  } else if (format == "ascii") {
    std::cout << cobordia::render_ascii(m);
  } else {
    throw cobordia::Error("unknown render format \"" + format + "\" (want dot or ascii)");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagram algebra of oriented matchings: compose, tensor, dualize,\n"
               "evaluate into matrix semirings, enumerate, render, and run law suites"};
  app.require_subcommand(1);

  std::vector<std::string> morphism_args;
  bool show_circles = false;
  auto* compose_cmd = app.add_subcommand(
      "compose", "compose morphisms given in diagrammatic order (first applied first)");
  compose_cmd->add_option("morphisms", morphism_args, "inline JSON, file paths, or - for stdin")
      ->required()
      ->expected(2, -1);
  compose_cmd->add_flag("--show-circles", show_circles,
                        "print traced loops and the count-triple formula per step (stderr)");

  std::vector<std::string> tensor_args;
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor morphisms left to right");
  tensor_cmd->add_option("morphisms", tensor_args, "inline JSON, file paths, or - for stdin")
      ->required()
      ->expected(2, -1);

  std::string dual_arg;
  auto* dual_cmd = app.add_subcommand("dual", "dual of a morphism");
  dual_cmd->add_option("morphism", dual_arg, "inline JSON, file path, or - for stdin")->required();

  std::string eval_arg;
  std::uint32_t dim = 0;
  std::string semiring = "int";
  std::size_t max_legs = cobordia::kDefaultMaxLegs;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a morphism as a dense array");
  eval_cmd->add_option("morphism", eval_arg, "inline JSON, file path, or - for stdin")->required();
  eval_cmd->add_option("--dim", dim, "dimension of the generator image (>= 1)")->required();
  eval_cmd->add_option("--semiring", semiring, "int (default) or rational");
  eval_cmd->add_option("--max-legs", max_legs, "leg-count bound (default 8)");

  std::string from_text;
  std::string to_text;
  std::size_t max_points = 0;  // 0: take env or default
  auto* enum_cmd = app.add_subcommand("enumerate", "list every total pairing between two words");
  enum_cmd->add_option("--from", from_text, "domain word over {+,-}")->required();
  enum_cmd->add_option("--to", to_text, "codomain word over {+,-}")->required();
  enum_cmd->add_option("--max-points", max_points,
                       "point bound (default 16; env COBORDIA_MAX_POINTS overrides)");

  std::string suite;
  cobordia::laws::SuiteConfig law_cfg;
  bool strict = false;
  auto* laws_cmd = app.add_subcommand("laws", "run a law suite and emit JSON-line reports");
  laws_cmd->add_option("--suite", suite,
                       "category | monoidal | snake | duals | circles-diagnostic | inclusion | "
                       "appendix-a | evaluation-functor")
      ->required();
  auto* max_len_opt = laws_cmd->add_option("--max-len", law_cfg.max_len, "word-length bound");
  auto* max_circles_opt =
      laws_cmd->add_option("--max-circles", law_cfg.max_circles, "circle annotation bound");
  laws_cmd->add_option("--seed", law_cfg.seed, "seed for randomized components");
  laws_cmd->add_flag("--strict", strict, "treat diagnostic disagreement records as failures");

  std::string render_arg;
  std::string format = "dot";
  auto* render_cmd = app.add_subcommand("render", "render a morphism as DOT or ASCII text");
  render_cmd->add_option("morphism", render_arg, "inline JSON, file path, or - for stdin")
      ->required();
  render_cmd->add_option("--format", format, "dot (default) or ascii");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*compose_cmd) return run_compose(morphism_args, show_circles);
    if (*tensor_cmd) return run_tensor(tensor_args);
    if (*dual_cmd) return run_dual(dual_arg);
    if (*eval_cmd) {
      if (dim < 1) throw cobordia::Error("--dim must be at least 1");
      return run_eval(eval_arg, dim, semiring, max_legs);
    }
    if (*enum_cmd) {
      std::size_t bound = enumeration_bound_from_env();
      if (max_points > 0) bound = max_points;
      return run_enumerate(from_text, to_text, bound);
    }
    if (*laws_cmd) {
      const auto id = cobordia::laws::parse_suite_id(suite);
      cobordia::laws::SuiteConfig cfg = cobordia::laws::SuiteConfig::defaults_for(id);
      if (!max_len_opt->empty()) cfg.max_len = law_cfg.max_len;
      if (!max_circles_opt->empty()) cfg.max_circles = law_cfg.max_circles;
      cfg.seed = law_cfg.seed;
      return run_laws(suite, cfg, strict);
    }
    if (*render_cmd) return run_render(render_arg, format);
  } catch (const cobordia::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const cobordia::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
