#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cobordia/tensor_array.hpp"

namespace cobordia {

namespace detail {

inline nlohmann::ordered_json entry_to_json(std::int64_t v) { return v; }
inline nlohmann::ordered_json entry_to_json(const Rational& v) { return v.str(); }

inline void entry_from_json(const nlohmann::json& j, const std::string& path, std::int64_t& out) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer entry");
  out = j.get<std::int64_t>();
}

inline void entry_from_json(const nlohmann::json& j, const std::string& path, Rational& out) {
  if (!j.is_string()) throw SchemaError(path, "expected a rational entry like \"3\" or \"-3/4\"");
  const std::string text = j.get<std::string>();
  std::size_t i = !text.empty() && text[0] == '-' ? 1 : 0;
  bool digits = false;
  bool slash = false;
  bool denom_digits = false;
  for (; i < text.size(); ++i) {
    if (text[i] == '/' && !slash && digits) {
      slash = true;
    } else if (text[i] >= '0' && text[i] <= '9') {
      (slash ? denom_digits : digits) = true;
    } else {
      throw SchemaError(path, "malformed rational \"" + text + "\"");
    }
  }
  if (!digits || (slash && !denom_digits))
    throw SchemaError(path, "malformed rational \"" + text + "\"");
  try {
    out = Rational(text);
  } catch (const std::exception&) {
    throw SchemaError(path, "malformed rational \"" + text + "\"");
  }
}

}  // namespace detail

/// The interchange schema for arrays:
/// {"dim": d, "dom": "+-", "cod": "+", "entries": [...], "semiring": "int"}
/// Entries are flat in the documented layout (codomain legs first, first leg
/// slowest). Entries are JSON integers for the int semiring and canonical
/// "p/q" strings for the rational one.
template <Semiring S>
nlohmann::ordered_json tensor_to_json(const TensorArray<S>& a) {
  static_assert(std::is_same_v<S, IntSemiring> || std::is_same_v<S, RationalSemiring>,
                "only the int and rational semirings are interchange formats");
  nlohmann::ordered_json j;
  j["dim"] = a.dim();
  j["dom"] = word_of(a.dom_legs()).str();
  j["cod"] = word_of(a.cod_legs()).str();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& v : a.entries()) entries.push_back(detail::entry_to_json(v));
  j["entries"] = std::move(entries);
  j["semiring"] = std::string(S::name());
  return j;
}

template <Semiring S>
TensorArray<S> tensor_from_json(const nlohmann::json& j) {
  static_assert(std::is_same_v<S, IntSemiring> || std::is_same_v<S, RationalSemiring>,
                "only the int and rational semirings are interchange formats");
  if (!j.is_object()) throw SchemaError("", "expected an array object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "dim" && key != "dom" && key != "cod" && key != "entries" && key != "semiring")
      throw SchemaError("/" + key, "unknown key");
  }
  if (!j.contains("dim") || !j.at("dim").is_number_unsigned() || j.at("dim").get<std::uint64_t>() < 1)
    throw SchemaError("/dim", "expected a positive integer dimension");
  if (!j.contains("semiring") || !j.at("semiring").is_string() ||
      j.at("semiring").get<std::string>() != S::name())
    throw SchemaError("/semiring", "expected \"" + std::string(S::name()) + "\"");

  const auto parse_word = [&](const char* key) {
    const std::string path = std::string("/") + key;
    if (!j.contains(key) || !j.at(key).is_string())
      throw SchemaError(path, "expected a string over {+,-}");
    try {
      return ObjWord::parse(j.at(key).get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(path, e.what());
    }
  };
  const ObjWord dom = parse_word("dom");
  const ObjWord cod = parse_word("cod");

  TensorArray<S> out(legs_of(cod), legs_of(dom), j.at("dim").get<std::uint32_t>());
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw SchemaError("/entries", "expected a flat entry array");
  const auto& entries = j.at("entries");
  if (entries.size() != out.entries().size())
    throw SchemaError("/entries", "expected " + std::to_string(out.entries().size()) +
                                      " entries, got " + std::to_string(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    detail::entry_from_json(entries[i], "/entries/" + std::to_string(i), out.entries()[i]);
  }
  return out;
}

}  // namespace cobordia
