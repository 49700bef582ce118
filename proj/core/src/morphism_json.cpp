#include "cobordia/morphism_json.hpp"

#include <cstdint>

#include "cobordia/errors.hpp"

namespace cobordia {

nlohmann::ordered_json morphism_to_json(const DiagMorphism& m) {
  nlohmann::ordered_json j;
  j["dom"] = m.dom().str();
  j["cod"] = m.cod().str();
  auto strands = nlohmann::ordered_json::array();
  for (const Strand& s : m.pairing()) {
    strands.push_back({s.first().label(), s.second().label()});
  }
  j["strands"] = std::move(strands);
  j["circles"] = m.circles();
  return j;
}

std::string morphism_to_json_text(const DiagMorphism& m) { return morphism_to_json(m).dump(); }

namespace {

ObjWord parse_word_field(const nlohmann::json& j, const char* key) {
  const std::string path = std::string("/") + key;
  if (!j.contains(key)) throw SchemaError(path, "missing required key");
  if (!j.at(key).is_string()) throw SchemaError(path, "expected a string over {+,-}");
  try {
    return ObjWord::parse(j.at(key).get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

bool is_zero_index_label(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'd' && text[0] != 'c') || text[1] != '0') return false;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

Endpoint parse_endpoint_field(const nlohmann::json& value, const std::string& path,
                              const ObjWord& dom, const ObjWord& cod) {
  if (!value.is_string())
    throw SchemaError(path, "expected an endpoint label like \"d1\" or \"c2\"");
  const auto text = value.get<std::string>();
  const auto endpoint = Endpoint::parse_label(text);
  if (!endpoint) {
    if (is_zero_index_label(text))
      throw SchemaError(path,
                        "endpoint " + text + " index out of range (indices are 1-based)");
    throw SchemaError(path, "malformed endpoint label \"" + text +
                                "\" (want side 'd'/'c' and a 1-based index)");
  }
  const std::size_t len = endpoint->side == Side::Dom ? dom.length() : cod.length();
  if (endpoint->index > len)
    throw SchemaError(path, "endpoint " + text + " index out of range (word has " +
                                std::to_string(len) + " points)");
  return *endpoint;
}

}  // namespace

DiagMorphism morphism_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("", "expected a morphism object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "dom" && key != "cod" && key != "strands" && key != "circles")
      throw SchemaError("/" + key, "unknown key");
  }

  const ObjWord dom = parse_word_field(j, "dom");
  const ObjWord cod = parse_word_field(j, "cod");

  if (!j.contains("strands")) throw SchemaError("/strands", "missing required key");
  if (!j.at("strands").is_array()) throw SchemaError("/strands", "expected an array");
  std::vector<Strand> strands;
  std::size_t i = 0;
  for (const auto& entry : j.at("strands")) {
    const std::string path = "/strands/" + std::to_string(i);
    if (!entry.is_array() || entry.size() != 2)
      throw SchemaError(path, "expected a two-element endpoint array");
    const Endpoint a = parse_endpoint_field(entry.at(0), path + "/0", dom, cod);
    const Endpoint b = parse_endpoint_field(entry.at(1), path + "/1", dom, cod);
    if (a == b) throw SchemaError(path, "strand endpoints must be distinct");
    strands.emplace_back(a, b);
    ++i;
  }

  if (!j.contains("circles")) throw SchemaError("/circles", "missing required key");
  const auto& circles = j.at("circles");
  if (!circles.is_number_unsigned())
    throw SchemaError("/circles", "expected a nonnegative integer");

  return DiagMorphism(dom, cod, Pairing(std::move(strands)), circles.get<std::uint64_t>());
}

DiagMorphism morphism_from_json_text(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("", "input is not valid JSON");
  return morphism_from_json(j);
}

}  // namespace cobordia
