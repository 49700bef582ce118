#include "cobordia/render.hpp"

namespace cobordia {

std::string render_dot(const DiagMorphism& m) {
  std::string out = "graph morphism {\n";
  out += "  label=\"circles=" + std::to_string(m.circles()) + "\";\n";
  for (std::uint32_t i = 1; i <= m.dom().length(); ++i) {
    out += "  d" + std::to_string(i) + " [label=\"d" + std::to_string(i) + ":" +
           to_char(m.dom()[i - 1]) + "\"];\n";
  }
  for (std::uint32_t j = 1; j <= m.cod().length(); ++j) {
    out += "  c" + std::to_string(j) + " [label=\"c" + std::to_string(j) + ":" +
           to_char(m.cod()[j - 1]) + "\"];\n";
  }
  for (const Strand& s : m.pairing()) {
    out += "  " + s.first().label() + " -- " + s.second().label() + ";\n";
  }
  out += "}\n";
  return out;
}

std::string render_ascii(const DiagMorphism& m) {
  std::string out;
  out += "dom: " + (m.dom().empty() ? std::string("(unit)") : m.dom().str()) + "\n";
  out += "cod: " + (m.cod().empty() ? std::string("(unit)") : m.cod().str()) + "\n";
  for (const Strand& s : m.pairing()) {
    out += "  " + s.first().label() + " -- " + s.second().label() + "\n";
  }
  out += "circles: " + std::to_string(m.circles()) + "\n";
  return out;
}

}  // namespace cobordia
