#pragma once

#include <string>

#include "cobordia/morphism.hpp"

namespace cobordia {

/// Graphviz DOT text: one node per boundary point (named d1.., c1.., labelled
/// with its orientation), one edge per strand, circles as the graph label.
/// Output is deterministic.
std::string render_dot(const DiagMorphism& m);

/// Plain-text rendering: the two boundary rows followed by one connector per
/// strand and the circle count. Deterministic.
std::string render_ascii(const DiagMorphism& m);

}  // namespace cobordia
