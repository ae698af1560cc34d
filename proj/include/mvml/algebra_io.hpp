#pragma once

#include <string>
#include <string_view>

#include "mvml/algebra.hpp"

namespace mvml {

// Builds a preset from an expression such as "lukasiewicz(3)" or
// "product(boolean2,lukasiewicz(3))".
ResiduatedLattice preset(std::string_view expr);

bool is_preset_expression(std::string_view expr);

// Algebra text format: `name:`, `universe:`, `leq:` and `fusion:` blocks.
ResiduatedLattice parse_algebra_text(std::string_view text);
std::string render_algebra_text(const ResiduatedLattice& a);

// Preset expression or path to an algebra file.
AlgebraPtr resolve_algebra(std::string_view specOrPath);

// Human-readable tables and classification.
std::string describe_algebra(const ResiduatedLattice& a);

}  // namespace mvml
