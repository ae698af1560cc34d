#pragma once

#include <string>

#include "mvml/formula.hpp"

namespace mvml {

// Name of the companion variable for modal degree n ("$r<n>").
std::string companion_variable(std::size_t degree);

// Non-modal companion: every box of degree n becomes `$r<n> -> child`.
// Throws DiamondUnsupported.
Formula companion(const Formula& f);

// First-order rendering: boxes as universally guarded implications,
// diamonds as existentially guarded fusions.
std::string standard_translation(const Formula& f, const std::string& freeVar = "x");

}  // namespace mvml
