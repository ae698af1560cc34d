#pragma once

#include <string>
#include <string_view>

#include "mvml/kripke.hpp"

namespace mvml {

// Model text format: `algebra:`, `constants: on|off`, `worlds:`,
// `R: wi wj = label` (absent entries are bottom), `val: var @ world = label`
// (absent entries take the default), `default: label`.
KripkeModel parse_model_text(std::string_view text);
KripkeModel load_model(const std::string& path);

// Inverse of parse_model_text; only non-bottom R entries and valuation
// entries that differ from the default are written.
std::string render_model_text(const KripkeModel& m);

}  // namespace mvml
