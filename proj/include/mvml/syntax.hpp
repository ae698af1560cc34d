#pragma once

#include <string>
#include <string_view>

#include "mvml/formula.hpp"

namespace mvml {

struct ParseOptions {
  bool allowConstants = true;
  // Uppercase identifiers become formula metavariables and `@?name` element
  // metavariables.
  bool allowSchema = false;
  // Accept `$`-prefixed variables (companion variables).
  bool allowReserved = false;
};

// ASCII grammar, loosest first: `<->`, `->` (right-assoc), `\/`, `/\`, `+`,
// `*`, then the prefix operators `~`, `[]`, `<>`, `m.` and postfix `^m`.
Formula parse(std::string_view text, const ParseOptions& options = {});
Formula parse_schema(std::string_view text);

// Canonical text; parse(render(f)) == f. Negations, strong disjunctions and
// biconditionals are printed in their sugared form.
std::string render(const Formula& f);

}  // namespace mvml
