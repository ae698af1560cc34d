#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvml/kripke.hpp"
#include "mvml/terms.hpp"

namespace mvml {

// Frame class whose validity the companion check refutes: all frames,
// idempotent frames (companion variables range over idempotents) or crisp
// frames (companion variables range over {0, 1}).
enum class CompanionVariant { Fr, IFr, CFr };

std::optional<CompanionVariant> parse_companion_variant(std::string_view text);

struct CompanionOutcome {
  bool discarded = false;
  Formula companionFormula;
  std::optional<Assignment> assignment;   // failing assignment of the companion
  std::optional<KripkeModel> countermodel;  // chain model, refutes at w0
  std::size_t failingAssignments = 0;      // companion failures examined
};

// Decides the companion formula exactly over the algebra. A failing
// assignment h yields the chain w0 -> w1 -> ... with R(w_n, w_{n+1}) taken
// from the companion variable whose degree matches the box evaluated at w_n,
// and the valuation from h. The first failing assignment (canonical order)
// whose chain refutes the formula at w0 is returned; if no failing
// assignment refutes, the outcome is inconclusive. Throws DiamondUnsupported.
CompanionOutcome companion_discard(const AlgebraPtr& a, const Formula& phi, CompanionVariant variant);

struct LiftResult {
  Formula conclusion;
  Formula premise;  // delta(r -> phi_1, ...) -> epsilon(r -> phi)
};

// Checks delta nondecreasing in every argument and, unless witnessed,
// epsilon expanding; then the premise exactly. Returns
// delta([]phi_1, ...) -> [] epsilon(phi), or delta(...) -> epsilon([]phi)
// for modally witnessed models. Throws PropertyFails, PremiseFails,
// NonModalExpected, BadParam.
LiftResult companion_lift(const AlgebraPtr& a, const Formula& delta, const std::vector<std::string>& deltaArgs,
                          const Formula& epsilon, const std::string& epsilonArg,
                          const std::vector<Formula>& phis, const Formula& phi, bool witnessed);

}  // namespace mvml
