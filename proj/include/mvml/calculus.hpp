#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvml/kripke.hpp"
#include "mvml/schema.hpp"
#include "mvml/search.hpp"

namespace mvml {

// An axiom schema; some axioms (book-keeping) are a finite family of
// alternatives sharing one id.
struct AxiomSchema {
  std::string id;
  std::vector<Schema> alternatives;
};

// Schematic rule: from instances of the premises infer the conclusion.
// Metavariables shared between premises and conclusion must agree.
struct Rule {
  std::string id;
  std::vector<Formula> premises;
  Formula conclusion;
};

struct Calculus {
  std::string name;  // preset id, e.g. "table5"
  AlgebraPtr algebra;
  bool constants = false;
  // Non-modal base decided by exact enumeration (justification `nmtaut`).
  bool oracle = true;
  // Canonical constants count as fresh variables in `nmtaut` (the base is
  // the constant-free logic of the algebra).
  bool constantsAsVariables = false;
  std::vector<AxiomSchema> axioms;
  std::vector<Rule> rules;
  std::optional<FrameClass> intendedClass;

  const AxiomSchema* axiom(const std::string& id) const;
  const Rule* rule(const std::string& id) const;
};

// Presets: table1, table1md (table1 with meet distributivity for K), table2
// (syntax only), table3, table3k (table3 plus K), table4, table5, corA16,
// corA17. Throws PrerequisiteFails, BadParam.
Calculus preset_calculus(const std::string& name, const AlgebraPtr& a, bool constants);

// "table5(lukasiewicz(3))" -> preset_calculus("table5", lukasiewicz(3)).
Calculus resolve_calculus(const std::string& spec, bool constants);

// Formula denoting an element: 0, 1 or a canonical constant.
Formula element_formula(const ResiduatedLattice& a, Elem e);

// The (R_a) rule of a finite MV chain with premise indices a_1..a_m (the
// generalized form); with an empty list, a_i ranges over the nonzero
// elements. Metavariables are Phi<i> for the a_i and Phi for a.
Rule graded_rule(const ResiduatedLattice& chain, Elem a, const std::vector<Elem>& indices = {});

struct Justification {
  enum class Kind { Assumption, Axiom, NonModalTautology, ModusPonens, Necessity, Monotonicity, RuleApp };
  Kind kind = Kind::Assumption;
  std::string id;                     // axiom or rule id
  std::vector<std::size_t> premises;  // cited step numbers
};

struct Step {
  std::size_t number = 0;
  Formula formula;
  Justification justification;
};

struct Derivation {
  std::string calculus;  // e.g. "table5(lukasiewicz(3))"
  bool constants = false;
  std::vector<Step> steps;
};

struct CheckResult {
  bool ok = true;
  std::optional<std::size_t> step;  // number of the first invalid step
  std::string reason;
};

// Verifies every step against its justification. Unknown axiom or rule ids
// throw UnknownSchema; all other defects are reported in the result.
CheckResult check_derivation(const Calculus& calc, const Derivation& d);

// Derivation file: `calculus: <preset>(<algebra>)`, optional
// `constants: on|off`, steps `n: <formula> ; <justification>`.
Derivation parse_derivation_text(std::string_view text);
Derivation load_derivation(const std::string& path);
std::string render_derivation_text(const Derivation& d);

// (a * b) <-> c for all a, b and * in {/\, \/, *, ->}, with c = a * b.
// Throws ConstantsDisabled.
std::vector<Formula> generate_bookkeeping(const ResiduatedLattice& a, bool constants = true);
// (p <-> a_0) \/ (p <-> a_1) \/ ... over the universe in index order.
Formula generate_witnessing(const ResiduatedLattice& a, bool constants = true);

struct AxiomProbe {
  std::string id;
  Formula instance;  // metavariables replaced by distinct variables
  Verdict verdict;
};

// Bounded validity of every axiom over the calculus's intended class.
// Formula metavariables become distinct fresh variables (frame validity is
// closed under substitution); element metavariables range over their
// admissible elements.
std::vector<AxiomProbe> axiom_soundness(const Calculus& calc, const SearchBudget& budget);

struct SoundnessViolation {
  std::size_t derivation = 0;
  std::size_t step = 0;
  Verdict verdict;
};

struct SoundnessReport {
  std::size_t theoremsChecked = 0;
  std::vector<SoundnessViolation> violations;
};

// Every step of every derivation without assumptions must pass bounded
// validity over the class. Throws InvalidStep for derivations that do not
// check, PrerequisiteFails for calculi without semantics.
SoundnessReport soundness_probe(const Calculus& calc, FrameClass c, const std::vector<Derivation>& ds,
                                const SearchBudget& budget);

struct OrdPresResult {
  bool premiseHolds = false;            // {r -> g : g in gamma} entails r -> phi
  std::optional<Assignment> premiseCounterexample;
  std::optional<Verdict> verdict;       // local search for []gamma |- []phi
};

// Finite-premise order-preservation check: exact premise, then bounded
// local refutation search for the boxed conclusion.
OrdPresResult ordpres_check(const AlgebraPtr& a, FrameClass c, const std::vector<Formula>& gamma,
                            const Formula& phi, const SearchBudget& budget);

// Derivation of eta_a([]phi) <-> [] eta_a(phi) for every nonzero a of a
// finite MV chain from the square/double commutation axioms, over
// `table1md(<chain>)`. Throws NotMVChain, NotFound when eta_a is not a
// composition of the two squarings.
Derivation eta_commutation_derivation(const AlgebraPtr& chain, const std::string& algebraRef,
                                      const Formula& phi);

}  // namespace mvml
