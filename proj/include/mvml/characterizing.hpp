#pragma once

#include <vector>

#include "mvml/algebra.hpp"
#include "mvml/formula.hpp"

namespace mvml {

struct UnaryTerm {
  std::vector<Elem> table;
  Formula witness;  // a term in the variable p
};

// All unary term functions, in discovery order (identity, 0, 1 first).
std::vector<UnaryTerm> unary_term_clone(const ResiduatedLattice& a);

// Characteristic-function term of the interval [a, 1] on a finite MV chain,
// in the variable p. Prefers compositions of p*p and p+p (shortest first,
// p*p before p+p), falling back to the unary clone. Throws NotMVChain,
// NotFound.
Formula characterizing_formula(const ResiduatedLattice& chain, Elem a);

// Whether the result of characterizing_formula came from the composition
// search rather than the clone fallback.
bool characterizing_formula_is_composition(const ResiduatedLattice& chain, Elem a);

}  // namespace mvml
