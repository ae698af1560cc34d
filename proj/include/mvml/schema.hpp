#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvml/algebra.hpp"
#include "mvml/formula.hpp"

namespace mvml {

enum class ElementCondition { Any, NonZero, Idempotent, Boolean, Coatom, Distributive };

struct Schema {
  Formula pattern;
  std::map<std::string, ElementCondition> conditions;  // keyed by element metavariable
};

struct SchemaMatch {
  Substitution formulas;                       // formula metavariable -> subtree
  std::map<std::string, std::string> elements;  // element metavariable -> label

  bool operator==(const SchemaMatch& o) const {
    return formulas == o.formulas && elements == o.elements;
  }
};

bool satisfies(const ResiduatedLattice& a, const AlgebraReport& report, Elem e, ElementCondition c);

// Elements allowed for an element metavariable, in index order.
std::vector<Elem> admissible_elements(const ResiduatedLattice& a, ElementCondition c);

// Unifies the schema's metavariables against subtrees of f. Element
// metavariables match canonical constants (and 0/1 as the bottom/top
// elements) whose element satisfies the side condition.
std::optional<SchemaMatch> match_schema(const Formula& f, const Schema& s, const ResiduatedLattice& a);

// Same as match_schema but extends an existing partial match.
std::optional<SchemaMatch> match_schema(const Formula& f, const Formula& pattern,
                                        const ResiduatedLattice& a,
                                        const std::map<std::string, ElementCondition>& conditions,
                                        SchemaMatch seed);

}  // namespace mvml
