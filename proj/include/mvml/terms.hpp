#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvml/algebra.hpp"
#include "mvml/formula.hpp"

namespace mvml {

using Assignment = std::map<std::string, Elem>;

// Evaluates a non-modal formula; constants resolve by label.
// Throws NonModalExpected, UnknownVariable, UnknownConstant.
Elem eval_term(const ResiduatedLattice& a, const Formula& t, const Assignment& h);

// Table over all argument tuples, first argument most significant.
std::vector<Elem> term_function(const ResiduatedLattice& a, const Formula& t,
                                const std::vector<std::string>& args);

struct TermProperties {
  std::vector<bool> nondecreasing;  // per argument
  bool expanding = false;           // unary only: x <= t(x) for all x
};

TermProperties term_properties(const ResiduatedLattice& a, const Formula& t,
                               const std::vector<std::string>& args);

}  // namespace mvml
