#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvml/calculus.hpp"

namespace mvml {

// A logical matrix for the modal language: an algebra, a unary box table
// and a designated set.
struct ModalMatrix {
  AlgebraPtr algebra;
  std::vector<Elem> box;
  std::vector<bool> designated;
};

// Evaluates in the matrix; variables and formula metavariables both read
// from the assignment. Throws DiamondUnsupported, UnknownVariable,
// UnknownConstant.
Elem eval_matrix(const ModalMatrix& m, const Formula& f, const std::map<std::string, Elem>& h);

struct MatrixFailure {
  std::string item;                             // axiom or rule id
  std::map<std::string, std::string> witness;  // metavariable -> label
};

struct MatrixReport {
  std::vector<std::string> checked;  // axiom and rule ids in calculus order
  std::vector<MatrixFailure> failures;
  // Every directly indecomposable factor of the matrix algebra embeds into
  // the calculus algebra, so the matrix satisfies the non-modal base.
  bool baseVerified = false;

  bool failed(const std::string& id) const;
};

// Axioms: every assignment of matrix elements to the metavariables
// designates. Rules: whenever every premise designates under an
// assignment, so does the conclusion. The first witness in assignment
// order (metavariables sorted, values in index order) is reported.
MatrixReport matrix_soundness(const ModalMatrix& m, const Calculus& calc);

}  // namespace mvml
