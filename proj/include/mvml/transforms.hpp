#pragma once

#include <vector>

#include "mvml/algebra.hpp"
#include "mvml/kripke.hpp"

namespace mvml {

struct BooleanProjection {
  Decomposition decomposition;
  std::vector<KripkeModel> models;  // one crisp model per factor
};

// Splits a Boolean model into crisp models, one per directly indecomposable
// factor: R_i(w, v) is top iff R(w, v) projects to top in factor i.
// Throws NotBooleanFrame.
BooleanProjection boolean_projection(const KripkeModel& m);

struct CrispifyEntry {
  Formula formula;
  bool axiomHolds = false;  // w validates [](@k \/ phi) -> (@k \/ []phi)
  Elem axiomValue = 0;
  Elem boxValue = 0;        // eval([]phi, w) in the original model
  Elem crispMeet = 0;       // meet of eval(phi, v) over v with R(w, v) = 1
  Elem crispBoxValue = 0;   // eval([]phi, w) in the crispified model
  bool agrees = false;      // boxValue == crispBoxValue
};

struct CrispifyResult {
  KripkeModel model;
  Elem coatom = 0;
  std::vector<CrispifyEntry> entries;
};

// Keeps exactly the R entries equal to top. Throws NoUniqueCoatom.
CrispifyResult crispify(const KripkeModel& m, std::size_t w, const std::vector<Formula>& phis);

// Whether every box subformula of the given formulas attains its meet at
// some successor, at every world.
bool is_modally_witnessed(const KripkeModel& m, const std::vector<Formula>& phis);

}  // namespace mvml
