#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvml/kripke.hpp"
#include "mvml/terms.hpp"

namespace mvml {

struct SearchBudget {
  std::size_t maxWorlds = 2;
  std::optional<std::uint64_t> modelCap;  // total models; exceeding it withholds the verdict
  unsigned jobs = 1;
};

struct Countermodel {
  KripkeModel model;
  std::size_t world = 0;
};

struct Verdict {
  enum class Kind { ValidUpTo, Refuted };
  Kind kind = Kind::ValidUpTo;
  std::size_t bound = 0;
  std::optional<Countermodel> witness;

  bool refuted() const { return kind == Kind::Refuted; }
};

// Verdict line followed by the countermodel in model file format.
std::string render_verdict(const Verdict& v);

struct ConsequenceResult {
  bool holds = true;
  std::optional<Assignment> counterexample;
};

// Replaces every maximal modal subformula by a fresh variable `$b<i>`
// (equal subformulas share a variable), in order of first occurrence.
std::vector<Formula> abstract_modalities(const std::vector<Formula>& fs);

// Exact consequence by enumerating all assignments. With abstractModal off,
// modal input throws NonModalExpected.
ConsequenceResult nonmodal_consequence(const ResiduatedLattice& a, const std::vector<Formula>& gamma,
                                       const Formula& phi, bool abstractModal = true);

// Bounded searches. Enumeration order: world count ascending; R cells
// row-major, each over the class's values in index order; then valuations,
// variables sorted by name, worlds ascending, values in index order. The
// first countermodel in this order is returned for any number of jobs.
Verdict validity_search(const AlgebraPtr& a, FrameClass c, const Formula& phi, const SearchBudget& budget);
Verdict local_consequence_refute(const AlgebraPtr& a, FrameClass c, const std::vector<Formula>& gamma,
                                 const Formula& phi, const SearchBudget& budget);
Verdict global_consequence_refute(const AlgebraPtr& a, FrameClass c, const std::vector<Formula>& gamma,
                                  const Formula& phi, const SearchBudget& budget);

struct DefinabilityResult {
  bool defines = true;
  std::optional<KripkeFrame> counterexample;
  bool frameValidates = false;  // at the counterexample
  bool frameInClass = false;    // at the counterexample
};

// Over all A-valued frames with at most maxWorlds worlds: the frame
// validates every formula iff it belongs to the class.
DefinabilityResult frame_definability_check(const std::vector<Formula>& phis, FrameClass c,
                                            const AlgebraPtr& a, const SearchBudget& budget);

// Whether the frame validates every formula under every valuation.
bool frame_validates(const KripkeFrame& f, const AlgebraPtr& a, const std::vector<Formula>& phis);

}  // namespace mvml
