#pragma once

#include <string>
#include <vector>

#include "mvml/algebra.hpp"
#include "mvml/formula.hpp"

namespace mvml {

// A set of formulas flattened into a shared subterm DAG, evaluated over all
// worlds at once. Used by the search engine; eval_all is the reference.
class CompiledFormulas {
 public:
  // Variables are bound to slots in the order given; every variable of the
  // roots must be listed. Constants are resolved against `a`.
  CompiledFormulas(const ResiduatedLattice& a, const std::vector<Formula>& roots,
                   const std::vector<std::string>& vars);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t root(std::size_t i) const { return roots_[i]; }
  std::size_t var_count() const { return varCount_; }

  // R is row-major worlds x worlds; valuation is [slot * worlds + w];
  // buffer receives [node * worlds + w].
  void evaluate(std::size_t worlds, const Elem* R, const Elem* valuation, std::vector<Elem>& buffer) const;

 private:
  struct Node {
    Op op;
    std::size_t a = 0, b = 0;
    std::size_t slot = 0;
    Elem constant = 0;
  };

  const ResiduatedLattice& algebra_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> roots_;
  std::size_t varCount_ = 0;
};

}  // namespace mvml
