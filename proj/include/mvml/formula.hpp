#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mvml {

enum class Op : std::uint8_t {
  Var,
  Zero,
  One,
  Const,      // canonical constant, named by element label
  And,
  Or,
  Fusion,
  Implies,
  Box,
  Diamond,
  MetaVar,    // schema metavariable standing for a formula
  MetaConst,  // schema metavariable standing for a canonical constant
};

// Immutable formula tree with structural equality. Sugar (~, <->, +, powers)
// is expanded by the builders; only the constructors above are stored.
class Formula {
 public:
  Formula();  // the constant 1

  static Formula var(std::string name);
  static Formula zero();
  static Formula one();
  static Formula constant(std::string label);
  static Formula meta(std::string name);
  static Formula meta_const(std::string name);

  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula fusion(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula box(Formula a);
  static Formula diamond(Formula a);

  static Formula neg(Formula a);
  static Formula equiv(Formula a, Formula b);
  static Formula oplus(Formula a, Formula b);
  static Formula power(Formula a, unsigned m);  // a * ... * a, m >= 0
  static Formula times(unsigned m, Formula a);  // a + ... + a, m >= 0

  Op op() const;
  const std::string& name() const;  // Var, Const, MetaVar, MetaConst
  const Formula& lhs() const;       // binary left child, or the modal argument
  const Formula& rhs() const;
  std::size_t arity() const;
  std::size_t size() const;  // node count
  std::size_t hash() const;

  bool is_modal() const;
  bool is_binary() const { return arity() == 2; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  // Total order: by size, then structure. Used for deterministic containers.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

std::set<std::string> variables(const Formula& f);
std::set<std::string> variables(const std::vector<Formula>& fs);
std::set<std::string> constants(const Formula& f);
std::set<std::string> metavariables(const Formula& f);
std::set<std::string> meta_constants(const Formula& f);

std::size_t modal_depth(const Formula& f);
// Degree of every modal occurrence (modal depth of its argument), in
// left-to-right preorder.
std::vector<std::size_t> box_degrees(const Formula& f);

// Subformulas in post-order without duplicates.
std::vector<Formula> subformulas(const Formula& f);

using Substitution = std::map<std::string, Formula>;

// Simultaneous substitution of variables (Var nodes).
Formula substitute(const Formula& f, const Substitution& sigma);
// Simultaneous substitution of formula metavariables (MetaVar nodes) and
// element metavariables (MetaConst nodes, replaced by Const labels).
Formula instantiate(const Formula& schema, const Substitution& formulas,
                    const std::map<std::string, std::string>& elements = {});

// Maps every node bottom-up; the callback receives the node with already
// rewritten children.
Formula rewrite(const Formula& f, const std::function<Formula(const Formula&)>& fn);

}  // namespace mvml
