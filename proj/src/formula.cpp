#include "mvml/formula.hpp"

#include <algorithm>
#include <unordered_set>

#include "mvml/error.hpp"

namespace mvml {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> kids;
  std::size_t size;
  std::size_t hash;
  std::size_t depth;
  bool modal;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Formula Formula::make(Op op, std::string name, const Formula* a, const Formula* b) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  node->size = 1;
  node->hash = mix(std::hash<std::string>{}(node->name), static_cast<std::size_t>(op));
  node->depth = 0;
  node->modal = op == Op::Box || op == Op::Diamond;
  for (const Formula* k : {a, b}) {
    if (!k) continue;
    node->kids.push_back(*k);
    node->size += k->size();
    node->hash = mix(node->hash, k->hash());
    node->depth = std::max(node->depth, k->node_->depth);
    node->modal = node->modal || k->node_->modal;
  }
  if (node->op == Op::Box || node->op == Op::Diamond) node->depth += 1;
  return Formula(std::move(node));
}

Formula::Formula() : Formula(one()) {}

Formula Formula::var(std::string name) { return make(Op::Var, std::move(name), nullptr, nullptr); }

Formula Formula::zero() {
  static const Formula z = make(Op::Zero, "", nullptr, nullptr);
  return z;
}

Formula Formula::one() {
  static const Formula o = make(Op::One, "", nullptr, nullptr);
  return o;
}

Formula Formula::constant(std::string label) { return make(Op::Const, std::move(label), nullptr, nullptr); }
Formula Formula::meta(std::string name) { return make(Op::MetaVar, std::move(name), nullptr, nullptr); }
Formula Formula::meta_const(std::string name) {
  return make(Op::MetaConst, std::move(name), nullptr, nullptr);
}

Formula Formula::conj(Formula a, Formula b) { return make(Op::And, "", &a, &b); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::Or, "", &a, &b); }
Formula Formula::fusion(Formula a, Formula b) { return make(Op::Fusion, "", &a, &b); }
Formula Formula::implies(Formula a, Formula b) { return make(Op::Implies, "", &a, &b); }
Formula Formula::box(Formula a) { return make(Op::Box, "", &a, nullptr); }
Formula Formula::diamond(Formula a) { return make(Op::Diamond, "", &a, nullptr); }

Formula Formula::neg(Formula a) { return implies(std::move(a), zero()); }
Formula Formula::equiv(Formula a, Formula b) { return fusion(implies(a, b), implies(b, a)); }
Formula Formula::oplus(Formula a, Formula b) { return neg(fusion(neg(std::move(a)), neg(std::move(b)))); }

Formula Formula::power(Formula a, unsigned m) {
  if (m == 0) return one();
  Formula out = a;
  for (unsigned i = 1; i < m; ++i) out = fusion(out, a);
  return out;
}

Formula Formula::times(unsigned m, Formula a) {
  if (m == 0) return zero();
  Formula out = a;
  for (unsigned i = 1; i < m; ++i) out = oplus(out, a);
  return out;
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
std::size_t Formula::arity() const { return node_->kids.size(); }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }
bool Formula::is_modal() const { return node_->modal; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size || a.node_->op != b.node_->op ||
      a.node_->name != b.node_->name) {
    return false;
  }
  for (std::size_t i = 0; i < a.node_->kids.size(); ++i) {
    if (a.node_->kids[i] != b.node_->kids[i]) return false;
  }
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.op() != b.op()) return a.op() < b.op();
  if (a.name() != b.name()) return a.name() < b.name();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.node_->kids[i] != b.node_->kids[i]) return a.node_->kids[i] < b.node_->kids[i];
  }
  return false;
}

namespace {

void collect(const Formula& f, Op op, std::set<std::string>& out) {
  if (f.op() == op) out.insert(f.name());
  for (std::size_t i = 0; i < f.arity(); ++i) collect(i == 0 ? f.lhs() : f.rhs(), op, out);
}

void degrees(const Formula& f, std::vector<std::size_t>& out) {
  if (f.op() == Op::Box || f.op() == Op::Diamond) out.push_back(modal_depth(f.lhs()));
  for (std::size_t i = 0; i < f.arity(); ++i) degrees(i == 0 ? f.lhs() : f.rhs(), out);
}

}  // namespace

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect(f, Op::Var, out);
  return out;
}

std::set<std::string> variables(const std::vector<Formula>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) collect(f, Op::Var, out);
  return out;
}

std::set<std::string> constants(const Formula& f) {
  std::set<std::string> out;
  collect(f, Op::Const, out);
  return out;
}

std::set<std::string> metavariables(const Formula& f) {
  std::set<std::string> out;
  collect(f, Op::MetaVar, out);
  return out;
}

std::set<std::string> meta_constants(const Formula& f) {
  std::set<std::string> out;
  collect(f, Op::MetaConst, out);
  return out;
}

std::size_t modal_depth(const Formula& f) {
  if (f.op() == Op::Box || f.op() == Op::Diamond) return 1 + modal_depth(f.lhs());
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) d = std::max(d, modal_depth(i == 0 ? f.lhs() : f.rhs()));
  return d;
}

std::vector<std::size_t> box_degrees(const Formula& f) {
  std::vector<std::size_t> out;
  degrees(f, out);
  return out;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (seen.count(g)) return;
    for (std::size_t i = 0; i < g.arity(); ++i) walk(i == 0 ? g.lhs() : g.rhs());
    seen.insert(g);
    out.push_back(g);
  };
  walk(f);
  return out;
}

Formula rewrite(const Formula& f, const std::function<Formula(const Formula&)>& fn) {
  switch (f.op()) {
    case Op::And: return fn(Formula::conj(rewrite(f.lhs(), fn), rewrite(f.rhs(), fn)));
    case Op::Or: return fn(Formula::disj(rewrite(f.lhs(), fn), rewrite(f.rhs(), fn)));
    case Op::Fusion: return fn(Formula::fusion(rewrite(f.lhs(), fn), rewrite(f.rhs(), fn)));
    case Op::Implies: return fn(Formula::implies(rewrite(f.lhs(), fn), rewrite(f.rhs(), fn)));
    case Op::Box: return fn(Formula::box(rewrite(f.lhs(), fn)));
    case Op::Diamond: return fn(Formula::diamond(rewrite(f.lhs(), fn)));
    default: return fn(f);
  }
}

Formula substitute(const Formula& f, const Substitution& sigma) {
  return rewrite(f, [&](const Formula& g) {
    if (g.op() == Op::Var) {
      if (auto it = sigma.find(g.name()); it != sigma.end()) return it->second;
    }
    return g;
  });
}

Formula instantiate(const Formula& schema, const Substitution& formulas,
                    const std::map<std::string, std::string>& elements) {
  return rewrite(schema, [&](const Formula& g) {
    if (g.op() == Op::MetaVar) {
      if (auto it = formulas.find(g.name()); it != formulas.end()) return it->second;
    } else if (g.op() == Op::MetaConst) {
      if (auto it = elements.find(g.name()); it != elements.end()) return Formula::constant(it->second);
    }
    return g;
  });
}

}  // namespace mvml
