#include "mvml/schema.hpp"

namespace mvml {

bool satisfies(const ResiduatedLattice& a, const AlgebraReport& report, Elem e, ElementCondition c) {
  switch (c) {
    case ElementCondition::Any: return true;
    case ElementCondition::NonZero: return e != a.bottom();
    case ElementCondition::Idempotent: return report.is_idempotent(e);
    case ElementCondition::Boolean: return report.is_boolean(e);
    case ElementCondition::Coatom: return report.is_coatom(e);
    case ElementCondition::Distributive: return report.is_distributive(e);
  }
  return false;
}

std::vector<Elem> admissible_elements(const ResiduatedLattice& a, ElementCondition c) {
  const auto report = classify(a);
  std::vector<Elem> out;
  for (Elem e : a.elements()) {
    if (satisfies(a, report, e, c)) out.push_back(e);
  }
  return out;
}

namespace {

struct Matcher {
  const ResiduatedLattice& algebra;
  const AlgebraReport report;
  const std::map<std::string, ElementCondition>& conditions;

  bool run(const Formula& f, const Formula& p, SchemaMatch& m) const {
    switch (p.op()) {
      case Op::MetaVar: {
        auto [it, fresh] = m.formulas.emplace(p.name(), f);
        return fresh || it->second == f;
      }
      case Op::MetaConst: {
        std::optional<Elem> e;
        if (f.op() == Op::Const) e = algebra.find(f.name());
        if (f.op() == Op::Zero) e = algebra.bottom();
        if (f.op() == Op::One) e = algebra.top();
        if (!e) return false;
        auto cond = conditions.find(p.name());
        if (cond != conditions.end() && !satisfies(algebra, report, *e, cond->second)) return false;
        auto [it, fresh] = m.elements.emplace(p.name(), algebra.label(*e));
        return fresh || it->second == algebra.label(*e);
      }
      default: break;
    }
    if (f.op() != p.op() || f.name() != p.name() || f.arity() != p.arity()) return false;
    if (f.arity() >= 1 && !run(f.lhs(), p.lhs(), m)) return false;
    if (f.arity() == 2 && !run(f.rhs(), p.rhs(), m)) return false;
    return true;
  }
};

}  // namespace

std::optional<SchemaMatch> match_schema(const Formula& f, const Formula& pattern,
                                        const ResiduatedLattice& a,
                                        const std::map<std::string, ElementCondition>& conditions,
                                        SchemaMatch seed) {
  Matcher matcher{a, classify(a), conditions};
  if (!matcher.run(f, pattern, seed)) return std::nullopt;
  return seed;
}

std::optional<SchemaMatch> match_schema(const Formula& f, const Schema& s, const ResiduatedLattice& a) {
  return match_schema(f, s.pattern, a, s.conditions, SchemaMatch{});
}

}  // namespace mvml
