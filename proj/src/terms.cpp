#include "mvml/terms.hpp"

#include "mvml/error.hpp"

namespace mvml {

Elem eval_term(const ResiduatedLattice& a, const Formula& t, const Assignment& h) {
  switch (t.op()) {
    case Op::Var: {
      auto it = h.find(t.name());
      if (it == h.end()) throw Error(Errc::UnknownVariable, "no value for variable " + t.name());
      return it->second;
    }
    case Op::Zero: return a.bottom();
    case Op::One: return a.top();
    case Op::Const: {
      auto e = a.find(t.name());
      if (!e) throw Error(Errc::UnknownConstant, "no element labelled " + t.name() + " in " + a.name());
      return *e;
    }
    case Op::And: return a.meet(eval_term(a, t.lhs(), h), eval_term(a, t.rhs(), h));
    case Op::Or: return a.join(eval_term(a, t.lhs(), h), eval_term(a, t.rhs(), h));
    case Op::Fusion: return a.fuse(eval_term(a, t.lhs(), h), eval_term(a, t.rhs(), h));
    case Op::Implies: return a.imp(eval_term(a, t.lhs(), h), eval_term(a, t.rhs(), h));
    case Op::Box:
    case Op::Diamond: throw Error(Errc::NonModalExpected, "modal operator in a non-modal term");
    case Op::MetaVar:
    case Op::MetaConst: throw Error(Errc::BadParam, "uninstantiated schema metavariable " + t.name());
  }
  return a.bottom();
}

std::vector<Elem> term_function(const ResiduatedLattice& a, const Formula& t,
                                const std::vector<std::string>& args) {
  std::vector<Elem> table;
  Assignment h;
  std::vector<Elem> tuple(args.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < args.size(); ++i) h[args[i]] = tuple[i];
    table.push_back(eval_term(a, t, h));
    std::size_t k = args.size();
    while (k > 0) {
      --k;
      if (++tuple[k] < a.size()) break;
      tuple[k] = 0;
      if (k == 0) return table;
    }
    if (args.empty()) return table;
  }
}

TermProperties term_properties(const ResiduatedLattice& a, const Formula& t,
                               const std::vector<std::string>& args) {
  const auto table = term_function(a, t, args);
  const std::size_t n = a.size();
  TermProperties p;
  std::size_t stride = 1;
  std::vector<std::size_t> strides(args.size());
  for (std::size_t k = args.size(); k-- > 0;) {
    strides[k] = stride;
    stride *= n;
  }
  for (std::size_t k = 0; k < args.size(); ++k) {
    bool mono = true;
    for (std::size_t idx = 0; idx < table.size() && mono; ++idx) {
      const Elem xk = static_cast<Elem>((idx / strides[k]) % n);
      for (Elem y = 0; y < n; ++y) {
        if (a.leq(xk, y)) {
          const std::size_t other = idx + (static_cast<std::size_t>(y) - xk) * strides[k];
          if (!a.leq(table[idx], table[other])) mono = false;
        }
      }
    }
    p.nondecreasing.push_back(mono);
  }
  if (args.size() == 1) {
    p.expanding = true;
    for (Elem x = 0; x < n; ++x) {
      if (!a.leq(x, table[x])) p.expanding = false;
    }
  }
  return p;
}

}  // namespace mvml
