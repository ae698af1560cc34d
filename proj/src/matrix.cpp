#include "mvml/matrix.hpp"

#include <algorithm>
#include <set>

#include "mvml/error.hpp"

namespace mvml {

Elem eval_matrix(const ModalMatrix& m, const Formula& f, const std::map<std::string, Elem>& h) {
  const ResiduatedLattice& A = *m.algebra;
  switch (f.op()) {
    case Op::Var:
    case Op::MetaVar:
    case Op::MetaConst: {
      auto it = h.find(f.name());
      if (it == h.end()) throw Error(Errc::UnknownVariable, f.name());
      return it->second;
    }
    case Op::Zero: return A.bottom();
    case Op::One: return A.top();
    case Op::Const: {
      auto e = A.find(f.name());
      if (!e) throw Error(Errc::UnknownConstant, f.name());
      return *e;
    }
    case Op::And: return A.meet(eval_matrix(m, f.lhs(), h), eval_matrix(m, f.rhs(), h));
    case Op::Or: return A.join(eval_matrix(m, f.lhs(), h), eval_matrix(m, f.rhs(), h));
    case Op::Fusion: return A.fuse(eval_matrix(m, f.lhs(), h), eval_matrix(m, f.rhs(), h));
    case Op::Implies: return A.imp(eval_matrix(m, f.lhs(), h), eval_matrix(m, f.rhs(), h));
    case Op::Box: return m.box[eval_matrix(m, f.lhs(), h)];
    case Op::Diamond: throw Error(Errc::DiamondUnsupported, "matrices interpret boxes only");
  }
  return A.bottom();
}

bool MatrixReport::failed(const std::string& id) const {
  return std::any_of(failures.begin(), failures.end(), [&](const MatrixFailure& f) { return f.item == id; });
}

namespace {

std::vector<std::string> metas_of(const std::vector<Formula>& fs) {
  std::set<std::string> names;
  for (const Formula& f : fs) {
    for (const auto& n : metavariables(f)) names.insert(n);
    for (const auto& n : meta_constants(f)) names.insert(n);
  }
  return {names.begin(), names.end()};
}

// Calls fn on every assignment in odometer order until it returns false.
template <class Fn>
void for_each_assignment(const std::vector<std::string>& names, std::size_t n, Fn fn) {
  std::vector<Elem> pos(names.size(), 0);
  std::map<std::string, Elem> h;
  while (true) {
    for (std::size_t i = 0; i < names.size(); ++i) h[names[i]] = pos[i];
    if (!fn(h)) return;
    std::size_t i = names.size();
    while (true) {
      if (i == 0) return;
      --i;
      if (++pos[i] < n) break;
      pos[i] = 0;
    }
  }
}

std::map<std::string, std::string> labelled(const ResiduatedLattice& a, const std::map<std::string, Elem>& h) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : h) out[k] = a.label(v);
  return out;
}

}  // namespace

MatrixReport matrix_soundness(const ModalMatrix& m, const Calculus& calc) {
  const ResiduatedLattice& A = *m.algebra;
  MatrixReport report;

  const auto decomposition = boolean_decomposition(A);
  report.baseVerified = std::all_of(decomposition.factors.begin(), decomposition.factors.end(),
                                    [&](const ResiduatedLattice& f) { return find_embedding(f, *calc.algebra).has_value(); });

  const auto classification = classify(A);
  for (const auto& ax : calc.axioms) {
    report.checked.push_back(ax.id);
    bool failed = false;
    for (const auto& sc : ax.alternatives) {
      if (failed) break;
      for_each_assignment(metas_of({sc.pattern}), A.size(), [&](const std::map<std::string, Elem>& h) {
        for (const auto& [name, cond] : sc.conditions) {
          auto it = h.find(name);
          if (it != h.end() && !satisfies(A, classification, it->second, cond)) return true;
        }
        if (m.designated[eval_matrix(m, sc.pattern, h)]) return true;
        report.failures.push_back(MatrixFailure{ax.id, labelled(A, h)});
        failed = true;
        return false;
      });
    }
  }
  for (const auto& r : calc.rules) {
    report.checked.push_back(r.id);
    std::vector<Formula> all = r.premises;
    all.push_back(r.conclusion);
    for_each_assignment(metas_of(all), A.size(), [&](const std::map<std::string, Elem>& h) {
      for (const Formula& p : r.premises) {
        if (!m.designated[eval_matrix(m, p, h)]) return true;
      }
      if (m.designated[eval_matrix(m, r.conclusion, h)]) return true;
      report.failures.push_back(MatrixFailure{r.id, labelled(A, h)});
      return false;
    });
  }
  return report;
}

}  // namespace mvml
