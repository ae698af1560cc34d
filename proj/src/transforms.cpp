#include "mvml/transforms.hpp"

#include "mvml/error.hpp"

namespace mvml {

BooleanProjection boolean_projection(const KripkeModel& m) {
  const ResiduatedLattice& A = *m.algebra;
  if (!in_class(m.frame, A, FrameClass::Boolean)) {
    throw Error(Errc::NotBooleanFrame, "accessibility values are not all Boolean elements");
  }
  BooleanProjection out{boolean_decomposition(A), {}};
  const auto& d = out.decomposition;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    KripkeModel mi = m;
    for (Elem& r : mi.frame.R) r = d.projections[i][r] == d.factors[i].top() ? A.top() : A.bottom();
    out.models.push_back(std::move(mi));
  }
  return out;
}

CrispifyResult crispify(const KripkeModel& m, std::size_t w, const std::vector<Formula>& phis) {
  const ResiduatedLattice& A = *m.algebra;
  const auto k = classify(A).unique_coatom();
  if (!k) throw Error(Errc::NoUniqueCoatom, A.name() + " has no unique coatom");
  CrispifyResult out{m, *k, {}};
  for (Elem& r : out.model.frame.R) r = r == A.top() ? A.top() : A.bottom();
  const Formula kbar = Formula::constant(A.label(*k));
  for (const Formula& phi : phis) {
    CrispifyEntry e;
    e.formula = phi;
    const Formula axiom =
        Formula::implies(Formula::box(Formula::disj(kbar, phi)), Formula::disj(kbar, Formula::box(phi)));
    e.axiomValue = eval(m, axiom, w);
    e.axiomHolds = e.axiomValue == A.top();
    e.boxValue = eval(m, Formula::box(phi), w);
    const auto values = eval_all(m, phi);
    e.crispMeet = A.top();
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m.frame.r(w, v) == A.top()) e.crispMeet = A.meet(e.crispMeet, values[v]);
    }
    e.crispBoxValue = eval(out.model, Formula::box(phi), w);
    e.agrees = e.boxValue == e.crispBoxValue;
    out.entries.push_back(std::move(e));
  }
  return out;
}

bool is_modally_witnessed(const KripkeModel& m, const std::vector<Formula>& phis) {
  const ResiduatedLattice& A = *m.algebra;
  for (const Formula& phi : phis) {
    for (const Formula& sub : subformulas(phi)) {
      if (sub.op() != Op::Box) continue;
      const auto inner = eval_all(m, sub.lhs());
      const auto boxed = eval_all(m, sub);
      for (std::size_t w = 0; w < m.size(); ++w) {
        bool attained = false;
        for (std::size_t v = 0; v < m.size() && !attained; ++v) {
          attained = A.imp(m.frame.r(w, v), inner[v]) == boxed[w];
        }
        if (!attained) return false;
      }
    }
  }
  return true;
}

}  // namespace mvml
