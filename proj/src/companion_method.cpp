#include "mvml/companion_method.hpp"

#include <algorithm>

#include "mvml/error.hpp"
#include "mvml/syntax.hpp"
#include "mvml/translate.hpp"

namespace mvml {

std::optional<CompanionVariant> parse_companion_variant(std::string_view text) {
  if (text == "fr" || text == "Fr" || text == "all") return CompanionVariant::Fr;
  if (text == "ifr" || text == "IFr" || text == "idem") return CompanionVariant::IFr;
  if (text == "cfr" || text == "CFr" || text == "crisp") return CompanionVariant::CFr;
  return std::nullopt;
}

namespace {

bool is_companion_variable(const std::string& v) { return v.rfind("$r", 0) == 0; }

}  // namespace

CompanionOutcome companion_discard(const AlgebraPtr& a, const Formula& phi, CompanionVariant variant) {
  const ResiduatedLattice& A = *a;
  CompanionOutcome out;
  out.companionFormula = companion(phi);
  const std::size_t depth = modal_depth(phi);

  const auto varSet = variables(out.companionFormula);
  const std::vector<std::string> vars(varSet.begin(), varSet.end());
  std::vector<std::vector<Elem>> ranges;
  for (const auto& v : vars) {
    if (!is_companion_variable(v)) {
      ranges.push_back(A.elements());
    } else if (variant == CompanionVariant::IFr) {
      ranges.push_back(class_values(A, FrameClass::Idempotent));
    } else if (variant == CompanionVariant::CFr) {
      ranges.push_back(class_values(A, FrameClass::Crisp));
    } else {
      ranges.push_back(A.elements());
    }
  }

  std::vector<std::size_t> pos(vars.size(), 0);
  Assignment h;
  const bool constantsUsed = !constants(phi).empty();
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) h[vars[i]] = ranges[i][pos[i]];
    if (eval_term(A, out.companionFormula, h) != A.top()) {
      ++out.failingAssignments;
      KripkeModel m = make_model(a, depth + 1);
      m.constants = constantsUsed;
      // The box evaluated at w_n has degree depth - 1 - n along the chain.
      for (std::size_t n = 0; n < depth; ++n) {
        m.frame.set(n, n + 1, h.at(companion_variable(depth - 1 - n)));
      }
      for (const auto& [v, e] : h) {
        if (!is_companion_variable(v)) m.valuation[v] = std::vector<Elem>(depth + 1, e);
      }
      if (eval(m, phi, 0) != A.top()) {
        out.discarded = true;
        out.assignment = h;
        out.countermodel = std::move(m);
        return out;
      }
    }
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++pos[i] < ranges[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (vars.empty()) return out;
  }
}

LiftResult companion_lift(const AlgebraPtr& a, const Formula& delta, const std::vector<std::string>& deltaArgs,
                          const Formula& epsilon, const std::string& epsilonArg,
                          const std::vector<Formula>& phis, const Formula& phi, bool witnessed) {
  const ResiduatedLattice& A = *a;
  if (phis.size() != deltaArgs.size()) {
    throw Error(Errc::BadParam, "delta takes " + std::to_string(deltaArgs.size()) + " arguments, got " +
                                    std::to_string(phis.size()) + " formulas");
  }
  for (const Formula& f : phis) {
    if (f.is_modal()) throw Error(Errc::NonModalExpected, render(f));
  }
  if (phi.is_modal()) throw Error(Errc::NonModalExpected, render(phi));

  const auto dp = term_properties(A, delta, deltaArgs);
  for (std::size_t i = 0; i < deltaArgs.size(); ++i) {
    if (!dp.nondecreasing[i]) {
      throw Error(Errc::PropertyFails, "delta is not nondecreasing in " + deltaArgs[i]);
    }
  }
  if (!witnessed && !term_properties(A, epsilon, {epsilonArg}).expanding) {
    throw Error(Errc::PropertyFails, "epsilon is not expanding");
  }

  const Formula r = Formula::var("$r");
  Substitution premiseArgs, boxArgs;
  for (std::size_t i = 0; i < deltaArgs.size(); ++i) {
    premiseArgs[deltaArgs[i]] = Formula::implies(r, phis[i]);
    boxArgs[deltaArgs[i]] = Formula::box(phis[i]);
  }
  LiftResult out;
  out.premise = Formula::implies(substitute(delta, premiseArgs),
                                 substitute(epsilon, {{epsilonArg, Formula::implies(r, phi)}}));

  const auto varSet = variables(out.premise);
  const std::vector<std::string> vars(varSet.begin(), varSet.end());
  std::vector<Elem> val(vars.size(), 0);
  Assignment h;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) h[vars[i]] = val[i];
    if (eval_term(A, out.premise, h) != A.top()) {
      std::string where;
      for (const auto& [v, e] : h) where += " " + v + "=" + A.label(e);
      throw Error(Errc::PremiseFails, render(out.premise) + " fails at" + where);
    }
    std::size_t i = vars.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++val[i] < A.size()) {
        done = false;
        break;
      }
      val[i] = 0;
    }
    if (done) break;
  }

  const Formula lhs = substitute(delta, boxArgs);
  out.conclusion = witnessed ? Formula::implies(lhs, substitute(epsilon, {{epsilonArg, Formula::box(phi)}}))
                             : Formula::implies(lhs, Formula::box(substitute(epsilon, {{epsilonArg, phi}})));
  return out;
}

}  // namespace mvml
