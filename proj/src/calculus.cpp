#include "mvml/calculus.hpp"

#include <algorithm>
#include <functional>

#include "mvml/algebra_io.hpp"
#include "mvml/characterizing.hpp"
#include "mvml/error.hpp"
#include "mvml/syntax.hpp"

namespace mvml {

const AxiomSchema* Calculus::axiom(const std::string& id) const {
  for (const auto& a : axioms) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

const Rule* Calculus::rule(const std::string& id) const {
  for (const auto& r : rules) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

Formula element_formula(const ResiduatedLattice& a, Elem e) {
  if (e == a.bottom()) return Formula::zero();
  if (e == a.top()) return Formula::one();
  return Formula::constant(a.label(e));
}

namespace {

AxiomSchema schema(std::string id, std::string_view text,
                   std::map<std::string, ElementCondition> conditions = {}) {
  return AxiomSchema{std::move(id), {Schema{parse_schema(text), std::move(conditions)}}};
}

Rule rule(std::string id, std::vector<std::string_view> premises, std::string_view conclusion) {
  Rule r{std::move(id), {}, parse_schema(conclusion)};
  for (auto p : premises) r.premises.push_back(parse_schema(p));
  return r;
}

Rule modus_ponens() { return rule("MP", {"Phi", "Phi -> Psi"}, "Psi"); }
Rule necessity() { return rule("N", {"Phi"}, "[]Phi"); }
Rule monotonicity() { return rule("Mon", {"Phi -> Psi"}, "[]Phi -> []Psi"); }

AxiomSchema axiom_k() { return schema("K", "[](Phi -> Psi) -> ([]Phi -> []Psi)"); }
AxiomSchema axiom_md() { return schema("MD", "([]Phi /\\ []Psi) -> [](Phi /\\ Psi)"); }
AxiomSchema axiom_box1() { return schema("Box1", "[]1"); }
AxiomSchema axiom_ax() {
  return schema("Ax", "[](@?a -> Phi) <-> (@?a -> []Phi)", {{"a", ElementCondition::Any}});
}

Formula big_conj(const std::vector<Formula>& fs) {
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::conj(out, fs[i]);
  return out;
}

Formula big_disj(const std::vector<Formula>& fs) {
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::disj(out, fs[i]);
  return out;
}

void require_mv_chain(const ResiduatedLattice& a, const std::string& name) {
  if (!is_mv_chain(a)) throw Error(Errc::PrerequisiteFails, name + " needs a finite MV chain, got " + a.name());
}

void require_constants(bool constants, const std::string& name) {
  if (!constants) throw Error(Errc::PrerequisiteFails, name + " needs canonical constants");
}

Elem unique_coatom_or_throw(const ResiduatedLattice& a, const std::string& name) {
  auto k = classify(a).unique_coatom();
  if (!k) throw Error(Errc::PrerequisiteFails, name + " needs a unique coatom; " + a.name() + " has none");
  return *k;
}

// eta_c applied to a formula.
Formula eta(const ResiduatedLattice& chain, Elem c, const Formula& arg) {
  return substitute(characterizing_formula(chain, c), {{"p", arg}});
}

}  // namespace

Rule graded_rule(const ResiduatedLattice& chain, Elem a, const std::vector<Elem>& indices) {
  require_mv_chain(chain, "graded rule");
  std::vector<Elem> as = indices;
  std::string id = "R_" + chain.label(a);
  if (as.empty()) {
    for (Elem e : chain.elements()) {
      if (e != chain.bottom()) as.push_back(e);
    }
  } else {
    for (std::size_t i = 0; i < as.size(); ++i) id += (i ? "," : "^") + chain.label(as[i]);
  }
  // Metavariables follow the numbering of the base rule: Phi2..Phin.
  const std::size_t offset = indices.empty() ? 2 : 1;
  std::vector<Formula> metas;
  for (std::size_t i = 0; i < as.size(); ++i) metas.push_back(Formula::meta("Phi" + std::to_string(i + offset)));
  const Formula phi = Formula::meta("Phi");

  Rule r;
  r.id = id;
  for (Elem b : chain.elements()) {
    if (chain.leq(b, chain.neg(a))) continue;  // only b > ~a
    std::vector<Formula> conj;
    for (std::size_t i = 0; i < as.size(); ++i) conj.push_back(eta(chain, chain.fuse(as[i], b), metas[i]));
    r.premises.push_back(Formula::implies(big_conj(conj), eta(chain, chain.fuse(a, b), phi)));
  }
  std::vector<Formula> conj;
  for (std::size_t i = 0; i < as.size(); ++i) conj.push_back(eta(chain, as[i], Formula::box(metas[i])));
  r.conclusion = Formula::implies(big_conj(conj), eta(chain, a, Formula::box(phi)));
  return r;
}

Calculus preset_calculus(const std::string& name, const AlgebraPtr& ap, bool constants) {
  const ResiduatedLattice& A = *ap;
  Calculus c;
  c.name = name;
  c.algebra = ap;
  c.constants = constants;
  if (name == "table1" || name == "table1md") {
    require_mv_chain(A, name);
    c.axioms.push_back(name == "table1" ? axiom_k()
                                        : schema("MD", "([]Phi /\\ []Psi) <-> [](Phi /\\ Psi)"));
    c.axioms.push_back(schema("Tau2", "[](Phi + Phi) <-> ([]Phi + []Phi)"));
    c.axioms.push_back(schema("Tau1", "[](Phi * Phi) <-> ([]Phi * []Phi)"));
    c.rules = {modus_ponens(), necessity()};
    c.intendedClass = FrameClass::Crisp;
  } else if (name == "table2") {
    c.oracle = false;
    c.axioms = {
        schema("A1", "(Phi -> Psi) -> ((Psi -> Chi) -> (Phi -> Chi))"),
        schema("A2", "(Phi * Psi) -> Phi"),
        schema("A3", "(Phi * Psi) -> (Psi * Phi)"),
        schema("A4", "(Phi /\\ Psi) -> Phi"),
        schema("A5", "(Phi /\\ Psi) -> (Psi /\\ Phi)"),
        schema("A6", "(Phi * (Phi -> Psi)) -> (Phi /\\ Psi)"),
        schema("A7a", "(Phi -> (Psi -> Chi)) -> ((Phi * Psi) -> Chi)"),
        schema("A7b", "((Phi * Psi) -> Chi) -> (Phi -> (Psi -> Chi))"),
        schema("A8", "((Phi -> Psi) -> Chi) -> (((Psi -> Phi) -> Chi) -> Chi)"),
        schema("A9", "0 -> Phi"),
        schema("J1", "Phi -> (Phi \\/ Psi)"),
        schema("J2", "Psi -> (Phi \\/ Psi)"),
        schema("J3", "(Phi -> Chi) -> ((Psi -> Chi) -> ((Phi \\/ Psi) -> Chi))"),
        schema("Con", "Phi -> (Phi * Phi)"),
        axiom_k(),
        schema("DN", "~~[]Phi -> []~~Phi"),
    };
    c.rules = {modus_ponens(), necessity()};
  } else if (name == "table3" || name == "table3k" || name == "table4") {
    require_constants(constants, name);
    c.axioms = {axiom_box1(), axiom_md(), axiom_ax()};
    c.rules = {modus_ponens(), monotonicity()};
    c.intendedClass = FrameClass::All;
    if (name == "table3k") {
      c.axioms.push_back(axiom_k());
      c.intendedClass = FrameClass::Idempotent;
    }
    if (name == "table4") {
      const Elem k = unique_coatom_or_throw(A, name);
      c.axioms.push_back(AxiomSchema{
          "Crisp", {Schema{Formula::implies(Formula::box(Formula::disj(element_formula(A, k), Formula::meta("Phi"))),
                                            Formula::disj(element_formula(A, k), Formula::box(Formula::meta("Phi")))),
                           {}}}});
      c.intendedClass = FrameClass::Crisp;
    }
  } else if (name == "table5") {
    require_mv_chain(A, name);
    c.axioms = {axiom_box1(), axiom_md()};
    c.rules = {modus_ponens(), monotonicity()};
    for (Elem a : A.elements()) {
      if (a != A.bottom()) c.rules.push_back(graded_rule(A, a));
    }
    c.intendedClass = FrameClass::All;
  } else if (name == "corA16" || name == "corA17") {
    require_constants(constants, name);
    if (name == "corA16") {
      const Elem k = unique_coatom_or_throw(A, name);
      if (k == A.bottom()) throw Error(Errc::PrerequisiteFails, "the coatom must differ from 0");
      c.rules = {modus_ponens(),
                 Rule{"Coatom", {Formula::disj(element_formula(A, k), Formula::meta("Phi"))}, Formula::meta("Phi")}};
    } else {
      if (!classify(A).isSimple) throw Error(Errc::PrerequisiteFails, name + " needs a simple algebra");
      c.rules = {modus_ponens()};
    }
    c.constantsAsVariables = true;
    AxiomSchema bk{"BK", {}};
    for (const Formula& f : generate_bookkeeping(A)) bk.alternatives.push_back(Schema{f, {}});
    c.axioms.push_back(std::move(bk));
    c.axioms.push_back(AxiomSchema{
        "W", {Schema{substitute(generate_witnessing(A), {{"p", Formula::meta("Phi")}}), {}}}});
  } else {
    throw Error(Errc::BadParam, "unknown calculus " + name);
  }
  return c;
}

Calculus resolve_calculus(const std::string& spec, bool constants) {
  const auto open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')') {
    throw Error(Errc::BadParam, "calculus must be written <preset>(<algebra>): " + spec);
  }
  const std::string name = spec.substr(0, open);
  const std::string algebra = spec.substr(open + 1, spec.size() - open - 2);
  return preset_calculus(name, resolve_algebra(algebra), constants);
}

std::vector<Formula> generate_bookkeeping(const ResiduatedLattice& a, bool constants) {
  if (!constants) throw Error(Errc::ConstantsDisabled, "book-keeping axioms need canonical constants");
  std::vector<Formula> out;
  for (Elem x : a.elements()) {
    for (Elem y : a.elements()) {
      const Formula fx = element_formula(a, x), fy = element_formula(a, y);
      out.push_back(Formula::equiv(Formula::conj(fx, fy), element_formula(a, a.meet(x, y))));
      out.push_back(Formula::equiv(Formula::disj(fx, fy), element_formula(a, a.join(x, y))));
      out.push_back(Formula::equiv(Formula::fusion(fx, fy), element_formula(a, a.fuse(x, y))));
      out.push_back(Formula::equiv(Formula::implies(fx, fy), element_formula(a, a.imp(x, y))));
    }
  }
  return out;
}

Formula generate_witnessing(const ResiduatedLattice& a, bool constants) {
  if (!constants) throw Error(Errc::ConstantsDisabled, "the witnessing axiom needs canonical constants");
  std::vector<Formula> parts;
  for (Elem x : a.elements()) parts.push_back(Formula::equiv(Formula::var("p"), element_formula(a, x)));
  return big_disj(parts);
}

namespace {

std::optional<std::string> check_rule(const Calculus& calc, const Rule& r, const Formula& f,
                                      const std::vector<const Formula*>& cited) {
  const ResiduatedLattice& A = *calc.algebra;
  auto concl = match_schema(f, r.conclusion, A, {}, SchemaMatch{});
  if (!concl) return "formula is not an instance of the conclusion of " + r.id;
  // Every premise must match some cited step; every cited step must be used.
  std::vector<bool> used(cited.size(), false);
  std::function<bool(std::size_t, const SchemaMatch&)> dfs = [&](std::size_t i, const SchemaMatch& m) -> bool {
    if (i == r.premises.size()) return std::all_of(used.begin(), used.end(), [](bool u) { return u; });
    for (std::size_t j = 0; j < cited.size(); ++j) {
      auto next = match_schema(*cited[j], r.premises[i], A, {}, m);
      if (!next) continue;
      const bool was = used[j];
      used[j] = true;
      if (dfs(i + 1, *next)) return true;
      used[j] = was;
    }
    return false;
  };
  if (!dfs(0, *concl)) return "cited steps do not match the premises of " + r.id;
  return std::nullopt;
}

std::optional<Rule> generalized_rule(const Calculus& calc, const std::string& id) {
  if (calc.name != "table5" || id.rfind("R_", 0) != 0) return std::nullopt;
  const auto caret = id.find('^');
  if (caret == std::string::npos) return std::nullopt;
  const ResiduatedLattice& A = *calc.algebra;
  const auto a = A.find(id.substr(2, caret - 2));
  if (!a) return std::nullopt;
  std::vector<Elem> indices;
  std::string rest = id.substr(caret + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const auto label = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto e = A.find(label);
    if (!e) return std::nullopt;
    indices.push_back(*e);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return graded_rule(A, *a, indices);
}

Formula constants_to_variables(const Formula& f) {
  return rewrite(f, [](const Formula& g) { return g.op() == Op::Const ? Formula::var("$c" + g.name()) : g; });
}

}  // namespace

CheckResult check_derivation(const Calculus& calc, const Derivation& d) {
  const ResiduatedLattice& A = *calc.algebra;
  std::map<std::size_t, std::size_t> position;  // step number -> index
  auto fail = [](std::size_t n, std::string why) { return CheckResult{false, n, std::move(why)}; };
  for (std::size_t idx = 0; idx < d.steps.size(); ++idx) {
    const Step& s = d.steps[idx];
    const Justification& j = s.justification;
    if (position.count(s.number)) return fail(s.number, "duplicate step number");
    if (!calc.constants && !constants(s.formula).empty()) return fail(s.number, "canonical constants are disabled");
    std::vector<const Formula*> cited;
    for (std::size_t n : j.premises) {
      auto it = position.find(n);
      if (it == position.end()) return fail(s.number, "cites step " + std::to_string(n) + " which is not earlier");
      cited.push_back(&d.steps[it->second].formula);
    }
    auto arity = [&](std::size_t n) -> std::optional<CheckResult> {
      if (cited.size() != n) return fail(s.number, "expects " + std::to_string(n) + " cited steps");
      return std::nullopt;
    };
    std::optional<std::string> problem;
    switch (j.kind) {
      case Justification::Kind::Assumption: break;
      case Justification::Kind::Axiom: {
        const AxiomSchema* ax = calc.axiom(j.id);
        if (!ax) throw Error(Errc::UnknownSchema, "no axiom " + j.id + " in " + calc.name);
        const bool any = std::any_of(ax->alternatives.begin(), ax->alternatives.end(),
                                     [&](const Schema& sc) { return match_schema(s.formula, sc, A).has_value(); });
        if (!any) problem = "not an instance of axiom " + j.id;
        break;
      }
      case Justification::Kind::NonModalTautology: {
        if (!calc.oracle) {
          problem = "this calculus has no non-modal oracle";
          break;
        }
        const Formula f = calc.constantsAsVariables ? constants_to_variables(s.formula) : s.formula;
        auto r = nonmodal_consequence(A, {}, f, true);
        if (!r.holds) {
          std::string where;
          for (const auto& [v, e] : *r.counterexample) where += " " + v + "=" + A.label(e);
          problem = "not a tautology of " + A.name() + "; fails at" + where;
        }
        break;
      }
      case Justification::Kind::ModusPonens:
      case Justification::Kind::Necessity:
      case Justification::Kind::Monotonicity:
      case Justification::Kind::RuleApp: {
        std::string id = j.id;
        if (j.kind == Justification::Kind::ModusPonens) id = "MP";
        if (j.kind == Justification::Kind::Necessity) id = "N";
        if (j.kind == Justification::Kind::Monotonicity) id = "Mon";
        if (j.kind == Justification::Kind::ModusPonens) {
          if (auto bad = arity(2)) return *bad;
        }
        if (j.kind == Justification::Kind::Necessity || j.kind == Justification::Kind::Monotonicity) {
          if (auto bad = arity(1)) return *bad;
        }
        const Rule* r = calc.rule(id);
        std::optional<Rule> general;
        if (!r) {
          general = generalized_rule(calc, id);
          r = general ? &*general : nullptr;
        }
        if (!r) {
          if (j.kind == Justification::Kind::RuleApp) throw Error(Errc::UnknownSchema, "no rule " + id + " in " + calc.name);
          problem = "rule " + id + " is not part of " + calc.name;
          break;
        }
        problem = check_rule(calc, *r, s.formula, cited);
        break;
      }
    }
    if (problem) return fail(s.number, *problem);
    position[s.number] = idx;
  }
  return CheckResult{};
}

std::vector<AxiomProbe> axiom_soundness(const Calculus& calc, const SearchBudget& budget) {
  if (!calc.intendedClass) throw Error(Errc::PrerequisiteFails, calc.name + " has no intended frame class");
  const ResiduatedLattice& A = *calc.algebra;
  static const char* const kFresh[] = {"p", "q", "r", "s", "t", "u", "v"};
  std::vector<AxiomProbe> out;
  for (const auto& ax : calc.axioms) {
    for (const auto& sc : ax.alternatives) {
      Substitution formulas;
      std::size_t next = 0;
      for (const auto& m : metavariables(sc.pattern)) formulas[m] = Formula::var(kFresh[next++]);
      const auto metaConsts = meta_constants(sc.pattern);
      std::vector<std::string> names(metaConsts.begin(), metaConsts.end());
      std::vector<std::vector<Elem>> ranges;
      for (const auto& n : names) {
        auto cond = sc.conditions.find(n);
        ranges.push_back(admissible_elements(A, cond == sc.conditions.end() ? ElementCondition::Any : cond->second));
      }
      std::vector<std::size_t> pos(names.size(), 0);
      while (true) {
        std::map<std::string, std::string> elements;
        for (std::size_t i = 0; i < names.size(); ++i) elements[names[i]] = A.label(ranges[i][pos[i]]);
        Formula inst = instantiate(sc.pattern, formulas, elements);
        // Bottom and top constants print as 0 and 1.
        inst = rewrite(inst, [&](const Formula& g) {
          if (g.op() != Op::Const) return g;
          auto e = A.find(g.name());
          return e ? element_formula(A, *e) : g;
        });
        out.push_back(AxiomProbe{ax.id, inst, validity_search(calc.algebra, *calc.intendedClass, inst, budget)});
        std::size_t i = names.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++pos[i] < ranges[i].size()) {
            done = false;
            break;
          }
          pos[i] = 0;
        }
        if (done) break;
      }
    }
  }
  return out;
}

SoundnessReport soundness_probe(const Calculus& calc, FrameClass c, const std::vector<Derivation>& ds,
                                const SearchBudget& budget) {
  if (!calc.oracle) throw Error(Errc::PrerequisiteFails, calc.name + " is syntax only");
  SoundnessReport report;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto check = check_derivation(calc, ds[i]);
    if (!check.ok) {
      throw Error(Errc::InvalidStep, "derivation " + std::to_string(i) + " step " + std::to_string(*check.step) +
                                         ": " + check.reason);
    }
    const bool assumptions = std::any_of(ds[i].steps.begin(), ds[i].steps.end(), [](const Step& s) {
      return s.justification.kind == Justification::Kind::Assumption;
    });
    if (assumptions) continue;
    for (const Step& s : ds[i].steps) {
      ++report.theoremsChecked;
      Verdict v = validity_search(calc.algebra, c, s.formula, budget);
      if (v.refuted()) report.violations.push_back(SoundnessViolation{i, s.number, std::move(v)});
    }
  }
  return report;
}

OrdPresResult ordpres_check(const AlgebraPtr& a, FrameClass c, const std::vector<Formula>& gamma,
                            const Formula& phi, const SearchBudget& budget) {
  const Formula r = Formula::var("$r");
  std::vector<Formula> guarded;
  for (const Formula& g : gamma) guarded.push_back(Formula::implies(r, g));
  OrdPresResult out;
  auto premise = nonmodal_consequence(*a, guarded, Formula::implies(r, phi), false);
  out.premiseHolds = premise.holds;
  out.premiseCounterexample = premise.counterexample;
  if (!premise.holds) return out;
  std::vector<Formula> boxed;
  for (const Formula& g : gamma) boxed.push_back(Formula::box(g));
  out.verdict = local_consequence_refute(a, c, boxed, Formula::box(phi), budget);
  return out;
}

namespace {

enum class Tau { Square, Double };

// Splits a term in p into the squarings applied to p, innermost first.
std::optional<std::vector<Tau>> tau_word(const Formula& t) {
  if (t.op() == Op::Var && t.name() == "p") return std::vector<Tau>{};
  if (t.op() == Op::Fusion && t.lhs() == t.rhs()) {
    auto w = tau_word(t.lhs());
    if (w) w->push_back(Tau::Square);
    return w;
  }
  if (t.op() == Op::Implies && t.rhs().op() == Op::Zero && t.lhs().op() == Op::Fusion) {
    const Formula& l = t.lhs().lhs();
    const Formula& r = t.lhs().rhs();
    if (l == r && l.op() == Op::Implies && l.rhs().op() == Op::Zero) {
      auto w = tau_word(l.lhs());
      if (w) w->push_back(Tau::Double);
      return w;
    }
  }
  return std::nullopt;
}

Formula apply(Tau t, const Formula& f) { return t == Tau::Square ? Formula::fusion(f, f) : Formula::oplus(f, f); }

}  // namespace

Derivation eta_commutation_derivation(const AlgebraPtr& chain, const std::string& algebraRef, const Formula& phi) {
  const ResiduatedLattice& A = *chain;
  require_mv_chain(A, "eta commutation");
  Derivation d;
  d.calculus = "table1md(" + algebraRef + ")";
  std::size_t n = 0;
  auto add = [&](Formula f, Justification::Kind k, std::string id = {}, std::vector<std::size_t> prem = {}) {
    d.steps.push_back(Step{++n, std::move(f), Justification{k, std::move(id), std::move(prem)}});
    return n;
  };
  using K = Justification::Kind;
  for (Elem a : A.elements()) {
    if (a == A.bottom()) continue;
    const auto word = tau_word(characterizing_formula(A, a));
    if (!word) throw Error(Errc::NotFound, "eta_" + A.label(a) + " is not a composition of squarings");
    Formula inner = phi;        // theta_{j-1}(phi)
    Formula outer = Formula::box(phi);  // theta_{j-1}([]phi)
    std::optional<std::size_t> prev;
    for (Tau t : *word) {
      const Formula boxedNext = Formula::box(apply(t, inner));
      const Formula ax = Formula::equiv(boxedNext, apply(t, Formula::box(inner)));
      const std::size_t axStep = add(ax, K::Axiom, t == Tau::Square ? "Tau1" : "Tau2");
      const Formula goal = Formula::equiv(boxedNext, apply(t, outer));
      if (!prev) {
        prev = axStep;
      } else {
        const Formula x = d.steps[*prev - 1].formula;
        const std::size_t taut =
            add(Formula::implies(x, Formula::implies(x, Formula::implies(ax, goal))), K::NonModalTautology);
        const std::size_t m1 = add(Formula::implies(x, Formula::implies(ax, goal)), K::ModusPonens, {}, {*prev, taut});
        const std::size_t m2 = add(Formula::implies(ax, goal), K::ModusPonens, {}, {*prev, m1});
        prev = add(goal, K::ModusPonens, {}, {axStep, m2});
      }
      inner = apply(t, inner);
      outer = apply(t, outer);
    }
    // Flip to eta_a([]phi) <-> [] eta_a(phi).
    const Formula g = d.steps[*prev - 1].formula;
    const Formula flipped = Formula::equiv(g.lhs().rhs(), g.lhs().lhs());
    const std::size_t taut = add(Formula::implies(g, flipped), K::NonModalTautology);
    add(flipped, K::ModusPonens, {}, {*prev, taut});
  }
  return d;
}

}  // namespace mvml
