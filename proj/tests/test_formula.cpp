#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <string>

#include "mvml/algebra.hpp"
#include "mvml/characterizing.hpp"
#include "mvml/error.hpp"
#include "mvml/random.hpp"
#include "mvml/schema.hpp"
#include "mvml/syntax.hpp"
#include "mvml/terms.hpp"
#include "mvml/translate.hpp"

namespace mvml {
namespace {

Formula P(const std::string& s) { return parse(s); }

Errc error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::BadParam;
}

TEST(Formula, ParsesNormalityAxiom) {
  const Formula k = P("[] (p -> q) -> ([]p -> []q)");
  const Formula p = Formula::var("p"), q = Formula::var("q");
  EXPECT_EQ(k, Formula::implies(Formula::box(Formula::implies(p, q)),
                                Formula::implies(Formula::box(p), Formula::box(q))));
}

TEST(Formula, SugarExpandsToCoreConstructors) {
  EXPECT_EQ(P("~p"), Formula::implies(Formula::var("p"), Formula::zero()));
  const Formula p = Formula::var("p"), q = Formula::var("q");
  EXPECT_EQ(P("p <-> q"), Formula::fusion(Formula::implies(p, q), Formula::implies(q, p)));
  EXPECT_EQ(P("p + q"), Formula::neg(Formula::fusion(Formula::neg(p), Formula::neg(q))));
  EXPECT_EQ(P("p^3"), Formula::fusion(Formula::fusion(p, p), p));
  EXPECT_EQ(P("2.p"), Formula::oplus(p, p));
}

TEST(Formula, Precedence) {
  EXPECT_EQ(P("p * q + r"), P("(p * q) + r"));
  EXPECT_EQ(P("p + q /\\ r"), P("(p + q) /\\ r"));
  EXPECT_EQ(P("p /\\ q \\/ r"), P("(p /\\ q) \\/ r"));
  EXPECT_EQ(P("p \\/ q -> r"), P("(p \\/ q) -> r"));
  EXPECT_EQ(P("p -> q -> r"), P("p -> (q -> r)"));
  EXPECT_EQ(P("p -> q <-> r"), P("(p -> q) <-> r"));
  EXPECT_EQ(P("[]p * q"), P("([]p) * q"));
  EXPECT_EQ(P("~[]p"), P("~([]p)"));
}

TEST(Formula, SyntaxErrors) {
  EXPECT_EQ(error_of([] { P("(p"); }), Errc::SyntaxError);
  EXPECT_EQ(error_of([] { P("p ->"); }), Errc::SyntaxError);
  EXPECT_EQ(error_of([] { P("$r0"); }), Errc::SyntaxError);
  ParseOptions noConstants;
  noConstants.allowConstants = false;
  EXPECT_EQ(error_of([&] { parse("@0.5 -> p", noConstants); }), Errc::UnknownConstant);
}

TEST(Formula, RoundTripOnRandomCorpus) {
  std::mt19937_64 rng(1000);
  RandomFormulaOptions opts;
  opts.variables = {"p", "q", "r"};
  opts.constants = {"0.5", "(1,0)", "c"};
  opts.diamonds = true;
  opts.maxDepth = 5;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(rng, opts);
    const std::string text = render(f);
    EXPECT_EQ(parse(text), f) << text;
    EXPECT_EQ(render(parse(text)), text);
  }
}

TEST(Formula, ModalDepthAndDegrees) {
  const Formula f = P("[](p -> []q) -> ([]p -> []q)");
  EXPECT_EQ(modal_depth(f), 2u);
  EXPECT_EQ(box_degrees(f), (std::vector<std::size_t>{1, 0, 0, 0}));
  EXPECT_EQ(modal_depth(P("p /\\ q")), 0u);
  EXPECT_EQ(modal_depth(P("[][][]p")), 3u);
  EXPECT_EQ(box_degrees(P("[][][]p")), (std::vector<std::size_t>{2, 1, 0}));
}

TEST(Formula, Substitution) {
  EXPECT_EQ(substitute(P("p -> q"), {{"p", P("[]q")}, {"q", P("p")}}), P("[]q -> p"));
}

TEST(Formula, SchemaMatching) {
  const auto l3 = lukasiewicz(3);
  const Schema k{parse_schema("[](Phi -> Psi) -> ([]Phi -> []Psi)"), {}};
  const auto m = match_schema(P("[](r -> r) -> ([]r -> []r)"), k, l3);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->formulas.at("Phi"), P("r"));
  EXPECT_EQ(m->formulas.at("Psi"), P("r"));
  EXPECT_FALSE(match_schema(P("[]p -> []p"), k, l3));

  const Schema ax{parse_schema("[](@?a -> Phi) <-> (@?a -> []Phi)"), {}};
  const auto ma = match_schema(P("[](@0.5 -> p) <-> (@0.5 -> []p)"), ax, l3);
  ASSERT_TRUE(ma);
  EXPECT_EQ(ma->elements.at("a"), "0.5");
  EXPECT_EQ(ma->formulas.at("Phi"), P("p"));

  const Schema coatom{parse_schema("[](@?k \\/ Phi) -> (@?k \\/ []Phi)"), {{"k", ElementCondition::Coatom}}};
  EXPECT_TRUE(match_schema(P("[](@0.5 \\/ p) -> (@0.5 \\/ []p)"), coatom, godel(3)));
  EXPECT_FALSE(match_schema(P("[](0 \\/ p) -> (0 \\/ []p)"), coatom, godel(3)));
}

TEST(Formula, MatchingInstantiatedSchemasSucceeds) {
  std::mt19937_64 rng(77);
  RandomFormulaOptions schemaOpts;
  schemaOpts.variables = {"p", "q"};
  schemaOpts.maxDepth = 3;
  RandomFormulaOptions argOpts;
  argOpts.maxDepth = 3;
  const auto l3 = lukasiewicz(3);
  for (int i = 0; i < 300; ++i) {
    // Turn the variables of a random formula into metavariables.
    const Formula shape = random_formula(rng, schemaOpts);
    const Formula pattern = substitute(shape, {{"p", Formula::meta("Phi")}, {"q", Formula::meta("Psi")}});
    const Substitution sigma{{"Phi", random_formula(rng, argOpts)}, {"Psi", random_formula(rng, argOpts)}};
    const Formula instance = instantiate(pattern, sigma);
    const auto m = match_schema(instance, Schema{pattern, {}}, l3);
    ASSERT_TRUE(m) << render(pattern) << " vs " << render(instance);
    EXPECT_EQ(instantiate(pattern, m->formulas), instance);
  }
}

TEST(Formula, Companion) {
  EXPECT_EQ(companion(P("[](p -> []q) -> ([]p -> []q)")),
            parse("($r1 -> (p -> ($r0 -> q))) -> (($r0 -> p) -> ($r0 -> q))", ParseOptions{true, false, true}));
  EXPECT_EQ(companion(P("p -> p")), P("p -> p"));
  EXPECT_EQ(companion(P("[][]p")), parse("$r1 -> ($r0 -> p)", ParseOptions{true, false, true}));
  EXPECT_EQ(error_of([] { companion(P("<>p")); }), Errc::DiamondUnsupported);
}

TEST(Formula, CompanionIsNonModal) {
  std::mt19937_64 rng(5);
  RandomFormulaOptions opts;
  opts.maxDepth = 5;
  for (int i = 0; i < 500; ++i) EXPECT_EQ(modal_depth(companion(random_formula(rng, opts))), 0u);
}

TEST(Formula, StandardTranslation) {
  EXPECT_EQ(standard_translation(P("[]p")), "∀y(Rxy → Py)");
  EXPECT_EQ(standard_translation(P("<>p")), "∃y(Rxy ⊙ Py)");
  EXPECT_EQ(standard_translation(P("p")), "Px");
}

TEST(Formula, UnaryClone) {
  // Every map 2 -> 2 is a term function of boolean2, so the clone has 4 members.
  EXPECT_EQ(unary_term_clone(boolean2()).size(), 4u);
  const auto l3 = lukasiewicz(3);
  bool hasSquare = false;
  for (const auto& t : unary_term_clone(l3)) {
    hasSquare = hasSquare || t.table == term_function(l3, P("p * p"), {"p"});
    EXPECT_EQ(term_function(l3, t.witness, {"p"}), t.table);
  }
  EXPECT_TRUE(hasSquare);
  EXPECT_EQ(unary_term_clone(l3).front().witness, P("p"));
}

TEST(Formula, CharacterizingFormulas) {
  const auto l3 = lukasiewicz(3);
  EXPECT_EQ(characterizing_formula(l3, *l3.find("0.5")), P("p + p"));
  EXPECT_EQ(characterizing_formula(l3, *l3.find("1")), P("p * p"));
  EXPECT_EQ(characterizing_formula(l3, l3.bottom()), Formula::one());
  const auto l5 = lukasiewicz(5);
  const auto t = term_function(l5, characterizing_formula(l5, *l5.find("0.75")), {"p"});
  std::vector<std::string> labels;
  for (Elem e : t) labels.push_back(l5.label(e));
  EXPECT_EQ(labels, (std::vector<std::string>{"0", "0", "0", "1", "1"}));
  EXPECT_EQ(error_of([] { characterizing_formula(godel(3), 1); }), Errc::NotMVChain);
}

TEST(Formula, CharacterizingFormulasAreCharacteristicFunctions) {
  for (int n = 2; n <= 7; ++n) {
    const auto a = lukasiewicz(n);
    for (Elem x : a.elements()) {
      if (x == a.bottom()) continue;
      const Formula eta = characterizing_formula(a, x);
      EXPECT_TRUE(characterizing_formula_is_composition(a, x)) << n << " " << a.label(x);
      EXPECT_TRUE(term_properties(a, eta, {"p"}).nondecreasing[0]);
      for (Elem y : a.elements()) {
        const Elem v = eval_term(a, eta, {{"p", y}});
        EXPECT_EQ(v == a.top(), a.leq(x, y));
        EXPECT_TRUE(v == a.top() || v == a.bottom());
      }
    }
  }
}

}  // namespace
}  // namespace mvml
