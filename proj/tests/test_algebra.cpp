#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "mvml/algebra.hpp"
#include "mvml/algebra_io.hpp"
#include "mvml/error.hpp"
#include "mvml/terms.hpp"
#include "mvml/syntax.hpp"
#include "oracles.hpp"

namespace mvml {
namespace {

std::string data(const std::string& rel) { return std::string(MVML_DATA_DIR) + "/" + rel; }

Elem el(const ResiduatedLattice& a, const std::string& label) {
  const auto e = a.find(label);
  EXPECT_TRUE(e.has_value()) << label;
  return e.value_or(0);
}

std::vector<std::string> labels_of(const ResiduatedLattice& a, const std::vector<Elem>& es) {
  std::vector<std::string> out;
  for (Elem e : es) out.push_back(a.label(e));
  return out;
}

const std::vector<std::string>& corpus() {
  static const std::vector<std::string> specs{
      "boolean2",         "lukasiewicz(3)", "lukasiewicz(4)", "lukasiewicz(5)",
      "godel(2)",         "godel(3)",       "godel(5)",       "wnm5",
      "mtl6",             "product(boolean2,lukasiewicz(3))", "product(boolean2,boolean2)",
      "product(lukasiewicz(3),lukasiewicz(2))", "ordinal_sum(lukasiewicz(3),godel(3))",
      "ordinal_sum(lukasiewicz(3),lukasiewicz(3))"};
  return specs;
}

std::vector<AlgebraPtr> all_algebras() {
  std::vector<AlgebraPtr> out;
  for (const auto& s : corpus()) out.push_back(resolve_algebra(s));
  out.push_back(resolve_algebra(data("algebras/heyting5.alg")));
  return out;
}

TEST(Algebra, ResiduationAdjunctionOnEveryConstructedAlgebra) {
  for (const auto& a : all_algebras()) {
    for (Elem x : a->elements())
      for (Elem y : a->elements())
        for (Elem z : a->elements()) {
          ASSERT_EQ(a->leq(a->fuse(x, y), z), a->leq(y, a->imp(x, z))) << a->name();
        }
  }
}

TEST(Algebra, ResiduumIsGreatestSolution) {
  for (const auto& a : all_algebras()) {
    for (Elem x : a->elements())
      for (Elem z : a->elements()) ASSERT_EQ(a->imp(x, z), oracle::residuum_by_search(*a, x, z)) << a->name();
  }
}

TEST(Algebra, LatticeOperationsMatchOrder) {
  for (const auto& a : all_algebras()) {
    for (Elem x : a->elements())
      for (Elem y : a->elements()) {
        ASSERT_EQ(a->meet(x, y), oracle::meet_by_order(*a, x, y));
        ASSERT_EQ(a->join(x, y), oracle::join_by_order(*a, x, y));
        ASSERT_EQ(a->fuse(x, y), a->fuse(y, x));
        ASSERT_EQ(a->fuse(x, a->top()), x);
        for (Elem z : a->elements()) ASSERT_EQ(a->fuse(x, a->fuse(y, z)), a->fuse(a->fuse(x, y), z));
      }
  }
}

TEST(Algebra, DistributionLawsHoldEverywhere) {
  for (const auto& a : all_algebras()) {
    for (Elem x : a->elements())
      for (Elem y : a->elements())
        for (Elem z : a->elements()) {
          ASSERT_EQ(a->imp(x, a->meet(y, z)), a->meet(a->imp(x, y), a->imp(x, z)));
          ASSERT_EQ(a->imp(a->join(x, y), z), a->meet(a->imp(x, z), a->imp(y, z)));
        }
  }
}

TEST(Algebra, LukasiewiczThreeTables) {
  const auto a = lukasiewicz(3);
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"0", "0.5", "1"}));
  EXPECT_EQ(a.label(a.fuse(el(a, "0.5"), el(a, "0.5"))), "0");
  EXPECT_EQ(a.label(a.imp(el(a, "0.5"), el(a, "0"))), "0.5");
  const auto r = classify(a);
  EXPECT_EQ(labels_of(a, r.idempotents), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(labels_of(a, r.booleans), (std::vector<std::string>{"0", "1"}));
  ASSERT_TRUE(r.unique_coatom());
  EXPECT_EQ(a.label(*r.unique_coatom()), "0.5");
  EXPECT_TRUE(r.isMV);
  EXPECT_FALSE(r.isHeyting);
}

TEST(Algebra, ExplicitTablesForLukasiewiczThree) {
  const auto a = build_lattice("L3", {"0", "0.5", "1"}, {{true, true, true}, {false, true, true}, {false, false, true}},
                               {{"0", "0", "0"}, {"0", "0", "0.5"}, {"0", "0.5", "1"}});
  EXPECT_TRUE(find_isomorphism(a, lukasiewicz(3)).has_value());
}

TEST(Algebra, NonCommutativeFusionIsRejected) {
  try {
    build_lattice("bad", {"0", "0.5", "1"}, {{true, true, true}, {false, true, true}, {false, false, true}},
                  {{"0", "0", "0"}, {"0.5", "0.5", "0.5"}, {"1", "1", "1"}});
    FAIL() << "expected NotAMonoid";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAMonoid);
  }
}

TEST(Algebra, MissingJoinIsRejected) {
  // Two maximal elements: no top.
  try {
    build_lattice("bad", {"0", "a", "b"}, {{true, true, true}, {false, true, false}, {false, false, true}},
                  {{"0", "0", "0"}, {"0", "a", "0"}, {"0", "0", "b"}});
    FAIL() << "expected NotALattice";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotALattice);
  }
}

TEST(Algebra, HeytingFiveFromFile) {
  const auto a = resolve_algebra(data("algebras/heyting5.alg"));
  EXPECT_EQ(a->label(a->imp(el(*a, "a"), el(*a, "b"))), "b");
  EXPECT_EQ(a->label(a->imp(el(*a, "b"), el(*a, "a"))), "a");
  const auto laws = check_laws(*a);
  const auto meetImp = std::find_if(laws.begin(), laws.end(), [](const LawCheck& l) { return l.law == "meet-imp"; });
  ASSERT_NE(meetImp, laws.end());
  EXPECT_FALSE(meetImp->holds);
  EXPECT_EQ(labels_of(*a, {meetImp->witness[0], meetImp->witness[1], meetImp->witness[2]}),
            (std::vector<std::string>{"a", "b", "0"}));
  EXPECT_TRUE(classify(*a).isHeyting);
  EXPECT_FALSE(classify(*a).isMTL);
}

TEST(Algebra, LukasiewiczThreeSatisfiesAllLaws) {
  for (const auto& law : check_laws(lukasiewicz(3))) EXPECT_TRUE(law.holds) << law.law;
}

TEST(Algebra, LawTwoPointTwoAlwaysHolds) {
  for (const auto& a : all_algebras()) {
    for (const auto& law : check_laws(*a)) {
      if (law.law == "fusion-join") { EXPECT_TRUE(law.holds) << a->name(); }
    }
  }
}

TEST(Algebra, MtlFlagAgreesWithLawsAndPrelinearity) {
  for (const auto& a : all_algebras()) {
    bool laws = true;
    for (const auto& law : check_laws(*a)) {
      if (law.law == "imp-join" || law.law == "meet-imp") laws = laws && law.holds;
    }
    bool prelin = true;
    for (Elem x : a->elements())
      for (Elem y : a->elements()) prelin = prelin && a->join(a->imp(x, y), a->imp(y, x)) == a->top();
    EXPECT_EQ(classify(*a).isMTL, laws) << a->name();
    EXPECT_EQ(prelinear(*a), prelin) << a->name();
    EXPECT_EQ(laws, prelin) << a->name();
  }
}

TEST(Algebra, ClassificationMatchesDefinitions) {
  for (const auto& a : all_algebras()) {
    const auto r = classify(*a);
    for (Elem x : a->elements()) {
      EXPECT_EQ(r.is_idempotent(x), a->fuse(x, x) == x);
      EXPECT_EQ(r.is_boolean(x), a->join(x, a->neg(x)) == a->top());
      bool distributive = true;
      for (Elem y : a->elements())
        for (Elem z : a->elements())
          distributive = distributive && a->meet(a->join(x, y), a->join(x, z)) == a->join(x, a->meet(y, z));
      EXPECT_EQ(r.is_distributive(x), distributive) << a->name() << " " << a->label(x);
    }
    bool heyting = true, involutive = true, chain = true;
    for (Elem x : a->elements()) {
      heyting = heyting && a->fuse(x, x) == x;
      involutive = involutive && a->neg(a->neg(x)) == x;
      for (Elem y : a->elements()) chain = chain && (a->leq(x, y) || a->leq(y, x));
    }
    EXPECT_EQ(r.isHeyting, heyting) << a->name();
    EXPECT_EQ(r.isInvolutive, involutive) << a->name();
    EXPECT_EQ(r.isChain, chain) << a->name();
    if (r.isChain) { EXPECT_EQ(r.distributives.size(), a->size()) << a->name(); }
  }
}

TEST(Algebra, JoinOfIdempotentsIsIdempotent) {
  for (const auto& a : all_algebras()) {
    const auto r = classify(*a);
    for (Elem x : r.idempotents)
      for (Elem y : r.idempotents) EXPECT_TRUE(r.is_idempotent(a->join(x, y))) << a->name();
  }
}

TEST(Algebra, MtlSixTables) {
  const auto a = mtl6();
  EXPECT_EQ(a.label(a.imp(el(a, "c"), el(a, "a"))), "b");
  EXPECT_EQ(a.label(a.fuse(el(a, "b"), el(a, "b"))), "a");
  EXPECT_EQ(a.label(a.fuse(el(a, "c"), el(a, "c"))), "c");
  EXPECT_EQ(labels_of(a, classify(a).idempotents), (std::vector<std::string>{"0", "a", "c", "d", "1"}));
}

TEST(Algebra, WeakNilpotentMinimumFive) {
  const auto a = wnm5();
  EXPECT_EQ(a.label(a.fuse(el(a, "0.75"), el(a, "0.75"))), "0.75");
  EXPECT_EQ(a.label(a.neg(el(a, "0.5"))), "0.25");
  EXPECT_EQ(a.label(a.neg(a.neg(el(a, "0.5")))), "0.75");
  const auto r = classify(a);
  EXPECT_TRUE(r.is_idempotent(el(a, "0.75")));
  EXPECT_FALSE(r.isInvolutive);
}

TEST(Algebra, LukasiewiczTwoIsBoolean) {
  EXPECT_TRUE(find_isomorphism(lukasiewicz(2), boolean2()).has_value());
  EXPECT_THROW(lukasiewicz(1), Error);
  EXPECT_THROW(godel(1), Error);
}

TEST(Algebra, OrdinalSumGluesComponentTops) {
  const auto a = ordinal_sum(lukasiewicz(3), lukasiewicz(3));
  EXPECT_EQ(a.size(), 5u);
  const auto r = classify(a);
  EXPECT_TRUE(r.isChain);
  // The shared element separates the components and is idempotent.
  std::size_t middle = 0;
  for (Elem x : a.elements()) {
    if (x != a.bottom() && x != a.top() && r.is_idempotent(x)) ++middle;
  }
  EXPECT_EQ(middle, 1u);
}

TEST(Algebra, FiltersAndQuotients) {
  const auto g3 = godel(3);
  const Elem k[] = {el(g3, "0.5")};
  const auto q = quotient(g3, filter_generated(g3, k));
  EXPECT_TRUE(find_isomorphism(q.algebra, boolean2()).has_value());
  EXPECT_EQ(q.projection[k[0]], q.algebra.top());

  const auto l3 = lukasiewicz(3);
  const Elem half[] = {el(l3, "0.5")};
  const auto f = filter_generated(l3, half);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(quotient(l3, f).algebra.size(), 1u);

  for (const auto& a : all_algebras()) {
    const Elem top[] = {a->top()};
    EXPECT_TRUE(find_isomorphism(quotient(*a, filter_generated(*a, top)).algebra, *a).has_value());
    for (Elem x : a->elements()) {
      const Elem gen[] = {x};
      const Filter fx = filter_generated(*a, gen);
      const auto qx = quotient(*a, fx);
      EXPECT_EQ(qx.projection[x], qx.algebra.top());
      EXPECT_TRUE(is_homomorphism(*a, qx.algebra, qx.projection));
      for (Elem y : a->elements()) {
        if (fx.contains(y)) {
          for (Elem z : a->elements()) {
            if (a->leq(y, z)) { EXPECT_TRUE(fx.contains(z)); }
            if (fx.contains(z)) { EXPECT_TRUE(fx.contains(a->fuse(y, z))); }
          }
        }
      }
    }
  }
}

TEST(Algebra, BooleanDecomposition) {
  const auto p = product(boolean2(), lukasiewicz(3));
  const auto d = boolean_decomposition(p);
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_TRUE(d.verified);
  bool sawBoolean = false, sawL3 = false;
  for (const auto& f : d.factors) {
    sawBoolean = sawBoolean || find_isomorphism(f, boolean2()).has_value();
    sawL3 = sawL3 || find_isomorphism(f, lukasiewicz(3)).has_value();
  }
  EXPECT_TRUE(sawBoolean && sawL3);
  for (const auto& a : all_algebras()) {
    const auto da = boolean_decomposition(*a);
    EXPECT_TRUE(da.verified) << a->name();
    EXPECT_TRUE(is_homomorphism(*a, da.product, da.to_product));
    for (Elem x : a->elements()) EXPECT_EQ(da.from_product[da.to_product[x]], x);
    for (const auto& f : da.factors) EXPECT_EQ(classify(f).booleans.size(), 2u) << a->name();
  }
  EXPECT_EQ(boolean_decomposition(lukasiewicz(3)).factors.size(), 1u);
  EXPECT_EQ(boolean_decomposition(godel(3)).factors.size(), 1u);
}

TEST(Algebra, TermProperties) {
  const auto a = lukasiewicz(3);
  const auto table = term_function(a, parse("p + p"), {"p"});
  EXPECT_EQ(labels_of(a, table), (std::vector<std::string>{"0", "1", "1"}));
  const auto props = term_properties(a, parse("p + p"), {"p"});
  EXPECT_TRUE(props.nondecreasing[0]);
  EXPECT_TRUE(props.expanding);
  EXPECT_TRUE(term_properties(a, parse("p"), {"p"}).expanding);
  EXPECT_FALSE(term_properties(a, parse("~p"), {"p"}).nondecreasing[0]);
}

TEST(Algebra, TextFormatRoundTrip) {
  for (const auto& a : all_algebras()) {
    const auto back = parse_algebra_text(render_algebra_text(*a));
    EXPECT_EQ(back.labels(), a->labels());
    for (Elem x : a->elements())
      for (Elem y : a->elements()) {
        EXPECT_EQ(back.fuse(x, y), a->fuse(x, y));
        EXPECT_EQ(back.leq(x, y), a->leq(x, y));
      }
  }
}

TEST(Algebra, SimplicityByFilters) {
  EXPECT_TRUE(classify(lukasiewicz(3)).isSimple);
  EXPECT_FALSE(classify(godel(3)).isSimple);
  EXPECT_FALSE(classify(product(boolean2(), boolean2())).isSimple);
}

}  // namespace
}  // namespace mvml
