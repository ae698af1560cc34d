#include "mvml/characterizing.hpp"

#include <deque>
#include <map>
#include <set>

#include "mvml/error.hpp"

namespace mvml {

std::vector<UnaryTerm> unary_term_clone(const ResiduatedLattice& a) {
  std::vector<UnaryTerm> out;
  std::set<std::vector<Elem>> seen;
  auto add = [&](std::vector<Elem> table, Formula witness) {
    if (seen.insert(table).second) out.push_back(UnaryTerm{std::move(table), std::move(witness)});
  };
  add(a.elements(), Formula::var("p"));
  add(std::vector<Elem>(a.size(), a.bottom()), Formula::zero());
  add(std::vector<Elem>(a.size(), a.top()), Formula::one());
  // Pointwise closure; composition adds nothing new since a composite of
  // unary terms is itself built from p, 0 and 1 by the same operations.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const std::vector<Elem> f = out[i].table, g = out[j].table;
      const Formula tf = out[i].witness, tg = out[j].witness;
      std::vector<Elem> m(a.size()), jn(a.size()), fu(a.size()), fg(a.size()), gf(a.size());
      for (Elem x = 0; x < a.size(); ++x) {
        m[x] = a.meet(f[x], g[x]);
        jn[x] = a.join(f[x], g[x]);
        fu[x] = a.fuse(f[x], g[x]);
        fg[x] = a.imp(f[x], g[x]);
        gf[x] = a.imp(g[x], f[x]);
      }
      add(std::move(m), Formula::conj(tf, tg));
      add(std::move(jn), Formula::disj(tf, tg));
      add(std::move(fu), Formula::fusion(tf, tg));
      add(std::move(fg), Formula::implies(tf, tg));
      add(std::move(gf), Formula::implies(tg, tf));
    }
  }
  return out;
}

namespace {

std::vector<Elem> target_table(const ResiduatedLattice& c, Elem a) {
  std::vector<Elem> t;
  for (Elem x : c.elements()) t.push_back(c.leq(a, x) ? c.top() : c.bottom());
  return t;
}

// Breadth-first search over compositions of p*p and p+p. Returns the word
// (innermost first, 0 = p*p, 1 = p+p) or nothing.
std::optional<std::vector<int>> tau_word(const ResiduatedLattice& c, Elem a) {
  const auto target = target_table(c, a);
  std::deque<std::pair<std::vector<Elem>, std::vector<int>>> queue;
  std::set<std::vector<Elem>> seen;
  queue.emplace_back(c.elements(), std::vector<int>{});
  seen.insert(c.elements());
  if (queue.front().first == target) return std::vector<int>{};
  while (!queue.empty()) {
    auto [table, word] = queue.front();
    queue.pop_front();
    for (int tau : {0, 1}) {
      std::vector<Elem> next(table.size());
      for (std::size_t x = 0; x < table.size(); ++x) {
        next[x] = tau == 0 ? c.fuse(table[x], table[x]) : c.oplus(table[x], table[x]);
      }
      if (!seen.insert(next).second) continue;
      auto w = word;
      w.push_back(tau);
      if (next == target) return w;
      queue.emplace_back(std::move(next), std::move(w));
    }
  }
  return std::nullopt;
}

void require_mv_chain(const ResiduatedLattice& c) {
  if (!is_mv_chain(c)) throw Error(Errc::NotMVChain, c.name() + " is not a finite MV chain");
}

}  // namespace

Formula characterizing_formula(const ResiduatedLattice& c, Elem a) {
  require_mv_chain(c);
  if (a == c.bottom()) return Formula::one();
  if (auto word = tau_word(c, a)) {
    Formula f = Formula::var("p");
    for (int tau : *word) f = tau == 0 ? Formula::fusion(f, f) : Formula::oplus(f, f);
    return f;
  }
  const auto target = target_table(c, a);
  for (const auto& t : unary_term_clone(c)) {
    if (t.table == target) return t.witness;
  }
  throw Error(Errc::NotFound, "no characterizing term for " + c.label(a) + " in " + c.name());
}

bool characterizing_formula_is_composition(const ResiduatedLattice& c, Elem a) {
  require_mv_chain(c);
  return a == c.bottom() || tau_word(c, a).has_value();
}

}  // namespace mvml
