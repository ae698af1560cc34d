#include "mvml/random.hpp"

namespace mvml {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, const RandomFormulaOptions& opts) {
  const std::size_t leaves = opts.variables.size() + opts.constants.size() + 2;
  if (opts.maxDepth == 0 || pick(rng, 4) == 0) {
    const std::size_t i = pick(rng, leaves);
    if (i < opts.variables.size()) return Formula::var(opts.variables[i]);
    if (i < opts.variables.size() + opts.constants.size()) {
      return Formula::constant(opts.constants[i - opts.variables.size()]);
    }
    return i + 1 == leaves ? Formula::one() : Formula::zero();
  }
  RandomFormulaOptions sub = opts;
  sub.maxDepth = opts.maxDepth - 1;
  const std::size_t kinds = 4 + (opts.boxes ? 1 : 0) + (opts.diamonds ? 1 : 0);
  const std::size_t k = pick(rng, kinds);
  if (k == 4 && opts.boxes) return Formula::box(random_formula(rng, sub));
  if (k >= 4) return Formula::diamond(random_formula(rng, sub));
  Formula a = random_formula(rng, sub);
  Formula b = random_formula(rng, sub);
  switch (k) {
    case 0: return Formula::conj(a, b);
    case 1: return Formula::disj(a, b);
    case 2: return Formula::fusion(a, b);
    default: return Formula::implies(a, b);
  }
}

KripkeModel random_model(std::mt19937_64& rng, const AlgebraPtr& a, std::size_t worlds, FrameClass c,
                         const std::vector<std::string>& variables) {
  KripkeModel m = make_model(a, worlds);
  const auto values = class_values(*a, c);
  for (Elem& r : m.frame.R) r = values[pick(rng, values.size())];
  for (const auto& v : variables) {
    auto& column = m.valuation[v];
    column.resize(worlds);
    for (Elem& e : column) e = static_cast<Elem>(pick(rng, a->size()));
  }
  return m;
}

}  // namespace mvml
