#pragma once

// Brute-force reference implementations, kept independent of the library's
// evaluator and search engine.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvml/kripke.hpp"

namespace mvml::oracle {

// Direct recursive evaluation; meets and joins over successors are folded
// from the lattice order rather than taken from the library's tables.
inline Elem meet_by_order(const ResiduatedLattice& a, Elem x, Elem y) {
  Elem best = a.bottom();
  for (Elem z : a.elements()) {
    if (a.leq(z, x) && a.leq(z, y) && a.leq(best, z)) best = z;
  }
  return best;
}

inline Elem join_by_order(const ResiduatedLattice& a, Elem x, Elem y) {
  Elem best = a.top();
  for (Elem z : a.elements()) {
    if (a.leq(x, z) && a.leq(y, z) && a.leq(z, best)) best = z;
  }
  return best;
}

// Residuum as the greatest z with x * z <= y.
inline Elem residuum_by_search(const ResiduatedLattice& a, Elem x, Elem y) {
  Elem best = a.bottom();
  for (Elem z : a.elements()) {
    if (a.leq(a.fuse(x, z), y) && a.leq(best, z)) best = z;
  }
  return best;
}

inline Elem eval(const ResiduatedLattice& a, const KripkeFrame& fr,
                 const std::map<std::string, std::vector<Elem>>& val, const Formula& f, std::size_t w) {
  auto rec = [&](const Formula& g, std::size_t v) { return eval(a, fr, val, g, v); };
  switch (f.op()) {
    case Op::Var: {
      auto it = val.find(f.name());
      return it == val.end() ? a.top() : it->second[w];
    }
    case Op::Zero: return a.bottom();
    case Op::One: return a.top();
    case Op::Const: return *a.find(f.name());
    case Op::And: return meet_by_order(a, rec(f.lhs(), w), rec(f.rhs(), w));
    case Op::Or: return join_by_order(a, rec(f.lhs(), w), rec(f.rhs(), w));
    case Op::Fusion: return a.fuse(rec(f.lhs(), w), rec(f.rhs(), w));
    case Op::Implies: return residuum_by_search(a, rec(f.lhs(), w), rec(f.rhs(), w));
    case Op::Box: {
      Elem acc = a.top();
      for (std::size_t v = 0; v < fr.size(); ++v) {
        acc = meet_by_order(a, acc, residuum_by_search(a, fr.r(w, v), rec(f.lhs(), v)));
      }
      return acc;
    }
    case Op::Diamond: {
      Elem acc = a.bottom();
      for (std::size_t v = 0; v < fr.size(); ++v) acc = join_by_order(a, acc, a.fuse(fr.r(w, v), rec(f.lhs(), v)));
      return acc;
    }
    default: throw std::logic_error("metavariable in oracle evaluation");
  }
}

// Calls visit(frame, valuation) for every model with exactly n worlds over
// the given R values and every valuation of vars, in canonical order (R
// cells row-major, then valuation slots var * n + w; the last position
// changes fastest); stops when visit returns false.
inline bool for_each_model(const ResiduatedLattice& a, std::size_t n, const std::vector<Elem>& rValues,
                           const std::vector<std::string>& vars,
                           const std::function<bool(const KripkeFrame&, const std::map<std::string, std::vector<Elem>>&)>& visit) {
  KripkeFrame fr = make_frame(n, a.bottom());
  const std::size_t cells = n * n;
  std::vector<std::size_t> ri(cells, 0);
  const auto universe = a.elements();
  while (true) {
    for (std::size_t c = 0; c < cells; ++c) fr.R[c] = rValues[ri[c]];
    const std::size_t slots = vars.size() * n;
    std::vector<std::size_t> vi(slots, 0);
    while (true) {
      std::map<std::string, std::vector<Elem>> val;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        auto& column = val[vars[k]];
        for (std::size_t w = 0; w < n; ++w) column.push_back(universe[vi[k * n + w]]);
      }
      if (!visit(fr, val)) return false;
      std::size_t s = slots;
      while (s > 0 && ++vi[s - 1] == universe.size()) vi[--s] = 0;
      if (s == 0) break;
    }
    std::size_t c = cells;
    while (c > 0 && ++ri[c - 1] == rValues.size()) ri[--c] = 0;
    if (c == 0) break;
  }
  return true;
}

// Whether phi is 1 at every world of every model up to maxWorlds.
inline bool valid_up_to(const ResiduatedLattice& a, FrameClass c, const Formula& phi, std::size_t maxWorlds) {
  const auto vars = variables(phi);
  const std::vector<std::string> vs(vars.begin(), vars.end());
  const auto rValues = class_values(a, c);
  for (std::size_t n = 1; n <= maxWorlds; ++n) {
    const bool ok = for_each_model(a, n, rValues, vs, [&](const KripkeFrame& fr, const auto& val) {
      for (std::size_t w = 0; w < n; ++w) {
        if (eval(a, fr, val, phi, w) != a.top()) return false;
      }
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

struct FirstCountermodel {
  KripkeFrame frame;
  std::map<std::string, std::vector<Elem>> valuation;
  std::size_t world = 0;
};

// First model in canonical order with a world where phi is not 1.
inline std::optional<FirstCountermodel> first_countermodel(const ResiduatedLattice& a, FrameClass c,
                                                           const Formula& phi, std::size_t maxWorlds) {
  const auto vars = variables(phi);
  const std::vector<std::string> vs(vars.begin(), vars.end());
  const auto rValues = class_values(a, c);
  std::optional<FirstCountermodel> found;
  for (std::size_t n = 1; n <= maxWorlds && !found; ++n) {
    for_each_model(a, n, rValues, vs, [&](const KripkeFrame& fr, const auto& val) {
      for (std::size_t w = 0; w < n; ++w) {
        if (eval(a, fr, val, phi, w) != a.top()) {
          found = FirstCountermodel{fr, val, w};
          return false;
        }
      }
      return true;
    });
  }
  return found;
}

}  // namespace mvml::oracle
