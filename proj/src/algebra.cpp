#include "mvml/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mvml/error.hpp"

namespace mvml {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotAMonoid: return "NotAMonoid";
    case Errc::ResiduationFails: return "ResiduationFails";
    case Errc::BadParam: return "BadParam";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownConstant: return "UnknownConstant";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::DiamondUnsupported: return "DiamondUnsupported";
    case Errc::NotMVChain: return "NotMVChain";
    case Errc::NotFound: return "NotFound";
    case Errc::NotBooleanFrame: return "NotBooleanFrame";
    case Errc::NoUniqueCoatom: return "NoUniqueCoatom";
    case Errc::NonModalExpected: return "NonModalExpected";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::PremiseFails: return "PremiseFails";
    case Errc::PropertyFails: return "PropertyFails";
    case Errc::PrerequisiteFails: return "PrerequisiteFails";
    case Errc::InvalidStep: return "InvalidStep";
    case Errc::UnknownSchema: return "UnknownSchema";
    case Errc::ConstantsDisabled: return "ConstantsDisabled";
    case Errc::FileError: return "FileError";
  }
  return "Error";
}

std::optional<Elem> ResiduatedLattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

std::vector<Elem> ResiduatedLattice::elements() const {
  std::vector<Elem> out(size());
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

std::string triple(const std::vector<std::string>& labels, Elem a, Elem b, Elem c) {
  return "(" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")";
}

}  // namespace

ResiduatedLattice build_lattice_indexed(std::string name, std::vector<std::string> labels,
                                        std::vector<std::uint8_t> leq, std::vector<Elem> fusion) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(Errc::BadParam, "empty universe");
  if (n > 4096) throw Error(Errc::BadParam, "universe too large");
  if (leq.size() != n * n || fusion.size() != n * n) {
    throw Error(Errc::BadParam, "table size does not match universe size");
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw Error(Errc::BadParam, "empty label");
      if (!seen.insert(l).second) throw Error(Errc::BadParam, "duplicate label " + l);
    }
  }
  for (Elem v : fusion) {
    if (v >= n) throw Error(Errc::BadParam, "fusion entry out of range");
  }
  auto at = [n](Elem a, Elem b) { return static_cast<std::size_t>(a) * n + b; };
  auto le = [&](Elem a, Elem b) { return leq[at(a, b)] != 0; };
  const Elem N = static_cast<Elem>(n);

  for (Elem a = 0; a < N; ++a) {
    if (!le(a, a)) throw Error(Errc::NotALattice, "order not reflexive at " + labels[a]);
    for (Elem b = 0; b < N; ++b) {
      if (a != b && le(a, b) && le(b, a)) {
        throw Error(Errc::NotALattice,
                    "order not antisymmetric at (" + labels[a] + ", " + labels[b] + ")");
      }
      for (Elem c = 0; c < N; ++c) {
        if (le(a, b) && le(b, c) && !le(a, c)) {
          throw Error(Errc::NotALattice, "order not transitive at " + triple(labels, a, b, c));
        }
      }
    }
  }

  ResiduatedLattice r;
  r.name_ = std::move(name);
  r.meet_.assign(n * n, 0);
  r.join_.assign(n * n, 0);
  for (Elem a = 0; a < N; ++a) {
    for (Elem b = 0; b < N; ++b) {
      std::optional<Elem> glb, lub;
      for (Elem c = 0; c < N; ++c) {
        if (le(c, a) && le(c, b)) {
          bool greatest = true;
          for (Elem d = 0; d < N && greatest; ++d) {
            if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
          }
          if (greatest) glb = c;
        }
        if (le(a, c) && le(b, c)) {
          bool least = true;
          for (Elem d = 0; d < N && least; ++d) {
            if (le(a, d) && le(b, d) && !le(c, d)) least = false;
          }
          if (least) lub = c;
        }
      }
      if (!glb || !lub) {
        throw Error(Errc::NotALattice,
                    "no " + std::string(!glb ? "meet" : "join") + " for (" + labels[a] + ", " +
                        labels[b] + ")");
      }
      r.meet_[at(a, b)] = *glb;
      r.join_[at(a, b)] = *lub;
    }
  }
  std::optional<Elem> bottom, top;
  for (Elem a = 0; a < N; ++a) {
    bool isBottom = true, isTop = true;
    for (Elem b = 0; b < N; ++b) {
      if (!le(a, b)) isBottom = false;
      if (!le(b, a)) isTop = false;
    }
    if (isBottom) bottom = a;
    if (isTop) top = a;
  }
  if (!bottom || !top) throw Error(Errc::NotALattice, "no bottom or top");

  auto f = [&](Elem a, Elem b) { return fusion[at(a, b)]; };
  for (Elem a = 0; a < N; ++a) {
    if (f(*top, a) != a) throw Error(Errc::NotAMonoid, "top is not a unit at " + labels[a]);
    for (Elem b = 0; b < N; ++b) {
      if (f(a, b) != f(b, a)) {
        throw Error(Errc::NotAMonoid,
                    "fusion not commutative at (" + labels[a] + ", " + labels[b] + ")");
      }
      for (Elem c = 0; c < N; ++c) {
        if (f(f(a, b), c) != f(a, f(b, c))) {
          throw Error(Errc::NotAMonoid, "fusion not associative at " + triple(labels, a, b, c));
        }
      }
    }
  }

  // a -> c is the join of {b : a*b <= c}; the adjunction check below rejects
  // tables where that join is not itself a solution.
  r.residuum_.assign(n * n, 0);
  for (Elem a = 0; a < N; ++a) {
    for (Elem c = 0; c < N; ++c) {
      Elem acc = *bottom;
      for (Elem b = 0; b < N; ++b) {
        if (le(f(a, b), c)) acc = r.join_[at(acc, b)];
      }
      r.residuum_[at(a, c)] = acc;
    }
  }
  for (Elem a = 0; a < N; ++a) {
    for (Elem b = 0; b < N; ++b) {
      for (Elem c = 0; c < N; ++c) {
        if (le(f(a, b), c) != le(b, r.residuum_[at(a, c)])) {
          throw Error(Errc::ResiduationFails, "adjunction fails at " + triple(labels, a, b, c));
        }
      }
    }
  }

  r.labels_ = std::move(labels);
  r.leq_ = std::move(leq);
  r.fusion_ = std::move(fusion);
  r.bottom_ = *bottom;
  r.top_ = *top;
  return r;
}

ResiduatedLattice build_lattice(std::string name, std::vector<std::string> labels,
                                const std::vector<std::vector<bool>>& leq,
                                const std::vector<std::vector<std::string>>& fusion) {
  const std::size_t n = labels.size();
  if (leq.size() != n || fusion.size() != n) {
    throw Error(Errc::BadParam, "matrices must have one row per label");
  }
  std::vector<std::uint8_t> leqFlat;
  std::vector<Elem> fusionFlat;
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n || fusion[i].size() != n) {
      throw Error(Errc::BadParam, "matrices must be square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      leqFlat.push_back(leq[i][j] ? 1 : 0);
      auto it = std::find(labels.begin(), labels.end(), fusion[i][j]);
      if (it == labels.end()) throw Error(Errc::BadParam, "unknown label in fusion: " + fusion[i][j]);
      fusionFlat.push_back(static_cast<Elem>(it - labels.begin()));
    }
  }
  return build_lattice_indexed(std::move(name), std::move(labels), std::move(leqFlat),
                               std::move(fusionFlat));
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

std::string rational_label(int m, int d) {
  int g = std::gcd(m, d);
  if (g == 0) return "0";
  int p = m / g, q = d / g;
  if (q == 1) return std::to_string(p);
  int rest = q;
  while (rest % 2 == 0) rest /= 2;
  while (rest % 5 == 0) rest /= 5;
  if (rest != 1) return std::to_string(p) + "/" + std::to_string(q);
  std::string out = std::to_string(p / q) + ".";
  int rem = p % q;
  while (rem != 0) {
    rem *= 10;
    out.push_back(static_cast<char>('0' + rem / q));
    rem %= q;
  }
  return out;
}

namespace {

ResiduatedLattice chain(std::string name, int n, Elem (*fuse)(int, int, int)) {
  std::vector<std::string> labels;
  for (int m = 0; m < n; ++m) labels.push_back(rational_label(m, n - 1));
  std::vector<std::uint8_t> leq;
  std::vector<Elem> fusion;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      leq.push_back(i <= j ? 1 : 0);
      fusion.push_back(fuse(i, j, n));
    }
  }
  return build_lattice_indexed(std::move(name), std::move(labels), std::move(leq), std::move(fusion));
}

std::vector<std::uint8_t> chain_order(std::size_t n) {
  std::vector<std::uint8_t> leq;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq.push_back(i <= j ? 1 : 0);
  }
  return leq;
}

}  // namespace

ResiduatedLattice lukasiewicz(int n) {
  if (n < 2) throw Error(Errc::BadParam, "lukasiewicz(n) needs n >= 2");
  return chain("lukasiewicz(" + std::to_string(n) + ")", n, [](int i, int j, int size) {
    return static_cast<Elem>(std::max(0, i + j - (size - 1)));
  });
}

ResiduatedLattice godel(int n) {
  if (n < 2) throw Error(Errc::BadParam, "godel(n) needs n >= 2");
  return chain("godel(" + std::to_string(n) + ")", n,
               [](int i, int j, int) { return static_cast<Elem>(std::min(i, j)); });
}

ResiduatedLattice boolean2() {
  return chain("boolean2", 2, [](int i, int j, int) { return static_cast<Elem>(std::min(i, j)); });
}

ResiduatedLattice wnm5() {
  // Weak nilpotent minimum: x*y = 0 if x <= n(y), else min(x, y).
  const std::vector<std::string> labels{"0", "0.25", "0.5", "0.75", "1"};
  const int n[5] = {4, 3, 1, 1, 0};
  std::vector<Elem> fusion;
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) fusion.push_back(static_cast<Elem>(x <= n[y] ? 0 : std::min(x, y)));
  }
  return build_lattice_indexed("wnm5", labels, chain_order(5), std::move(fusion));
}

ResiduatedLattice mtl6() {
  const std::vector<std::string> labels{"0", "a", "b", "c", "d", "1"};
  const std::vector<Elem> fusion{
      0, 0, 0, 0, 0, 0,  //
      0, 1, 1, 1, 1, 1,  //
      0, 1, 1, 1, 2, 2,  //
      0, 1, 1, 3, 3, 3,  //
      0, 1, 2, 3, 4, 4,  //
      0, 1, 2, 3, 4, 5,
  };
  return build_lattice_indexed("mtl6", labels, chain_order(6), fusion);
}

ResiduatedLattice direct_product(std::span<const ResiduatedLattice> factors, std::string name) {
  if (factors.empty()) throw Error(Errc::BadParam, "product of no factors");
  std::size_t total = 1;
  for (const auto& f : factors) {
    total *= f.size();
    if (total > 4096) throw Error(Errc::BadParam, "product too large");
  }
  if (name.empty()) {
    name = "product(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) name += ",";
      name += factors[i].name();
    }
    name += ")";
  }
  std::vector<std::vector<Elem>> coords(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    coords[idx].resize(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      coords[idx][k] = static_cast<Elem>(rest % factors[k].size());
      rest /= factors[k].size();
    }
  }
  auto encode = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) idx = idx * factors[k].size() + c[k];
    return static_cast<Elem>(idx);
  };
  std::vector<std::string> labels;
  for (const auto& c : coords) {
    std::string l = "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) l += ",";
      l += factors[k].label(c[k]);
    }
    labels.push_back(l + ")");
  }
  std::vector<std::uint8_t> leq;
  std::vector<Elem> fusion;
  std::vector<Elem> tmp(factors.size());
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      bool le = true;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        le = le && factors[k].leq(coords[i][k], coords[j][k]);
        tmp[k] = factors[k].fuse(coords[i][k], coords[j][k]);
      }
      leq.push_back(le ? 1 : 0);
      fusion.push_back(encode(tmp));
    }
  }
  return build_lattice_indexed(std::move(name), std::move(labels), std::move(leq), std::move(fusion));
}

ResiduatedLattice product(const ResiduatedLattice& a, const ResiduatedLattice& b) {
  const ResiduatedLattice pair[2] = {a, b};
  return direct_product(pair);
}

ResiduatedLattice ordinal_sum(const ResiduatedLattice& a, const ResiduatedLattice& b) {
  const std::size_t na = a.size();
  // B's bottom is glued onto A's top; the rest of B follows A.
  std::vector<Elem> fromB(b.size());
  std::vector<Elem> toB(na + b.size() - 1, b.bottom());
  std::size_t next = na;
  for (Elem x = 0; x < b.size(); ++x) {
    if (x == b.bottom()) {
      fromB[x] = a.top();
    } else {
      fromB[x] = static_cast<Elem>(next);
      toB[next] = x;
      ++next;
    }
  }
  const std::size_t n = next;
  std::vector<std::string> labels(a.labels());
  std::set<std::string> used(labels.begin(), labels.end());
  for (std::size_t i = na; i < n; ++i) {
    std::string l = b.label(toB[i]);
    while (used.count(l)) l += "'";
    used.insert(l);
    labels.push_back(l);
  }
  auto inA = [&](std::size_t x) { return x < na; };
  auto asB = [&](std::size_t x) { return x == a.top() ? b.bottom() : toB[x]; };
  std::vector<std::uint8_t> leq;
  std::vector<Elem> fusion;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool le;
      Elem f;
      if (inA(x) && inA(y)) {
        le = a.leq(static_cast<Elem>(x), static_cast<Elem>(y));
        f = a.fuse(static_cast<Elem>(x), static_cast<Elem>(y));
      } else if (!inA(x) && !inA(y)) {
        le = b.leq(asB(x), asB(y));
        f = fromB[b.fuse(asB(x), asB(y))];
      } else {
        le = inA(x);
        f = static_cast<Elem>(inA(x) ? x : y);
      }
      leq.push_back(le ? 1 : 0);
      fusion.push_back(f);
    }
  }
  return build_lattice_indexed("ordinal_sum(" + a.name() + "," + b.name() + ")", std::move(labels),
                               std::move(leq), std::move(fusion));
}

// ---------------------------------------------------------------------------
// Classification and laws
// ---------------------------------------------------------------------------

namespace {

bool contains(const std::vector<Elem>& v, Elem a) {
  return std::find(v.begin(), v.end(), a) != v.end();
}

}  // namespace

bool AlgebraReport::is_idempotent(Elem a) const { return contains(idempotents, a); }
bool AlgebraReport::is_boolean(Elem a) const { return contains(booleans, a); }
bool AlgebraReport::is_coatom(Elem a) const { return contains(coatoms, a); }
bool AlgebraReport::is_distributive(Elem a) const { return contains(distributives, a); }

std::optional<Elem> AlgebraReport::unique_coatom() const {
  if (coatoms.size() != 1) return std::nullopt;
  return coatoms.front();
}

bool prelinear(const ResiduatedLattice& A) {
  for (Elem x : A.elements()) {
    for (Elem y : A.elements()) {
      if (A.join(A.imp(x, y), A.imp(y, x)) != A.top()) return false;
    }
  }
  return true;
}

AlgebraReport classify(const ResiduatedLattice& A) {
  AlgebraReport r;
  const auto all = A.elements();
  const Elem top = A.top();
  for (Elem a : all) {
    if (A.fuse(a, a) == a) r.idempotents.push_back(a);
    if (A.join(a, A.neg(a)) == top) r.booleans.push_back(a);
    if (a != top) {
      bool covered = true;
      for (Elem b : all) {
        if (b != a && b != top && A.leq(a, b)) covered = false;
      }
      if (covered) r.coatoms.push_back(a);
    }
    bool distributive = true;
    for (Elem x : all) {
      for (Elem y : all) {
        if (A.join(a, A.meet(x, y)) != A.meet(A.join(a, x), A.join(a, y))) distributive = false;
      }
    }
    if (distributive) r.distributives.push_back(a);
  }
  r.isChain = true;
  r.topJoinIrreducible = true;
  r.isInvolutive = true;
  bool divisible = true;
  for (Elem x : all) {
    if (A.neg(A.neg(x)) != x) r.isInvolutive = false;
    for (Elem y : all) {
      if (!A.leq(x, y) && !A.leq(y, x)) r.isChain = false;
      if (A.join(x, y) == top && x != top && y != top) r.topJoinIrreducible = false;
      if (A.fuse(x, A.imp(x, y)) != A.meet(x, y)) divisible = false;
    }
  }
  r.isHeyting = r.idempotents.size() == all.size();
  r.isMTL = prelinear(A);
  r.isBL = r.isMTL && divisible;
  r.isMV = r.isBL && r.isInvolutive;
  r.isSimple = A.size() > 1;
  for (Elem a : all) {
    if (a == top || !r.isSimple) continue;
    const Elem gen[1] = {a};
    if (filter_generated(A, gen).size() != A.size()) r.isSimple = false;
  }
  return r;
}

bool is_mv_chain(const ResiduatedLattice& A) {
  const auto r = classify(A);
  return r.isMV && r.isChain;
}

std::vector<LawCheck> check_laws(const ResiduatedLattice& A) {
  std::vector<LawCheck> out{{"fusion-join"}, {"imp-meet"}, {"join-imp"}, {"imp-join"}, {"meet-imp"}};
  auto record = [](LawCheck& law, bool ok, Elem a, Elem b, Elem c) {
    if (!ok && law.holds) {
      law.holds = false;
      law.witness = {a, b, c};
    }
  };
  for (Elem a : A.elements()) {
    for (Elem b : A.elements()) {
      for (Elem c : A.elements()) {
        record(out[0], A.fuse(a, A.join(b, c)) == A.join(A.fuse(a, b), A.fuse(a, c)), a, b, c);
        record(out[1], A.imp(a, A.meet(b, c)) == A.meet(A.imp(a, b), A.imp(a, c)), a, b, c);
        record(out[2], A.imp(A.join(a, b), c) == A.meet(A.imp(a, c), A.imp(b, c)), a, b, c);
        record(out[3], A.imp(a, A.join(b, c)) == A.join(A.imp(a, b), A.imp(a, c)), a, b, c);
        record(out[4], A.imp(A.meet(a, b), c) == A.join(A.imp(a, c), A.imp(b, c)), a, b, c);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Filters and quotients
// ---------------------------------------------------------------------------

std::vector<Elem> Filter::elements() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) out.push_back(static_cast<Elem>(i));
  }
  return out;
}

std::size_t Filter::size() const { return static_cast<std::size_t>(std::count(member.begin(), member.end(), true)); }

Filter filter_generated(const ResiduatedLattice& A, std::span<const Elem> generators) {
  Filter f{std::vector<bool>(A.size(), false)};
  f.member[A.top()] = true;
  for (Elem g : generators) f.member[g] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x : A.elements()) {
      if (!f.member[x]) continue;
      for (Elem y : A.elements()) {
        const Elem candidates[2] = {f.member[y] ? A.fuse(x, y) : x, A.leq(x, y) ? y : x};
        for (Elem c : candidates) {
          if (!f.member[c]) {
            f.member[c] = true;
            changed = true;
          }
        }
      }
    }
  }
  return f;
}

Quotient quotient(const ResiduatedLattice& A, const Filter& F) {
  const std::size_t n = A.size();
  std::vector<int> cls(n, -1);
  std::vector<Elem> maxOf;
  for (Elem x : A.elements()) {
    if (cls[x] >= 0) continue;
    const int id = static_cast<int>(maxOf.size());
    Elem best = x;
    for (Elem y : A.elements()) {
      if (F.contains(A.equiv(x, y))) {
        cls[y] = id;
        if (A.leq(best, y)) best = y;
      }
    }
    maxOf.push_back(best);
  }
  const std::size_t m = maxOf.size();
  std::vector<std::string> labels;
  for (Elem r : maxOf) labels.push_back(A.label(r));
  std::vector<std::uint8_t> leq(m * m);
  std::vector<Elem> fusion(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      leq[i * m + j] = F.contains(A.imp(maxOf[i], maxOf[j])) ? 1 : 0;
      fusion[i * m + j] = static_cast<Elem>(cls[A.fuse(maxOf[i], maxOf[j])]);
    }
  }
  Quotient q{build_lattice_indexed(A.name() + "/F", std::move(labels), std::move(leq), std::move(fusion)),
             {}};
  for (Elem x : A.elements()) q.projection.push_back(static_cast<Elem>(cls[x]));
  return q;
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

bool is_homomorphism(const ResiduatedLattice& from, const ResiduatedLattice& to,
                     std::span<const Elem> map) {
  if (map.size() != from.size()) return false;
  for (Elem v : map) {
    if (v >= to.size()) return false;
  }
  if (map[from.bottom()] != to.bottom() || map[from.top()] != to.top()) return false;
  for (Elem x : from.elements()) {
    for (Elem y : from.elements()) {
      if (map[from.meet(x, y)] != to.meet(map[x], map[y])) return false;
      if (map[from.join(x, y)] != to.join(map[x], map[y])) return false;
      if (map[from.fuse(x, y)] != to.fuse(map[x], map[y])) return false;
      if (map[from.imp(x, y)] != to.imp(map[x], map[y])) return false;
    }
  }
  return true;
}

namespace {

// Backtracking search for an injective homomorphism; partial assignments are
// pruned by the order and fusion constraints among assigned elements.
bool extend_injection(const ResiduatedLattice& from, const ResiduatedLattice& to, bool onto,
                      std::vector<int>& map, std::vector<bool>& used, Elem next) {
  if (next == from.size()) {
    std::vector<Elem> m(map.begin(), map.end());
    return is_homomorphism(from, to, m);
  }
  for (Elem cand = 0; cand < to.size(); ++cand) {
    if (used[cand]) continue;
    map[next] = cand;
    bool ok = true;
    for (Elem x = 0; x <= next && ok; ++x) {
      const Elem mx = static_cast<Elem>(map[x]);
      if (from.leq(x, next) != to.leq(mx, cand) || from.leq(next, x) != to.leq(cand, mx)) ok = false;
      const Elem f = from.fuse(x, next);
      if (ok && map[f] >= 0 && static_cast<Elem>(map[f]) != to.fuse(mx, cand)) ok = false;
    }
    if (ok) {
      used[cand] = true;
      if (extend_injection(from, to, onto, map, used, static_cast<Elem>(next + 1))) return true;
      used[cand] = false;
    }
    map[next] = -1;
  }
  return false;
}

std::optional<std::vector<Elem>> injection(const ResiduatedLattice& from, const ResiduatedLattice& to,
                                           bool onto) {
  if (from.size() > to.size() || (onto && from.size() != to.size())) return std::nullopt;
  std::vector<int> map(from.size(), -1);
  std::vector<bool> used(to.size(), false);
  if (!extend_injection(from, to, onto, map, used, 0)) return std::nullopt;
  return std::vector<Elem>(map.begin(), map.end());
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const ResiduatedLattice& a,
                                                  const ResiduatedLattice& b) {
  return injection(a, b, true);
}

std::optional<std::vector<Elem>> find_embedding(const ResiduatedLattice& from,
                                                const ResiduatedLattice& to) {
  return injection(from, to, false);
}

// ---------------------------------------------------------------------------
// Boolean decomposition
// ---------------------------------------------------------------------------

namespace {

struct Part {
  ResiduatedLattice algebra;
  std::vector<Elem> projection;
};

std::vector<Part> decompose(const ResiduatedLattice& A) {
  const auto report = classify(A);
  std::optional<Elem> split;
  for (Elem b : report.booleans) {
    if (b != A.bottom() && b != A.top()) {
      split = b;
      break;
    }
  }
  if (!split) return {Part{A, A.elements()}};
  std::vector<Part> out;
  // A is isomorphic to A/up(~a) x A/up(a).
  const Elem gens[2] = {A.neg(*split), *split};
  for (Elem g : gens) {
    const Elem one[1] = {g};
    Quotient q = quotient(A, filter_generated(A, one));
    for (Part& p : decompose(q.algebra)) {
      std::vector<Elem> composed;
      for (Elem x : A.elements()) composed.push_back(p.projection[q.projection[x]]);
      out.push_back(Part{std::move(p.algebra), std::move(composed)});
    }
  }
  return out;
}

}  // namespace

Decomposition boolean_decomposition(const ResiduatedLattice& A) {
  Decomposition d;
  for (Part& p : decompose(A)) {
    d.factors.push_back(std::move(p.algebra));
    d.projections.push_back(std::move(p.projection));
  }
  d.product = direct_product(d.factors);
  const std::size_t n = d.product.size();
  d.from_product.assign(n, 0);
  std::vector<bool> hit(n, false);
  bool bijective = n == A.size();
  for (Elem x : A.elements()) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < d.factors.size(); ++k) {
      idx = idx * d.factors[k].size() + d.projections[k][x];
    }
    d.to_product.push_back(static_cast<Elem>(idx));
    if (idx >= n || hit[idx]) {
      bijective = false;
    } else {
      hit[idx] = true;
      d.from_product[idx] = x;
    }
  }
  d.verified = bijective && is_homomorphism(A, d.product, d.to_product) &&
               is_homomorphism(d.product, A, d.from_product);
  return d;
}

}  // namespace mvml
