#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mvml {

// Elements are positions in the universe of their owning algebra.
using Elem = std::uint16_t;

class ResiduatedLattice {
 public:
  std::size_t size() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  std::optional<Elem> find(std::string_view label) const;

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem a, Elem b) const { return leq_[index(a, b)] != 0; }
  Elem meet(Elem a, Elem b) const { return meet_[index(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[index(a, b)]; }
  Elem fuse(Elem a, Elem b) const { return fusion_[index(a, b)]; }
  Elem imp(Elem a, Elem b) const { return residuum_[index(a, b)]; }
  Elem neg(Elem a) const { return imp(a, bottom_); }
  Elem equiv(Elem a, Elem b) const { return fuse(imp(a, b), imp(b, a)); }
  Elem oplus(Elem a, Elem b) const { return neg(fuse(neg(a), neg(b))); }

  std::vector<Elem> elements() const;

  std::span<const Elem> meet_table() const { return meet_; }
  std::span<const Elem> join_table() const { return join_; }
  std::span<const Elem> fusion_table() const { return fusion_; }
  std::span<const Elem> residuum_table() const { return residuum_; }

 private:
  friend ResiduatedLattice build_lattice_indexed(std::string, std::vector<std::string>,
                                                 std::vector<std::uint8_t>, std::vector<Elem>);
  std::size_t index(Elem a, Elem b) const { return static_cast<std::size_t>(a) * labels_.size() + b; }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_, join_, fusion_, residuum_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

using AlgebraPtr = std::shared_ptr<const ResiduatedLattice>;

// Validates order and fusion, derives meet, join and residuum.
ResiduatedLattice build_lattice(std::string name, std::vector<std::string> labels,
                                const std::vector<std::vector<bool>>& leq,
                                const std::vector<std::vector<std::string>>& fusion);

// Same as build_lattice with row-major index tables (leq as 0/1 bytes).
ResiduatedLattice build_lattice_indexed(std::string name, std::vector<std::string> labels,
                                        std::vector<std::uint8_t> leq, std::vector<Elem> fusion);

// Presets

ResiduatedLattice lukasiewicz(int n);
ResiduatedLattice godel(int n);
ResiduatedLattice boolean2();
ResiduatedLattice wnm5();
ResiduatedLattice mtl6();
ResiduatedLattice product(const ResiduatedLattice& a, const ResiduatedLattice& b);
ResiduatedLattice direct_product(std::span<const ResiduatedLattice> factors, std::string name = {});
ResiduatedLattice ordinal_sum(const ResiduatedLattice& a, const ResiduatedLattice& b);

// Display label for the rational m/d, decimal when it terminates.
std::string rational_label(int m, int d);

// Classification

struct AlgebraReport {
  std::vector<Elem> idempotents;
  std::vector<Elem> booleans;
  std::vector<Elem> coatoms;
  std::vector<Elem> distributives;
  bool isChain = false;
  bool topJoinIrreducible = false;
  bool isHeyting = false;
  bool isMTL = false;
  bool isBL = false;
  bool isMV = false;
  bool isInvolutive = false;
  bool isSimple = false;

  bool is_idempotent(Elem a) const;
  bool is_boolean(Elem a) const;
  bool is_coatom(Elem a) const;
  bool is_distributive(Elem a) const;
  std::optional<Elem> unique_coatom() const;
};

AlgebraReport classify(const ResiduatedLattice& a);

bool is_mv_chain(const ResiduatedLattice& a);

struct LawCheck {
  // fusion-join: x*(y1 v y2) = x*y1 v x*y2      imp-meet: x->(y1 ^ y2) = (x->y1) ^ (x->y2)
  // join-imp: (x1 v x2)->y = (x1->y) ^ (x2->y)   imp-join: x->(y1 v y2) = (x->y1) v (x->y2)
  // meet-imp: (x1 ^ x2)->y = (x1->y) v (x2->y)
  std::string law;
  bool holds = true;
  // (x, y1, y2) for fusion-join, imp-meet, imp-join; (x1, x2, y) for join-imp, meet-imp.
  std::array<Elem, 3> witness{};
};

std::vector<LawCheck> check_laws(const ResiduatedLattice& a);

bool prelinear(const ResiduatedLattice& a);

// Filters and quotients

struct Filter {
  std::vector<bool> member;

  bool contains(Elem a) const { return member[a]; }
  std::vector<Elem> elements() const;
  std::size_t size() const;
};

Filter filter_generated(const ResiduatedLattice& a, std::span<const Elem> generators);

struct Quotient {
  ResiduatedLattice algebra;
  std::vector<Elem> projection;
};

// Classes are labelled by the label of their greatest member.
Quotient quotient(const ResiduatedLattice& a, const Filter& f);

// Homomorphisms

bool is_homomorphism(const ResiduatedLattice& from, const ResiduatedLattice& to,
                     std::span<const Elem> map);
std::optional<std::vector<Elem>> find_isomorphism(const ResiduatedLattice& a,
                                                  const ResiduatedLattice& b);
std::optional<std::vector<Elem>> find_embedding(const ResiduatedLattice& from,
                                                const ResiduatedLattice& to);

struct Decomposition {
  std::vector<ResiduatedLattice> factors;
  std::vector<std::vector<Elem>> projections;  // A -> factor i
  ResiduatedLattice product;                   // direct product of the factors
  std::vector<Elem> to_product;                // A -> product
  std::vector<Elem> from_product;              // product -> A
  bool verified = false;
};

Decomposition boolean_decomposition(const ResiduatedLattice& a);

}  // namespace mvml
