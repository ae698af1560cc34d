#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvml/algebra.hpp"
#include "mvml/formula.hpp"

namespace mvml {

enum class FrameClass { All, Idempotent, Crisp, Boolean };

const char* frame_class_name(FrameClass c);
// Accepts all, idem, idempotent, crisp, boolean.
std::optional<FrameClass> parse_frame_class(std::string_view text);

// Accessibility values allowed in the class, in index order.
std::vector<Elem> class_values(const ResiduatedLattice& a, FrameClass c);

struct KripkeFrame {
  std::vector<std::string> worlds;
  std::vector<Elem> R;  // row-major, |worlds|^2 entries

  std::size_t size() const { return worlds.size(); }
  Elem r(std::size_t w, std::size_t v) const { return R[w * worlds.size() + v]; }
  void set(std::size_t w, std::size_t v, Elem e) { R[w * worlds.size() + v] = e; }
  std::optional<std::size_t> world_index(std::string_view name) const;
};

// Worlds named w0, w1, ... with R constantly `fill`.
KripkeFrame make_frame(std::size_t worlds, Elem fill);

struct KripkeModel {
  AlgebraPtr algebra;
  std::string algebraRef;  // how model files refer to the algebra
  bool constants = false;
  KripkeFrame frame;
  std::map<std::string, std::vector<Elem>> valuation;
  std::optional<Elem> defaultValue;  // missing entries; top unless overridden

  std::size_t size() const { return frame.size(); }
  Elem value(const std::string& var, std::size_t w) const;
  void set_value(const std::string& var, std::size_t w, Elem e);
};

// Model over `a` with every R entry bottom and the default valuation top.
KripkeModel make_model(AlgebraPtr a, std::size_t worlds);

// Values of f at every world.
std::vector<Elem> eval_all(const KripkeModel& m, const Formula& f);
Elem eval(const KripkeModel& m, const Formula& f, std::size_t w);

bool valid_at(const KripkeModel& m, const Formula& f, std::size_t w);
bool valid_in_model(const KripkeModel& m, const Formula& f);
bool positively_valid(const KripkeModel& m, const Formula& f);

std::vector<FrameClass> frame_classes(const KripkeFrame& f, const ResiduatedLattice& a);
bool in_class(const KripkeFrame& f, const ResiduatedLattice& a, FrameClass c);

// Rewrites diamonds as ~[]~, valid only over involutive algebras.
// Throws PrerequisiteFails otherwise.
Formula diamond_as_box(const Formula& f, const ResiduatedLattice& a);

}  // namespace mvml
