#include "mvml/kripke.hpp"

#include <algorithm>

#include "mvml/error.hpp"

namespace mvml {

const char* frame_class_name(FrameClass c) {
  switch (c) {
    case FrameClass::All: return "all";
    case FrameClass::Idempotent: return "idem";
    case FrameClass::Crisp: return "crisp";
    case FrameClass::Boolean: return "boolean";
  }
  return "all";
}

std::optional<FrameClass> parse_frame_class(std::string_view text) {
  if (text == "all") return FrameClass::All;
  if (text == "idem" || text == "idempotent") return FrameClass::Idempotent;
  if (text == "crisp") return FrameClass::Crisp;
  if (text == "boolean") return FrameClass::Boolean;
  return std::nullopt;
}

std::vector<Elem> class_values(const ResiduatedLattice& a, FrameClass c) {
  switch (c) {
    case FrameClass::All: return a.elements();
    case FrameClass::Idempotent: return classify(a).idempotents;
    case FrameClass::Boolean: return classify(a).booleans;
    case FrameClass::Crisp: {
      std::vector<Elem> v{a.bottom(), a.top()};
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }
  }
  return {};
}

std::optional<std::size_t> KripkeFrame::world_index(std::string_view name) const {
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (worlds[i] == name) return i;
  }
  return std::nullopt;
}

KripkeFrame make_frame(std::size_t worlds, Elem fill) {
  KripkeFrame f;
  for (std::size_t i = 0; i < worlds; ++i) f.worlds.push_back("w" + std::to_string(i));
  f.R.assign(worlds * worlds, fill);
  return f;
}

Elem KripkeModel::value(const std::string& var, std::size_t w) const {
  if (auto it = valuation.find(var); it != valuation.end() && w < it->second.size()) {
    return it->second[w];
  }
  if (defaultValue) return *defaultValue;
  throw Error(Errc::UnknownVariable, "no value for " + var + " and no default");
}

void KripkeModel::set_value(const std::string& var, std::size_t w, Elem e) {
  auto& row = valuation[var];
  if (row.size() != size()) row.assign(size(), defaultValue.value_or(algebra->top()));
  row[w] = e;
}

KripkeModel make_model(AlgebraPtr a, std::size_t worlds) {
  KripkeModel m;
  m.algebraRef = a->name();
  m.frame = make_frame(worlds, a->bottom());
  m.defaultValue = a->top();
  m.algebra = std::move(a);
  return m;
}

std::vector<Elem> eval_all(const KripkeModel& m, const Formula& f) {
  const ResiduatedLattice& A = *m.algebra;
  const std::size_t n = m.size();
  std::vector<Elem> out(n);
  switch (f.op()) {
    case Op::Var:
      for (std::size_t w = 0; w < n; ++w) out[w] = m.value(f.name(), w);
      return out;
    case Op::Zero: return std::vector<Elem>(n, A.bottom());
    case Op::One: return std::vector<Elem>(n, A.top());
    case Op::Const: {
      auto e = A.find(f.name());
      if (!e) throw Error(Errc::UnknownConstant, "no element labelled " + f.name() + " in " + A.name());
      return std::vector<Elem>(n, *e);
    }
    case Op::MetaVar:
    case Op::MetaConst: throw Error(Errc::BadParam, "cannot evaluate schema metavariable " + f.name());
    case Op::Box:
    case Op::Diamond: {
      const auto inner = eval_all(m, f.lhs());
      const bool box = f.op() == Op::Box;
      for (std::size_t w = 0; w < n; ++w) {
        Elem acc = box ? A.top() : A.bottom();
        for (std::size_t v = 0; v < n; ++v) {
          acc = box ? A.meet(acc, A.imp(m.frame.r(w, v), inner[v]))
                    : A.join(acc, A.fuse(m.frame.r(w, v), inner[v]));
        }
        out[w] = acc;
      }
      return out;
    }
    default: break;
  }
  const auto l = eval_all(m, f.lhs());
  const auto r = eval_all(m, f.rhs());
  for (std::size_t w = 0; w < n; ++w) {
    switch (f.op()) {
      case Op::And: out[w] = A.meet(l[w], r[w]); break;
      case Op::Or: out[w] = A.join(l[w], r[w]); break;
      case Op::Fusion: out[w] = A.fuse(l[w], r[w]); break;
      default: out[w] = A.imp(l[w], r[w]); break;
    }
  }
  return out;
}

Elem eval(const KripkeModel& m, const Formula& f, std::size_t w) { return eval_all(m, f).at(w); }

bool valid_at(const KripkeModel& m, const Formula& f, std::size_t w) {
  return eval(m, f, w) == m.algebra->top();
}

bool valid_in_model(const KripkeModel& m, const Formula& f) {
  const auto v = eval_all(m, f);
  return std::all_of(v.begin(), v.end(), [&](Elem e) { return e == m.algebra->top(); });
}

bool positively_valid(const KripkeModel& m, const Formula& f) {
  const auto v = eval_all(m, f);
  return std::all_of(v.begin(), v.end(), [&](Elem e) { return e != m.algebra->bottom(); });
}

bool in_class(const KripkeFrame& f, const ResiduatedLattice& a, FrameClass c) {
  const auto allowed = class_values(a, c);
  return std::all_of(f.R.begin(), f.R.end(), [&](Elem e) {
    return std::find(allowed.begin(), allowed.end(), e) != allowed.end();
  });
}

std::vector<FrameClass> frame_classes(const KripkeFrame& f, const ResiduatedLattice& a) {
  std::vector<FrameClass> out;
  for (FrameClass c : {FrameClass::All, FrameClass::Idempotent, FrameClass::Crisp, FrameClass::Boolean}) {
    if (in_class(f, a, c)) out.push_back(c);
  }
  return out;
}

Formula diamond_as_box(const Formula& f, const ResiduatedLattice& a) {
  if (!classify(a).isInvolutive) {
    throw Error(Errc::PrerequisiteFails, a.name() + " is not involutive");
  }
  return rewrite(f, [](const Formula& g) {
    if (g.op() == Op::Diamond) return Formula::neg(Formula::box(Formula::neg(g.lhs())));
    return g;
  });
}

}  // namespace mvml
