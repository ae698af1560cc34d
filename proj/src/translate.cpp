#include "mvml/translate.hpp"

#include <cctype>
#include <vector>

#include "mvml/error.hpp"

namespace mvml {

std::string companion_variable(std::size_t degree) { return "$r" + std::to_string(degree); }

Formula companion(const Formula& f) {
  switch (f.op()) {
    case Op::Box:
      return Formula::implies(Formula::var(companion_variable(modal_depth(f.lhs()))), companion(f.lhs()));
    case Op::Diamond:
      throw Error(Errc::DiamondUnsupported, "the companion translation is defined for boxes only");
    case Op::And: return Formula::conj(companion(f.lhs()), companion(f.rhs()));
    case Op::Or: return Formula::disj(companion(f.lhs()), companion(f.rhs()));
    case Op::Fusion: return Formula::fusion(companion(f.lhs()), companion(f.rhs()));
    case Op::Implies: return Formula::implies(companion(f.lhs()), companion(f.rhs()));
    default: return f;
  }
}

namespace {

class StandardTranslation {
 public:
  explicit StandardTranslation(const std::string& freeVar) {
    names_.push_back(freeVar);
    for (int round = 0; names_.size() < 64; ++round) {
      for (const char* base : {"x", "y", "z", "u", "v", "w"}) {
        std::string n = base + (round ? std::to_string(round) : std::string());
        if (n != freeVar) names_.push_back(n);
      }
    }
  }

  std::string run(const Formula& f, std::size_t depth, bool top) const {
    const std::string& x = names_.at(depth);
    switch (f.op()) {
      case Op::Var: {
        std::string pred = f.name();
        pred[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(pred[0])));
        return pred.size() == 1 ? pred + x : pred + "(" + x + ")";
      }
      case Op::Zero: return "0";
      case Op::One: return "1";
      case Op::Const: return "@" + f.name();
      case Op::MetaVar: return f.name() + "(" + x + ")";
      case Op::MetaConst: return "@?" + f.name();
      case Op::Box:
      case Op::Diamond: {
        const std::string& y = names_.at(depth + 1);
        const bool box = f.op() == Op::Box;
        return std::string(box ? "∀" : "∃") + y + "(R" + x + y + (box ? " → " : " ⊙ ") +
               run(f.lhs(), depth + 1, false) + ")";
      }
      case Op::Implies:
        if (f.rhs().op() == Op::Zero) return "¬" + run(f.lhs(), depth, false);
        return wrap(run(f.lhs(), depth, false) + " → " + run(f.rhs(), depth, false), top);
      case Op::And: return wrap(run(f.lhs(), depth, false) + " ∧ " + run(f.rhs(), depth, false), top);
      case Op::Or: return wrap(run(f.lhs(), depth, false) + " ∨ " + run(f.rhs(), depth, false), top);
      case Op::Fusion: return wrap(run(f.lhs(), depth, false) + " ⊙ " + run(f.rhs(), depth, false), top);
    }
    return "?";
  }

 private:
  static std::string wrap(const std::string& s, bool top) { return top ? s : "(" + s + ")"; }

  std::vector<std::string> names_;
};

}  // namespace

std::string standard_translation(const Formula& f, const std::string& freeVar) {
  return StandardTranslation(freeVar).run(f, 0, true);
}

}  // namespace mvml
