#include "mvml/evaluator.hpp"

#include <algorithm>
#include <unordered_map>

#include "mvml/error.hpp"

namespace mvml {

CompiledFormulas::CompiledFormulas(const ResiduatedLattice& a, const std::vector<Formula>& roots,
                                   const std::vector<std::string>& vars)
    : algebra_(a), varCount_(vars.size()) {
  std::unordered_map<Formula, std::size_t, FormulaHash> ids;
  std::function<std::size_t(const Formula&)> add = [&](const Formula& f) -> std::size_t {
    if (auto it = ids.find(f); it != ids.end()) return it->second;
    Node n{f.op()};
    switch (f.op()) {
      case Op::Var: {
        auto it = std::find(vars.begin(), vars.end(), f.name());
        if (it == vars.end()) throw Error(Errc::UnknownVariable, "no slot for variable " + f.name());
        n.slot = static_cast<std::size_t>(it - vars.begin());
        break;
      }
      case Op::Const: {
        auto e = a.find(f.name());
        if (!e) throw Error(Errc::UnknownConstant, "no element labelled " + f.name() + " in " + a.name());
        n.constant = *e;
        break;
      }
      case Op::MetaVar:
      case Op::MetaConst: throw Error(Errc::BadParam, "cannot evaluate schema metavariable " + f.name());
      default:
        if (f.arity() >= 1) n.a = add(f.lhs());
        if (f.arity() == 2) n.b = add(f.rhs());
        break;
    }
    nodes_.push_back(n);
    ids.emplace(f, nodes_.size() - 1);
    return nodes_.size() - 1;
  };
  for (const Formula& r : roots) roots_.push_back(add(r));
}

void CompiledFormulas::evaluate(std::size_t k, const Elem* R, const Elem* val, std::vector<Elem>& buf) const {
  const ResiduatedLattice& A = algebra_;
  const std::size_t n = A.size();
  const Elem* meet = A.meet_table().data();
  const Elem* join = A.join_table().data();
  const Elem* fuse = A.fusion_table().data();
  const Elem* imp = A.residuum_table().data();
  const Elem top = A.top(), bottom = A.bottom();
  buf.resize(nodes_.size() * k);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& node = nodes_[i];
    Elem* out = buf.data() + i * k;
    const Elem* x = buf.data() + node.a * k;
    const Elem* y = buf.data() + node.b * k;
    switch (node.op) {
      case Op::Var: std::copy(val + node.slot * k, val + node.slot * k + k, out); break;
      case Op::Zero: std::fill(out, out + k, bottom); break;
      case Op::One: std::fill(out, out + k, top); break;
      case Op::Const: std::fill(out, out + k, node.constant); break;
      case Op::And: for (std::size_t w = 0; w < k; ++w) out[w] = meet[x[w] * n + y[w]]; break;
      case Op::Or: for (std::size_t w = 0; w < k; ++w) out[w] = join[x[w] * n + y[w]]; break;
      case Op::Fusion: for (std::size_t w = 0; w < k; ++w) out[w] = fuse[x[w] * n + y[w]]; break;
      case Op::Implies: for (std::size_t w = 0; w < k; ++w) out[w] = imp[x[w] * n + y[w]]; break;
      case Op::Box:
        for (std::size_t w = 0; w < k; ++w) {
          Elem acc = top;
          for (std::size_t v = 0; v < k && acc != bottom; ++v) acc = meet[acc * n + imp[R[w * k + v] * n + x[v]]];
          out[w] = acc;
        }
        break;
      case Op::Diamond:
        for (std::size_t w = 0; w < k; ++w) {
          Elem acc = bottom;
          for (std::size_t v = 0; v < k && acc != top; ++v) acc = join[acc * n + fuse[R[w * k + v] * n + x[v]]];
          out[w] = acc;
        }
        break;
      default: break;
    }
  }
}

}  // namespace mvml
