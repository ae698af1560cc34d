#include "mvml/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "mvml/error.hpp"
#include "mvml/evaluator.hpp"
#include "mvml/model_io.hpp"

namespace mvml {

namespace {

constexpr std::uint64_t kIndexLimit = 1ULL << 62;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kIndexLimit / b) return kIndexLimit;
  return std::min(a * b, kIndexLimit);
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

// Smallest index in [0, count) whose probe yields a result. Workers claim
// chunks in increasing order and stop once past the best index found, so the
// answer does not depend on the number of workers.
template <class R>
std::optional<std::pair<std::uint64_t, R>> find_first(
    std::uint64_t count, unsigned jobs,
    const std::function<std::function<std::optional<R>(std::uint64_t)>()>& factory) {
  if (jobs <= 1 || count < 2) {
    auto probe = factory();
    for (std::uint64_t i = 0; i < count; ++i) {
      if (auto r = probe(i)) return std::make_pair(i, std::move(*r));
    }
    return std::nullopt;
  }
  constexpr std::uint64_t kChunk = 16;
  std::atomic<std::uint64_t> nextChunk{0};
  std::atomic<std::uint64_t> best{count};
  std::mutex mu;
  std::optional<std::pair<std::uint64_t, R>> result;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      auto probe = factory();
      while (true) {
        const std::uint64_t start = nextChunk.fetch_add(1) * kChunk;
        if (start >= count || start >= best.load()) return;
        const std::uint64_t end = std::min(count, start + kChunk);
        for (std::uint64_t i = start; i < end && i < best.load(); ++i) {
          if (auto r = probe(i)) {
            std::lock_guard<std::mutex> lock(mu);
            if (!result || i < result->first) {
              result = std::make_pair(i, std::move(*r));
              best.store(i);
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return result;
}

void decode_frame(std::uint64_t index, const std::vector<Elem>& values, std::vector<Elem>& R) {
  const std::uint64_t m = values.size();
  for (std::size_t cell = R.size(); cell-- > 0;) {
    R[cell] = values[index % m];
    index /= m;
  }
}

// Advances the valuation odometer; false after the last valuation.
bool next_valuation(std::vector<Elem>& val, std::size_t n) {
  for (std::size_t s = val.size(); s-- > 0;) {
    if (++val[s] < n) return true;
    val[s] = 0;
  }
  return false;
}

bool uses_constants(const std::vector<Formula>& fs) {
  return std::any_of(fs.begin(), fs.end(), [](const Formula& f) { return !constants(f).empty(); });
}

enum class Mode { Validity, Local, Global };

struct Hit {
  std::vector<Elem> R;
  std::vector<Elem> valuation;
  std::size_t world = 0;
};

KripkeModel build_model(const AlgebraPtr& a, std::size_t k, const Hit& hit,
                        const std::vector<std::string>& vars, bool constantsOn) {
  KripkeModel m = make_model(a, k);
  m.constants = constantsOn;
  m.frame.R = hit.R;
  for (std::size_t s = 0; s < vars.size(); ++s) {
    m.valuation[vars[s]] = std::vector<Elem>(hit.valuation.begin() + s * k, hit.valuation.begin() + (s + 1) * k);
  }
  return m;
}

void check_budget(std::uint64_t frames, std::uint64_t total, const SearchBudget& budget) {
  if (frames >= kIndexLimit) throw Error(Errc::BudgetExceeded, "frame space too large to enumerate");
  if (budget.modelCap && total > *budget.modelCap) {
    throw Error(Errc::BudgetExceeded, "search needs " + std::to_string(total) + " models, cap is " +
                                          std::to_string(*budget.modelCap));
  }
}

Verdict run_search(const AlgebraPtr& a, FrameClass c, const std::vector<Formula>& gamma, const Formula& goal,
                   Mode mode, const SearchBudget& budget) {
  if (budget.maxWorlds < 1) throw Error(Errc::BadParam, "maxWorlds must be at least 1");
  std::vector<Formula> all = gamma;
  all.push_back(goal);
  const auto varSet = variables(all);
  const std::vector<std::string> vars(varSet.begin(), varSet.end());
  const ResiduatedLattice& A = *a;
  const CompiledFormulas compiled(A, all, vars);
  const auto values = class_values(A, c);
  const std::size_t n = A.size();
  const Elem top = A.top();

  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= budget.maxWorlds; ++k) {
    const std::uint64_t frames = saturating_pow(values.size(), k * k);
    total = std::min(kIndexLimit, total + saturating_mul(frames, saturating_pow(n, vars.size() * k)));
    check_budget(frames, total, budget);
  }

  for (std::size_t k = 1; k <= budget.maxWorlds; ++k) {
    const std::uint64_t frames = saturating_pow(values.size(), k * k);
    std::function<std::function<std::optional<Hit>(std::uint64_t)>()> factory = [&, k] {
      auto R = std::make_shared<std::vector<Elem>>(k * k);
      auto val = std::make_shared<std::vector<Elem>>(vars.size() * k);
      auto buf = std::make_shared<std::vector<Elem>>();
      return std::function<std::optional<Hit>(std::uint64_t)>([&, k, R, val, buf](std::uint64_t fi)
                                                                  -> std::optional<Hit> {
        decode_frame(fi, values, *R);
        std::fill(val->begin(), val->end(), Elem{0});
        do {
          compiled.evaluate(k, R->data(), val->data(), *buf);
          const Elem* g = buf->data() + compiled.root(gamma.size()) * k;
          bool premisesEverywhere = true;
          if (mode == Mode::Global) {
            for (std::size_t i = 0; i < gamma.size() && premisesEverywhere; ++i) {
              const Elem* p = buf->data() + compiled.root(i) * k;
              premisesEverywhere = std::all_of(p, p + k, [&](Elem e) { return e == top; });
            }
            if (!premisesEverywhere) continue;
          }
          for (std::size_t w = 0; w < k; ++w) {
            if (g[w] == top) continue;
            bool premisesHere = true;
            if (mode == Mode::Local) {
              for (std::size_t i = 0; i < gamma.size() && premisesHere; ++i) {
                premisesHere = buf->data()[compiled.root(i) * k + w] == top;
              }
            }
            if (premisesHere) return Hit{*R, *val, w};
          }
        } while (next_valuation(*val, n));
        return std::nullopt;
      });
    };
    auto found = find_first<Hit>(frames, budget.jobs, factory);
    if (!found) continue;
    const Hit& hit = found->second;
    Verdict v{Verdict::Kind::Refuted, budget.maxWorlds,
              Countermodel{build_model(a, k, hit, vars, uses_constants(all)), hit.world}};
    // Re-check the witness with the reference evaluator.
    const KripkeModel& m = v.witness->model;
    bool ok = eval(m, goal, hit.world) != top;
    for (const Formula& p : gamma) {
      ok = ok && (mode == Mode::Global ? valid_in_model(m, p) : valid_at(m, p, hit.world));
    }
    if (!ok) throw std::logic_error("countermodel failed re-verification");
    return v;
  }
  return Verdict{Verdict::Kind::ValidUpTo, budget.maxWorlds, std::nullopt};
}

}  // namespace

std::string render_verdict(const Verdict& v) {
  std::ostringstream out;
  if (!v.refuted()) {
    out << "verdict: valid-up-to " << v.bound << '\n';
    return out.str();
  }
  const auto& w = *v.witness;
  out << "verdict: refuted at " << w.model.frame.worlds[w.world] << '\n';
  out << render_model_text(w.model);
  return out.str();
}

std::vector<Formula> abstract_modalities(const std::vector<Formula>& fs) {
  std::unordered_map<Formula, std::string, FormulaHash> names;
  std::function<Formula(const Formula&)> walk = [&](const Formula& f) -> Formula {
    if (f.op() == Op::Box || f.op() == Op::Diamond) {
      auto it = names.find(f);
      if (it == names.end()) it = names.emplace(f, "$b" + std::to_string(names.size())).first;
      return Formula::var(it->second);
    }
    switch (f.op()) {
      case Op::And: return Formula::conj(walk(f.lhs()), walk(f.rhs()));
      case Op::Or: return Formula::disj(walk(f.lhs()), walk(f.rhs()));
      case Op::Fusion: return Formula::fusion(walk(f.lhs()), walk(f.rhs()));
      case Op::Implies: return Formula::implies(walk(f.lhs()), walk(f.rhs()));
      default: return f;
    }
  };
  std::vector<Formula> out;
  for (const Formula& f : fs) out.push_back(walk(f));
  return out;
}

ConsequenceResult nonmodal_consequence(const ResiduatedLattice& a, const std::vector<Formula>& gamma,
                                       const Formula& phi, bool abstractModal) {
  std::vector<Formula> all = gamma;
  all.push_back(phi);
  const bool modal = std::any_of(all.begin(), all.end(), [](const Formula& f) { return f.is_modal(); });
  if (modal && !abstractModal) throw Error(Errc::NonModalExpected, "modal formula in non-modal consequence");
  if (modal) all = abstract_modalities(all);
  const auto varSet = variables(all);
  const std::vector<std::string> vars(varSet.begin(), varSet.end());
  const CompiledFormulas compiled(a, all, vars);
  std::vector<Elem> val(vars.size(), 0), buf;
  const Elem top = a.top();
  do {
    compiled.evaluate(1, &top, val.data(), buf);
    bool premises = true;
    for (std::size_t i = 0; i < gamma.size() && premises; ++i) premises = buf[compiled.root(i)] == top;
    if (premises && buf[compiled.root(gamma.size())] != top) {
      Assignment h;
      for (std::size_t s = 0; s < vars.size(); ++s) h[vars[s]] = val[s];
      return ConsequenceResult{false, h};
    }
  } while (next_valuation(val, a.size()));
  return ConsequenceResult{true, std::nullopt};
}

Verdict validity_search(const AlgebraPtr& a, FrameClass c, const Formula& phi, const SearchBudget& budget) {
  return run_search(a, c, {}, phi, Mode::Validity, budget);
}

Verdict local_consequence_refute(const AlgebraPtr& a, FrameClass c, const std::vector<Formula>& gamma,
                                 const Formula& phi, const SearchBudget& budget) {
  return run_search(a, c, gamma, phi, Mode::Local, budget);
}

Verdict global_consequence_refute(const AlgebraPtr& a, FrameClass c, const std::vector<Formula>& gamma,
                                  const Formula& phi, const SearchBudget& budget) {
  return run_search(a, c, gamma, phi, Mode::Global, budget);
}

namespace {

bool validates(const CompiledFormulas& compiled, std::size_t roots, std::size_t k, const Elem* R,
               std::vector<Elem>& val, std::vector<Elem>& buf, std::size_t n, Elem top) {
  std::fill(val.begin(), val.end(), Elem{0});
  do {
    compiled.evaluate(k, R, val.data(), buf);
    for (std::size_t i = 0; i < roots; ++i) {
      const Elem* p = buf.data() + compiled.root(i) * k;
      if (!std::all_of(p, p + k, [&](Elem e) { return e == top; })) return false;
    }
  } while (next_valuation(val, n));
  return true;
}

}  // namespace

bool frame_validates(const KripkeFrame& f, const AlgebraPtr& a, const std::vector<Formula>& phis) {
  const auto varSet = variables(phis);
  const std::vector<std::string> vars(varSet.begin(), varSet.end());
  const CompiledFormulas compiled(*a, phis, vars);
  std::vector<Elem> val(vars.size() * f.size()), buf;
  return validates(compiled, phis.size(), f.size(), f.R.data(), val, buf, a->size(), a->top());
}

DefinabilityResult frame_definability_check(const std::vector<Formula>& phis, FrameClass c,
                                            const AlgebraPtr& a, const SearchBudget& budget) {
  const ResiduatedLattice& A = *a;
  const auto varSet = variables(phis);
  const std::vector<std::string> vars(varSet.begin(), varSet.end());
  const CompiledFormulas compiled(A, phis, vars);
  const auto values = A.elements();
  std::vector<bool> allowed(A.size(), false);
  for (Elem e : class_values(A, c)) allowed[e] = true;

  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= budget.maxWorlds; ++k) {
    const std::uint64_t frames = saturating_pow(values.size(), k * k);
    total = std::min(kIndexLimit, total + saturating_mul(frames, saturating_pow(A.size(), vars.size() * k)));
    check_budget(frames, total, budget);
  }

  struct Mismatch {
    std::vector<Elem> R;
    bool validates;
  };
  for (std::size_t k = 1; k <= budget.maxWorlds; ++k) {
    const std::uint64_t frames = saturating_pow(values.size(), k * k);
    std::function<std::function<std::optional<Mismatch>(std::uint64_t)>()> factory = [&, k] {
      auto R = std::make_shared<std::vector<Elem>>(k * k);
      auto val = std::make_shared<std::vector<Elem>>(vars.size() * k);
      auto buf = std::make_shared<std::vector<Elem>>();
      return std::function<std::optional<Mismatch>(std::uint64_t)>(
          [&, k, R, val, buf](std::uint64_t fi) -> std::optional<Mismatch> {
            decode_frame(fi, values, *R);
            const bool member = std::all_of(R->begin(), R->end(), [&](Elem e) { return allowed[e]; });
            const bool valid = validates(compiled, phis.size(), k, R->data(), *val, *buf, A.size(), A.top());
            if (member == valid) return std::nullopt;
            return Mismatch{*R, valid};
          });
    };
    if (auto found = find_first<Mismatch>(frames, budget.jobs, factory)) {
      KripkeFrame f = make_frame(k, A.bottom());
      f.R = found->second.R;
      return DefinabilityResult{false, f, found->second.validates, !found->second.validates};
    }
  }
  return DefinabilityResult{};
}

}  // namespace mvml
