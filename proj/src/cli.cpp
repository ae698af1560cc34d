#include "mvml/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mvml/algebra_io.hpp"
#include "mvml/calculus.hpp"
#include "mvml/characterizing.hpp"
#include "mvml/companion_method.hpp"
#include "mvml/error.hpp"
#include "mvml/model_io.hpp"
#include "mvml/scenarios.hpp"
#include "mvml/search.hpp"
#include "mvml/syntax.hpp"
#include "mvml/translate.hpp"

namespace mvml {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitNegative = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;

struct Options {
  std::string algebra = "lukasiewicz(3)";
  std::string constants = "on";
  std::string frameClass = "all";
  std::size_t maxWorlds = 2;
  unsigned jobs = 1;
  std::string format = "text";
};

// Shared flags, attached to every subcommand that uses them.
void add_algebra(CLI::App* app, Options& o) {
  app->add_option("--algebra", o.algebra, "preset expression or algebra file");
}
void add_constants(CLI::App* app, Options& o) {
  app->add_option("--constants", o.constants, "canonical constants")->check(CLI::IsMember({"on", "off"}));
}
void add_search(CLI::App* app, Options& o) {
  add_algebra(app, o);
  add_constants(app, o);
  app->add_option("--class", o.frameClass, "frame class")
      ->check(CLI::IsMember({"all", "idem", "idempotent", "crisp", "boolean"}));
  app->add_option("--max-worlds", o.maxWorlds, "largest frame size")->check(CLI::PositiveNumber);
  app->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json-lines"}));
}

bool json_lines(const Options& o) { return o.format == "json-lines"; }

ParseOptions parse_options(const Options& o) {
  ParseOptions p;
  p.allowConstants = o.constants == "on";
  return p;
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.maxWorlds = o.maxWorlds;
  b.jobs = o.jobs;
  return b;
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts, const Options& o) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse(t, parse_options(o)));
  return out;
}

int emit_verdict(std::ostream& out, const Verdict& v, const Options& o) {
  if (json_lines(o)) {
    Json j;
    if (v.refuted()) {
      const auto& w = *v.witness;
      j["verdict"] = "refuted";
      j["world"] = w.model.frame.worlds[w.world];
      j["model"] = render_model_text(w.model);
    } else {
      j["verdict"] = "valid-up-to";
      j["bound"] = v.bound;
    }
    out << j.dump() << '\n';
  } else {
    out << render_verdict(v);
  }
  return v.refuted() ? kExitNegative : 0;
}

std::string tree_text(const Formula& f) {
  switch (f.op()) {
    case Op::Var: return f.name();
    case Op::Zero: return "0";
    case Op::One: return "1";
    case Op::Const: return "(const " + f.name() + ")";
    case Op::MetaVar: return "(meta " + f.name() + ")";
    case Op::MetaConst: return "(meta-const " + f.name() + ")";
    case Op::And: return "(and " + tree_text(f.lhs()) + " " + tree_text(f.rhs()) + ")";
    case Op::Or: return "(or " + tree_text(f.lhs()) + " " + tree_text(f.rhs()) + ")";
    case Op::Fusion: return "(fusion " + tree_text(f.lhs()) + " " + tree_text(f.rhs()) + ")";
    case Op::Implies: return "(implies " + tree_text(f.lhs()) + " " + tree_text(f.rhs()) + ")";
    case Op::Box: return "(box " + tree_text(f.lhs()) + ")";
    case Op::Diamond: return "(diamond " + tree_text(f.lhs()) + ")";
  }
  return "?";
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite many-valued modal logic toolkit", "mvml"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  // algebra
  auto* algebraCmd = app.add_subcommand("algebra", "inspect finite residuated lattices");
  algebraCmd->require_subcommand(1);
  std::string algebraSpec;
  for (const char* name : {"check", "show"}) {
    auto* sub = algebraCmd->add_subcommand(name, name == std::string("check") ? "validate and report laws"
                                                                              : "tables and classification");
    sub->add_option("spec", algebraSpec, "preset expression or algebra file")->required();
    const bool show = name == std::string("show");
    sub->callback([&, show] {
      action = [&, show] {
        const AlgebraPtr a = resolve_algebra(algebraSpec);
        if (show) {
          out << describe_algebra(*a);
          return 0;
        }
        out << "ok: " << a->name() << " is a residuated lattice with " << a->size() << " elements\n";
        for (const auto& law : check_laws(*a)) {
          out << "law " << law.law << ": ";
          if (law.holds) {
            out << "holds\n";
          } else {
            out << "fails at (" << a->label(law.witness[0]) << ", " << a->label(law.witness[1]) << ", "
                << a->label(law.witness[2]) << ")\n";
          }
        }
        return 0;
      };
    });
  }

  // formula
  auto* formulaCmd = app.add_subcommand("formula", "formula utilities");
  formulaCmd->require_subcommand(1);
  std::string formulaText;
  auto* parseCmd = formulaCmd->add_subcommand("parse", "print the syntax tree");
  parseCmd->add_option("formula", formulaText)->required();
  bool schema = false;
  parseCmd->add_flag("--schema", schema, "accept metavariables");
  add_constants(parseCmd, o);
  parseCmd->callback([&] {
    action = [&] {
      ParseOptions p = parse_options(o);
      p.allowSchema = schema;
      const Formula f = parse(formulaText, p);
      out << render(f) << '\n' << tree_text(f) << '\n';
      return 0;
    };
  });
  auto* companionCmd = formulaCmd->add_subcommand("companion", "non-modal companion");
  companionCmd->add_option("formula", formulaText)->required();
  add_constants(companionCmd, o);
  companionCmd->callback([&] {
    action = [&] {
      out << render(companion(parse(formulaText, parse_options(o)))) << '\n';
      return 0;
    };
  });
  auto* translateCmd = formulaCmd->add_subcommand("translate", "standard first-order translation");
  translateCmd->add_option("formula", formulaText)->required();
  add_constants(translateCmd, o);
  translateCmd->callback([&] {
    action = [&] {
      out << standard_translation(parse(formulaText, parse_options(o))) << '\n';
      return 0;
    };
  });
  auto* etaCmd = formulaCmd->add_subcommand("eta", "characterizing term of [a, 1] on an MV chain");
  std::string element;
  etaCmd->add_option("element", element, "element label")->required();
  add_algebra(etaCmd, o);
  etaCmd->callback([&] {
    action = [&] {
      const AlgebraPtr a = resolve_algebra(o.algebra);
      const auto e = a->find(element);
      if (!e) throw Error(Errc::UnknownConstant, element + " is not an element of " + a->name());
      out << render(characterizing_formula(*a, *e)) << '\n';
      return 0;
    };
  });

  // model
  auto* modelCmd = app.add_subcommand("model", "evaluate formulas in model files");
  modelCmd->require_subcommand(1);
  std::string modelPath;
  std::optional<std::string> worldName;
  auto* evalCmd = modelCmd->add_subcommand("eval", "value at one world or at every world");
  evalCmd->add_option("model", modelPath)->required();
  evalCmd->add_option("formula", formulaText)->required();
  evalCmd->add_option("world", worldName);
  evalCmd->callback([&] {
    action = [&] {
      const KripkeModel m = load_model(modelPath);
      ParseOptions p;
      p.allowConstants = m.constants;
      const Formula f = parse(formulaText, p);
      if (worldName) {
        const auto w = m.frame.world_index(*worldName);
        if (!w) throw Error(Errc::BadParam, "unknown world " + *worldName);
        out << m.algebra->label(eval(m, f, *w)) << '\n';
        return 0;
      }
      const auto values = eval_all(m, f);
      for (std::size_t w = 0; w < values.size(); ++w) {
        out << m.frame.worlds[w] << ": " << m.algebra->label(values[w]) << '\n';
      }
      return 0;
    };
  });

  // search
  auto* searchCmd = app.add_subcommand("search", "bounded countermodel search");
  searchCmd->require_subcommand(1);
  std::vector<std::string> premises;
  for (const char* name : {"valid", "local", "global"}) {
    const std::string mode = name;
    auto* sub = searchCmd->add_subcommand(name, mode == "valid" ? "validity over the frame class"
                                                                : mode + " consequence from --premise");
    add_search(sub, o);
    sub->add_option("formula", formulaText)->required();
    if (mode != "valid") sub->add_option("--premise", premises, "premise formula (repeatable)");
    sub->callback([&, mode] {
      action = [&, mode] {
        const AlgebraPtr a = resolve_algebra(o.algebra);
        const FrameClass c = *parse_frame_class(o.frameClass);
        const Formula phi = parse(formulaText, parse_options(o));
        const auto gamma = parse_all(premises, o);
        Verdict v;
        if (mode == "valid") v = validity_search(a, c, phi, budget_of(o));
        else if (mode == "local") v = local_consequence_refute(a, c, gamma, phi, budget_of(o));
        else v = global_consequence_refute(a, c, gamma, phi, budget_of(o));
        return emit_verdict(out, v, o);
      };
    });
  }
  std::vector<std::string> formulaTexts;
  auto* defineCmd = searchCmd->add_subcommand("define", "do the formulas define the frame class");
  add_search(defineCmd, o);
  defineCmd->add_option("formulas", formulaTexts)->required();
  defineCmd->callback([&] {
    action = [&] {
      const AlgebraPtr a = resolve_algebra(o.algebra);
      const auto r = frame_definability_check(parse_all(formulaTexts, o), *parse_frame_class(o.frameClass), a,
                                              budget_of(o));
      std::string frameText;
      if (r.counterexample) {
        KripkeModel m = make_model(a, r.counterexample->size());
        m.frame = *r.counterexample;
        frameText = render_model_text(m);
      }
      if (json_lines(o)) {
        Json j;
        j["verdict"] = r.defines ? "defines-up-to" : "does-not-define";
        j["bound"] = o.maxWorlds;
        if (r.counterexample) {
          j["frameValidates"] = r.frameValidates;
          j["frameInClass"] = r.frameInClass;
          j["frame"] = frameText;
        }
        out << j.dump() << '\n';
      } else if (r.defines) {
        out << "verdict: defines-up-to " << o.maxWorlds << '\n';
      } else {
        out << "verdict: does-not-define (frame " << (r.frameValidates ? "validates" : "does not validate")
            << ", " << (r.frameInClass ? "in class" : "not in class") << ")\n"
            << frameText;
      }
      return r.defines ? 0 : kExitNegative;
    };
  });
  std::string variant = "fr";
  auto* discardCmd = searchCmd->add_subcommand("discard", "companion refutation over chains");
  add_search(discardCmd, o);
  discardCmd->add_option("--variant", variant, "fr, ifr or cfr");
  discardCmd->add_option("formula", formulaText)->required();
  discardCmd->callback([&] {
    action = [&] {
      const auto var = parse_companion_variant(variant);
      if (!var) throw Error(Errc::BadParam, "unknown companion variant " + variant);
      const AlgebraPtr a = resolve_algebra(o.algebra);
      const auto r = companion_discard(a, parse(formulaText, parse_options(o)), *var);
      std::string assignment;
      if (r.assignment) {
        for (const auto& [v, e] : *r.assignment) assignment += (assignment.empty() ? "" : " ") + v + "=" + a->label(e);
      }
      if (json_lines(o)) {
        Json j;
        j["verdict"] = r.discarded ? "discarded" : "inconclusive";
        j["companion"] = render(r.companionFormula);
        if (r.discarded) {
          j["assignment"] = assignment;
          j["model"] = render_model_text(*r.countermodel);
        }
        out << j.dump() << '\n';
      } else {
        out << "companion: " << render(r.companionFormula) << '\n';
        if (r.discarded) {
          out << "verdict: discarded\nassignment: " << assignment << '\n' << render_model_text(*r.countermodel);
        } else {
          out << "verdict: inconclusive\n";
        }
      }
      return r.discarded ? kExitNegative : 0;
    };
  });
  std::string delta, epsilon, deltaArgs = "p", epsilonArg = "p";
  bool witnessed = false;
  auto* liftCmd = searchCmd->add_subcommand("lift", "lift a non-modal entailment through boxes");
  add_algebra(liftCmd, o);
  add_constants(liftCmd, o);
  liftCmd->add_option("--delta", delta, "outer term")->required();
  liftCmd->add_option("--delta-args", deltaArgs, "comma separated variables of delta");
  liftCmd->add_option("--epsilon", epsilon, "inner term")->required();
  liftCmd->add_option("--epsilon-arg", epsilonArg, "variable of epsilon");
  liftCmd->add_flag("--witnessed", witnessed, "modally witnessed models");
  liftCmd->add_option("formulas", formulaTexts, "phi_1 ... phi_n phi")->required();
  liftCmd->callback([&] {
    action = [&] {
      const AlgebraPtr a = resolve_algebra(o.algebra);
      auto fs = parse_all(formulaTexts, o);
      const Formula phi = fs.back();
      fs.pop_back();
      const auto r = companion_lift(a, parse(delta, parse_options(o)), split_commas(deltaArgs),
                                    parse(epsilon, parse_options(o)), epsilonArg, fs, phi, witnessed);
      out << "premise: " << render(r.premise) << '\n' << "conclusion: " << render(r.conclusion) << '\n';
      return 0;
    };
  });

  // calc
  auto* calcCmd = app.add_subcommand("calc", "Hilbert-style derivations");
  calcCmd->require_subcommand(1);
  std::string derivationPath;
  auto* checkCmd = calcCmd->add_subcommand("check", "verify a derivation file");
  checkCmd->add_option("derivation", derivationPath)->required();
  checkCmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json-lines"}));
  checkCmd->callback([&] {
    action = [&] {
      const Derivation d = load_derivation(derivationPath);
      const Calculus calc = resolve_calculus(d.calculus, d.constants);
      const CheckResult r = check_derivation(calc, d);
      if (json_lines(o)) {
        Json j;
        j["verdict"] = r.ok ? "ok" : "invalid";
        if (!r.ok) {
          j["step"] = r.step ? Json(*r.step) : Json(nullptr);
          j["reason"] = r.reason;
        }
        out << j.dump() << '\n';
      } else if (r.ok) {
        out << "ok: " << d.steps.size() << " steps\n";
      } else {
        out << "invalid";
        if (r.step) out << " at step " << *r.step;
        out << ": " << r.reason << '\n';
      }
      return r.ok ? 0 : kExitNegative;
    };
  });
  auto* bookCmd = calcCmd->add_subcommand("bookkeeping", "book-keeping and witnessing axioms");
  bookCmd->add_option("algebra", algebraSpec)->required();
  add_constants(bookCmd, o);
  bookCmd->callback([&] {
    action = [&] {
      const AlgebraPtr a = resolve_algebra(algebraSpec);
      const bool constants = o.constants == "on";
      for (const auto& f : generate_bookkeeping(*a, constants)) out << render(f) << '\n';
      out << render(generate_witnessing(*a, constants)) << '\n';
      return 0;
    };
  });

  // reproduce
  auto* reproduceCmd = app.add_subcommand("reproduce", "run reproduction scenarios");
  std::string scenario;
  bool verbose = false;
  reproduceCmd->add_option("scenario", scenario, "scenario id or all")->required();
  reproduceCmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  reproduceCmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json-lines"}));
  reproduceCmd->add_flag("-v,--verbose", verbose, "print every transcript");
  reproduceCmd->callback([&] {
    action = [&] {
      std::vector<std::string> ids;
      if (scenario == "all") {
        for (const auto& s : scenario_list()) ids.push_back(s.id);
      } else {
        ids.push_back(scenario);
      }
      bool all = true;
      for (const auto& id : ids) {
        const ScenarioResult r = run_scenario(id, o.jobs);
        all = all && r.passed;
        if (json_lines(o)) {
          Json j;
          j["scenario"] = r.id;
          j["passed"] = r.passed;
          j["transcript"] = r.transcript;
          out << j.dump() << '\n';
          continue;
        }
        out << (r.passed ? "PASS " : "FAIL ") << r.id << '\n';
        if (!r.passed || verbose) out << r.transcript;
      }
      return all ? 0 : kExitNegative;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }
  if (!action) return kExitUsage;
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::FileError ? kExitFile : kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace mvml
