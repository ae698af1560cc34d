#include "mvml/model_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "mvml/algebra_io.hpp"
#include "mvml/error.hpp"

namespace mvml {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw Error(Errc::BadParam, "model line " + std::to_string(line) + ": " + what);
}

}  // namespace

KripkeModel parse_model_text(std::string_view text) {
  struct Entry {
    std::size_t line;
    std::vector<std::string> parts;
  };
  std::string algebraRef, constants = "off", defaultLabel;
  std::vector<std::string> worlds;
  std::vector<Entry> rEntries, valEntries;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) bad(lineNo, "expected 'key:'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "algebra") {
      algebraRef = value;
    } else if (key == "constants") {
      if (value != "on" && value != "off") bad(lineNo, "constants must be on or off");
      constants = value;
    } else if (key == "worlds") {
      worlds = words(value);
    } else if (key == "default") {
      defaultLabel = value;
    } else if (key == "R" || key == "val") {
      // "R: wi wj = label" or "val: p @ w = label"
      const auto eq = value.rfind('=');
      if (eq == std::string::npos) bad(lineNo, "expected '= label'");
      auto lhs = words(value.substr(0, eq));
      const std::string label = trim(value.substr(eq + 1));
      if (key == "val") {
        if (lhs.size() != 3 || lhs[1] != "@") bad(lineNo, "expected 'val: var @ world = label'");
        valEntries.push_back({lineNo, {lhs[0], lhs[2], label}});
      } else {
        if (lhs.size() != 2) bad(lineNo, "expected 'R: world world = label'");
        rEntries.push_back({lineNo, {lhs[0], lhs[1], label}});
      }
    } else {
      bad(lineNo, "unknown key '" + key + "'");
    }
  }
  if (algebraRef.empty()) throw Error(Errc::BadParam, "model has no 'algebra:' line");
  if (worlds.empty()) throw Error(Errc::BadParam, "model has no worlds");
  KripkeModel m = make_model(resolve_algebra(algebraRef), worlds.size());
  m.algebraRef = algebraRef;
  m.constants = constants == "on";
  m.frame.worlds = worlds;
  const ResiduatedLattice& A = *m.algebra;
  auto element = [&](std::size_t line, const std::string& label) {
    auto e = A.find(label);
    if (!e) bad(line, "unknown element '" + label + "'");
    return *e;
  };
  auto world = [&](std::size_t line, const std::string& name) {
    auto w = m.frame.world_index(name);
    if (!w) bad(line, "unknown world '" + name + "'");
    return *w;
  };
  if (!defaultLabel.empty()) m.defaultValue = element(0, defaultLabel);
  for (const auto& e : rEntries) {
    m.frame.set(world(e.line, e.parts[0]), world(e.line, e.parts[1]), element(e.line, e.parts[2]));
  }
  for (const auto& e : valEntries) {
    if (e.parts[0].empty() || !std::islower(static_cast<unsigned char>(e.parts[0][0]))) {
      bad(e.line, "variable names start with a lowercase letter");
    }
    m.set_value(e.parts[0], world(e.line, e.parts[1]), element(e.line, e.parts[2]));
  }
  return m;
}

KripkeModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FileError, "cannot open model '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str());
}

std::string render_model_text(const KripkeModel& m) {
  const ResiduatedLattice& A = *m.algebra;
  const Elem dflt = m.defaultValue.value_or(A.top());
  std::ostringstream out;
  out << "algebra: " << m.algebraRef << '\n';
  out << "constants: " << (m.constants ? "on" : "off") << '\n';
  out << "worlds:";
  for (const auto& w : m.frame.worlds) out << ' ' << w;
  out << '\n';
  if (dflt != A.top()) out << "default: " << A.label(dflt) << '\n';
  for (std::size_t w = 0; w < m.size(); ++w) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m.frame.r(w, v) != A.bottom()) {
        out << "R: " << m.frame.worlds[w] << ' ' << m.frame.worlds[v] << " = " << A.label(m.frame.r(w, v))
            << '\n';
      }
    }
  }
  for (const auto& [var, row] : m.valuation) {
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (row[w] != dflt) {
        out << "val: " << var << " @ " << m.frame.worlds[w] << " = " << A.label(row[w]) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace mvml
