#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mvml/calculus.hpp"
#include "mvml/error.hpp"
#include "mvml/syntax.hpp"

namespace mvml {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parse_number(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": expected a step number, got '" + s + "'");
  }
  return std::stoul(s);
}

Justification parse_justification(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": missing justification");
  using K = Justification::Kind;
  Justification j;
  const std::string& head = words[0];
  std::size_t first = 1;
  if (head == "assume") {
    j.kind = K::Assumption;
  } else if (head == "axiom") {
    if (words.size() != 2) throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": axiom takes one id");
    j.kind = K::Axiom;
    j.id = words[1];
    first = 2;
  } else if (head == "nmtaut") {
    j.kind = K::NonModalTautology;
  } else if (head == "mp") {
    j.kind = K::ModusPonens;
  } else if (head == "nec") {
    j.kind = K::Necessity;
  } else if (head == "mon") {
    j.kind = K::Monotonicity;
  } else if (head == "rule") {
    if (words.size() < 2) throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": rule needs an id");
    j.kind = K::RuleApp;
    j.id = words[1];
    first = 2;
  } else {
    throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": unknown justification '" + head + "'");
  }
  for (std::size_t i = first; i < words.size(); ++i) j.premises.push_back(parse_number(words[i], line));
  return j;
}

}  // namespace

Derivation parse_derivation_text(std::string_view text) {
  Derivation d;
  std::istringstream in{std::string(text)};
  std::size_t lineNo = 0;
  bool haveCalculus = false;
  for (std::string raw; std::getline(in, raw);) {
    ++lineNo;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error(Errc::SyntaxError, "line " + std::to_string(lineNo) + ": expected 'key: value'");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string rest = trim(line.substr(colon + 1));
    if (key == "calculus") {
      d.calculus = rest;
      haveCalculus = true;
    } else if (key == "constants") {
      if (rest != "on" && rest != "off") {
        throw Error(Errc::SyntaxError, "line " + std::to_string(lineNo) + ": constants must be on or off");
      }
      d.constants = rest == "on";
    } else {
      const auto semi = rest.rfind(';');
      if (semi == std::string::npos) {
        throw Error(Errc::SyntaxError, "line " + std::to_string(lineNo) + ": expected '<formula> ; <justification>'");
      }
      Step s;
      s.number = parse_number(key, lineNo);
      ParseOptions opts;
      opts.allowConstants = true;
      try {
        s.formula = parse(trim(rest.substr(0, semi)), opts);
      } catch (const Error& e) {
        const std::string what = e.what();
        throw Error(e.code(), "line " + std::to_string(lineNo) + ": " + what.substr(what.find(": ") + 2));
      }
      s.justification = parse_justification(rest.substr(semi + 1), lineNo);
      d.steps.push_back(std::move(s));
    }
  }
  if (!haveCalculus) throw Error(Errc::SyntaxError, "missing 'calculus:' line");
  return d;
}

Derivation load_derivation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FileError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_derivation_text(buf.str());
}

std::string render_derivation_text(const Derivation& d) {
  std::ostringstream out;
  out << "calculus: " << d.calculus << '\n';
  if (d.constants) out << "constants: on\n";
  using K = Justification::Kind;
  for (const Step& s : d.steps) {
    out << s.number << ": " << render(s.formula) << " ; ";
    const auto& j = s.justification;
    switch (j.kind) {
      case K::Assumption: out << "assume"; break;
      case K::Axiom: out << "axiom " << j.id; break;
      case K::NonModalTautology: out << "nmtaut"; break;
      case K::ModusPonens: out << "mp"; break;
      case K::Necessity: out << "nec"; break;
      case K::Monotonicity: out << "mon"; break;
      case K::RuleApp: out << "rule " << j.id; break;
    }
    for (std::size_t p : j.premises) out << ' ' << p;
    out << '\n';
  }
  return out.str();
}

}  // namespace mvml
