#include "mvml/algebra_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "mvml/error.hpp"

namespace mvml {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class PresetParser {
 public:
  explicit PresetParser(std::string_view text) : text_(text) {}

  ResiduatedLattice parse_all() {
    ResiduatedLattice a = parse();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return a;
  }

 private:
  ResiduatedLattice parse() {
    const std::string name = identifier();
    if (name == "boolean2") return boolean2();
    if (name == "wnm5") return wnm5();
    if (name == "mtl6") return mtl6();
    if (name == "lukasiewicz" || name == "godel") {
      expect('(');
      const int n = integer();
      expect(')');
      return name == "godel" ? godel(n) : lukasiewicz(n);
    }
    if (name == "product" || name == "ordinal_sum") {
      expect('(');
      ResiduatedLattice a = parse();
      expect(',');
      ResiduatedLattice b = parse();
      expect(')');
      return name == "product" ? product(a, b) : ordinal_sum(a, b);
    }
    fail("unknown preset '" + name + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected preset name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 4) fail("expected a small integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::BadParam, "preset '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

ResiduatedLattice preset(std::string_view expr) { return PresetParser(expr).parse_all(); }

bool is_preset_expression(std::string_view expr) {
  expr = trim(expr);
  for (std::string_view name : {"lukasiewicz", "godel", "boolean2", "wnm5", "mtl6", "product",
                                "ordinal_sum"}) {
    if (expr.substr(0, name.size()) == name) {
      const std::string_view rest = trim(expr.substr(name.size()));
      if (rest.empty() || rest.front() == '(') return true;
    }
  }
  return false;
}

ResiduatedLattice parse_algebra_text(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (!trim(line).empty()) lines.emplace_back(trim(line));
    }
  }
  std::string name = "unnamed";
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> leqRows, fusionRows;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(Errc::BadParam, "expected 'key:' in '" + line + "'");
    const std::string key(trim(std::string_view(line).substr(0, colon)));
    const std::string_view value = trim(std::string_view(line).substr(colon + 1));
    if (key == "name") {
      name = std::string(value);
    } else if (key == "universe") {
      universe = words(value);
    } else if (key == "leq" || key == "fusion") {
      auto& rows = key == "leq" ? leqRows : fusionRows;
      if (universe.empty()) throw Error(Errc::BadParam, "'universe:' must precede '" + key + ":'");
      if (!value.empty()) rows.push_back(words(value));
      while (rows.size() < universe.size()) {
        if (++i >= lines.size()) throw Error(Errc::BadParam, "'" + key + ":' has too few rows");
        rows.push_back(words(lines[i]));
      }
    } else {
      throw Error(Errc::BadParam, "unknown key '" + key + "'");
    }
  }
  if (universe.empty()) throw Error(Errc::BadParam, "missing 'universe:'");
  if (leqRows.empty() || fusionRows.empty()) throw Error(Errc::BadParam, "missing 'leq:' or 'fusion:'");
  std::vector<std::vector<bool>> leq;
  for (const auto& row : leqRows) {
    std::vector<bool> r;
    for (const auto& w : row) {
      if (w != "0" && w != "1") throw Error(Errc::BadParam, "leq entries must be 0 or 1");
      r.push_back(w == "1");
    }
    leq.push_back(std::move(r));
  }
  return build_lattice(name, universe, leq, fusionRows);
}

std::string render_algebra_text(const ResiduatedLattice& a) {
  std::ostringstream out;
  out << "name: " << a.name() << "\nuniverse:";
  for (const auto& l : a.labels()) out << ' ' << l;
  out << "\nleq:\n";
  for (Elem x : a.elements()) {
    for (Elem y : a.elements()) out << (y ? " " : "") << (a.leq(x, y) ? 1 : 0);
    out << '\n';
  }
  out << "fusion:\n";
  for (Elem x : a.elements()) {
    for (Elem y : a.elements()) out << (y ? " " : "") << a.label(a.fuse(x, y));
    out << '\n';
  }
  return out.str();
}

AlgebraPtr resolve_algebra(std::string_view specOrPath) {
  const std::string_view spec = trim(specOrPath);
  if (is_preset_expression(spec)) return std::make_shared<const ResiduatedLattice>(preset(spec));
  const std::filesystem::path path{std::string(spec)};
  std::ifstream in(path);
  if (!in) throw Error(Errc::FileError, "cannot open algebra '" + std::string(spec) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return std::make_shared<const ResiduatedLattice>(parse_algebra_text(buf.str()));
}

namespace {

void table(std::ostringstream& out, const ResiduatedLattice& a, const char* op,
           Elem (ResiduatedLattice::*f)(Elem, Elem) const) {
  std::size_t width = 1;
  for (const auto& l : a.labels()) width = std::max(width, l.size());
  auto cell = [&](const std::string& s) {
    out << s << std::string(width + 1 - s.size(), ' ');
  };
  cell(op);
  out << "|";
  for (const auto& l : a.labels()) {
    out << ' ';
    cell(l);
  }
  out << '\n';
  for (Elem x : a.elements()) {
    cell(a.label(x));
    out << "|";
    for (Elem y : a.elements()) {
      out << ' ';
      cell(a.label((a.*f)(x, y)));
    }
    out << '\n';
  }
}

std::string set_text(const ResiduatedLattice& a, const std::vector<Elem>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + a.label(s[i]);
  return out + "}";
}

}  // namespace

std::string describe_algebra(const ResiduatedLattice& a) {
  std::ostringstream out;
  out << "algebra " << a.name() << " (" << a.size() << " elements)\n";
  table(out, a, "*", &ResiduatedLattice::fuse);
  table(out, a, "->", &ResiduatedLattice::imp);
  const auto r = classify(a);
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  out << "idempotents: " << set_text(a, r.idempotents) << '\n'
      << "booleans: " << set_text(a, r.booleans) << '\n'
      << "coatoms: " << set_text(a, r.coatoms) << '\n'
      << "distributives: " << set_text(a, r.distributives) << '\n'
      << "chain: " << flag(r.isChain) << '\n'
      << "top join-irreducible: " << flag(r.topJoinIrreducible) << '\n'
      << "heyting: " << flag(r.isHeyting) << '\n'
      << "mtl: " << flag(r.isMTL) << '\n'
      << "bl: " << flag(r.isBL) << '\n'
      << "mv: " << flag(r.isMV) << '\n'
      << "involutive: " << flag(r.isInvolutive) << '\n'
      << "simple: " << flag(r.isSimple) << '\n';
  for (const auto& law : check_laws(a)) {
    out << "law " << law.law << ": ";
    if (law.holds) {
      out << "holds\n";
    } else {
      out << "fails at (" << a.label(law.witness[0]) << ", " << a.label(law.witness[1]) << ", "
          << a.label(law.witness[2]) << ")\n";
    }
  }
  return out.str();
}

}  // namespace mvml
