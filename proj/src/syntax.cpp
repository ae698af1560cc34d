#include "mvml/syntax.hpp"

#include <cctype>
#include <vector>

#include "mvml/error.hpp"

namespace mvml {

namespace {

enum class Tok {
  Ident,
  Meta,
  Number,
  Const,
  MetaConst,
  Not,
  Box,
  Diamond,
  Star,
  Plus,
  And,
  Or,
  Arrow,
  Iff,
  LParen,
  RParen,
  Caret,
  Dot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  Lexer(std::string_view text, const ParseOptions& opts) : s_(text), opts_(opts) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ >= s_.size()) break;
      out.push_back(next());
    }
    out.push_back({Tok::End, "", s_.size()});
    return out;
  }

 private:
  Token next() {
    const std::size_t start = i_;
    const char c = s_[i_];
    auto sym = [&](Tok k, std::size_t len) {
      i_ += len;
      return Token{k, std::string(s_.substr(start, len)), start};
    };
    if (starts("<->")) return sym(Tok::Iff, 3);
    if (starts("->")) return sym(Tok::Arrow, 2);
    if (starts("/\\")) return sym(Tok::And, 2);
    if (starts("\\/")) return sym(Tok::Or, 2);
    if (starts("[]")) return sym(Tok::Box, 2);
    if (starts("<>")) return sym(Tok::Diamond, 2);
    switch (c) {
      case '~': return sym(Tok::Not, 1);
      case '*': return sym(Tok::Star, 1);
      case '+': return sym(Tok::Plus, 1);
      case '(': return sym(Tok::LParen, 1);
      case ')': return sym(Tok::RParen, 1);
      case '^': return sym(Tok::Caret, 1);
      case '.': return sym(Tok::Dot, 1);
      case '@': return constant();
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return {Tok::Number, std::string(s_.substr(start, i_ - start)), start};
    }
    if (std::islower(static_cast<unsigned char>(c)) ||
        (c == '$' && opts_.allowReserved) ||
        (std::isupper(static_cast<unsigned char>(c)) && opts_.allowSchema)) {
      ++i_;
      while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
      const Tok kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::Meta : Tok::Ident;
      return {kind, std::string(s_.substr(start, i_ - start)), start};
    }
    if (c == '$') fail(start, "variables starting with '$' are reserved");
    fail(start, std::string("unexpected character '") + c + "'");
  }

  Token constant() {
    const std::size_t start = i_++;
    if (i_ < s_.size() && s_[i_] == '?') {
      if (!opts_.allowSchema) fail(start, "element metavariables are only allowed in schemas");
      const std::size_t nameStart = ++i_;
      while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
      if (i_ == nameStart) fail(start, "expected a metavariable name after '@?'");
      return {Tok::MetaConst, std::string(s_.substr(nameStart, i_ - nameStart)), start};
    }
    const std::size_t labelStart = i_;
    if (i_ < s_.size() && s_[i_] == '(') {
      int depth = 0;
      do {
        if (s_[i_] == '(') ++depth;
        if (s_[i_] == ')') --depth;
        ++i_;
      } while (i_ < s_.size() && depth > 0);
      if (depth != 0) fail(start, "unbalanced parentheses in constant label");
    } else {
      while (i_ < s_.size()) {
        const char c = s_[i_];
        const bool slash = c == '/' && i_ + 1 < s_.size() &&
                           std::isdigit(static_cast<unsigned char>(s_[i_ + 1]));
        if (!(ident_char(c) || c == '.' || c == '\'' || slash)) break;
        ++i_;
      }
    }
    if (i_ == labelStart) fail(start, "expected a label after '@'");
    if (!opts_.allowConstants) {
      throw Error(Errc::UnknownConstant, "constant '" + std::string(s_.substr(start, i_ - start)) +
                                             "' used while constants are off");
    }
    return {Tok::Const, std::string(s_.substr(labelStart, i_ - labelStart)), start};
  }

  bool starts(std::string_view p) const { return s_.substr(i_, p.size()) == p; }

  [[noreturn]] void fail(std::size_t pos, const std::string& what) const {
    throw Error(Errc::SyntaxError, "at column " + std::to_string(pos + 1) + ": " + what);
  }

  std::string_view s_;
  const ParseOptions& opts_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  Formula run() {
    Formula f = iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  Formula iff() {
    Formula f = arrow();
    while (accept(Tok::Iff)) f = Formula::equiv(f, arrow());
    return f;
  }

  Formula arrow() {
    Formula f = disj();
    if (accept(Tok::Arrow)) return Formula::implies(f, arrow());
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (accept(Tok::Or)) f = Formula::disj(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = oplus();
    while (accept(Tok::And)) f = Formula::conj(f, oplus());
    return f;
  }

  Formula oplus() {
    Formula f = fusion();
    while (accept(Tok::Plus)) f = Formula::oplus(f, fusion());
    return f;
  }

  Formula fusion() {
    Formula f = unary();
    while (accept(Tok::Star)) f = Formula::fusion(f, unary());
    return f;
  }

  Formula unary() {
    if (accept(Tok::Not)) return Formula::neg(unary());
    if (accept(Tok::Box)) return Formula::box(unary());
    if (accept(Tok::Diamond)) return Formula::diamond(unary());
    if (peek().kind == Tok::Number && t_[k_ + 1].kind == Tok::Dot) {
      const unsigned m = count(advance());
      advance();
      return Formula::times(m, unary());
    }
    return postfix();
  }

  Formula postfix() {
    Formula f = atom();
    while (accept(Tok::Caret)) {
      if (peek().kind != Tok::Number) fail("expected an exponent after '^'");
      f = Formula::power(f, count(advance()));
    }
    return f;
  }

  Formula atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Number:
        if (tok.text == "0" || tok.text == "1") {
          advance();
          return tok.text == "0" ? Formula::zero() : Formula::one();
        }
        fail("numbers other than 0 and 1 need '@' or a following '.'");
      case Tok::Ident: return Formula::var(advance().text);
      case Tok::Meta: return Formula::meta(advance().text);
      case Tok::Const: return Formula::constant(advance().text);
      case Tok::MetaConst: return Formula::meta_const(advance().text);
      case Tok::LParen: {
        advance();
        Formula f = iff();
        if (!accept(Tok::RParen)) fail("expected ')'");
        return f;
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + tok.text + "'");
    }
  }

  unsigned count(const Token& tok) {
    if (tok.text.size() > 3) fail("multiplier too large");
    return static_cast<unsigned>(std::stoul(tok.text));
  }

  const Token& peek() const { return t_[k_]; }
  const Token& advance() { return t_[k_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++k_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, "at column " + std::to_string(peek().pos + 1) + ": " + what);
  }

  std::vector<Token> t_;
  std::size_t k_ = 0;
};

// Rendering. Levels, loosest first.
constexpr int kIff = 1, kArrow = 2, kOr = 3, kAnd = 4, kPlus = 5, kStar = 6, kUnary = 7, kAtom = 8;

bool is_neg(const Formula& f) { return f.op() == Op::Implies && f.rhs().op() == Op::Zero; }

std::string show(const Formula& f, int& level);

std::string wrap(const Formula& f, bool parens) {
  int level = 0;
  std::string s = show(f, level);
  (void)level;
  return parens ? "(" + s + ")" : s;
}

std::string child(const Formula& f, int minLevel) {
  int level = 0;
  std::string s = show(f, level);
  return level < minLevel ? "(" + s + ")" : s;
}

std::string binary(const Formula& a, const Formula& b, const char* sym, int level, bool rightAssoc) {
  const int leftMin = rightAssoc ? level + 1 : level;
  const int rightMin = rightAssoc ? level : level + 1;
  return child(a, leftMin) + " " + sym + " " + child(b, rightMin);
}

std::string show(const Formula& f, int& level) {
  switch (f.op()) {
    case Op::Var:
    case Op::MetaVar: level = kAtom; return f.name();
    case Op::Zero: level = kAtom; return "0";
    case Op::One: level = kAtom; return "1";
    case Op::Const: level = kAtom; return "@" + f.name();
    case Op::MetaConst: level = kAtom; return "@?" + f.name();
    case Op::Box: level = kUnary; return "[]" + child(f.lhs(), kUnary);
    case Op::Diamond: level = kUnary; return "<>" + child(f.lhs(), kUnary);
    case Op::And: level = kAnd; return binary(f.lhs(), f.rhs(), "/\\", kAnd, false);
    case Op::Or: level = kOr; return binary(f.lhs(), f.rhs(), "\\/", kOr, false);
    case Op::Fusion:
      if (f.lhs().op() == Op::Implies && f.rhs().op() == Op::Implies &&
          f.lhs().lhs() == f.rhs().rhs() && f.lhs().rhs() == f.rhs().lhs()) {
        level = kIff;
        return binary(f.lhs().lhs(), f.lhs().rhs(), "<->", kIff, false);
      }
      level = kStar;
      return binary(f.lhs(), f.rhs(), "*", kStar, false);
    case Op::Implies:
      if (is_neg(f)) {
        const Formula& body = f.lhs();
        if (body.op() == Op::Fusion && is_neg(body.lhs()) && is_neg(body.rhs())) {
          level = kPlus;
          return binary(body.lhs().lhs(), body.rhs().lhs(), "+", kPlus, false);
        }
        level = kUnary;
        return "~" + child(body, kUnary);
      }
      level = kArrow;
      return binary(f.lhs(), f.rhs(), "->", kArrow, true);
  }
  level = kAtom;
  return "?";
}

}  // namespace

Formula parse(std::string_view text, const ParseOptions& options) {
  return Parser(Lexer(text, options).run()).run();
}

Formula parse_schema(std::string_view text) {
  ParseOptions opts;
  opts.allowSchema = true;
  return parse(text, opts);
}

std::string render(const Formula& f) { return wrap(f, false); }

}  // namespace mvml
