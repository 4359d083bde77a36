#include "reltype/parser.hpp"

#include <cctype>
#include <set>

namespace reltype {

namespace {

struct Token {
  enum class Kind { Ident, Int, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() &&
                              text_[pos_ + 1] == '/')) {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Kind::Ident;
      tok_.text = text_.substr(start, pos_ - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      tok_.kind = Token::Kind::Int;
      tok_.text = text_.substr(start, pos_ - start);
    } else if (std::string("+-*/^()[],;=").find(c) != std::string::npos) {
      tok_.kind = Token::Kind::Sym;
      tok_.text = std::string(1, c);
      ++pos_;
    } else {
      throw ScriptError("unexpected character '" + std::string(1, c) + "'",
                        line_, col_);
    }
    col_ = tok_.col + static_cast<int>(tok_.text.size());
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class PolyParser {
 public:
  PolyParser(Lexer& lex, RingPtr ring) : lex_(lex), ring_(std::move(ring)) {}

  Polynomial parse_expr() { return continue_sums(parse_term()); }

  // Finishes an expression whose first factor was already consumed
  // (used when an argument starts with an integer token that turns out
  // to be part of a larger expression).
  Polynomial continue_expr(Polynomial lead) {
    lead = maybe_power(std::move(lead));
    return continue_sums(continue_products(std::move(lead)));
  }

 private:
  bool is_sym(const char* s) const {
    return lex_.peek().kind == Token::Kind::Sym && lex_.peek().text == s;
  }

  Polynomial continue_sums(Polynomial r) {
    while (is_sym("+") || is_sym("-")) {
      bool plus = lex_.next().text == "+";
      Polynomial t = parse_term();
      r = plus ? r + t : r - t;
    }
    return r;
  }

  Polynomial continue_products(Polynomial r) {
    while (is_sym("*") || is_sym("/")) {
      bool mul = lex_.next().text == "*";
      Token at = lex_.peek();
      Polynomial f = parse_factor();
      if (mul) {
        r = r * f;
      } else {
        if (!f.is_constant() || f.is_zero())
          throw ScriptError("division only by nonzero constants", at.line,
                            at.col);
        r = r.scaled(f.leading_coeff().inv());
      }
    }
    return r;
  }

  Polynomial parse_term() { return continue_products(parse_factor()); }

  Polynomial maybe_power(Polynomial base) {
    if (is_sym("^")) {
      Token caret = lex_.next();
      Token e = lex_.next();
      if (e.kind != Token::Kind::Int)
        throw ScriptError("exponent must be a nonnegative integer", caret.line,
                          caret.col);
      base = base.pow(std::stoul(e.text));
    }
    return base;
  }

  Polynomial parse_factor() {
    int sign = 1;
    while (is_sym("-") || is_sym("+")) {
      if (lex_.next().text == "-") sign = -sign;
    }
    Polynomial base = maybe_power(parse_atom());
    return sign < 0 ? -base : base;
  }

  Polynomial parse_atom() {
    Token t = lex_.next();
    if (t.kind == Token::Kind::Int)
      return Polynomial::constant(ring_, Coeff::parse(t.text, ring_->field()));
    if (t.kind == Token::Kind::Ident) {
      int idx = ring_->var_index(t.text);
      if (idx < 0)
        throw ScriptError("unknown variable '" + t.text + "'", t.line, t.col);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (t.kind == Token::Kind::Sym && t.text == "(") {
      Polynomial r = parse_expr();
      Token close = lex_.next();
      if (close.kind != Token::Kind::Sym || close.text != ")")
        throw ScriptError("expected ')'", close.line, close.col);
      return r;
    }
    throw ScriptError("expected polynomial", t.line, t.col);
  }

  Lexer& lex_;
  RingPtr ring_;
};

Token expect_sym(Lexer& lex, const char* s) {
  Token t = lex.next();
  if (t.kind != Token::Kind::Sym || t.text != s)
    throw ScriptError(std::string("expected '") + s + "'", t.line, t.col);
  return t;
}

Token expect_ident(Lexer& lex, const char* what) {
  Token t = lex.next();
  if (t.kind != Token::Kind::Ident)
    throw ScriptError(std::string("expected ") + what, t.line, t.col);
  return t;
}

// Commands whose polynomial arguments live in the parameter ring k[t]
// rather than the script ring.
bool uses_parameter_ring(const std::string& cmd) { return cmd == "curve"; }

bool at_arg_end(const Lexer& lex) {
  return lex.peek().kind == Token::Kind::Sym &&
         (lex.peek().text == "," || lex.peek().text == ")");
}

ScriptArg parse_arg(Lexer& lex, const RingPtr& ring) {
  ScriptArg arg;
  Token first = lex.peek();
  arg.line = first.line;
  arg.col = first.col;
  // Lone identifier that is not a ring variable: a name reference.
  if (first.kind == Token::Kind::Ident && ring->var_index(first.text) < 0) {
    Token t = lex.next();
    if (at_arg_end(lex)) {
      arg.kind = ScriptArg::Kind::Name;
      arg.name = t.text;
      return arg;
    }
    throw ScriptError("unknown variable '" + t.text + "'", t.line, t.col);
  }
  // Lone integer literal.
  if (first.kind == Token::Kind::Int) {
    Token t = lex.next();
    Polynomial lead =
        Polynomial::constant(ring, Coeff::parse(t.text, ring->field()));
    if (at_arg_end(lex)) {
      arg.kind = ScriptArg::Kind::Int;
      arg.integer = std::stol(t.text);
      arg.poly = lead;
      return arg;
    }
    PolyParser pp(lex, ring);
    arg.kind = ScriptArg::Kind::Poly;
    arg.poly = pp.continue_expr(std::move(lead));
    return arg;
  }
  PolyParser pp(lex, ring);
  arg.kind = ScriptArg::Kind::Poly;
  arg.poly = pp.parse_expr();
  return arg;
}

std::vector<ScriptArg> parse_args(Lexer& lex, const RingPtr& ring) {
  std::vector<ScriptArg> args;
  expect_sym(lex, "(");
  if (!(lex.peek().kind == Token::Kind::Sym && lex.peek().text == ")")) {
    args.push_back(parse_arg(lex, ring));
    while (lex.peek().kind == Token::Kind::Sym && lex.peek().text == ",") {
      lex.next();
      args.push_back(parse_arg(lex, ring));
    }
  }
  expect_sym(lex, ")");
  expect_sym(lex, ";");
  return args;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Lexer lex(text);
  PolyParser pp(lex, ring);
  Polynomial r = pp.parse_expr();
  Token t = lex.next();
  if (t.kind != Token::Kind::End)
    throw ScriptError("trailing input after polynomial", t.line, t.col);
  return r;
}

Script parse_script(const std::string& text, const ParseOptions& opts) {
  Lexer lex(text);
  Token kw = lex.next();
  if (kw.kind == Token::Kind::End)
    throw ScriptError("empty script", kw.line, kw.col);
  if (kw.kind != Token::Kind::Ident || kw.text != "ring")
    throw ScriptError("script must start with a ring declaration", kw.line,
                      kw.col);
  Token ft = expect_ident(lex, "field (QQ or GF(p))");
  FieldDesc field;
  if (ft.text == "QQ") {
    field.characteristic = 0;
  } else if (ft.text == "GF") {
    expect_sym(lex, "(");
    Token p = lex.next();
    if (p.kind != Token::Kind::Int)
      throw ScriptError("expected prime", p.line, p.col);
    field.characteristic = std::stoull(p.text);
    if (!is_prime_u64(field.characteristic))
      throw ScriptError("GF(p): " + p.text + " is not prime", p.line, p.col);
    expect_sym(lex, ")");
  } else {
    throw ScriptError("unknown field '" + ft.text + "'", ft.line, ft.col);
  }
  if (opts.field_override) field = *opts.field_override;

  expect_sym(lex, "[");
  std::vector<std::string> vars;
  vars.push_back(expect_ident(lex, "variable name").text);
  while (lex.peek().kind == Token::Kind::Sym && lex.peek().text == ",") {
    lex.next();
    vars.push_back(expect_ident(lex, "variable name").text);
  }
  Token close = lex.next();
  if (close.kind != Token::Kind::Sym || close.text != "]")
    throw ScriptError("expected ']'", close.line, close.col);
  expect_sym(lex, ";");

  OrderSpec order;
  if (opts.order_override) order = *opts.order_override;
  Script script;
  try {
    script.ring = make_ring(field, vars, order);
  } catch (const std::invalid_argument& e) {
    throw ScriptError(e.what(), kw.line, kw.col);
  }

  static const std::set<std::string> kCommands = {
      "rt",       "rees",     "syzygies",      "trinomialize",
      "jdual",    "expected", "hilbert_burch", "intersect",
      "colon",    "dim",      "member",        "curve",
      "hn",       "cycle",    "strip",         "equidim"};

  while (lex.peek().kind != Token::Kind::End) {
    Token name = expect_ident(lex, "statement");
    if (name.text == "ring")
      throw ScriptError("only one ring per script", name.line, name.col);
    bool is_decl =
        lex.peek().kind == Token::Kind::Sym && lex.peek().text == "=";
    if (is_decl) {
      lex.next();  // '='
      Token what = expect_ident(lex, "'ideal' or 'matrix'");
      if (what.text != "ideal" && what.text != "matrix")
        throw ScriptError("expected 'ideal' or 'matrix'", what.line, what.col);
      ScriptDecl decl;
      decl.name = name.text;
      decl.is_matrix = what.text == "matrix";
      decl.line = name.line;
      decl.col = name.col;
      if (script.ring->var_index(decl.name) >= 0)
        throw ScriptError("name '" + decl.name + "' shadows a variable",
                          name.line, name.col);
      for (const auto& d : script.decls)
        if (d.name == decl.name)
          throw ScriptError("duplicate name '" + decl.name + "'", name.line,
                            name.col);
      decl.args = parse_args(lex, script.ring);
      script.decls.push_back(std::move(decl));
    } else {
      if (!kCommands.count(name.text))
        throw ScriptError("unknown command '" + name.text + "'", name.line,
                          name.col);
      ScriptCommand cmd;
      cmd.name = name.text;
      cmd.line = name.line;
      cmd.col = name.col;
      RingPtr arg_ring = uses_parameter_ring(name.text)
                             ? make_ring(field, {"t"})
                             : script.ring;
      cmd.args = parse_args(lex, arg_ring);
      script.commands.push_back(std::move(cmd));
    }
  }
  return script;
}

}  // namespace reltype
