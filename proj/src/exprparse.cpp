#include "imperf/exprparse.hpp"

#include <cctype>
#include <memory>
#include <sstream>

#include "imperf/errors.hpp"

namespace imperf {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  uint64_t value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, tok_.line, tok_.col);
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      bump();
    tok_.line = line_;
    tok_.col = col_;
    tok_.text.clear();
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        bump();
      tok_.kind = Tok::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t v = 0;
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        uint64_t digit = static_cast<uint64_t>(src_[pos_] - '0');
        if (v > (UINT64_MAX - digit) / 10)
          throw SyntaxError("integer literal too large", line_, col_);
        v = v * 10 + digit;
        bump();
      }
      // Implicit multiplication like "2t1" is rejected.
      if (pos_ < src_.size() &&
          (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        throw SyntaxError("implicit multiplication is not allowed", line_, col_);
      tok_.kind = Tok::Int;
      tok_.value = v;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    bump();
    switch (c) {
      case '+': tok_.kind = Tok::Plus; return;
      case '-': tok_.kind = Tok::Minus; return;
      case '*': tok_.kind = Tok::Star; return;
      case '/': tok_.kind = Tok::Slash; return;
      case '^': tok_.kind = Tok::Caret; return;
      case '(': tok_.kind = Tok::LParen; return;
      case ')': tok_.kind = Tok::RParen; return;
      case ',': tok_.kind = Tok::Comma; return;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", tok_.line, tok_.col);
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

// Small AST; expressions at desk scale are tiny.
struct Expr {
  enum Kind { Ident, Int, Add, Sub, Mul, Div, Pow, Neg } kind;
  std::string name;
  uint64_t value = 0;
  uint32_t exponent = 0;
  std::unique_ptr<Expr> lhs, rhs;
  int line = 1, col = 1;
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr make(Expr::Kind k, const Token& at) {
  auto e = std::make_unique<Expr>();
  e->kind = k;
  e->line = at.line;
  e->col = at.col;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (lex_.peek().kind != Tok::End) lex_.fail("unexpected trailing input");
    return e;
  }

 private:
  ExprPtr sum() {
    ExprPtr e = product();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      Token op = lex_.take();
      auto node = make(op.kind == Tok::Plus ? Expr::Add : Expr::Sub, op);
      node->lhs = std::move(e);
      node->rhs = product();
      e = std::move(node);
    }
    return e;
  }

  ExprPtr product() {
    ExprPtr e = unary();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      Token op = lex_.take();
      auto node = make(op.kind == Tok::Star ? Expr::Mul : Expr::Div, op);
      node->lhs = std::move(e);
      node->rhs = unary();
      if (node->kind == Expr::Div && node->rhs->kind == Expr::Int &&
          node->rhs->value == 0)
        throw SyntaxError("division by zero literal", node->rhs->line, node->rhs->col);
      e = std::move(node);
    }
    return e;
  }

  ExprPtr unary() {
    if (lex_.peek().kind == Tok::Minus) {
      Token op = lex_.take();
      auto node = make(Expr::Neg, op);
      node->lhs = unary();
      return node;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr e = atom();
    if (lex_.peek().kind == Tok::Caret) {
      Token op = lex_.take();
      if (lex_.peek().kind != Tok::Int) lex_.fail("expected integer exponent");
      Token exp = lex_.take();
      if (exp.value > (1u << 20)) throw SyntaxError("exponent too large", exp.line, exp.col);
      auto node = make(Expr::Pow, op);
      node->lhs = std::move(e);
      node->exponent = static_cast<uint32_t>(exp.value);
      return node;
    }
    return e;
  }

  ExprPtr atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Ident: {
        Token id = lex_.take();
        auto node = make(Expr::Ident, id);
        node->name = id.text;
        return node;
      }
      case Tok::Int: {
        Token num = lex_.take();
        auto node = make(Expr::Int, num);
        node->value = num.value;
        return node;
      }
      case Tok::LParen: {
        lex_.take();
        ExprPtr e = sum();
        if (lex_.peek().kind != Tok::RParen) lex_.fail("expected ')'");
        lex_.take();
        return e;
      }
      default:
        lex_.fail("expected identifier, number or '('");
    }
  }

  Lexer lex_;
};

Fraction eval(const Expr& e, const ParseContext& ctx) {
  const PolyRing* ring = ctx.ring;
  switch (e.kind) {
    case Expr::Ident: {
      int i = ring->index_of(e.name);
      if (i >= 0) return Fraction::variable(ring, static_cast<size_t>(i));
      if (e.name == "w" && ring->field->extension_degree() >= 2)
        return Fraction(MultiPoly::constant(ring, ring->field->generator()));
      throw UnknownIdentifier(e.name);
    }
    case Expr::Int:
      return Fraction(MultiPoly::from_int(ring, static_cast<int64_t>(e.value % ring->field->characteristic())));
    case Expr::Add: return eval(*e.lhs, ctx) + eval(*e.rhs, ctx);
    case Expr::Sub: return eval(*e.lhs, ctx) - eval(*e.rhs, ctx);
    case Expr::Mul: return eval(*e.lhs, ctx) * eval(*e.rhs, ctx);
    case Expr::Div: return eval(*e.lhs, ctx) / eval(*e.rhs, ctx);
    case Expr::Pow: return eval(*e.lhs, ctx).pow(e.exponent);
    case Expr::Neg: return -eval(*e.lhs, ctx);
  }
  throw Error("unreachable");
}

}  // namespace

FieldDecl parse_field(std::string_view src) {
  Lexer lex(src);
  auto expect_ident = [&](const std::string& word) {
    if (lex.peek().kind != Tok::Ident || lex.peek().text != word)
      lex.fail("expected '" + word + "'");
    lex.take();
  };
  auto expect = [&](Tok k, const std::string& what) {
    if (lex.peek().kind != k) lex.fail("expected " + what);
    return lex.take();
  };
  expect_ident("field");
  expect_ident("GF");
  expect(Tok::LParen, "'('");
  Token q = expect(Tok::Int, "field order");
  FieldDecl decl;
  if (lex.peek().kind == Tok::Caret) {
    lex.take();
    Token m = expect(Tok::Int, "extension degree");
    if (q.value < 2 || !is_prime_u32(static_cast<uint32_t>(q.value)))
      throw NonPrimeCharacteristic(q.text);
    if (m.value < 1 || m.value > 16)
      throw SyntaxError("extension degree out of range", m.line, m.col);
    decl.p = static_cast<uint32_t>(q.value);
    decl.m = static_cast<uint32_t>(m.value);
  } else {
    uint32_t p = 0, m = 0;
    if (!prime_power_decompose(q.value, p, m))
      throw NonPrimeCharacteristic(q.text);
    decl.p = p;
    decl.m = m;
  }
  expect(Tok::RParen, "')'");
  expect(Tok::LParen, "'('");
  if (lex.peek().kind != Tok::RParen) {
    while (true) {
      Token name = expect(Tok::Ident, "generator name");
      decl.generators.push_back(name.text);
      if (lex.peek().kind == Tok::Comma) {
        lex.take();
        continue;
      }
      break;
    }
  }
  expect(Tok::RParen, "')'");
  if (lex.peek().kind != Tok::End) lex.fail("unexpected trailing input");
  for (const auto& g : decl.generators)
    if (g == "w" && decl.m >= 2)
      throw SyntaxError("'w' is reserved for the field generator", 1, 1);
  return decl;
}

ParseContext ParseContext::make(const FieldDecl& decl,
                                std::vector<std::string> coords) {
  const GF* field = GF::get(decl.p, decl.m);
  std::vector<std::string> vars = decl.generators;
  size_t n_ground = vars.size();
  if (decl.m >= 2)
    for (const auto& g : vars)
      if (g == "w") throw Error("'w' is reserved for the field generator");
  for (auto& c : coords) {
    if (c == "w" && decl.m >= 2)
      throw Error("'w' is reserved for the field generator");
    vars.push_back(std::move(c));
  }
  ParseContext ctx;
  ctx.ring = PolyRing::make(field, std::move(vars), n_ground);
  return ctx;
}

ParseContext ParseContext::over(const PolyRing* ring) {
  ParseContext ctx;
  ctx.ring = ring;
  return ctx;
}

Fraction parse_expr(std::string_view src, const ParseContext& ctx) {
  Parser parser(src);
  ExprPtr ast = parser.parse();
  return eval(*ast, ctx);
}

MultiPoly parse_poly(std::string_view src, const ParseContext& ctx) {
  Fraction f = parse_expr(src, ctx);
  if (!f.is_polynomial())
    throw Error("expression is not a polynomial: " + print_canonical(f));
  return f.num();
}

std::string print_gf(const GF* field, uint64_t packed) {
  if (field->extension_degree() == 1) return std::to_string(packed);
  std::vector<uint32_t> d = field->digits(packed);
  std::string out;
  for (size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]) + "*";
      out += "w";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

bool gf_multiterm(const GF* field, uint64_t packed) {
  if (field->extension_degree() == 1) return false;
  int nonzero = 0;
  for (uint32_t d : field->digits(packed))
    if (d) ++nonzero;
  return nonzero > 1;
}

std::string term_string(const PolyRing* ring, const Mono& m, uint64_t coeff) {
  const GF* field = ring->field;
  std::string vars;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!vars.empty()) vars += "*";
    vars += ring->vars[i];
    if (m[i] > 1) vars += "^" + std::to_string(m[i]);
  }
  if (vars.empty()) return print_gf(field, coeff);
  if (coeff == 1) return vars;
  std::string c = print_gf(field, coeff);
  if (gf_multiterm(field, coeff)) c = "(" + c + ")";
  return c + "*" + vars;
}

// A denominator can be printed bare only when it is a single power of a
// single variable with coefficient 1; anything else needs parentheses to
// survive the left-associative '/'.
bool needs_paren_as_denominator(const MultiPoly& p) {
  if (p.term_count() != 1) return true;
  const auto& [m, c] = *p.terms().begin();
  if (c != 1) return true;
  int active = 0;
  for (uint32_t e : m)
    if (e) ++active;
  return active > 1;
}

// A numerator renders with a top-level '+' when it has several terms, or
// when it is a bare constant whose extension-field coefficient is a sum.
bool needs_paren_as_numerator(const MultiPoly& p) {
  if (p.term_count() > 1) return true;
  return p.is_constant() && !p.is_zero() &&
         gf_multiterm(p.ring()->field, p.constant_value());
}

}  // namespace

std::string print_canonical(const MultiPoly& poly) {
  if (poly.is_zero()) return "0";
  const PolyRing* ring = poly.ring();
  std::string out;
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += term_string(ring, it->first, it->second);
  }
  return out;
}

std::string print_canonical(const Fraction& f) {
  std::string num = print_canonical(f.num());
  if (f.is_polynomial()) return num;
  if (needs_paren_as_numerator(f.num())) num = "(" + num + ")";
  std::string den = print_canonical(f.den());
  if (needs_paren_as_denominator(f.den())) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace imperf
