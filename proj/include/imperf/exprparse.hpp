#ifndef IMPERF_EXPRPARSE_HPP
#define IMPERF_EXPRPARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "imperf/fraction.hpp"

namespace imperf {

/// Declaration of a ground field GF(p^m)(t_1, ..., t_n), the result of
/// parsing a `field` statement.
struct FieldDecl {
  uint32_t p = 0;
  uint32_t m = 1;
  std::vector<std::string> generators;
};

/// Grammar: `field GF(<q>)(<name>, ...)` or `field GF(<p>^<m>)(<name>, ...)`.
/// A plain `GF(q)` with q a prime power is decomposed as p^m. Whitespace
/// insensitive. Throws SyntaxError (with position) or NonPrimeCharacteristic.
FieldDecl parse_field(std::string_view src);

/// Evaluation context for expressions: a ring whose ground variables come
/// from a FieldDecl and whose remaining variables are coordinates. When the
/// constant field has m >= 2 the identifier `w` denotes the class of the
/// adjoined root and is reserved.
struct ParseContext {
  const PolyRing* ring = nullptr;

  static ParseContext make(const FieldDecl& decl,
                           std::vector<std::string> coords = {});
  static ParseContext over(const PolyRing* ring);
};

/// Parse an arithmetic expression over {identifiers, integers, + - * / ^ ()}
/// with literal nonnegative exponents. Unary minus is allowed and normalized
/// through characteristic-p negation; implicit multiplication is rejected.
/// Throws SyntaxError, UnknownIdentifier, DivisionByZero.
Fraction parse_expr(std::string_view src, const ParseContext& ctx);

/// Like parse_expr but requires the result to be a polynomial (reduced
/// denominator 1).
MultiPoly parse_poly(std::string_view src, const ParseContext& ctx);

/// Deterministic canonical rendering: terms in descending graded-lex order,
/// coefficients as canonical residues (no minus signs), explicit `*`, `^`
/// for exponents > 1. parse(print(x)) == x.
std::string print_canonical(const MultiPoly& poly);
std::string print_canonical(const Fraction& f);
std::string print_gf(const GF* field, uint64_t packed);

}  // namespace imperf

#endif
