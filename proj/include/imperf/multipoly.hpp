#ifndef IMPERF_MULTIPOLY_HPP
#define IMPERF_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imperf/gf.hpp"

namespace imperf {

/// Exponent vector; length equals the ring's variable count.
using Mono = std::vector<uint32_t>;

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically with earlier-declared variables more significant.
/// "Monic" throughout the library means leading coefficient 1 in this order.
struct GradedLexLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

/// A polynomial ring GF(p^m)[v_0, ..., v_{k-1}] with a declared variable
/// order. The first `n_ground` variables are the scalar (ground-field)
/// generators t_i; any remaining variables are projective/affine coordinates.
/// Rings are interned like fields, so pointer equality is ring equality.
struct PolyRing {
  const GF* field;
  std::vector<std::string> vars;
  size_t n_ground;

  static const PolyRing* make(const GF* field, std::vector<std::string> vars,
                              size_t n_ground);

  size_t nvars() const { return vars.size(); }
  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;
  bool is_ground(size_t i) const { return i < n_ground; }

  PolyRing(const PolyRing&) = delete;
  PolyRing& operator=(const PolyRing&) = delete;

 private:
  PolyRing() = default;
};

/// Sparse multivariate polynomial over GF(p^m). Immutable value type: all
/// operations return new polynomials. Coefficients are stored packed (see
/// GF); zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Mono, uint64_t, GradedLexLess>;

  MultiPoly() = default;  // invalid placeholder; any use throws

  static MultiPoly zero(const PolyRing* ring);
  static MultiPoly constant(const PolyRing* ring, uint64_t packed);
  static MultiPoly from_int(const PolyRing* ring, int64_t v);
  static MultiPoly variable(const PolyRing* ring, size_t index);
  static MultiPoly variable(const PolyRing* ring, const std::string& name);
  static MultiPoly monomial(const PolyRing* ring, Mono exps, uint64_t coeff);

  const PolyRing* ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  uint64_t constant_value() const;  // requires is_constant()

  /// Total degree; -1 is the sentinel for the zero polynomial.
  int64_t total_degree() const;
  int64_t degree_in(size_t var) const;
  /// Total degree counting only variables in [lo, hi).
  int64_t degree_in_range(size_t lo, size_t hi) const;
  bool is_homogeneous_in_range(size_t lo, size_t hi, int64_t deg) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(uint64_t packed) const;
  MultiPoly pow(uint32_t e) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  /// Deterministic total order (for sets and sorted output).
  int compare(const MultiPoly& o) const;
  bool operator<(const MultiPoly& o) const { return compare(o) < 0; }

  MultiPoly derivative(size_t var) const;
  MultiPoly derivative(const std::string& var) const;

  /// Replace variables by polynomial images in the same ring; variables
  /// without an image are left alone.
  MultiPoly substitute(const std::map<size_t, MultiPoly>& images) const;

  /// Re-express in another ring, matching variables by name. Used variables
  /// missing from the target throw UnknownVariable; unused ones are dropped.
  MultiPoly embed_into(const PolyRing* target) const;

  /// View as a univariate polynomial in `var`: exponent -> coefficient
  /// polynomial (with that variable's exponent zeroed out).
  std::map<uint32_t, MultiPoly> coeffs_in(size_t var) const;
  static MultiPoly assemble_in(const PolyRing* ring, size_t var,
                               const std::map<uint32_t, MultiPoly>& coeffs);

  const Mono& lead_mono() const;
  uint64_t lead_coeff() const;
  MultiPoly monic() const;

  /// Exact division: returns a/b if b divides a, otherwise nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
  bool divisible_by(const MultiPoly& divisor) const;

  /// True iff every exponent is divisible by p; the coefficient field is
  /// perfect, so this is exactly the p-th power condition.
  bool is_pth_power() const;
  MultiPoly pth_root() const;  // throws NotAPthPower

 private:
  MultiPoly(const PolyRing* ring, TermMap terms)
      : ring_(ring), terms_(std::move(terms)) {}
  void add_term(const Mono& m, uint64_t c);
  const PolyRing* checked_ring() const;

  const PolyRing* ring_ = nullptr;
  TermMap terms_;
};

/// Greatest common divisor, monic under the graded-lex order. Recursive
/// content/primitive-part scheme with a subresultant pseudo-remainder
/// sequence in the chosen main variable, plain Euclid at the single-variable
/// base. gcd(0,0) = 0 by convention.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b with respect to variable `var`:
/// prem(a,b) = rem(lc(b)^(deg a - deg b + 1) * a, b).
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, size_t var);

}  // namespace imperf

#endif
