#ifndef IMPERF_FRACTION_HPP
#define IMPERF_FRACTION_HPP

#include <map>
#include <string>

#include "imperf/multipoly.hpp"

namespace imperf {

/// An element of the fraction field GF(p^m)(v_0, ..., v_{k-1}), stored in
/// canonical form: numerator and denominator coprime, denominator monic
/// under the graded-lex order, zero represented as 0/1. Canonical form makes
/// equality a plain structural comparison.
class Fraction {
 public:
  Fraction() = default;  // invalid placeholder

  explicit Fraction(MultiPoly numerator);
  Fraction(MultiPoly numerator, MultiPoly denominator);  // DivisionByZero

  static Fraction zero(const PolyRing* ring);
  static Fraction one(const PolyRing* ring);
  static Fraction from_int(const PolyRing* ring, int64_t v);
  static Fraction variable(const PolyRing* ring, size_t index);
  static Fraction variable(const PolyRing* ring, const std::string& name);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const PolyRing* ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator-() const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;  // DivisionByZero
  Fraction reciprocal() const;
  Fraction pow(int64_t e) const;

  bool operator==(const Fraction& o) const;
  bool operator!=(const Fraction& o) const { return !(*this == o); }
  int compare(const Fraction& o) const;
  bool operator<(const Fraction& o) const { return compare(o) < 0; }

  /// Exact partial derivative via the quotient rule.
  Fraction derivative(size_t var) const;
  Fraction derivative(const std::string& var) const;

  /// Over GF(p^m)(t_1,...,t_n) with perfect constants, f is a p-th power
  /// exactly when every partial derivative vanishes.
  bool is_pth_power() const;
  /// For f = a/b roots the polynomial a*b^(p-1) and divides by b.
  /// Throws NotAPthPower when no root exists.
  Fraction pth_root() const;

  Fraction embed_into(const PolyRing* target) const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

/// Image of a polynomial under a by-name substitution with Fraction values
/// in `target`. Variables without an explicit image must exist in the target
/// ring and map to themselves.
Fraction substitute_into(const MultiPoly& f,
                         const std::map<std::string, Fraction>& images,
                         const PolyRing* target);
Fraction substitute_into(const Fraction& f,
                         const std::map<std::string, Fraction>& images,
                         const PolyRing* target);

/// Decomposition along the p-basis of monomials in the ring variables:
/// f = sum over e in [0,p)^k of comp[e]^p * v^e. The map holds the nonzero
/// components indexed by the residue monomial e.
std::map<Mono, Fraction> pbasis_components(const Fraction& f);

}  // namespace imperf

#endif
