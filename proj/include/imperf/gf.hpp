#ifndef IMPERF_GF_HPP
#define IMPERF_GF_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace imperf {

/// The finite field GF(p^m).
///
/// Field objects are interned: GF::get(p, m) returns a pointer that stays
/// valid for the lifetime of the process, so elements can carry a plain
/// pointer and equality of fields is pointer equality. Elements are packed
/// into a uint64_t as base-p digits (digit i = coefficient of the i-th power
/// of the adjoined root), so values range over [0, p^m).
///
/// The defining polynomial for m >= 2 is the lowest irreducible monic
/// polynomial of degree m in the base-p coefficient enumeration;
/// irreducibility is established by trial division by every monic polynomial
/// of degree at most m/2. This makes field construction deterministic
/// without external tables.
class GF {
 public:
  /// Interned field lookup; thread safe. Throws NonPrimeCharacteristic if p
  /// is not prime.
  static const GF* get(uint32_t p, uint32_t m = 1);

  uint32_t characteristic() const { return p_; }
  uint32_t extension_degree() const { return m_; }
  uint64_t order() const { return q_; }

  uint64_t zero() const { return 0; }
  uint64_t one() const { return 1; }
  /// The class of the adjoined root (m >= 2); for m == 1 this is just 1.
  uint64_t generator() const { return m_ >= 2 ? p_ : 1; }

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;  // throws DivisionByZero on 0
  uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }
  uint64_t pow(uint64_t a, uint64_t e) const;

  /// Frobenius x -> x^p; a bijection, so every element has a unique p-th
  /// root, obtained by iterating Frobenius m-1 more times.
  uint64_t frobenius(uint64_t a) const { return pow(a, p_); }
  uint64_t pth_root(uint64_t a) const;

  /// Embed an integer via reduction mod p.
  uint64_t from_int(int64_t v) const;

  /// Base-p digits of a packed value, length m (low power first).
  std::vector<uint32_t> digits(uint64_t a) const;
  uint64_t from_digits(const std::vector<uint32_t>& d) const;

  /// Defining polynomial coefficients, length m+1, monic (only for m >= 2).
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  GF(const GF&) = delete;
  GF& operator=(const GF&) = delete;

 private:
  GF(uint32_t p, uint32_t m);

  uint32_t p_;
  uint32_t m_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;
};

/// A field element tagged with its field; convenience wrapper used at API
/// boundaries and in tests. Arithmetic requires matching fields.
struct GFElem {
  const GF* field = nullptr;
  uint64_t v = 0;

  GFElem() = default;
  GFElem(const GF* f, uint64_t value) : field(f), v(value) {}

  bool is_zero() const { return v == 0; }

  friend GFElem operator+(GFElem a, GFElem b);
  friend GFElem operator-(GFElem a, GFElem b);
  friend GFElem operator*(GFElem a, GFElem b);
  friend GFElem operator/(GFElem a, GFElem b);
  friend GFElem operator-(GFElem a);
  friend bool operator==(GFElem a, GFElem b) {
    return a.field == b.field && a.v == b.v;
  }
  friend bool operator!=(GFElem a, GFElem b) { return !(a == b); }
};

bool is_prime_u32(uint32_t n);

/// Decompose q as p^m with p prime; returns false if q is not a prime power.
bool prime_power_decompose(uint64_t q, uint32_t& p, uint32_t& m);

}  // namespace imperf

#endif
