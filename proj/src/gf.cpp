#include "imperf/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "imperf/errors.hpp"

namespace imperf {

namespace {

using Coeffs = std::vector<uint32_t>;  // dense univariate over GF(p), low first

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a by b over GF(p); b monic after scaling by lead inverse.
Coeffs poly_rem(Coeffs a, const Coeffs& b, uint32_t p, uint64_t lead_inv) {
  while (a.size() >= b.size() && !a.empty()) {
    uint64_t factor = (a.back() * lead_inv) % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      uint64_t sub = (factor * b[i]) % p;
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

uint64_t inv_mod_p(uint64_t a, uint32_t p) {
  // p is small; Fermat.
  uint64_t r = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

bool is_irreducible(const Coeffs& f, uint32_t p) {
  // Trial division by every monic polynomial of degree 1..deg(f)/2.
  size_t deg = f.size() - 1;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t c = 0; c < count; ++c) {
      Coeffs g(d + 1, 0);
      uint64_t v = c;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      Coeffs r = poly_rem(f, g, p, 1);
      if (r.empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power_decompose(uint64_t q, uint32_t& p, uint32_t& m) {
  if (q < 2) return false;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      uint32_t e = 0;
      uint64_t r = q;
      while (r % d == 0) {
        r /= d;
        ++e;
      }
      if (r != 1) return false;
      p = static_cast<uint32_t>(d);
      m = e;
      return true;
    }
  }
  p = static_cast<uint32_t>(q);  // q itself prime
  m = 1;
  return true;
}

GF::GF(uint32_t p, uint32_t m) : p_(p), m_(m) {
  q_ = 1;
  for (uint32_t i = 0; i < m; ++i) q_ *= p;
  if (m_ >= 2) {
    // Lowest monic irreducible of degree m in base-p enumeration of the
    // coefficient vector (c_0, ..., c_{m-1}).
    uint64_t count = q_;
    for (uint64_t c = 0; c < count; ++c) {
      Coeffs f(m + 1, 0);
      uint64_t v = c;
      for (uint32_t i = 0; i < m; ++i) {
        f[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      f[m] = 1;
      if (is_irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }
}

const GF* GF::get(uint32_t p, uint32_t m) {
  if (!is_prime_u32(p)) throw NonPrimeCharacteristic(std::to_string(p));
  if (m < 1) throw Error("extension degree must be >= 1");
  if (m > 16) throw Error("extension degree too large");
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<GF>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<GF>(new GF(p, m))).first;
  return it->second.get();
}

std::vector<uint32_t> GF::digits(uint64_t a) const {
  std::vector<uint32_t> d(m_);
  for (uint32_t i = 0; i < m_; ++i) {
    d[i] = static_cast<uint32_t>(a % p_);
    a /= p_;
  }
  return d;
}

uint64_t GF::from_digits(const std::vector<uint32_t>& d) const {
  uint64_t v = 0;
  for (size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return v;
}

uint64_t GF::add(uint64_t a, uint64_t b) const {
  if (m_ == 1) return (a + b) % p_;
  uint64_t r = 0, mul = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    r += ((a % p_) + (b % p_)) % p_ * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return r;
}

uint64_t GF::neg(uint64_t a) const {
  if (m_ == 1) return (p_ - a % p_) % p_;
  uint64_t r = 0, mul = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    r += (p_ - a % p_) % p_ * mul;
    a /= p_;
    mul *= p_;
  }
  return r;
}

uint64_t GF::mul(uint64_t a, uint64_t b) const {
  if (m_ == 1) return a * b % p_;
  std::vector<uint32_t> da = digits(a), db = digits(b);
  std::vector<uint64_t> conv(2 * m_ - 1, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (uint32_t j = 0; j < m_; ++j)
      conv[i + j] = (conv[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p_;
  }
  // Reduce mod the monic defining polynomial.
  for (size_t k = conv.size(); k-- > m_;) {
    uint64_t c = conv[k];
    if (!c) continue;
    conv[k] = 0;
    for (uint32_t j = 0; j < m_; ++j)
      conv[k - m_ + j] = (conv[k - m_ + j] + (p_ - modulus_[j] % p_) * c) % p_;
  }
  uint64_t r = 0;
  for (uint32_t i = m_; i-- > 0;) r = r * p_ + conv[i];
  return r;
}

uint64_t GF::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1;
  a %= q_ ? q_ : 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t GF::inv(uint64_t a) const {
  if (a == 0) throw DivisionByZero();
  if (m_ == 1) return inv_mod_p(a, p_);
  return pow(a, q_ - 2);
}

uint64_t GF::pth_root(uint64_t a) const {
  if (m_ == 1) return a;  // GF(p) is perfect with identity Frobenius
  uint64_t e = 1;
  for (uint32_t i = 0; i + 1 < m_; ++i) e *= p_;
  return pow(a, e);  // (a^{p^{m-1}})^p = a^{p^m} = a
}

uint64_t GF::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<uint64_t>(r);
}

namespace {
const GF* common_field(GFElem a, GFElem b) {
  if (a.field == nullptr || a.field != b.field) throw MixedFields();
  return a.field;
}
}  // namespace

GFElem operator+(GFElem a, GFElem b) {
  const GF* f = common_field(a, b);
  return {f, f->add(a.v, b.v)};
}
GFElem operator-(GFElem a, GFElem b) {
  const GF* f = common_field(a, b);
  return {f, f->sub(a.v, b.v)};
}
GFElem operator*(GFElem a, GFElem b) {
  const GF* f = common_field(a, b);
  return {f, f->mul(a.v, b.v)};
}
GFElem operator/(GFElem a, GFElem b) {
  const GF* f = common_field(a, b);
  return {f, f->div(a.v, b.v)};
}
GFElem operator-(GFElem a) { return {a.field, a.field->neg(a.v)}; }

}  // namespace imperf
