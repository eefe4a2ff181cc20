#include "imperf/fraction.hpp"

#include "imperf/errors.hpp"

namespace imperf {

Fraction::Fraction(MultiPoly numerator)
    : num_(std::move(numerator)), den_(MultiPoly::from_int(num_.ring(), 1)) {
  normalize();
}

Fraction::Fraction(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.ring() != den_.ring()) throw MixedFields();
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void Fraction::normalize() {
  const PolyRing* ring = num_.ring();
  if (num_.is_zero()) {
    den_ = MultiPoly::from_int(ring, 1);
    return;
  }
  MultiPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  uint64_t lc = den_.lead_coeff();
  if (lc != 1) {
    uint64_t inv = ring->field->inv(lc);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Fraction Fraction::zero(const PolyRing* ring) {
  return Fraction(MultiPoly::zero(ring));
}
Fraction Fraction::one(const PolyRing* ring) {
  return Fraction(MultiPoly::from_int(ring, 1));
}
Fraction Fraction::from_int(const PolyRing* ring, int64_t v) {
  return Fraction(MultiPoly::from_int(ring, v));
}
Fraction Fraction::variable(const PolyRing* ring, size_t index) {
  return Fraction(MultiPoly::variable(ring, index));
}
Fraction Fraction::variable(const PolyRing* ring, const std::string& name) {
  return Fraction(MultiPoly::variable(ring, name));
}

Fraction Fraction::operator+(const Fraction& o) const {
  return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Fraction Fraction::operator-(const Fraction& o) const {
  return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Fraction Fraction::operator-() const { return Fraction(-num_, den_); }
Fraction Fraction::operator*(const Fraction& o) const {
  return Fraction(num_ * o.num_, den_ * o.den_);
}
Fraction Fraction::operator/(const Fraction& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return Fraction(num_ * o.den_, den_ * o.num_);
}
Fraction Fraction::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return Fraction(den_, num_);
}

Fraction Fraction::pow(int64_t e) const {
  if (e < 0) return reciprocal().pow(-e);
  return Fraction(num_.pow(static_cast<uint32_t>(e)),
                  den_.pow(static_cast<uint32_t>(e)));
}

bool Fraction::operator==(const Fraction& o) const {
  // Canonical form: structural equality decides a/b = c/d.
  return num_ == o.num_ && den_ == o.den_;
}

int Fraction::compare(const Fraction& o) const {
  int c = num_.compare(o.num_);
  if (c != 0) return c;
  return den_.compare(o.den_);
}

Fraction Fraction::derivative(size_t var) const {
  MultiPoly dn = num_.derivative(var);
  MultiPoly dd = den_.derivative(var);
  return Fraction(dn * den_ - num_ * dd, den_ * den_);
}

Fraction Fraction::derivative(const std::string& var) const {
  int i = ring()->index_of(var);
  if (i < 0) throw UnknownVariable(var);
  return derivative(static_cast<size_t>(i));
}

bool Fraction::is_pth_power() const {
  for (size_t i = 0; i < ring()->nvars(); ++i)
    if (!derivative(i).is_zero()) return false;
  return true;
}

Fraction Fraction::pth_root() const {
  if (is_zero()) return *this;
  uint32_t p = ring()->field->characteristic();
  MultiPoly cleared = num_ * den_.pow(p - 1);
  if (!cleared.is_pth_power()) throw NotAPthPower();
  return Fraction(cleared.pth_root(), den_);
}

Fraction Fraction::embed_into(const PolyRing* target) const {
  return Fraction(num_.embed_into(target), den_.embed_into(target));
}

Fraction substitute_into(const MultiPoly& f,
                         const std::map<std::string, Fraction>& images,
                         const PolyRing* target) {
  const PolyRing* src = f.ring();
  // Resolve the image of every source variable once.
  std::vector<Fraction> image(src->nvars());
  std::vector<bool> needed(src->nvars(), false);
  for (const auto& [m, c] : f.terms())
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) needed[i] = true;
  for (size_t i = 0; i < src->nvars(); ++i) {
    if (!needed[i]) continue;
    auto it = images.find(src->vars[i]);
    if (it != images.end()) {
      if (it->second.ring() != target) throw MixedFields();
      image[i] = it->second;
    } else {
      int j = target->index_of(src->vars[i]);
      if (j < 0) throw UnknownVariable(src->vars[i]);
      image[i] = Fraction::variable(target, static_cast<size_t>(j));
    }
  }
  std::vector<std::vector<Fraction>> powers(src->nvars());
  auto power = [&](size_t i, uint32_t e) -> const Fraction& {
    auto& vec = powers[i];
    if (vec.empty()) vec.push_back(Fraction::one(target));
    while (vec.size() <= e) vec.push_back(vec.back() * image[i]);
    return vec[e];
  };
  Fraction acc = Fraction::zero(target);
  for (const auto& [m, c] : f.terms()) {
    Fraction term(MultiPoly::constant(target, c));
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * power(i, m[i]);
    acc = acc + term;
  }
  return acc;
}

Fraction substitute_into(const Fraction& f,
                         const std::map<std::string, Fraction>& images,
                         const PolyRing* target) {
  Fraction n = substitute_into(f.num(), images, target);
  Fraction d = substitute_into(f.den(), images, target);
  return n / d;  // DivisionByZero when the substitution hits a pole
}

std::map<Mono, Fraction> pbasis_components(const Fraction& f) {
  const PolyRing* ring = f.ring();
  uint32_t p = ring->field->characteristic();
  // f = N / B^p with N = num * den^(p-1); split N by exponent residues.
  MultiPoly n = f.num() * f.den().pow(p - 1);
  std::map<Mono, MultiPoly> parts;
  for (const auto& [m, c] : n.terms()) {
    Mono e(m.size());
    Mono q(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
      e[i] = m[i] % p;
      q[i] = m[i] - e[i];
    }
    auto it = parts.find(e);
    if (it == parts.end())
      it = parts.emplace(e, MultiPoly::zero(ring)).first;
    it->second = it->second + MultiPoly::monomial(ring, q, c);
  }
  std::map<Mono, Fraction> out;
  for (auto& [e, part] : parts) {
    // part has all exponents divisible by p, so the root exists.
    out.emplace(e, Fraction(part.pth_root(), f.den()));
  }
  return out;
}

}  // namespace imperf
