#include "imperf/multipoly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "imperf/errors.hpp"

namespace imperf {

bool GradedLexLess::operator()(const Mono& a, const Mono& b) const {
  uint64_t da = 0, db = 0;
  for (uint32_t e : a) da += e;
  for (uint32_t e : b) db += e;
  if (da != db) return da < db;
  // Earlier variable more significant: compare from the front, the monomial
  // with the larger exponent in the first differing slot is the larger one.
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

const PolyRing* PolyRing::make(const GF* field, std::vector<std::string> vars,
                               size_t n_ground) {
  if (field == nullptr) throw Error("null field");
  if (n_ground > vars.size()) throw Error("n_ground exceeds variable count");
  {
    std::set<std::string> seen;
    for (const auto& v : vars) {
      if (v.empty()) throw Error("empty variable name");
      if (!seen.insert(v).second) throw Error("duplicate variable: " + v);
    }
  }
  static std::mutex mu;
  static std::map<std::tuple<const GF*, std::vector<std::string>, size_t>,
                  std::unique_ptr<PolyRing>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(field, vars, n_ground);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto ring = std::unique_ptr<PolyRing>(new PolyRing());
    ring->field = field;
    ring->vars = std::move(vars);
    ring->n_ground = n_ground;
    it = cache.emplace(std::move(key), std::move(ring)).first;
  }
  return it->second.get();
}

int PolyRing::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

const PolyRing* MultiPoly::checked_ring() const {
  if (ring_ == nullptr) throw Error("use of default-constructed polynomial");
  return ring_;
}

MultiPoly MultiPoly::zero(const PolyRing* ring) { return MultiPoly(ring, {}); }

MultiPoly MultiPoly::constant(const PolyRing* ring, uint64_t packed) {
  MultiPoly r(ring, {});
  if (packed != 0) r.terms_.emplace(Mono(ring->nvars(), 0), packed);
  return r;
}

MultiPoly MultiPoly::from_int(const PolyRing* ring, int64_t v) {
  return constant(ring, ring->field->from_int(v));
}

MultiPoly MultiPoly::variable(const PolyRing* ring, size_t index) {
  if (index >= ring->nvars()) throw BadIndex("variable index out of range");
  Mono m(ring->nvars(), 0);
  m[index] = 1;
  return monomial(ring, std::move(m), 1);
}

MultiPoly MultiPoly::variable(const PolyRing* ring, const std::string& name) {
  int i = ring->index_of(name);
  if (i < 0) throw UnknownVariable(name);
  return variable(ring, static_cast<size_t>(i));
}

MultiPoly MultiPoly::monomial(const PolyRing* ring, Mono exps, uint64_t coeff) {
  if (exps.size() != ring->nvars()) throw Error("exponent vector length mismatch");
  MultiPoly r(ring, {});
  if (coeff != 0) r.terms_.emplace(std::move(exps), coeff);
  return r;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         terms_.begin()->first == Mono(checked_ring()->nvars(), 0);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         terms_.begin()->first == Mono(checked_ring()->nvars(), 0);
}

uint64_t MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

int64_t MultiPoly::total_degree() const {
  int64_t d = -1;
  for (const auto& [m, c] : terms_) {
    int64_t t = 0;
    for (uint32_t e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

int64_t MultiPoly::degree_in(size_t var) const {
  int64_t d = -1;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<int64_t>(m[var]));
  return terms_.empty() ? -1 : d;
}

int64_t MultiPoly::degree_in_range(size_t lo, size_t hi) const {
  int64_t d = -1;
  for (const auto& [m, c] : terms_) {
    int64_t t = 0;
    for (size_t i = lo; i < hi; ++i) t += m[i];
    d = std::max(d, t);
  }
  return d;
}

bool MultiPoly::is_homogeneous_in_range(size_t lo, size_t hi,
                                        int64_t deg) const {
  if (terms_.empty()) return false;
  for (const auto& [m, c] : terms_) {
    int64_t t = 0;
    for (size_t i = lo; i < hi; ++i) t += m[i];
    if (t != deg) return false;
  }
  return true;
}

void MultiPoly::add_term(const Mono& m, uint64_t c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    uint64_t s = ring_->field->add(it->second, c);
    if (s == 0)
      terms_.erase(it);
    else
      it->second = s;
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (checked_ring() != o.checked_ring()) throw MixedFields();
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(checked_ring(), {});
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_->field->neg(c));
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (checked_ring() != o.checked_ring()) throw MixedFields();
  const GF* f = ring_->field;
  MultiPoly r(ring_, {});
  Mono m(ring_->nvars());
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      for (size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, f->mul(c1, c2));
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(uint64_t packed) const {
  MultiPoly r(checked_ring(), {});
  if (packed == 0) return r;
  for (const auto& [m, c] : terms_)
    r.terms_.emplace(m, ring_->field->mul(c, packed));
  return r;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
  MultiPoly r = from_int(checked_ring(), 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return checked_ring() == o.checked_ring() && terms_ == o.terms_;
}

int MultiPoly::compare(const MultiPoly& o) const {
  if (ring_ != o.ring_) {
    return ring_ < o.ring_ ? -1 : 1;  // arbitrary but stable between rings
  }
  auto it = terms_.rbegin();
  auto jt = o.terms_.rbegin();
  GradedLexLess less;
  for (; it != terms_.rend() && jt != o.terms_.rend(); ++it, ++jt) {
    if (it->first != jt->first) return less(it->first, jt->first) ? -1 : 1;
    if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
  }
  if (it != terms_.rend()) return 1;
  if (jt != o.terms_.rend()) return -1;
  return 0;
}

MultiPoly MultiPoly::derivative(size_t var) const {
  if (var >= checked_ring()->nvars()) throw BadIndex("derivative variable");
  const GF* f = ring_->field;
  MultiPoly r(ring_, {});
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    uint64_t k = f->from_int(static_cast<int64_t>(m[var]));
    if (k == 0) continue;  // exponent divisible by p
    Mono d = m;
    d[var] -= 1;
    r.add_term(d, f->mul(c, k));
  }
  return r;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  int i = checked_ring()->index_of(var);
  if (i < 0) throw UnknownVariable(var);
  return derivative(static_cast<size_t>(i));
}

MultiPoly MultiPoly::substitute(const std::map<size_t, MultiPoly>& images) const {
  const PolyRing* ring = checked_ring();
  for (const auto& [i, img] : images)
    if (img.ring() != ring) throw MixedFields();
  // Powers of each image, grown on demand.
  std::map<size_t, std::vector<MultiPoly>> powers;
  auto power = [&](size_t var, uint32_t e) -> const MultiPoly& {
    auto& vec = powers[var];
    if (vec.empty()) vec.push_back(from_int(ring, 1));
    const MultiPoly& base = images.at(var);
    while (vec.size() <= e) vec.push_back(vec.back() * base);
    return vec[e];
  };
  MultiPoly result = zero(ring);
  for (const auto& [m, c] : terms_) {
    Mono rest = m;
    MultiPoly term = constant(ring, c);
    for (const auto& [i, img] : images) {
      if (m[i] == 0) continue;
      rest[i] = 0;
      term = term * power(i, m[i]);
    }
    result = result + term * monomial(ring, rest, 1);
  }
  return result;
}

MultiPoly MultiPoly::embed_into(const PolyRing* target) const {
  const PolyRing* ring = checked_ring();
  if (target == ring) return *this;
  if (target->field != ring->field) throw MixedFields();
  std::vector<int> where(ring->nvars(), -1);
  for (size_t i = 0; i < ring->nvars(); ++i)
    where[i] = target->index_of(ring->vars[i]);
  MultiPoly r(target, {});
  for (const auto& [m, c] : terms_) {
    Mono t(target->nvars(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (where[i] < 0) throw UnknownVariable(ring->vars[i]);
      t[static_cast<size_t>(where[i])] = m[i];
    }
    r.add_term(t, c);
  }
  return r;
}

std::map<uint32_t, MultiPoly> MultiPoly::coeffs_in(size_t var) const {
  const PolyRing* ring = checked_ring();
  std::map<uint32_t, MultiPoly> out;
  for (const auto& [m, c] : terms_) {
    uint32_t e = m[var];
    Mono rest = m;
    rest[var] = 0;
    auto it = out.find(e);
    if (it == out.end()) it = out.emplace(e, zero(ring)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::assemble_in(const PolyRing* ring, size_t var,
                                 const std::map<uint32_t, MultiPoly>& coeffs) {
  MultiPoly r = zero(ring);
  for (const auto& [e, poly] : coeffs) {
    Mono m(ring->nvars(), 0);
    m[var] = e;
    r = r + poly * monomial(ring, m, 1);
  }
  return r;
}

const Mono& MultiPoly::lead_mono() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

uint64_t MultiPoly::lead_coeff() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(checked_ring()->field->inv(lead_coeff()));
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (checked_ring() != divisor.checked_ring()) throw MixedFields();
  if (divisor.is_zero()) throw DivisionByZero();
  const GF* f = ring_->field;
  MultiPoly rem = *this;
  MultiPoly quot = zero(ring_);
  const Mono& dm = divisor.lead_mono();
  uint64_t dc_inv = f->inv(divisor.lead_coeff());
  while (!rem.is_zero()) {
    const Mono& rm = rem.lead_mono();
    Mono q(rm.size());
    for (size_t i = 0; i < rm.size(); ++i) {
      if (rm[i] < dm[i]) return std::nullopt;
      q[i] = rm[i] - dm[i];
    }
    uint64_t qc = f->mul(rem.lead_coeff(), dc_inv);
    MultiPoly qterm = monomial(ring_, std::move(q), qc);
    quot = quot + qterm;
    rem = rem - qterm * divisor;
  }
  return quot;
}

bool MultiPoly::divisible_by(const MultiPoly& divisor) const {
  return divide_exact(divisor).has_value();
}

bool MultiPoly::is_pth_power() const {
  uint32_t p = checked_ring()->field->characteristic();
  for (const auto& [m, c] : terms_)
    for (uint32_t e : m)
      if (e % p != 0) return false;
  return true;
}

MultiPoly MultiPoly::pth_root() const {
  if (!is_pth_power()) throw NotAPthPower();
  const GF* f = checked_ring()->field;
  uint32_t p = f->characteristic();
  MultiPoly r(ring_, {});
  for (const auto& [m, c] : terms_) {
    Mono d = m;
    for (uint32_t& e : d) e /= p;
    r.terms_.emplace(std::move(d), f->pth_root(c));
  }
  return r;
}

// ---------------------------------------------------------------------------
// gcd machinery
// ---------------------------------------------------------------------------

namespace {

std::vector<size_t> active_vars(const MultiPoly& a, const MultiPoly& b) {
  std::vector<size_t> out;
  size_t n = a.ring()->nvars();
  for (size_t i = 0; i < n; ++i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) out.push_back(i);
  return out;
}

// Classical Euclid for polynomials in exactly one active variable; the
// coefficients are field elements, so remainders are exact.
MultiPoly euclid_single_var(MultiPoly a, MultiPoly b, size_t var) {
  const PolyRing* ring = a.ring();
  const GF* f = ring->field;
  auto deg = [&](const MultiPoly& x) { return x.degree_in(var); };
  auto lc = [&](const MultiPoly& x) -> uint64_t {
    auto cs = x.coeffs_in(var);
    return cs.rbegin()->second.constant_value();
  };
  while (!b.is_zero()) {
    // a mod b
    while (!a.is_zero() && deg(a) >= deg(b)) {
      int64_t shift = deg(a) - deg(b);
      uint64_t c = f->div(lc(a), lc(b));
      Mono m(ring->nvars(), 0);
      m[var] = static_cast<uint32_t>(shift);
      a = a - b * MultiPoly::monomial(ring, std::move(m), c);
    }
    std::swap(a, b);
  }
  return a.monic();
}

MultiPoly content_in(const MultiPoly& a, size_t var);

// Subresultant pseudo-remainder sequence in `var`; inputs are primitive with
// respect to var. Returns the last nonzero remainder (gcd up to content).
MultiPoly subresultant_prs(MultiPoly a, MultiPoly b, size_t var) {
  const PolyRing* ring = a.ring();
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  MultiPoly g = MultiPoly::from_int(ring, 1);
  MultiPoly h = MultiPoly::from_int(ring, 1);
  while (true) {
    int64_t delta = a.degree_in(var) - b.degree_in(var);
    MultiPoly r = pseudo_rem(a, b, var);
    if (r.is_zero()) return b;
    if (r.degree_in(var) <= 0) {
      // Nontrivial constant (in var) remainder: the gcd has var-degree 0.
      return MultiPoly::from_int(ring, 1);
    }
    a = b;
    // b = r / (g * h^delta); exact by the subresultant theory.
    MultiPoly divisor = g * h.pow(static_cast<uint32_t>(delta));
    auto q = r.divide_exact(divisor);
    if (!q) throw Error("subresultant division failed");
    b = *q;
    g = a.coeffs_in(var).rbegin()->second;
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      // h = g^delta / h^(delta-1), exact.
      auto hq = g.pow(static_cast<uint32_t>(delta))
                    .divide_exact(h.pow(static_cast<uint32_t>(delta - 1)));
      if (!hq) throw Error("subresultant h-update failed");
      h = *hq;
    }
  }
}

// Content of a with respect to var: gcd of the univariate coefficients.
MultiPoly content_in(const MultiPoly& a, size_t var) {
  MultiPoly c = MultiPoly::zero(a.ring());
  for (const auto& [e, coeff] : a.coeffs_in(var)) c = gcd(c, coeff);
  return c;
}

}  // namespace

MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, size_t var) {
  if (a.ring() != b.ring()) throw MixedFields();
  if (b.is_zero()) throw DivisionByZero();
  const PolyRing* ring = a.ring();
  int64_t db = b.degree_in(var);
  MultiPoly lb = b.coeffs_in(var).rbegin()->second;  // leading coeff in var
  MultiPoly r = a;
  int64_t e = a.degree_in(var) - db + 1;
  if (e < 0) e = 0;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    auto rc = r.coeffs_in(var);
    int64_t dr = rc.rbegin()->first;
    MultiPoly lr = rc.rbegin()->second;
    Mono shift(ring->nvars(), 0);
    shift[var] = static_cast<uint32_t>(dr - db);
    r = r * lb - b * (lr * MultiPoly::monomial(ring, std::move(shift), 1));
    --e;
  }
  // Normalize so the result equals rem(lc^(da-db+1) * a, b) exactly.
  for (; e > 0; --e) r = r * lb;
  return r;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring() != b.ring()) throw MixedFields();
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant())
    return MultiPoly::from_int(a.ring(), 1);
  std::vector<size_t> active = active_vars(a, b);
  if (active.empty()) return MultiPoly::from_int(a.ring(), 1);
  if (active.size() == 1) return euclid_single_var(a, b, active[0]);

  size_t var = active[0];
  if (a.degree_in(var) <= 0 || b.degree_in(var) <= 0) {
    // One input does not involve the main variable: gcd divides that input's
    // coefficients, reduce to contents.
    if (a.degree_in(var) <= 0) return gcd(a, content_in(b, var)).monic();
    return gcd(content_in(a, var), b).monic();
  }
  MultiPoly ca = content_in(a, var);
  MultiPoly cb = content_in(b, var);
  MultiPoly pa = *a.divide_exact(ca);
  MultiPoly pb = *b.divide_exact(cb);
  MultiPoly raw = subresultant_prs(pa, pb, var);
  MultiPoly prim = *raw.divide_exact(content_in(raw, var));
  return (gcd(ca, cb) * prim).monic();
}

}  // namespace imperf
