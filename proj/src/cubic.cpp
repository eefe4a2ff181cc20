#include "imperf/cubic.hpp"

#include <algorithm>

#include "imperf/differentials.hpp"
#include "imperf/errors.hpp"

namespace imperf {

namespace {

// --------------------------------------------------------------------------
// Quadratic extension values a + b*theta with theta^2 = c, used for the
// residue fields F[theta] of the inseparable points. Only what the m/m^2
// computation needs.
// --------------------------------------------------------------------------

struct QuadExt {
  Fraction a, b;
};

QuadExt qe_make(const Fraction& a, const Fraction& b) { return {a, b}; }

bool qe_is_zero(const QuadExt& x) { return x.a.is_zero() && x.b.is_zero(); }

QuadExt qe_add(const QuadExt& x, const QuadExt& y) {
  return {x.a + y.a, x.b + y.b};
}

QuadExt qe_mul(const QuadExt& x, const QuadExt& y, const Fraction& c) {
  return {x.a * y.a + x.b * y.b * c, x.a * y.b + x.b * y.a};
}

QuadExt qe_pow(QuadExt x, uint32_t e, const Fraction& c,
               const PolyRing* ring) {
  QuadExt r = qe_make(Fraction::one(ring), Fraction::zero(ring));
  while (e) {
    if (e & 1) r = qe_mul(r, x, c);
    e >>= 1;
    if (e) x = qe_mul(x, x, c);
  }
  return r;
}

// --------------------------------------------------------------------------
// Polynomials in the three affine chart coordinates with coefficients in the
// ground fraction field; enough structure for exact division by the
// triangular generating set of the maximal ideal.
// --------------------------------------------------------------------------

using Exp3 = std::array<uint32_t, 3>;

struct Exp3Less {
  bool operator()(const Exp3& a, const Exp3& b) const {
    uint32_t da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da < db;
    for (size_t i = 0; i < 3; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct LocalPoly {
  const PolyRing* ground = nullptr;
  std::map<Exp3, Fraction, Exp3Less> terms;

  void add_term(const Exp3& e, const Fraction& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      Fraction s = it->second + c;
      if (s.is_zero())
        terms.erase(it);
      else
        it->second = s;
    }
  }

  bool is_zero() const { return terms.empty(); }
};

LocalPoly lp_sub(const LocalPoly& a, const LocalPoly& b) {
  LocalPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

LocalPoly lp_mul_term(const LocalPoly& a, const Exp3& e, const Fraction& c) {
  LocalPoly r;
  r.ground = a.ground;
  for (const auto& [ae, ac] : a.terms)
    r.add_term({ae[0] + e[0], ae[1] + e[1], ae[2] + e[2]}, ac * c);
  return r;
}

QuadExt lp_eval(const LocalPoly& p, const std::array<QuadExt, 3>& values,
                const Fraction& c, const PolyRing* ring) {
  QuadExt acc = qe_make(Fraction::zero(ring), Fraction::zero(ring));
  for (const auto& [e, coeff] : p.terms) {
    QuadExt term = qe_make(coeff, Fraction::zero(ring));
    for (size_t i = 0; i < 3; ++i)
      if (e[i]) term = qe_mul(term, qe_pow(values[i], e[i], c, ring), c);
    acc = qe_add(acc, term);
  }
  return acc;
}

struct LocalDivision {
  std::vector<LocalPoly> quotients;
  LocalPoly remainder;
};

// Division with remainder by a set whose leading monomials are powers of
// distinct variables (a triangular set), taken in the listed order.
LocalDivision lp_divide(LocalPoly q, const std::vector<LocalPoly>& gens) {
  LocalDivision out;
  out.quotients.resize(gens.size());
  for (auto& g : out.quotients) g.ground = q.ground;
  out.remainder.ground = q.ground;
  while (!q.is_zero()) {
    auto lead = std::prev(q.terms.end());
    bool reduced = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      auto glead = std::prev(gens[i].terms.end());
      const Exp3& ge = glead->first;
      const Exp3& qe = lead->first;
      if (qe[0] >= ge[0] && qe[1] >= ge[1] && qe[2] >= ge[2]) {
        Exp3 shift{qe[0] - ge[0], qe[1] - ge[1], qe[2] - ge[2]};
        Fraction factor = lead->second / glead->second;
        out.quotients[i].add_term(shift, factor);
        q = lp_sub(q, lp_mul_term(gens[i], shift, factor));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.remainder.add_term(lead->first, lead->second);
      q.terms.erase(lead);
    }
  }
  return out;
}

const PolyRing* ground_of(const Fraction& t1, const Fraction& t2) {
  if (t1.ring() != t2.ring()) throw MixedFields();
  return t1.ring();
}

std::string fresh_name(const PolyRing* ring, std::string base) {
  while (ring->index_of(base) >= 0) base = "m" + base;
  return base;
}

}  // namespace

CubicSurfaceSpec cubic_surface(const Fraction& t1, const Fraction& t2) {
  const PolyRing* ground = ground_of(t1, t2);
  if (ground->field->characteristic() != 2)
    throw BadCharacteristic("the cubic surface lives in characteristic 2");
  if (t1.is_zero() || t2.is_zero()) throw ZeroLeadingScalar();
  if (!t1.is_polynomial() || !t2.is_polynomial())
    throw Error("surface scalars must be polynomial elements");
  std::vector<std::string> vars = ground->vars;
  for (const char* c : {"x1", "x2", "y1", "y2"}) {
    if (ground->index_of(c) >= 0)
      throw Error(std::string("ground variable collides with coordinate ") + c);
    vars.push_back(c);
  }
  CubicSurfaceSpec s;
  s.ring = PolyRing::make(ground->field, vars, ground->nvars());
  s.t1 = t1;
  s.t2 = t2;
  MultiPoly x1 = MultiPoly::variable(s.ring, s.x1());
  MultiPoly x2 = MultiPoly::variable(s.ring, s.x2());
  MultiPoly y1 = MultiPoly::variable(s.ring, s.y1());
  MultiPoly y2 = MultiPoly::variable(s.ring, s.y2());
  MultiPoly t1p = t1.num().embed_into(s.ring);
  MultiPoly t2p = t2.num().embed_into(s.ring);
  s.defining = y1.pow(3) + t1p * x1.pow(2) * y1 + y2.pow(3) + t2p * x2.pow(2) * y2;
  return s;
}

CubicNonsmoothLocus cubic_nonsmooth_locus(const CubicSurfaceSpec& s) {
  CubicNonsmoothLocus out;
  out.p1 = s.defining.derivative(s.y1());
  out.p2 = s.defining.derivative(s.y2());
  MultiPoly y1 = MultiPoly::variable(s.ring, s.y1());
  MultiPoly y2 = MultiPoly::variable(s.ring, s.y2());
  out.identity_ok = (s.defining - (y1 * out.p1 + y2 * out.p2)).is_zero();
  out.x_partials_zero = s.defining.derivative(s.x1()).is_zero() &&
                        s.defining.derivative(s.x2()).is_zero();
  return out;
}

CubicPoint rational_point(const CubicSurfaceSpec& s,
                          const std::array<Fraction, 4>& values) {
  const PolyRing* ground = s.t1.ring();
  CubicPoint a;
  size_t chart = 4;
  for (size_t i = 0; i < 4; ++i) {
    if (values[i].ring() != ground) throw MixedFields();
    a.coords[i] = {values[i], Fraction::zero(ground)};
    if (chart == 4 && values[i] == Fraction::one(ground)) chart = i;
  }
  if (chart == 4)
    throw Error("rational point must have some coordinate equal to 1");
  a.chart = chart;
  return a;
}

CubicPoint inseparable_point(const CubicSurfaceSpec& s, size_t theta_coord,
                             const Fraction& c,
                             const std::array<Fraction, 4>& alphas) {
  const PolyRing* ground = s.t1.ring();
  if (theta_coord >= 4) throw BadIndex("coordinate index out of range");
  if (c.ring() != ground) throw MixedFields();
  if (c.is_pth_power())
    throw Error("theta^2 value is a square; the residue field would be split");
  CubicPoint a;
  a.theta_sq = c;
  size_t chart = 4;
  for (size_t i = 0; i < 4; ++i) {
    if (alphas[i].ring() != ground) throw MixedFields();
    a.coords[i] = {alphas[i], Fraction::zero(ground)};
    if (chart == 4 && i != theta_coord && alphas[i] == Fraction::one(ground))
      chart = i;
  }
  if (!alphas[theta_coord].is_zero())
    throw Error("theta coordinate must be exactly theta");
  a.coords[theta_coord] = {Fraction::zero(ground), Fraction::one(ground)};
  if (chart == 4)
    throw Error("point must have some coordinate equal to 1");
  a.chart = chart;
  return a;
}

namespace {

// Dehomogenize the defining polynomial by dropping the chart coordinate,
// producing a LocalPoly in the three remaining coordinates.
LocalPoly dehomogenize(const CubicSurfaceSpec& s,
                       const std::array<size_t, 3>& affine_coords) {
  const PolyRing* ground = s.t1.ring();
  LocalPoly q;
  q.ground = ground;
  size_t cb = s.coord_begin();
  for (const auto& [mono, coeff] : s.defining.terms()) {
    Mono gm(ground->nvars(), 0);
    for (size_t i = 0; i < ground->nvars(); ++i) gm[i] = mono[i];
    Fraction c(MultiPoly::monomial(ground, gm, coeff));
    Exp3 e{0, 0, 0};
    for (size_t k = 0; k < 3; ++k) e[k] = mono[cb + affine_coords[k]];
    q.add_term(e, c);  // the chart coordinate is set to 1 by dropping it
  }
  return q;
}

}  // namespace

LocalClass local_equation_class(const CubicSurfaceSpec& s,
                                const CubicPoint& a) {
  const PolyRing* ground = s.t1.ring();
  size_t chart = a.chart;
  if (!(a.coords[chart].first == Fraction::one(ground)) ||
      !a.coords[chart].second.is_zero())
    throw Error("chart coordinate must be 1");

  std::array<size_t, 3> affine{};
  {
    size_t k = 0;
    for (size_t i = 0; i < 4; ++i)
      if (i != chart) affine[k++] = i;
  }
  LocalPoly q = dehomogenize(s, affine);

  Fraction theta_sq =
      a.theta_sq.has_value() ? *a.theta_sq : Fraction::zero(ground);
  std::array<QuadExt, 3> values;
  int theta_slot = -1;
  for (size_t k = 0; k < 3; ++k) {
    const auto& [alpha, beta] = a.coords[affine[k]];
    values[k] = qe_make(alpha, beta);
    if (!beta.is_zero()) {
      if (theta_slot >= 0) throw Error("at most one coordinate may carry theta");
      if (!alpha.is_zero() || !(beta == Fraction::one(ground)))
        throw Error("theta coordinate must be exactly theta");
      theta_slot = static_cast<int>(k);
    }
  }
  if (theta_slot >= 0 && !a.theta_sq.has_value())
    throw Error("theta coordinate without a minimal relation");

  if (!qe_is_zero(lp_eval(q, values, theta_sq, ground)))
    throw PointNotOnSurface();

  // Triangular generators of the maximal ideal at the point.
  std::vector<LocalPoly> gens;
  for (size_t k = 0; k < 3; ++k) {
    LocalPoly g;
    g.ground = ground;
    Exp3 e{0, 0, 0};
    if (static_cast<int>(k) == theta_slot) {
      e[k] = 2;
      g.add_term(e, Fraction::one(ground));
      g.add_term({0, 0, 0}, -theta_sq);
    } else {
      e[k] = 1;
      g.add_term(e, Fraction::one(ground));
      g.add_term({0, 0, 0}, -a.coords[affine[k]].first);
    }
    gens.push_back(std::move(g));
  }

  LocalDivision div = lp_divide(q, gens);
  if (!div.remainder.is_zero())
    throw Error("triangular division left a nonzero remainder");

  // Class of the equation in m/m^2: the generator coefficients evaluated at
  // the point, over the residue field.
  LocalClass cls;
  for (const auto& quot : div.quotients) {
    QuadExt v = lp_eval(quot, values, theta_sq, ground);
    if (!qe_is_zero(v)) cls.nonzero = true;
    cls.components.emplace_back(v.a, v.b);
  }
  return cls;
}

bool local_regularity_at(const CubicSurfaceSpec& s, const CubicPoint& a) {
  return local_equation_class(s, a).nonzero;
}

bool tensor_field_test(const Fraction& t1, const Fraction& t2) {
  const PolyRing* ground = ground_of(t1, t2);
  if (ground->field->characteristic() != 2)
    throw BadCharacteristic("tensor test is a characteristic-2 criterion");
  if (t1.is_zero() || t2.is_zero()) throw ZeroDivisor();
  return p_independence_rank({t1, t2}) == 2;
}

FiberResult fiber_at(const CubicSurfaceSpec& s,
                     const std::optional<Fraction>& lambda) {
  const PolyRing* ground = s.t1.ring();
  FiberResult out;
  if (!lambda.has_value()) {
    // Fiber over (1:0): y1 = 0, residual conic y2^2 + t2 x2^2.
    out.conic = ConicSpec{Fraction::one(ground), s.t2, Fraction::zero(ground),
                          {"y2", "x2", "x1"}};
    std::map<std::string, Fraction> images{
        {"y1", Fraction::zero(s.ring)}};
    Fraction restricted = substitute_into(s.defining, images, s.ring);
    Fraction y2 = Fraction::variable(s.ring, s.y2());
    Fraction conic = y2 * y2 + s.t2.embed_into(s.ring) *
                                   Fraction::variable(s.ring, s.x2()).pow(2);
    out.decomposition_ok = restricted == y2 * conic;
    out.exceptional = false;
    return out;
  }
  const Fraction& lam = *lambda;
  if (lam.ring() != ground) throw MixedFields();
  Fraction a = Fraction::one(ground) + lam.pow(3);
  out.conic = ConicSpec{a, s.t1, lam * s.t2, {"y1", "x1", "x2"}};
  out.exceptional = a.is_zero();

  // P restricted to {y2 = lambda y1} must equal y1 * conic.
  Fraction lam_m = lam.embed_into(s.ring);
  Fraction y1 = Fraction::variable(s.ring, s.y1());
  std::map<std::string, Fraction> images{{"y2", lam_m * y1}};
  Fraction restricted = substitute_into(s.defining, images, s.ring);
  Fraction conic = a.embed_into(s.ring) * y1 * y1 +
                   s.t1.embed_into(s.ring) *
                       Fraction::variable(s.ring, s.x1()).pow(2) +
                   (lam * s.t2).embed_into(s.ring) *
                       Fraction::variable(s.ring, s.x2()).pow(2);
  out.decomposition_ok = restricted == y1 * conic;
  return out;
}

ConicClassification conic_classify(const ConicSpec& conic) {
  std::array<const Fraction*, 3> cs{&conic.a, &conic.b, &conic.c};
  int pivot = -1;
  int nonzero = 0;
  for (int i = 0; i < 3; ++i) {
    if (!cs[i]->is_zero()) {
      ++nonzero;
      if (pivot < 0) pivot = i;
    }
  }
  if (pivot < 0) throw AllZero();
  ConicClassification out;
  std::vector<Fraction> ratios;
  for (int i = 0; i < 3; ++i)
    if (i != pivot) ratios.push_back(*cs[i] / *cs[pivot]);
  out.is_regular = is_p_independent(ratios);
  out.is_geometrically_reduced = (nonzero == 1);
  return out;
}

FrobeniusResult frobenius_base_change(const CubicSurfaceSpec& s, uint32_t nu) {
  if (nu < 1 || nu > 16) throw Error("Frobenius exponent out of range");
  const PolyRing* ground = s.t1.ring();
  uint32_t q = 1u << nu;

  std::string mu = fresh_name(ground, "mu");
  std::vector<std::string> vars = ground->vars;
  vars.push_back(mu);
  size_t n_ground = vars.size();
  for (const char* c : {"u0", "u1", "u2"}) vars.push_back(c);
  const PolyRing* ring = PolyRing::make(ground->field, vars, n_ground);

  MultiPoly mu_p = MultiPoly::variable(ring, mu);
  MultiPoly u0 = MultiPoly::variable(ring, "u0");
  MultiPoly u1 = MultiPoly::variable(ring, "u1");
  MultiPoly u2 = MultiPoly::variable(ring, "u2");
  MultiPoly one = MultiPoly::from_int(ring, 1);
  MultiPoly t1 = s.t1.num().embed_into(ring);
  MultiPoly t2 = s.t2.num().embed_into(ring);

  // Generic fiber conic with lambda = mu^q.
  MultiPoly lhs = (one + mu_p.pow(3 * q)) * u0.pow(2) + t1 * u1.pow(2) +
                  mu_p.pow(q) * t2 * u2.pow(2);
  // Constant conic after the linear change v0 = (1+mu^3)^(q/2) u0,
  // v2 = mu^(q/2) u2.
  MultiPoly v0 = (one + mu_p.pow(3)).pow(q / 2) * u0;
  MultiPoly v2 = mu_p.pow(q / 2) * u2;
  MultiPoly rhs = v0.pow(2) + t1 * u1.pow(2) + t2 * v2.pow(2);

  FrobeniusResult out;
  out.certificate_ok = (lhs - rhs).is_zero();
  out.conic = ConicSpec{Fraction::one(ground), s.t1, s.t2, {"v0", "v1", "v2"}};
  return out;
}

TangentSection tangent_section(const CubicSurfaceSpec& s, const CubicPoint& a) {
  if (!a.is_rational()) throw NotRational();
  if (!local_regularity_at(s, a)) throw SingularPoint();
  const PolyRing* ground = s.t1.ring();

  // Tangent plane: c1 y1 + c2 y2 = 0 with c_i the y_i-partials at the point.
  std::map<std::string, Fraction> at_point;
  at_point.emplace("x1", a.coords[0].first);
  at_point.emplace("x2", a.coords[1].first);
  at_point.emplace("y1", a.coords[2].first);
  at_point.emplace("y2", a.coords[3].first);
  Fraction c1 =
      substitute_into(Fraction(s.defining.derivative(s.y1())), at_point, ground);
  Fraction c2 =
      substitute_into(Fraction(s.defining.derivative(s.y2())), at_point, ground);
  if (c1.is_zero() && c2.is_zero()) throw SingularPoint();

  TangentSection out;
  Fraction section;
  if (!c2.is_zero()) {
    // y2 = (c1/c2) y1 in the tangent plane.
    Fraction gamma = (c1 / c2).embed_into(s.ring);
    std::map<std::string, Fraction> images{
        {"y2", gamma * Fraction::variable(s.ring, s.y1())}};
    section = substitute_into(s.defining, images, s.ring);
    out.eliminated = "y2";
    out.linear_factor = "y1";
  } else {
    // c1 != 0 and the plane is y1 = (c2/c1) y2 = 0.
    std::map<std::string, Fraction> images{{"y1", Fraction::zero(s.ring)}};
    section = substitute_into(s.defining, images, s.ring);
    out.eliminated = "y1";
    out.linear_factor = "y2";
  }
  out.curve = section.num();  // denominators are ground units
  MultiPoly linear = MultiPoly::variable(s.ring, out.linear_factor);
  out.divisible = !out.curve.is_zero() && out.curve.divisible_by(linear);
  out.integral = !out.divisible;
  out.purely_inseparable =
      a.coords[2].first.is_zero() && a.coords[3].first.is_zero();
  return out;
}

bool c1_c2_disjoint(const CubicSurfaceSpec& s) {
  // With y1 = y2 = 0 the conic equations collapse to t1 x1^2 and t2 x2^2;
  // both scalars are nonzero, so any common zero has x1 = x2 = 0 as well and
  // the intersection is projectively empty over every extension.
  std::map<std::string, Fraction> images{{"y1", Fraction::zero(s.ring)},
                                         {"y2", Fraction::zero(s.ring)}};
  CubicNonsmoothLocus locus = cubic_nonsmooth_locus(s);
  Fraction r1 = substitute_into(Fraction(locus.p1), images, s.ring);
  Fraction r2 = substitute_into(Fraction(locus.p2), images, s.ring);
  Fraction want1 = s.t1.embed_into(s.ring) *
                   Fraction::variable(s.ring, s.x1()).pow(2);
  Fraction want2 = s.t2.embed_into(s.ring) *
                   Fraction::variable(s.ring, s.x2()).pow(2);
  return !s.t1.is_zero() && !s.t2.is_zero() && r1 == want1 && r2 == want2;
}

std::optional<std::pair<Fraction, Fraction>> square_decompose_over(
    const Fraction& target, const Fraction& base) {
  const PolyRing* ground = ground_of(target, base);
  if (ground->field->characteristic() != 2)
    throw BadCharacteristic("square decomposition is a characteristic-2 step");
  auto comp_t = pbasis_components(target);
  auto comp_b = pbasis_components(base);
  Mono zero_mono(ground->nvars(), 0);
  auto get = [&](const std::map<Mono, Fraction>& m, const Mono& e) {
    auto it = m.find(e);
    return it == m.end() ? Fraction::zero(ground) : it->second;
  };
  // Find a nonzero odd component of the base.
  Fraction b = Fraction::zero(ground);
  bool base_has_odd = false;
  for (const auto& [e, h] : comp_b) {
    if (e == zero_mono || h.is_zero()) continue;
    base_has_odd = true;
    b = get(comp_t, e) / h;
    break;
  }
  if (!base_has_odd) {
    // base is a square; target must be one too.
    for (const auto& [e, g] : comp_t)
      if (!(e == zero_mono) && !g.is_zero()) return std::nullopt;
    b = Fraction::zero(ground);
  }
  Fraction a = get(comp_t, zero_mono) + b * get(comp_b, zero_mono);
  Fraction residual = target - (a * a + b * b * base);
  if (!residual.is_zero()) return std::nullopt;
  return std::make_pair(a, b);
}

StratificationReport regularity_stratification(const Fraction& t1,
                                               const Fraction& t2) {
  const PolyRing* ground = ground_of(t1, t2);
  if (t1.is_zero() || t2.is_zero()) throw ZeroLeadingScalar();
  StratificationReport rep;
  rep.n = p_independence_rank({t1, t2});
  if (rep.n == 2) {
    rep.label = "regular";
    CubicSurfaceSpec s = cubic_surface(t1, t2);
    CubicPoint a = inseparable_point(
        s, 2, t1,
        {Fraction::one(ground), Fraction::zero(ground),
         Fraction::zero(ground), Fraction::zero(ground)});
    CubicPoint b = inseparable_point(
        s, 3, t2,
        {Fraction::zero(ground), Fraction::one(ground),
         Fraction::zero(ground), Fraction::zero(ground)});
    bool reg_a = local_regularity_at(s, a);
    bool reg_b = local_regularity_at(s, b);
    bool field = tensor_field_test(t1, t2);
    rep.certificate_ok = reg_a && reg_b && field;
    rep.detail = "regular at both inseparable points; residue tensor product is a field";
    return rep;
  }
  if (rep.n == 1) {
    rep.label = "normal, singular along a point of the non-smoothness divisor";
    // One scalar has nonzero differential; the other is a square over the
    // degree-2 extension it generates, so the divisor is non-reduced.
    bool base_is_t1 = !t1.is_pth_power();
    const Fraction& base = base_is_t1 ? t1 : t2;
    const Fraction& target = base_is_t1 ? t2 : t1;
    rep.square_decomposition = square_decompose_over(target, base);
    rep.certificate_ok = rep.square_decomposition.has_value();
    rep.detail = base_is_t1
                     ? "t2 = a^2 + b^2 t1 over F, so D is non-reduced over F(sqrt(t1))"
                     : "t1 = a^2 + b^2 t2 over F, so D is non-reduced over F(sqrt(t2))";
    return rep;
  }
  rep.label = "non-normal, singular along the whole divisor";
  // Both scalars are squares (pth_root throws otherwise); rescaling x_i by
  // the roots normalizes to t1 = t2 = 1, where the singular points sit on
  // the diagonal x1 = y1, x2 = y2.
  t1.pth_root();
  t2.pth_root();
  CubicSurfaceSpec s1 = cubic_surface(Fraction::one(ground), Fraction::one(ground));
  Fraction one = Fraction::one(ground);
  Fraction zero = Fraction::zero(ground);
  bool all_singular = true;
  for (const auto& vals : {std::array<Fraction, 4>{one, one, one, one},
                           std::array<Fraction, 4>{one, zero, one, zero},
                           std::array<Fraction, 4>{zero, one, zero, one}}) {
    CubicPoint pt = rational_point(s1, vals);
    all_singular = all_singular && !local_regularity_at(s1, pt);
  }
  rep.certificate_ok = all_singular;
  rep.detail = "diagonal rational points x_i = y_i are singular after normalizing t1 = t2 = 1";
  return rep;
}

}  // namespace imperf
