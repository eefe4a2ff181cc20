#include "imperf/hypersurface.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "imperf/differentials.hpp"
#include "imperf/errors.hpp"

namespace imperf {

namespace {

const PolyRing* ground_ring_of(const std::vector<Fraction>& t) {
  if (t.empty()) throw Error("empty scalar list");
  const PolyRing* ring = t[0].ring();
  for (const auto& f : t)
    if (f.ring() != ring) throw MixedFields();
  return ring;
}

std::vector<std::string> coordinate_names(uint32_t n) {
  std::vector<std::string> names;
  for (uint32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("y");
  names.push_back("z");
  return names;
}

// E = GF(p^m)(u_1,...,u_n): the ground presentation with every t_i replaced
// by u_i^p, so each scalar acquires a p-th root.
struct RootExtension {
  const PolyRing* ring;                       // ground u-vars (+ extras)
  std::map<std::string, Fraction> embedding;  // t_i -> u_i^p
};

RootExtension root_extension(const PolyRing* ground,
                             const std::vector<std::string>& extra_coords) {
  std::vector<std::string> names;
  for (size_t i = 0; i < ground->nvars(); ++i) {
    std::string candidate = "u" + std::to_string(i + 1);
    while (ground->index_of(candidate) >= 0) candidate = "u" + candidate;
    names.push_back(candidate);
  }
  size_t n_ground = names.size();
  for (const auto& c : extra_coords) names.push_back(c);
  RootExtension ext;
  ext.ring = PolyRing::make(ground->field, names, n_ground);
  uint32_t p = ground->field->characteristic();
  for (size_t i = 0; i < ground->nvars(); ++i)
    ext.embedding.emplace(ground->vars[i],
                          Fraction::variable(ext.ring, i).pow(p));
  return ext;
}

}  // namespace

HypersurfaceSpec kollar_hypersurface(uint32_t p, uint32_t n,
                                     const std::vector<Fraction>& t) {
  if (p < 3 || !is_prime_u32(p))
    throw BadCharacteristic("the degree-p family needs an odd prime, got " +
                            std::to_string(p));
  if (n < 1) throw Error("n must be >= 1");
  if (t.size() != n) throw Error("expected exactly n scalars");
  const PolyRing* ground = ground_ring_of(t);
  if (ground->field->characteristic() != p)
    throw BadCharacteristic("scalars live in the wrong characteristic");
  if (t[0].is_zero()) throw ZeroLeadingScalar();
  for (const auto& f : t)
    if (!f.is_polynomial())
      throw Error("family scalars must be polynomial elements");

  std::vector<std::string> vars = ground->vars;
  for (const auto& c : coordinate_names(n)) {
    if (ground->index_of(c) >= 0)
      throw Error("ground variable collides with coordinate name " + c);
    vars.push_back(c);
  }
  HypersurfaceSpec h;
  h.p = p;
  h.n = n;
  h.ring = PolyRing::make(ground->field, vars, ground->nvars());
  h.t = t;

  MultiPoly y = MultiPoly::variable(h.ring, h.y_index());
  MultiPoly z = MultiPoly::variable(h.ring, h.z_index());
  MultiPoly poly = y.pow(p) - y * z.pow(p - 1);
  for (uint32_t i = 0; i < n; ++i) {
    MultiPoly xi = MultiPoly::variable(h.ring, h.x_index(i));
    poly = poly + t[i].num().embed_into(h.ring) * xi.pow(p);
  }
  h.defining = poly;
  return h;
}

std::vector<MultiPoly> nonsmooth_generators(const HypersurfaceSpec& h) {
  std::vector<MultiPoly> out;
  for (size_t i = h.coord_begin(); i < h.ring->nvars(); ++i)
    out.push_back(h.defining.derivative(i));
  return out;
}

bool nonsmooth_support_certificate(const HypersurfaceSpec& h) {
  std::vector<MultiPoly> partials = nonsmooth_generators(h);
  MultiPoly z = MultiPoly::variable(h.ring, h.z_index());
  MultiPoly z_low = z.pow(h.p - 2);
  MultiPoly z_high = z.pow(h.p - 1);
  bool unit_power_seen = false;
  for (uint32_t i = 0; i < h.n; ++i)
    if (!partials[i].is_zero()) return false;  // x-partials must vanish
  for (const auto& g : partials) {
    if (g.is_zero()) continue;
    if (!g.divisible_by(z_low)) return false;
    if (g.term_count() == 1 && g.lead_mono() == z_high.lead_mono())
      unit_power_seen = true;
  }
  return unit_power_seen;
}

bool fermat_regular(const std::vector<Fraction>& t) {
  return is_p_independent(t);
}

std::vector<Fraction> normalize_diagonal_coefficients(
    const std::vector<Fraction>& coeffs) {
  size_t pivot = coeffs.size();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot == coeffs.size()) throw AllZero();
  std::vector<Fraction> out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i == pivot) continue;
    out.push_back(coeffs[i] / coeffs[pivot]);
  }
  return out;
}

bool eisenstein_at(const MultiPoly& poly, size_t v_index, size_t prime_index) {
  if (poly.is_zero()) return false;
  auto coeffs = poly.coeffs_in(v_index);
  uint32_t deg = coeffs.rbegin()->first;
  if (deg == 0) return false;
  const PolyRing* ring = poly.ring();
  MultiPoly prime = MultiPoly::variable(ring, prime_index);
  MultiPoly prime_sq = prime * prime;
  for (const auto& [e, c] : coeffs) {
    if (e == deg) {
      if (!c.is_constant() || c.is_zero()) return false;  // unit lead
    } else if (e == 0) {
      if (c.is_zero()) return false;
      if (!c.divisible_by(prime)) return false;
      if (c.divisible_by(prime_sq)) return false;
    } else {
      if (!c.divisible_by(prime)) return false;
    }
  }
  // Coefficients absent from the map are zero and trivially divisible.
  return true;
}

bool eisenstein_certificate(const HypersurfaceSpec& h) {
  // Over E every scalar has the root r_i; substituting
  //   x_1 -> (v - y - sum_{i>=2} r_i x_i) / r_1
  // turns the diagonal part into (v - y)^p and the equation into a
  // polynomial in v over the ground pair (y, z).
  std::vector<std::string> coords;
  for (uint32_t i = 2; i <= h.n; ++i) coords.push_back("x" + std::to_string(i));
  coords.push_back("y");
  coords.push_back("z");
  coords.push_back("v");
  const PolyRing* ground = h.t[0].ring();
  RootExtension ext = root_extension(ground, coords);
  const PolyRing* ring = ext.ring;

  std::vector<Fraction> roots;
  for (const auto& ti : h.t)
    roots.push_back(substitute_into(ti, ext.embedding, ring).pth_root());
  if (roots[0].is_zero()) throw ZeroLeadingScalar();

  Fraction v = Fraction::variable(ring, "v");
  Fraction y = Fraction::variable(ring, "y");
  Fraction x1_image = v - y;
  for (uint32_t i = 2; i <= h.n; ++i)
    x1_image = x1_image - roots[i - 1] * Fraction::variable(ring, "x" + std::to_string(i));
  x1_image = x1_image / roots[0];

  std::map<std::string, Fraction> images = ext.embedding;
  images.emplace("x1", x1_image);
  Fraction transformed = substitute_into(h.defining, images, ring);
  if (!transformed.is_polynomial()) return false;
  int v_idx = ring->index_of("v");
  int y_idx = ring->index_of("y");
  return eisenstein_at(transformed.num(), static_cast<size_t>(v_idx),
                       static_cast<size_t>(y_idx));
}

EquivalenceStep projective_equivalence_step(const HypersurfaceSpec& h) {
  if (h.n < 2) throw BadIndex("coordinate change needs n >= 2");
  const Fraction& t_last = h.t[h.n - 1];
  const Fraction& t_prev = h.t[h.n - 2];
  if (t_prev.is_zero()) throw ZeroLeadingScalar();
  Fraction root = (t_last / t_prev).pth_root();  // NotAPthPower propagates

  std::vector<Fraction> t_new = h.t;
  t_new[h.n - 1] = Fraction::zero(t_last.ring());
  HypersurfaceSpec h_new = kollar_hypersurface(h.p, h.n, t_new);

  // Substituting x_{n-1} -> x_{n-1} - r x_n into the original equation must
  // reproduce the new one exactly.
  const PolyRing* ring = h.ring;
  std::string xm = "x" + std::to_string(h.n - 1);
  std::string xn = "x" + std::to_string(h.n);
  Fraction image = Fraction::variable(ring, xm) -
                   root.embed_into(ring) * Fraction::variable(ring, xn);
  std::map<std::string, Fraction> images{{xm, image}};
  Fraction transformed = substitute_into(h.defining, images, ring);
  if (transformed != Fraction(h_new.defining))
    throw Error("coordinate change verification failed");

  EquivalenceStep step;
  step.spec = h_new;
  step.t = t_new;
  step.root = root;
  return step;
}

RationalityWitness geometric_rationality_witness(
    uint32_t p, uint32_t n, const std::vector<Fraction>& t) {
  if (t.size() != n || n < 1) throw Error("expected n >= 1 scalars");
  if (t[0].is_zero()) throw ZeroLeadingScalar();
  const PolyRing* ground = ground_ring_of(t);

  // Parameter chart ring: E with parameters (s, x_2, ..., x_n).
  std::vector<std::string> params{"s"};
  for (uint32_t i = 2; i <= n; ++i) params.push_back("x" + std::to_string(i));
  RootExtension fwd_ext = root_extension(ground, params);
  const PolyRing* w = fwd_ext.ring;

  std::vector<Fraction> roots;
  for (const auto& ti : t)
    roots.push_back(substitute_into(ti, fwd_ext.embedding, w).pth_root());

  Fraction s = Fraction::variable(w, "s");
  Fraction x1 = s - s.pow(p);
  for (uint32_t i = 2; i <= n; ++i)
    x1 = x1 - roots[i - 1] * Fraction::variable(w, "x" + std::to_string(i));
  x1 = x1 / roots[0];

  RationalityWitness wit;
  wit.forward.source_dim = n;
  wit.forward.target_dim = n + 1;
  wit.forward.source_ring = w;
  wit.forward.components.push_back(x1);
  for (uint32_t i = 2; i <= n; ++i)
    wit.forward.components.push_back(Fraction::variable(w, "x" + std::to_string(i)));
  wit.forward.components.push_back(s.pow(p));   // y
  wit.forward.components.push_back(Fraction::one(w));  // z

  // Target chart ring: E with coordinates (x_1, ..., x_n, y), z = 1.
  std::vector<std::string> chart;
  for (uint32_t i = 1; i <= n; ++i) chart.push_back("x" + std::to_string(i));
  chart.push_back("y");
  RootExtension inv_ext = root_extension(ground, chart);
  const PolyRing* v = inv_ext.ring;
  std::vector<Fraction> inv_roots;
  for (const auto& ti : t)
    inv_roots.push_back(substitute_into(ti, inv_ext.embedding, v).pth_root());

  Fraction s_back = Fraction::variable(v, "y");
  for (uint32_t i = 1; i <= n; ++i)
    s_back = s_back +
             inv_roots[i - 1] * Fraction::variable(v, "x" + std::to_string(i));
  wit.inverse.source_dim = n + 1;
  wit.inverse.target_dim = n;
  wit.inverse.source_ring = v;
  wit.inverse.components.push_back(s_back);
  for (uint32_t i = 2; i <= n; ++i)
    wit.inverse.components.push_back(Fraction::variable(v, "x" + std::to_string(i)));

  // Certificate (a): the defining polynomial pulls back to zero.
  HypersurfaceSpec h = kollar_hypersurface(p, n, t);
  std::map<std::string, Fraction> pullback_images = fwd_ext.embedding;
  for (uint32_t i = 1; i <= n; ++i)
    pullback_images.emplace("x" + std::to_string(i),
                            wit.forward.components[i - 1]);
  pullback_images.emplace("y", wit.forward.components[n]);
  pullback_images.emplace("z", wit.forward.components[n + 1]);
  Fraction pullback = substitute_into(h.defining, pullback_images, w);
  wit.pullback_zero = pullback.is_zero();

  // Certificate (b): inverse o forward is the identity on (s, x_2..x_n).
  std::map<std::string, Fraction> comp_images;
  for (size_t i = 0; i < w->n_ground; ++i)
    comp_images.emplace(v->vars[i], Fraction::variable(w, i));
  for (uint32_t i = 1; i <= n; ++i)
    comp_images.emplace("x" + std::to_string(i), wit.forward.components[i - 1]);
  comp_images.emplace("y", wit.forward.components[n]);
  bool ok = substitute_into(wit.inverse.components[0], comp_images, w) == s;
  for (uint32_t i = 2; i <= n && ok; ++i)
    ok = substitute_into(wit.inverse.components[i - 1], comp_images, w) ==
         Fraction::variable(w, "x" + std::to_string(i));
  wit.round_trip_identity = ok;
  return wit;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  if (coords.size() != o.coords.size())
    return coords.size() < o.coords.size();
  for (size_t i = 0; i < coords.size(); ++i) {
    int c = coords[i].compare(o.coords[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

ProjPoint canonical_point(std::vector<MultiPoly> coords) {
  if (coords.empty()) throw Error("empty coordinate tuple");
  const PolyRing* ring = coords[0].ring();
  // gcd-free tuple
  MultiPoly g = MultiPoly::zero(ring);
  for (const auto& c : coords) g = gcd(g, c);
  if (g.is_zero()) throw Error("zero coordinate tuple");
  if (!g.is_one())
    for (auto& c : coords) c = *c.divide_exact(g);
  // first nonzero coordinate gets leading coefficient 1
  for (const auto& c : coords) {
    if (c.is_zero()) continue;
    uint64_t inv = ring->field->inv(c.lead_coeff());
    if (inv != 1)
      for (auto& cc : coords) cc = cc.scaled(inv);
    break;
  }
  ProjPoint pt;
  pt.coords = std::move(coords);
  return pt;
}

std::vector<ProjPoint> bounded_point_search(const HypersurfaceSpec& h,
                                            uint32_t degree_bound,
                                            uint64_t budget) {
  const PolyRing* ring = h.ring;
  if (ring->field->extension_degree() != 1)
    throw Error("point search runs over prime constant fields");
  for (uint32_t i = 0; i < h.n; ++i)
    if (h.t[i] != Fraction::variable(h.t[i].ring(), i))
      throw Error("point search requires the scalars to be the generators");
  uint32_t p = h.p;
  size_t n_ground = ring->n_ground;

  // Monomials of total degree <= degree_bound in the ground variables.
  std::vector<Mono> monos;
  Mono current(ring->nvars(), 0);
  std::function<void(size_t, uint32_t)> gen = [&](size_t var, uint32_t left) {
    if (var == n_ground) {
      monos.push_back(current);
      return;
    }
    for (uint32_t e = 0; e <= left; ++e) {
      current[var] = e;
      gen(var + 1, left - e);
    }
    current[var] = 0;
  };
  gen(0, degree_bound);

  size_t coords_count = h.n + 2;
  size_t digits = coords_count * monos.size();
  long double total_ld = 1.0L;
  for (size_t i = 0; i < digits; ++i) {
    total_ld *= p;
    if (total_ld > 4e18L) break;
  }
  if (total_ld > static_cast<long double>(budget))
    throw BudgetExceeded("point search needs " + std::to_string(digits) +
                         " base-" + std::to_string(p) +
                         " digits, over the configured budget");
  uint64_t total = 1;
  for (size_t i = 0; i < digits; ++i) total *= p;

  std::set<ProjPoint> found;
  std::vector<uint32_t> digit(digits, 0);
  for (uint64_t counter = 0; counter < total; ++counter) {
    // decode odometer
    uint64_t v = counter;
    bool all_zero = true;
    for (size_t i = 0; i < digits; ++i) {
      digit[i] = static_cast<uint32_t>(v % p);
      if (digit[i]) all_zero = false;
      v /= p;
    }
    if (all_zero) continue;
    std::vector<MultiPoly> coords;
    coords.reserve(coords_count);
    bool any = false;
    for (size_t c = 0; c < coords_count; ++c) {
      MultiPoly poly = MultiPoly::zero(ring);
      for (size_t j = 0; j < monos.size(); ++j) {
        uint32_t d = digit[c * monos.size() + j];
        if (d) poly = poly + MultiPoly::monomial(ring, monos[j], d);
      }
      if (!poly.is_zero()) any = true;
      coords.push_back(std::move(poly));
    }
    if (!any) continue;
    std::map<size_t, MultiPoly> images;
    for (size_t c = 0; c < coords_count; ++c)
      images.emplace(h.coord_begin() + c, coords[c]);
    if (!h.defining.substitute(images).is_zero()) continue;
    found.insert(canonical_point(std::move(coords)));
  }
  return std::vector<ProjPoint>(found.begin(), found.end());
}

const PolyRing* laurent_ring(uint32_t p) {
  return PolyRing::make(GF::get(p, 1), {"t"}, 1);
}

MultiPoly laurent_residual(uint32_t p, const MultiPoly& f, const MultiPoly& g,
                           const MultiPoly& h) {
  const PolyRing* ring = f.ring();
  if (g.ring() != ring || h.ring() != ring) throw MixedFields();
  MultiPoly t = MultiPoly::variable(ring, size_t{0});
  return f.pow(p) - f * g.pow(p - 1) + t * h.pow(p);
}

LaurentSearchResult laurent_exhaustive_search(uint32_t p,
                                              uint32_t degree_bound,
                                              uint64_t budget) {
  const PolyRing* ring = laurent_ring(p);
  size_t coeffs = degree_bound + 1;
  size_t digits = 3 * coeffs;
  long double total_ld = 1.0L;
  for (size_t i = 0; i < digits; ++i) total_ld *= p;
  if (total_ld > static_cast<long double>(budget))
    throw BudgetExceeded("Laurent search space exceeds the budget");
  uint64_t total = 1;
  for (size_t i = 0; i < digits; ++i) total *= p;

  LaurentSearchResult res;
  std::vector<uint32_t> digit(digits, 0);
  for (uint64_t counter = 0; counter < total; ++counter) {
    uint64_t v = counter;
    for (size_t i = 0; i < digits; ++i) {
      digit[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    MultiPoly fgh[3];
    for (size_t k = 0; k < 3; ++k) {
      MultiPoly poly = MultiPoly::zero(ring);
      for (size_t i = 0; i < coeffs; ++i) {
        uint32_t d = digit[k * coeffs + i];
        if (d) {
          Mono m(1, 0);
          m[0] = static_cast<uint32_t>(i);
          poly = poly + MultiPoly::monomial(ring, m, d);
        }
      }
      fgh[k] = poly;
    }
    ++res.triples_checked;
    if (!laurent_residual(p, fgh[0], fgh[1], fgh[2]).is_zero()) continue;
    if (fgh[2].is_zero()) {
      ++res.solutions_with_h_zero;
    } else {
      res.no_nonzero_h = false;
    }
  }
  return res;
}

}  // namespace imperf
