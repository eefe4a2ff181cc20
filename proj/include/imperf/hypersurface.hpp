#ifndef IMPERF_HYPERSURFACE_HPP
#define IMPERF_HYPERSURFACE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "imperf/fraction.hpp"

namespace imperf {

/// A hypersurface X in P^{n+1} over F = GF(p^m)(t_1,...) given by a
/// homogeneous defining polynomial in the coordinates x_1..x_n, y, z. The
/// ring mixes the ground variables (scalars) with the coordinates; the
/// scalars t_i are polynomial elements of the ground field.
struct HypersurfaceSpec {
  uint32_t p = 0;
  uint32_t n = 0;
  const PolyRing* ring = nullptr;     // ground vars, then x1..xn, y, z
  MultiPoly defining;
  std::vector<Fraction> t;            // over the ground ring

  size_t coord_begin() const { return ring->n_ground; }
  size_t x_index(uint32_t i) const { return coord_begin() + i; }  // 0-based
  size_t y_index() const { return coord_begin() + n; }
  size_t z_index() const { return coord_begin() + n + 1; }
};

/// The degree-p family y^p - y z^{p-1} + sum_i t_i x_i^p = 0 with p >= 3
/// prime, n >= 1 and t_1 != 0. Throws BadCharacteristic for p = 2 or
/// non-prime p, ZeroLeadingScalar for t_1 = 0.
HypersurfaceSpec kollar_hypersurface(uint32_t p, uint32_t n,
                                     const std::vector<Fraction>& t);

/// All partial derivatives of the defining polynomial with respect to the
/// coordinates, in coordinate order x_1,...,x_n, y, z.
std::vector<MultiPoly> nonsmooth_generators(const HypersurfaceSpec& h);

/// Certificate that the non-smoothness scheme is supported on X /\ {z = 0}:
/// every coordinate partial is divisible by z^{p-2}, the x-partials vanish
/// identically, and z^{p-1} appears among the partials up to a unit.
bool nonsmooth_support_certificate(const HypersurfaceSpec& h);

/// Regularity criterion for the diagonal hypersurface
/// x_0^p + sum t_i x_i^p = 0 with normalized leading coefficient: the scheme
/// is regular exactly when the t_i are p-independent.
bool fermat_regular(const std::vector<Fraction>& t);

/// Divide a full coefficient vector (t_0, ..., t_n) by its first nonzero
/// entry and return the remaining ratios; throws AllZero.
std::vector<Fraction> normalize_diagonal_coefficients(
    const std::vector<Fraction>& coeffs);

/// Irreducibility certificate: after adjoining all p-th roots the defining
/// polynomial becomes v^p - y z^{p-1} in the shifted coordinate v, and a
/// degree-one prime check at y applies. Returns true when the criterion
/// holds.
bool eisenstein_certificate(const HypersurfaceSpec& h);

/// Criterion check on an explicit polynomial viewed as univariate in `v`:
/// leading coefficient a nonzero constant, all middle coefficients divisible
/// by the prime variable, the constant one divisible exactly once.
bool eisenstein_at(const MultiPoly& poly, size_t v_index, size_t prime_index);

/// Coordinate change x_{n-1} -> x_{n-1} + r x_n with r^p = t_n / t_{n-1},
/// eliminating the last scalar. Requires n >= 2, t_{n-1} != 0 and the ratio
/// to be a p-th power; the transformed equation is checked symbolically.
struct EquivalenceStep {
  HypersurfaceSpec spec;
  std::vector<Fraction> t;
  Fraction root;  // r
};
EquivalenceStep projective_equivalence_step(const HypersurfaceSpec& h);

/// A tuple of coordinate fractions defining a rational map between
/// projective spaces (dimensions are the ambient projective dimensions).
struct RationalMap {
  uint32_t source_dim = 0;
  uint32_t target_dim = 0;
  const PolyRing* source_ring = nullptr;
  std::vector<Fraction> components;
};

/// Explicit birational parametrization of the family over the extension
/// E = GF(p^m)(u_1,...,u_n) with t_i = u_i^p, on the chart z = 1 with
/// parameters (s, x_2, ..., x_n):
///   y = s^p,  x_1 = (s - s^p - sum_{i>=2} r_i x_i) / r_1,  r_i = t_i^{1/p},
/// with inverse s = y + sum_i r_i x_i. Both certificate legs are computed:
/// the pullback of the defining polynomial vanishes identically and
/// inverse o forward is the identity on the generic point.
struct RationalityWitness {
  RationalMap forward;   // parameters -> (x_1..x_n, y, z)
  RationalMap inverse;   // chart (x_1..x_n, y) -> parameters
  bool pullback_zero = false;
  bool round_trip_identity = false;
  bool certified() const { return pullback_zero && round_trip_identity; }
};
RationalityWitness geometric_rationality_witness(uint32_t p, uint32_t n,
                                                 const std::vector<Fraction>& t);

/// A projective point with polynomial coordinates, canonicalized: the tuple
/// is gcd-free and the first nonzero coordinate has leading coefficient 1.
struct ProjPoint {
  std::vector<MultiPoly> coords;
  bool operator==(const ProjPoint& o) const { return coords == o.coords; }
  bool operator<(const ProjPoint& o) const;
};
ProjPoint canonical_point(std::vector<MultiPoly> coords);

/// Exhaustive search for points of X(F) whose homogeneous coordinates are
/// polynomials in the scalars of total degree <= degree_bound with prime
/// field coefficients. Requires the scalars to be exactly the ground
/// generators of F = GF(p)(t_1,...,t_n). Throws BudgetExceeded when the
/// enumeration would exceed `budget` candidate tuples.
std::vector<ProjPoint> bounded_point_search(const HypersurfaceSpec& h,
                                            uint32_t degree_bound,
                                            uint64_t budget = 10'000'000);

/// The residual f^p - f g^{p-1} + t h^p in GF(p)[t] for univariate f, g, h.
MultiPoly laurent_residual(uint32_t p, const MultiPoly& f, const MultiPoly& g,
                           const MultiPoly& h);

/// Exhaustive check over all triples of degree <= degree_bound: every exact
/// solution of the residual equation has h = 0.
struct LaurentSearchResult {
  bool no_nonzero_h = true;
  uint64_t solutions_with_h_zero = 0;
  uint64_t triples_checked = 0;
};
LaurentSearchResult laurent_exhaustive_search(uint32_t p, uint32_t degree_bound,
                                              uint64_t budget = 10'000'000);

/// Ring used by the Laurent checks: GF(p)[t], single ground variable.
const PolyRing* laurent_ring(uint32_t p);

}  // namespace imperf

#endif
