#ifndef IMPERF_CUBIC_HPP
#define IMPERF_CUBIC_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "imperf/fraction.hpp"

namespace imperf {

/// The cubic surface y1^3 + t1 x1^2 y1 + y2^3 + t2 x2^2 y2 = 0 in P^3 over a
/// ground field of characteristic 2, with both scalars nonzero. Coordinate
/// order is fixed as (x1 : x2 : y1 : y2).
struct CubicSurfaceSpec {
  const PolyRing* ring = nullptr;  // ground vars, then x1, x2, y1, y2
  Fraction t1, t2;                 // polynomial scalars over the ground ring
  MultiPoly defining;

  size_t coord_begin() const { return ring->n_ground; }
  size_t x1() const { return coord_begin(); }
  size_t x2() const { return coord_begin() + 1; }
  size_t y1() const { return coord_begin() + 2; }
  size_t y2() const { return coord_begin() + 3; }
};

CubicSurfaceSpec cubic_surface(const Fraction& t1, const Fraction& t2);

/// The scheme of non-smoothness is cut out by the two y-partials
/// P1 = y1^2 + t1 x1^2 and P2 = y2^2 + t2 x2^2; the defining polynomial
/// satisfies P = y1 P1 + y2 P2 exactly and the x-partials vanish.
struct CubicNonsmoothLocus {
  MultiPoly p1, p2;
  bool identity_ok = false;
  bool x_partials_zero = false;
};
CubicNonsmoothLocus cubic_nonsmooth_locus(const CubicSurfaceSpec& s);

/// A closed point of the surface with residue field F or F[theta] with
/// theta^2 = theta_sq (a non-square of F). Each homogeneous coordinate is
/// alpha + beta*theta; rational points have all beta = 0. Exactly one
/// coordinate may carry theta, and then with value theta itself.
struct CubicPoint {
  std::array<std::pair<Fraction, Fraction>, 4> coords;
  std::optional<Fraction> theta_sq;
  size_t chart = 0;  // index of a coordinate equal to 1

  bool is_rational() const { return !theta_sq.has_value(); }
};

/// Rational point (values over the ground field); chart picked automatically.
CubicPoint rational_point(const CubicSurfaceSpec& s,
                          const std::array<Fraction, 4>& values);
/// Point with one coordinate equal to theta, theta^2 = c; c must not be a
/// square in F.
CubicPoint inseparable_point(const CubicSurfaceSpec& s, size_t theta_coord,
                             const Fraction& c,
                             const std::array<Fraction, 4>& alphas);

/// The class of the dehomogenized equation in m/m^2 at the point, expressed
/// in the basis given by the triangular generators of the maximal ideal (one
/// per affine coordinate, in coordinate order). Each component is a residue
/// field element alpha + beta*theta. Throws PointNotOnSurface.
struct LocalClass {
  std::vector<std::pair<Fraction, Fraction>> components;
  bool nonzero = false;
};
LocalClass local_equation_class(const CubicSurfaceSpec& s, const CubicPoint& a);

/// Local regularity at the point: the m/m^2 class is nonzero.
bool local_regularity_at(const CubicSurfaceSpec& s, const CubicPoint& a);

/// Whether F(sqrt(t1)) (x) F(sqrt(t2)) is a field, i.e. whether {t1, t2} is
/// p-independent at p = 2.
bool tensor_field_test(const Fraction& t1, const Fraction& t2);

/// Diagonal conic a u0^2 + b u1^2 + c u2^2 = 0 in named coordinates.
struct ConicSpec {
  Fraction a, b, c;
  std::array<std::string, 3> vars;
};

/// Fiber of the pencil (x1:x2:y1:y2) -> (y1:y2) over (lambda:1), or over
/// (1:0) when lambda is absent. The plane section splits off the line
/// {y1 = y2 = 0}; the returned conic is the residual component, checked by
/// the exact decomposition P|_{y2 = lambda y1} = y1 * conic.
struct FiberResult {
  ConicSpec conic;
  bool decomposition_ok = false;
  bool exceptional = false;  // leading coefficient vanished (lambda^3 = 1)
};
FiberResult fiber_at(const CubicSurfaceSpec& s,
                     const std::optional<Fraction>& lambda);

/// Regular iff the normalized coefficient ratios are p-independent;
/// geometrically reduced only in the degenerate single-coefficient case
/// (every diagonal characteristic-2 conic is a square over the perfect
/// closure, so with two or more terms the conic is a twisted double line).
struct ConicClassification {
  bool is_regular = false;
  bool is_geometrically_reduced = false;
};
ConicClassification conic_classify(const ConicSpec& conic);  // AllZero

/// Base-change of the generic fiber conic along the degree-2^nu relative
/// Frobenius of the base line: substituting lambda = mu^q into
/// (1 + lambda^3, t1, lambda t2) and rescaling u0, u2 by the square roots of
/// (1 + mu^{3q}) and mu^q yields the constant conic (1, t1, t2) over F. The
/// certificate is the exact change-of-variables identity.
struct FrobeniusResult {
  ConicSpec conic;  // over the original ground ring
  bool certificate_ok = false;
};
FrobeniusResult frobenius_base_change(const CubicSurfaceSpec& s, uint32_t nu);

/// Tangent-plane section at a regular rational point: the cubic curve cut
/// out in the tangent plane, which is always divisible by a linear form and
/// therefore not integral. The projection from the point is purely
/// inseparable exactly when the point lies on the line {y1 = y2 = 0}.
struct TangentSection {
  MultiPoly curve;                 // cubic in the three remaining coordinates
  std::string eliminated;          // variable solved from the tangent plane
  std::string linear_factor;       // the coordinate dividing the cubic
  bool divisible = false;
  bool integral = true;
  bool purely_inseparable = false;
};
TangentSection tangent_section(const CubicSurfaceSpec& s, const CubicPoint& a);

/// The conics C1 = {y1 = 0, y2^2 + t2 x2^2 = 0} and
/// C2 = {y2 = 0, y1^2 + t1 x1^2 = 0} have no common point over any
/// extension: with both y's zero the remaining equations force x1 = x2 = 0.
bool c1_c2_disjoint(const CubicSurfaceSpec& s);

/// Regularity stratification by n = rank of {dt1, dt2}:
///   n = 2: regular (cross-checked through the local-regularity pipeline);
///   n = 1: normal but singular, with a square-decomposition witness
///          t_j = a^2 + b^2 t_i showing the non-smoothness divisor is
///          non-reduced;
///   n = 0: non-normal, with explicit singular rational points on the
///          normalized surface t1 = t2 = 1.
struct StratificationReport {
  int n = -1;
  std::string label;
  bool certificate_ok = false;
  // n = 1 witness: t_other = a^2 + b^2 * t_base (indices into {t1, t2}).
  std::optional<std::pair<Fraction, Fraction>> square_decomposition;
  std::string detail;
};
StratificationReport regularity_stratification(const Fraction& t1,
                                               const Fraction& t2);

/// Witness for the n = 1 case: find (a, b) with target = a^2 + b^2 * base,
/// when the span of {d base, d target} is one-dimensional and d base != 0.
std::optional<std::pair<Fraction, Fraction>> square_decompose_over(
    const Fraction& target, const Fraction& base);

}  // namespace imperf

#endif
