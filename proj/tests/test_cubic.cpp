#include "doctest.h"
#include "imperf/cubic.hpp"
#include "imperf/differentials.hpp"
#include "imperf/errors.hpp"
#include "imperf/exprparse.hpp"

using namespace imperf;

namespace {

struct Fixture {
  ParseContext ctx = ParseContext::make(FieldDecl{2, 1, {"t1", "t2"}});
  Fraction t1 = Fraction::variable(ctx.ring, "t1");
  Fraction t2 = Fraction::variable(ctx.ring, "t2");
  Fraction one = Fraction::one(ctx.ring);
  Fraction zero = Fraction::zero(ctx.ring);
  CubicSurfaceSpec s = cubic_surface(t1, t2);
};

}  // namespace

TEST_CASE("construction and the defining polynomial") {
  Fixture f;
  ParseContext full = ParseContext::make(FieldDecl{2, 1, {"t1", "t2"}},
                                         {"x1", "x2", "y1", "y2"});
  CHECK(f.s.defining ==
        parse_poly("y1^3 + t1*x1^2*y1 + y2^3 + t2*x2^2*y2", full));
  CHECK(f.s.defining.is_homogeneous_in_range(f.s.coord_begin(),
                                             f.s.ring->nvars(), 3));
  CHECK_THROWS_AS(cubic_surface(f.zero, f.t2), ZeroLeadingScalar);
  ParseContext odd = ParseContext::make(FieldDecl{3, 1, {"t1", "t2"}});
  CHECK_THROWS_AS(cubic_surface(Fraction::variable(odd.ring, "t1"),
                                Fraction::variable(odd.ring, "t2")),
                  BadCharacteristic);
}

TEST_CASE("non-smoothness locus identity") {
  Fixture f;
  auto locus = cubic_nonsmooth_locus(f.s);
  ParseContext full = ParseContext::make(FieldDecl{2, 1, {"t1", "t2"}},
                                         {"x1", "x2", "y1", "y2"});
  CHECK(locus.p1 == parse_poly("y1^2 + t1*x1^2", full));
  CHECK(locus.p2 == parse_poly("y2^2 + t2*x2^2", full));
  CHECK(locus.identity_ok);
  CHECK(locus.x_partials_zero);

  // Specialization t1 = t2 = 1 keeps the identity.
  auto s1 = cubic_surface(f.one, f.one);
  CHECK(cubic_nonsmooth_locus(s1).identity_ok);
}

TEST_CASE("local regularity at the inseparable points") {
  Fixture f;
  CubicPoint a = inseparable_point(f.s, 2, f.t1, {f.one, f.zero, f.zero, f.zero});
  CubicPoint b = inseparable_point(f.s, 3, f.t2, {f.zero, f.one, f.zero, f.zero});
  CHECK(local_regularity_at(f.s, a));
  CHECK(local_regularity_at(f.s, b));
}

TEST_CASE("the diagonal point on the specialized surface is singular") {
  Fixture f;
  auto s1 = cubic_surface(f.one, f.one);
  // Oracle: in characteristic 2 the defining polynomial factors through the
  // squared differences, P = y1 (y1 + x1)^2 + y2 (y2 + x2)^2.
  ParseContext full = ParseContext::make(FieldDecl{2, 1, {"t1", "t2"}},
                                         {"x1", "x2", "y1", "y2"});
  CHECK(s1.defining ==
        parse_poly("y1*(y1 + x1)^2 + y2*(y2 + x2)^2", full));

  CubicPoint diag = rational_point(s1, {f.one, f.one, f.one, f.one});
  CHECK_FALSE(local_regularity_at(s1, diag));

  CubicPoint half = rational_point(s1, {f.one, f.zero, f.one, f.zero});
  CHECK_FALSE(local_regularity_at(s1, half));

  // A rational point off the diagonal is smooth: at (0:0:1:1) the partial
  // (y1 + x1)^2 evaluates to 1.
  CubicPoint off = rational_point(s1, {f.zero, f.zero, f.one, f.one});
  CHECK(local_regularity_at(s1, off));
}

TEST_CASE("points off the surface are rejected") {
  Fixture f;
  CubicPoint bad = rational_point(f.s, {f.one, f.zero, f.one, f.zero});
  CHECK_THROWS_AS((void)local_regularity_at(f.s, bad), PointNotOnSurface);
  CHECK_THROWS_AS(
      inseparable_point(f.s, 2, f.t1 * f.t1, {f.one, f.zero, f.zero, f.zero}),
      Error);
}

TEST_CASE("tensor products of the root extensions") {
  Fixture f;
  CHECK(tensor_field_test(f.t1, f.t2));
  CHECK_FALSE(tensor_field_test(f.t1, f.t1));
  CHECK_FALSE(tensor_field_test(f.t1, f.t1 * f.t2 * f.t2));
}

TEST_CASE("fibers of the conic pencil") {
  Fixture f;
  SUBCASE("lambda = 0 cuts out the second conic") {
    FiberResult r = fiber_at(f.s, f.zero);
    CHECK(r.decomposition_ok);
    CHECK_FALSE(r.exceptional);
    CHECK(r.conic.a == f.one);
    CHECK(r.conic.b == f.t1);
    CHECK(r.conic.c == f.zero);
  }
  SUBCASE("lambda = 1 is an excluded rational point") {
    FiberResult r = fiber_at(f.s, f.one);
    CHECK(r.decomposition_ok);
    CHECK(r.exceptional);  // 1 + lambda^3 = 0
    CHECK(r.conic.a.is_zero());
    CHECK(r.conic.b == f.t1);
    CHECK(r.conic.c == f.t2);
  }
  SUBCASE("scalar fiber lambda = t1") {
    FiberResult r = fiber_at(f.s, f.t1);
    CHECK(r.decomposition_ok);
    CHECK_FALSE(r.exceptional);
    CHECK(r.conic.a == f.one + f.t1.pow(3));
    CHECK(r.conic.c == f.t1 * f.t2);
  }
  SUBCASE("fraction-valued lambda") {
    FiberResult r = fiber_at(f.s, f.t1 / f.t2);
    CHECK(r.decomposition_ok);
    CHECK(r.conic.a == f.one + (f.t1 / f.t2).pow(3));
    CHECK(r.conic.c == f.t1);  // (t1/t2) * t2
  }
  SUBCASE("fiber at infinity is the first conic") {
    FiberResult r = fiber_at(f.s, std::nullopt);
    CHECK(r.decomposition_ok);
    CHECK(r.conic.a == f.one);
    CHECK(r.conic.b == f.t2);
    CHECK(r.conic.c.is_zero());
  }
  SUBCASE("generic transcendental lambda") {
    ParseContext g = ParseContext::make(FieldDecl{2, 1, {"t1", "t2", "lam"}});
    Fraction gt1 = Fraction::variable(g.ring, "t1");
    Fraction gt2 = Fraction::variable(g.ring, "t2");
    Fraction lam = Fraction::variable(g.ring, "lam");
    CubicSurfaceSpec gs = cubic_surface(gt1, gt2);
    FiberResult r = fiber_at(gs, lam);
    CHECK(r.decomposition_ok);
    CHECK(r.conic.a == Fraction::one(g.ring) + lam.pow(3));
    CHECK(r.conic.b == gt1);
    CHECK(r.conic.c == lam * gt2);
  }
}

TEST_CASE("conic classification") {
  Fixture f;
  SUBCASE("independent scalars: regular twisted double line") {
    ConicClassification c =
        conic_classify({f.one, f.t1, f.t2, {"u0", "u1", "u2"}});
    CHECK(c.is_regular);
    CHECK_FALSE(c.is_geometrically_reduced);
  }
  SUBCASE("repeated scalar is singular") {
    ConicClassification c =
        conic_classify({f.one, f.t1, f.t1, {"u0", "u1", "u2"}});
    CHECK_FALSE(c.is_regular);
  }
  SUBCASE("squares are singular") {
    ConicClassification c = conic_classify(
        {f.one, f.t1 * f.t1, f.t2 * f.t2, {"u0", "u1", "u2"}});
    CHECK_FALSE(c.is_regular);
  }
  SUBCASE("degenerate cone with a vanished leading coefficient") {
    ConicClassification c =
        conic_classify({f.zero, f.t1, f.t2, {"u0", "u1", "u2"}});
    CHECK_FALSE(c.is_regular);
    CHECK_FALSE(c.is_geometrically_reduced);
  }
  SUBCASE("single-coefficient degenerate case") {
    ConicClassification c =
        conic_classify({f.one, f.zero, f.zero, {"u0", "u1", "u2"}});
    CHECK_FALSE(c.is_regular);
    CHECK(c.is_geometrically_reduced);
  }
  CHECK_THROWS_AS(
      conic_classify({f.zero, f.zero, f.zero, {"u0", "u1", "u2"}}), AllZero);
}

TEST_CASE("Frobenius base-change of the generic fiber") {
  Fixture f;
  SUBCASE("one Frobenius twist lands on the constant conic") {
    FrobeniusResult r = frobenius_base_change(f.s, 1);
    CHECK(r.certificate_ok);
    CHECK(r.conic.a == f.one);
    CHECK(r.conic.b == f.t1);
    CHECK(r.conic.c == f.t2);
    ConicClassification c = conic_classify(r.conic);
    CHECK(c.is_regular);
    CHECK_FALSE(c.is_geometrically_reduced);
  }
  SUBCASE("iterated twists admit the analogous change") {
    CHECK(frobenius_base_change(f.s, 2).certificate_ok);
    CHECK(frobenius_base_change(f.s, 3).certificate_ok);
  }
  SUBCASE("classification chain for independent-like pairs") {
    for (auto pair : {std::pair<Fraction, Fraction>{f.t1, f.t2},
                      {f.t1 + f.t2, f.t2},
                      {f.t1 * f.t2, f.t2}}) {
      if (!is_p_independent({pair.first, pair.second})) continue;
      CubicSurfaceSpec s = cubic_surface(pair.first, pair.second);
      FrobeniusResult r = frobenius_base_change(s, 1);
      ConicClassification c = conic_classify(r.conic);
      CHECK(r.certificate_ok);
      CHECK(c.is_regular);
      CHECK_FALSE(c.is_geometrically_reduced);
    }
  }
}

TEST_CASE("tangent sections") {
  SUBCASE("quartic constant field, separable point off the line") {
    ParseContext c4 = ParseContext::make(FieldDecl{2, 2, {"t1", "t2"}});
    Fraction t1 = Fraction::variable(c4.ring, "t1");
    Fraction t2 = Fraction::variable(c4.ring, "t2");
    CubicSurfaceSpec s4 = cubic_surface(t1, t2);
    Fraction w = parse_expr("w", ParseContext::over(c4.ring));
    // (0 : 0 : 1 : w) lies on the surface because w^3 = 1.
    CubicPoint a = rational_point(
        s4, {Fraction::zero(c4.ring), Fraction::zero(c4.ring),
             Fraction::one(c4.ring), w});
    TangentSection sec = tangent_section(s4, a);
    CHECK(sec.divisible);
    CHECK_FALSE(sec.integral);
    CHECK_FALSE(sec.purely_inseparable);
    CHECK(sec.linear_factor == "y1");
  }
  SUBCASE("every rational point of the line is purely inseparable") {
    Fixture f;
    CubicPoint a = rational_point(f.s, {f.one, f.zero, f.zero, f.zero});
    TangentSection sec = tangent_section(f.s, a);
    CHECK(sec.divisible);
    CHECK_FALSE(sec.integral);
    CHECK(sec.purely_inseparable);

    CubicPoint b = rational_point(f.s, {f.one, f.one, f.zero, f.zero});
    TangentSection sec2 = tangent_section(f.s, b);
    CHECK(sec2.purely_inseparable);
    CHECK_FALSE(sec2.integral);
  }
  SUBCASE("singular and non-rational points are rejected") {
    Fixture f;
    auto s1 = cubic_surface(f.one, f.one);
    CubicPoint diag = rational_point(s1, {f.one, f.one, f.one, f.one});
    CHECK_THROWS_AS((void)tangent_section(s1, diag), SingularPoint);
    CubicPoint theta =
        inseparable_point(f.s, 2, f.t1, {f.one, f.zero, f.zero, f.zero});
    CHECK_THROWS_AS((void)tangent_section(f.s, theta), NotRational);
  }
}

TEST_CASE("the two conics are disjoint") {
  Fixture f;
  CHECK(c1_c2_disjoint(f.s));
  CHECK(c1_c2_disjoint(cubic_surface(f.one, f.one)));
}

TEST_CASE("square decomposition witnesses") {
  Fixture f;
  ParseContext one_var = ParseContext::make(FieldDecl{2, 1, {"t1"}});
  Fraction u = Fraction::variable(one_var.ring, "t1");
  auto dec = square_decompose_over(u.pow(3), u);
  REQUIRE(dec.has_value());
  CHECK(dec->first.is_zero());
  CHECK(dec->second == u);
  CHECK(dec->first * dec->first + dec->second * dec->second * u == u.pow(3));

  auto dec2 = square_decompose_over(f.t1 * f.t2 * f.t2, f.t1);
  REQUIRE(dec2.has_value());
  CHECK(dec2->first * dec2->first + dec2->second * dec2->second * f.t1 ==
        f.t1 * f.t2 * f.t2);

  // t2 is not in the square span of (1, t1).
  CHECK_FALSE(square_decompose_over(f.t2, f.t1).has_value());
}

TEST_CASE("regularity stratification") {
  Fixture f;
  SUBCASE("independent scalars give the regular case") {
    auto rep = regularity_stratification(f.t1, f.t2);
    CHECK(rep.n == 2);
    CHECK(rep.certificate_ok);
  }
  SUBCASE("rank one gives a normal singular surface") {
    ParseContext one_var = ParseContext::make(FieldDecl{2, 1, {"t1"}});
    Fraction u = Fraction::variable(one_var.ring, "t1");
    auto rep = regularity_stratification(u, u.pow(3));
    CHECK(rep.n == 1);
    CHECK(rep.certificate_ok);
    REQUIRE(rep.square_decomposition.has_value());
    auto dep = regularity_stratification(f.t1, f.t1 * f.t2 * f.t2);
    CHECK(dep.n == 1);
    CHECK(dep.certificate_ok);
  }
  SUBCASE("rank zero gives the non-normal case") {
    ParseContext one_var = ParseContext::make(FieldDecl{2, 1, {"t1"}});
    Fraction one = Fraction::one(one_var.ring);
    auto rep = regularity_stratification(one, one);
    CHECK(rep.n == 0);
    CHECK(rep.certificate_ok);
    // Squares only: d(t1^2) = 0 in characteristic 2, so the rank drops to 0.
    auto sq = regularity_stratification(
        Fraction::variable(one_var.ring, size_t{0}).pow(2), one);
    CHECK(sq.n == 0);
    CHECK(sq.certificate_ok);
  }
}
