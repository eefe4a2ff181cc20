#include <random>

#include "doctest.h"
#include "imperf/errors.hpp"
#include "imperf/exprparse.hpp"
#include "imperf/multipoly.hpp"
#include "oracles.hpp"

using namespace imperf;
using imperf::testing::random_nonzero_poly;
using imperf::testing::random_poly;

namespace {
ParseContext ctx_for(uint32_t p, std::vector<std::string> gens) {
  FieldDecl d{p, 1, std::move(gens)};
  return ParseContext::make(d);
}
}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  for (uint32_t p : {2u, 3u, 5u}) {
    ParseContext ctx = ctx_for(p, {"t1", "t2"});
    std::mt19937_64 rng(1000 + p);
    for (int i = 0; i < 300; ++i) {
      MultiPoly a = random_poly(ctx.ring, rng);
      MultiPoly b = random_poly(ctx.ring, rng);
      MultiPoly c = random_poly(ctx.ring, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == MultiPoly::zero(ctx.ring));
    }
  }
}

TEST_CASE("graded-lex leading data and monic normalization") {
  ParseContext ctx = ctx_for(3, {"t1", "t2"});
  MultiPoly f = parse_poly("2*t1^2 + t2^2 + t1", ctx);
  CHECK(f.lead_mono() == Mono{2, 0});  // t1^2 beats t2^2 at equal degree
  CHECK(f.lead_coeff() == 2);
  CHECK(f.monic().lead_coeff() == 1);
  CHECK(f.total_degree() == 2);
  CHECK(MultiPoly::zero(ctx.ring).total_degree() == -1);
}

TEST_CASE("derivative basics and Frobenius kills p-th powers") {
  for (uint32_t p : {2u, 3u, 5u}) {
    ParseContext ctx = ctx_for(p, {"t1", "t2"});
    MultiPoly t1p = parse_poly("t1", ctx).pow(p);
    CHECK(t1p.derivative(size_t{0}).is_zero());
    std::mt19937_64 rng(77 + p);
    for (int i = 0; i < 200; ++i) {
      MultiPoly a = random_poly(ctx.ring, rng);
      MultiPoly b = random_poly(ctx.ring, rng);
      for (size_t v = 0; v < 2; ++v) {
        CHECK((a * b).derivative(v) ==
              a.derivative(v) * b + a * b.derivative(v));
      }
      // Freshman's dream in characteristic p.
      CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
  }
}

TEST_CASE("exact division round trip and failure") {
  ParseContext ctx = ctx_for(5, {"t1", "t2"});
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    MultiPoly a = random_poly(ctx.ring, rng);
    MultiPoly b = random_nonzero_poly(ctx.ring, rng);
    auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  MultiPoly t1 = parse_poly("t1", ctx);
  MultiPoly t2 = parse_poly("t2", ctx);
  CHECK_FALSE((t1 * t1 + t2).divide_exact(t1).has_value());
  CHECK_THROWS_AS((void)t1.divide_exact(MultiPoly::zero(ctx.ring)),
                  DivisionByZero);
}

TEST_CASE("gcd examples") {
  SUBCASE("difference of squares, char 3") {
    ParseContext ctx = ctx_for(3, {"t1", "t2"});
    MultiPoly a = parse_poly("t1^2 - t2^2", ctx);
    MultiPoly b = parse_poly("t1 - t2", ctx);
    MultiPoly g = gcd(a, b);
    CHECK(g == parse_poly("t1 - t2", ctx));
    CHECK(a.divisible_by(g));
    CHECK(b.divisible_by(g));
  }
  SUBCASE("gcd with zero is the monic normalization") {
    ParseContext ctx = ctx_for(5, {"t1"});
    MultiPoly f = parse_poly("2*t1^2 + 2", ctx);
    MultiPoly g = gcd(f, MultiPoly::zero(ctx.ring));
    CHECK(g == parse_poly("t1^2 + 1", ctx));
    CHECK(gcd(MultiPoly::zero(ctx.ring), MultiPoly::zero(ctx.ring)).is_zero());
  }
  SUBCASE("disjoint variables") {
    FieldDecl d{3, 1, {}};
    ParseContext ctx = ParseContext::make(d, {"y", "z"});
    MultiPoly y2 = parse_poly("y^2", ctx);
    MultiPoly z2 = parse_poly("z^2", ctx);
    CHECK(gcd(y2, z2).is_one());
  }
}

TEST_CASE("gcd properties on random inputs") {
  for (uint32_t p : {2u, 3u, 5u}) {
    ParseContext ctx = ctx_for(p, {"t1", "t2"});
    std::mt19937_64 rng(555 + p);
    for (int i = 0; i < 60; ++i) {
      MultiPoly a = random_poly(ctx.ring, rng, 3, 2);
      MultiPoly b = random_poly(ctx.ring, rng, 3, 2);
      MultiPoly c = random_nonzero_poly(ctx.ring, rng, 2, 2);
      MultiPoly g = gcd(a, b);
      if (!g.is_zero()) {
        CHECK(a.divisible_by(g));
        CHECK(b.divisible_by(g));
        CHECK(g.lead_coeff() == 1);
      }
      // gcd(ac, bc) = c gcd(a, b) up to a unit.
      MultiPoly lhs = gcd(a * c, b * c);
      MultiPoly rhs = (c * g).monic();
      if (a.is_zero() && b.is_zero())
        CHECK(lhs.is_zero());
      else
        CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("polynomial p-th powers") {
  ParseContext ctx = ctx_for(3, {"t1", "t2"});
  MultiPoly f = parse_poly("t1 + 2*t2", ctx);
  MultiPoly cube = f.pow(3);
  CHECK(cube.is_pth_power());
  CHECK(cube.pth_root() == f);
  CHECK_FALSE(parse_poly("t1^2", ctx).is_pth_power());
  CHECK_THROWS_AS((void)parse_poly("t1^2", ctx).pth_root(), NotAPthPower);
}

TEST_CASE("substitute and embed") {
  ParseContext small = ctx_for(3, {"t1", "t2"});
  ParseContext big = ctx_for(3, {"t1", "t2", "t3"});
  MultiPoly f = parse_poly("t1^2 + t2", small);
  MultiPoly g = f.embed_into(big.ring);
  CHECK(g == parse_poly("t1^2 + t2", big));
  CHECK_THROWS_AS((void)parse_poly("t3", big).embed_into(small.ring),
                  UnknownVariable);

  std::map<size_t, MultiPoly> images{{0, parse_poly("t2", small)}};
  CHECK(f.substitute(images) == parse_poly("t2^2 + t2", small));
}

TEST_CASE("homogeneity bookkeeping") {
  FieldDecl d{3, 1, {"t1"}};
  ParseContext ctx = ParseContext::make(d, {"x", "y"});
  MultiPoly f = parse_poly("t1*x^3 + x*y^2", ctx);
  CHECK(f.is_homogeneous_in_range(1, 3, 3));
  CHECK_FALSE(parse_poly("x^3 + y", ctx).is_homogeneous_in_range(1, 3, 3));
}
