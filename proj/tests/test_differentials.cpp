#include <random>

#include "doctest.h"
#include "imperf/differentials.hpp"
#include "imperf/errors.hpp"
#include "imperf/exprparse.hpp"
#include "oracles.hpp"

using namespace imperf;
using imperf::testing::naive_rank_of;
using imperf::testing::random_fraction;

namespace {
ParseContext ctx_for(uint32_t p, std::vector<std::string> gens) {
  FieldDecl d{p, 1, std::move(gens)};
  return ParseContext::make(d);
}
}  // namespace

TEST_CASE("rank examples") {
  ParseContext ctx = ctx_for(3, {"t1", "t2", "t3"});
  auto e = [&](const char* s) { return parse_expr(s, ctx); };

  CHECK(p_independence_rank({e("t1"), e("t2"), e("t3")}) == 3);
  CHECK(p_independence_rank({e("t1"), e("t1^3")}) == 1);

  SUBCASE("jacobian of {t1*t2, t2} has determinant t2") {
    // Independent 2x2 oracle: [[t2, t1], [0, 1]].
    Fraction f = e("t1*t2");
    Fraction det = f.derivative("t1") * e("t2").derivative("t2") -
                   f.derivative("t2") * e("t2").derivative("t1");
    CHECK(det == e("t2"));
    CHECK_FALSE(det.is_zero());
    CHECK(p_independence_rank({f, e("t2")}) == 2);
  }
}

TEST_CASE("is_p_independent examples") {
  ParseContext ctx2 = ctx_for(2, {"t1", "t2"});
  auto e2 = [&](const char* s) { return parse_expr(s, ctx2); };
  CHECK(is_p_independent({e2("t1"), e2("t2")}));
  CHECK_FALSE(is_p_independent({e2("t1"), e2("t2"), e2("t1 + t2")}));
  CHECK(is_p_independent({e2("t1/t2"), e2("t2")}));
}

TEST_CASE("mixed presentations are rejected") {
  ParseContext a = ctx_for(3, {"t1"});
  ParseContext b = ctx_for(3, {"t1", "t2"});
  CHECK_THROWS_AS((void)p_independence_rank({parse_expr("t1", a),
                                             parse_expr("t2", b)}),
                  MixedFields);
}

TEST_CASE("exchange step") {
  ParseContext ctx = ctx_for(3, {"t1", "t2"});
  auto e = [&](const char* s) { return parse_expr(s, ctx); };

  auto out = exchange_step({e("t1"), e("t2")}, 1, 0);
  CHECK(out[0] == e("t1"));
  CHECK(out[1] == e("t2/t1"));
  CHECK(is_p_independent(out));

  auto prod = exchange_step({e("t1*t2"), e("t2")}, 0, 1);
  CHECK(prod[0] == e("t1"));
  CHECK(is_p_independent(prod));

  // Degenerate self-division yields the constant 1, whose differential dies.
  ParseContext one = ctx_for(3, {"t1"});
  CHECK_THROWS_AS(exchange_step({parse_expr("t1", one)}, 0, 0),
                  NotPIndependent);
  CHECK_THROWS_AS(exchange_step({e("t1"), Fraction::zero(ctx.ring)}, 0, 1),
                  ZeroDivisor);
}

TEST_CASE("exchange preserves independence on random valid inputs") {
  ParseContext ctx = ctx_for(5, {"t1", "t2", "t3"});
  std::mt19937_64 rng(17);
  auto var = [&](size_t i) { return Fraction::variable(ctx.ring, i); };
  for (int trial = 0; trial < 50; ++trial) {
    // Start from the generators and mix with products and p-th powers that
    // keep the family independent.
    std::vector<Fraction> fam{var(0), var(1), var(2)};
    for (int step = 0; step < 3; ++step) {
      size_t i = rng() % 3, j = rng() % 3;
      if (i == j) continue;
      std::vector<Fraction> next = fam;
      next[i] = fam[i] * fam[j].pow(5);  // multiply by a p-th power
      if (is_p_independent(next)) fam = next;
    }
    size_t i = rng() % 3, j = rng() % 3;
    if (i == j || fam[j].is_zero()) continue;
    auto out = exchange_step(fam, i, j);
    CHECK(is_p_independent(out));
  }
}

TEST_CASE("adjoining one p-th root") {
  ParseContext ctx = ctx_for(3, {"t1", "t2", "t3"});
  auto var = [&](size_t i) { return Fraction::variable(ctx.ring, i); };

  auto res = adjoin_root_rank({var(0), var(1), var(2)}, 2);
  CHECK(res.remaining_rank == 2);
  CHECK(res.relative_differential_dim == 1);
  CHECK(res.imperfection_dim == 1);
  // The rooted generator becomes a p-th power over the extension.
  CHECK(res.embedded[2].is_pth_power());
  CHECK_FALSE(res.embedded[0].is_pth_power());

  ParseContext one = ctx_for(5, {"t1"});
  auto single = adjoin_root_rank({parse_expr("t1", one)}, 0);
  CHECK(single.remaining_rank == 0);

  ParseContext two = ctx_for(2, {"t1", "t2"});
  auto res2 = adjoin_root_rank(
      {parse_expr("t1", two), parse_expr("t2", two)}, 1);
  CHECK(res2.remaining_rank == 1);
  CHECK_FALSE(res2.embedded[0].is_pth_power());

  CHECK_THROWS_AS(
      adjoin_root_rank({parse_expr("t1", two), parse_expr("t1^2", two)}, 0),
      NotPIndependent);
}

TEST_CASE("rank monotonicity and p-th power scaling invariance") {
  ParseContext ctx = ctx_for(3, {"t1", "t2", "t3"});
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 40; ++i) {
    std::vector<Fraction> fam;
    for (int k = 0; k < 3; ++k)
      fam.push_back(random_fraction(ctx.ring, rng, 2, 2));
    int full = p_independence_rank(fam);
    std::vector<Fraction> sub(fam.begin(), fam.begin() + 2);
    CHECK(p_independence_rank(sub) <= full);

    std::vector<Fraction> scaled;
    for (const auto& f : fam) {
      Fraction c = imperf::testing::random_nonzero_fraction(ctx.ring, rng, 1, 1);
      scaled.push_back(c.pow(3) * f);
    }
    CHECK(p_independence_rank(scaled) == full);
  }
}

TEST_CASE("Bareiss agrees with naive fraction elimination") {
  for (uint32_t p : {2u, 3u, 5u}) {
    ParseContext ctx = ctx_for(p, {"t1", "t2", "t3"});
    std::mt19937_64 rng(888 + p);
    for (int i = 0; i < 30; ++i) {
      std::vector<Fraction> fam;
      for (int k = 0; k < 3; ++k)
        fam.push_back(random_fraction(ctx.ring, rng, 2, 2));
      CHECK(p_independence_rank(fam) == naive_rank_of(fam));
    }
  }
}

TEST_CASE("independent families have F^p-independent monomial certificates") {
  // For a rank-n family the monomials with exponents < p are linearly
  // independent over F^p; spot-check that no small prime-field combination
  // of them vanishes.
  ParseContext ctx = ctx_for(2, {"t1", "t2"});
  auto t1 = parse_expr("t1", ctx), t2 = parse_expr("t2", ctx);
  REQUIRE(is_p_independent({t1, t2}));
  std::vector<Fraction> monomials{Fraction::one(ctx.ring), t1, t2, t1 * t2};
  for (uint64_t mask = 1; mask < 16; ++mask) {
    Fraction sum = Fraction::zero(ctx.ring);
    for (int b = 0; b < 4; ++b)
      if (mask & (1u << b)) sum = sum + monomials[b];
    CHECK_FALSE(sum.is_zero());
  }
}

TEST_CASE("differential span carries the jacobian") {
  ParseContext ctx = ctx_for(3, {"t1", "t2"});
  auto span = differential_span({parse_expr("t1*t2", ctx)});
  REQUIRE(span.jacobian.size() == 1);
  CHECK(span.jacobian[0][0] == parse_expr("t2", ctx));
  CHECK(span.jacobian[0][1] == parse_expr("t1", ctx));
  CHECK(span.rank == 1);
}
