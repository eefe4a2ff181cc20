#include "imperf/suite.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "imperf/cubic.hpp"
#include "imperf/differentials.hpp"
#include "imperf/errors.hpp"
#include "imperf/exprparse.hpp"
#include "imperf/hypersurface.hpp"
#include "imperf/lattice.hpp"

namespace imperf {

namespace {

using json = nlohmann::ordered_json;

struct Runner {
  Report& report;
  bool timings;

  void run(const std::string& name, const std::string& anchor,
           const std::function<std::pair<bool, json>()>& body) {
    CheckResult res;
    res.name = name;
    res.anchor = anchor;
    auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, witness] = body();
      res.status = ok ? "pass" : "fail";
      res.witness = std::move(witness);
    } catch (const BudgetExceeded& e) {
      res.status = "skipped";
      res.reason = e.what();
      res.witness = json::object();
    } catch (const Error& e) {
      res.status = "fail";
      res.reason = e.what();
      res.witness = json::object();
    }
    auto end = std::chrono::steady_clock::now();
    res.wall_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    report.checks.push_back(std::move(res));
  }
};

uint64_t rand_below(std::mt19937_64& rng, uint64_t k) { return rng() % k; }

// Random nonzero ground polynomial of small degree; portable across
// platforms because it avoids <random> distributions.
MultiPoly random_ground_poly(const PolyRing* ring, std::mt19937_64& rng,
                             uint32_t max_deg, uint32_t terms) {
  uint32_t p = ring->field->characteristic();
  MultiPoly poly = MultiPoly::zero(ring);
  for (uint32_t t = 0; t < terms; ++t) {
    Mono m(ring->nvars(), 0);
    for (size_t i = 0; i < ring->n_ground; ++i)
      m[i] = static_cast<uint32_t>(rand_below(rng, max_deg + 1));
    uint64_t c = rand_below(rng, p);
    if (c) poly = poly + MultiPoly::monomial(ring, m, c);
  }
  if (poly.is_zero()) poly = MultiPoly::from_int(ring, 1);
  return poly;
}

// ---------------------------------------------------------------------------
// pindep suite
// ---------------------------------------------------------------------------

void run_pindep(Runner& r, const SuiteConfig& cfg) {
  const uint32_t p = cfg.p;
  FieldDecl decl{p, 1, {"t1", "t2", "t3"}};
  ParseContext ctx = ParseContext::make(decl);
  const PolyRing* ring = ctx.ring;
  auto var = [&](size_t i) { return Fraction::variable(ring, i); };

  r.run("pindep.basis_rank", "p-independent", [&]() {
    int rank = p_independence_rank({var(0), var(1), var(2)});
    return std::make_pair(rank == 3, json{{"rank", rank}, {"expected", 3}});
  });

  r.run("pindep.pth_power_drop", "p-independent", [&]() {
    int rank = p_independence_rank({var(0), var(0).pow(p)});
    return std::make_pair(rank == 1, json{{"rank", rank}, {"expected", 1}});
  });

  r.run("pindep.exchange", "exchange p-independent", [&]() {
    auto out = exchange_step({var(0), var(1)}, 1, 0);
    bool ok = is_p_independent(out);
    return std::make_pair(
        ok, json{{"family", {print_canonical(out[0]), print_canonical(out[1])}},
                 {"still_independent", ok}});
  });

  r.run("pindep.adjoin_root", "remain p-independent", [&]() {
    auto res = adjoin_root_rank({var(0), var(1), var(2)}, 2);
    bool ok = res.remaining_rank == 2 && res.relative_differential_dim == 1 &&
              res.imperfection_dim == 1;
    return std::make_pair(
        ok, json{{"remaining_rank", res.remaining_rank},
                 {"relative_differential_dim", res.relative_differential_dim},
                 {"imperfection_dim", res.imperfection_dim}});
  });

  r.run("pindep.separable_base_change", "separable extensions", [&]() {
    // Adjoining an independent transcendental is a separable extension; the
    // embedded family keeps its rank.
    FieldDecl big{p, 1, {"t1", "t2", "t3", "t4"}};
    ParseContext bctx = ParseContext::make(big);
    std::vector<Fraction> embedded{var(0).embed_into(bctx.ring),
                                   var(1).embed_into(bctx.ring),
                                   var(2).embed_into(bctx.ring)};
    int rank = p_independence_rank(embedded);
    return std::make_pair(rank == 3, json{{"rank_over_extension", rank}});
  });

  if (!cfg.elems.empty()) {
    r.run("pindep.elements", "p-independent", [&]() {
      FieldDecl d;
      if (!cfg.field.empty()) {
        d = parse_field(cfg.field);
      } else {
        // Identifiers in first-appearance order become the generators.
        std::vector<std::string> names;
        for (const auto& src : cfg.elems) {
          for (size_t i = 0; i < src.size();) {
            if (std::isalpha(static_cast<unsigned char>(src[i])) ||
                src[i] == '_') {
              size_t j = i;
              while (j < src.size() &&
                     (std::isalnum(static_cast<unsigned char>(src[j])) ||
                      src[j] == '_'))
                ++j;
              std::string name = src.substr(i, j - i);
              if (std::find(names.begin(), names.end(), name) == names.end())
                names.push_back(name);
              i = j;
            } else {
              ++i;
            }
          }
        }
        d = FieldDecl{p, 1, names};
      }
      ParseContext ectx = ParseContext::make(d);
      std::vector<Fraction> elems;
      for (const auto& src : cfg.elems) elems.push_back(parse_expr(src, ectx));
      int rank = p_independence_rank(elems);
      bool indep = rank == static_cast<int>(elems.size());
      json printed = json::array();
      for (const auto& e : elems) printed.push_back(print_canonical(e));
      return std::make_pair(true, json{{"elements", printed},
                                       {"rank", rank},
                                       {"is_p_independent", indep}});
    });
  }
}

// ---------------------------------------------------------------------------
// kollar suite
// ---------------------------------------------------------------------------

void run_kollar(Runner& r, uint32_t p, uint32_t n, const SuiteConfig& cfg) {
  std::string prefix =
      "kollar(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ").";
  std::vector<std::string> gens;
  for (uint32_t i = 1; i <= n; ++i) gens.push_back("t" + std::to_string(i));
  FieldDecl decl{p, 1, gens};
  ParseContext ctx = ParseContext::make(decl);
  const PolyRing* ground = ctx.ring;
  std::vector<Fraction> t;
  for (uint32_t i = 0; i < n; ++i) t.push_back(Fraction::variable(ground, i));

  HypersurfaceSpec h = kollar_hypersurface(p, n, t);

  bool support_ok = false, criterion_ok = false, witness_ok = false;

  r.run(prefix + "construction", "kollar equation", [&]() {
    bool homog = h.defining.is_homogeneous_in_range(
        h.coord_begin(), h.ring->nvars(), p);
    return std::make_pair(homog && !t[0].is_zero(),
                          json{{"equation", print_canonical(h.defining)},
                               {"homogeneous_degree", p}});
  });

  r.run(prefix + "obvious_points", "obvious points", [&]() {
    bool all_on = true;
    for (uint64_t lambda = 0; lambda < p; ++lambda) {
      std::map<size_t, MultiPoly> images;
      for (uint32_t i = 0; i < n; ++i)
        images.emplace(h.x_index(i), MultiPoly::zero(h.ring));
      images.emplace(h.y_index(), MultiPoly::constant(h.ring, lambda));
      images.emplace(h.z_index(), MultiPoly::from_int(h.ring, 1));
      all_on = all_on && h.defining.substitute(images).is_zero();
    }
    return std::make_pair(all_on,
                          json{{"points_on_surface", p}, {"form", "(0:...:0:l:1)"}});
  });

  r.run(prefix + "nonsmooth_support", "regular hypersurface", [&]() {
    support_ok = nonsmooth_support_certificate(h);
    json partials = json::array();
    for (const auto& g : nonsmooth_generators(h))
      partials.push_back(print_canonical(g));
    return std::make_pair(support_ok, json{{"partials", partials},
                                           {"supported_on_z_equals_0", support_ok}});
  });

  r.run(prefix + "regularity_criterion", "fermat hypersurface", [&]() {
    criterion_ok = fermat_regular(t);
    int rank = p_independence_rank(t);
    return std::make_pair(criterion_ok && rank == static_cast<int>(n),
                          json{{"p_independent", criterion_ok}, {"rank", rank}});
  });

  r.run(prefix + "regular_chain", "regular", [&]() {
    // Non-smoothness supported on the Cartier divisor z = 0 plus a regular
    // divisor certificate gives regularity of the hypersurface itself.
    bool ok = support_ok && criterion_ok;
    return std::make_pair(ok, json{{"divisor_support", support_ok},
                                   {"divisor_regular", criterion_ok},
                                   {"scheme_regular", ok}});
  });

  r.run(prefix + "irreducibility", "geometrically integral", [&]() {
    bool ok = eisenstein_certificate(h);
    return std::make_pair(ok, json{{"criterion_holds", ok}});
  });

  r.run(prefix + "coordinate_change", "projective equivalence", [&]() {
    // Demo instance with a p-th power ratio: t = (t1, t1 s^p).
    FieldDecl d{p, 1, {"t1", "s"}};
    ParseContext c2 = ParseContext::make(d);
    Fraction t1 = Fraction::variable(c2.ring, "t1");
    Fraction s = Fraction::variable(c2.ring, "s");
    HypersurfaceSpec h2 = kollar_hypersurface(p, 2, {t1, t1 * s.pow(p)});
    EquivalenceStep step = projective_equivalence_step(h2);
    bool root_ok = step.root == s;
    bool zero_tail = step.t[1].is_zero();
    bool cone = step.spec.defining.degree_in(step.spec.x_index(1)) <= 0;
    return std::make_pair(root_ok && zero_tail && cone,
                          json{{"root", print_canonical(step.root)},
                               {"eliminated_scalar", zero_tail},
                               {"cone_over_lower_dimension", cone}});
  });

  r.run(prefix + "rationality_witness", "birational", [&]() {
    RationalityWitness wit = geometric_rationality_witness(p, n, t);
    witness_ok = wit.certified();
    json comps = json::array();
    for (const auto& c : wit.forward.components)
      comps.push_back(print_canonical(c));
    return std::make_pair(witness_ok,
                          json{{"forward", comps},
                               {"pullback_zero", wit.pullback_zero},
                               {"round_trip_identity", wit.round_trip_identity}});
  });

  uint64_t point_count = 0;
  bool points_ok = false;
  r.run(prefix + "point_search", "rational points", [&]() {
    auto points = bounded_point_search(h, cfg.point_degree, cfg.budget);
    point_count = points.size();
    points_ok = point_count == p;
    json printed = json::array();
    for (const auto& pt : points) {
      std::string s = "(";
      for (size_t i = 0; i < pt.coords.size(); ++i) {
        if (i) s += ":";
        s += print_canonical(pt.coords[i]);
      }
      s += ")";
      printed.push_back(s);
    }
    return std::make_pair(points_ok, json{{"point_count", point_count},
                                          {"degree_bound", cfg.point_degree},
                                          {"points", printed}});
  });

  r.run(prefix + "laurent_search", "rational points", [&]() {
    uint32_t d = (p == 3) ? 2u : 1u;
    LaurentSearchResult res = laurent_exhaustive_search(p, d, cfg.budget);
    return std::make_pair(res.no_nonzero_h,
                          json{{"degree_bound", d},
                               {"triples_checked", res.triples_checked},
                               {"solutions_with_h_zero", res.solutions_with_h_zero},
                               {"no_solution_with_h_nonzero", res.no_nonzero_h}});
  });

  r.run(prefix + "summary", "properties hypersurface", [&]() {
    // The non-computable statements are reported as certified ingredients.
    bool ok = support_ok && criterion_ok && witness_ok;
    return std::make_pair(
        ok, json{{"regular", support_ok && criterion_ok},
                 {"geometrically_rational", witness_ok},
                 {"rational_points_found", point_count},
                 {"non_unirationality", "certified ingredients verified"}});
  });
}

// ---------------------------------------------------------------------------
// cubic2 suite
// ---------------------------------------------------------------------------

void run_cubic2(Runner& r, const SuiteConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ull);
  FieldDecl decl{2, 1, {"t1", "t2"}};
  ParseContext ctx = ParseContext::make(decl);
  const PolyRing* ground = ctx.ring;
  Fraction t1 = Fraction::variable(ground, "t1");
  Fraction t2 = Fraction::variable(ground, "t2");
  CubicSurfaceSpec s = cubic_surface(t1, t2);
  Fraction one = Fraction::one(ground);
  Fraction zero = Fraction::zero(ground);

  r.run("cubic2.construction", "cubic equation", [&]() {
    bool homog =
        s.defining.is_homogeneous_in_range(s.coord_begin(), s.ring->nvars(), 3);
    // The line y1 = y2 = 0 lies on the surface.
    std::map<std::string, Fraction> images{{"y1", Fraction::zero(s.ring)},
                                           {"y2", Fraction::zero(s.ring)}};
    bool line = substitute_into(s.defining, images, s.ring).is_zero();
    return std::make_pair(homog && line,
                          json{{"equation", print_canonical(s.defining)},
                               {"contains_line", line}});
  });

  r.run("cubic2.jacobian_identity", "locus non-smoothness", [&]() {
    auto locus = cubic_nonsmooth_locus(s);
    return std::make_pair(locus.identity_ok && locus.x_partials_zero,
                          json{{"p1", print_canonical(locus.p1)},
                               {"p2", print_canonical(locus.p2)},
                               {"identity", locus.identity_ok},
                               {"x_partials_zero", locus.x_partials_zero}});
  });

  r.run("cubic2.local_regularity", "properties cubic", [&]() {
    CubicPoint a = inseparable_point(s, 2, t1, {one, zero, zero, zero});
    CubicPoint b = inseparable_point(s, 3, t2, {zero, one, zero, zero});
    bool ra = local_regularity_at(s, a);
    bool rb = local_regularity_at(s, b);
    return std::make_pair(ra && rb, json{{"regular_at_a", ra},
                                         {"regular_at_b", rb}});
  });

  r.run("cubic2.tensor_field", "properties cubic", [&]() {
    bool indep = tensor_field_test(t1, t2);
    bool dep = tensor_field_test(t1, t1);
    return std::make_pair(indep && !dep,
                          json{{"independent_pair", indep},
                               {"dependent_pair", dep}});
  });

  r.run("cubic2.fiber_decomposition", "fiber computation", [&]() {
    std::vector<std::pair<std::string, std::optional<Fraction>>> lambdas;
    lambdas.emplace_back("0", zero);
    lambdas.emplace_back("1", one);
    lambdas.emplace_back("t1", t1);
    Fraction random_lambda(random_ground_poly(ground, rng, 2, 2));
    lambdas.emplace_back(print_canonical(random_lambda), random_lambda);
    lambdas.emplace_back("infinity", std::nullopt);
    bool all_ok = true;
    json fibers = json::array();
    for (const auto& [label, lam] : lambdas) {
      FiberResult f = fiber_at(s, lam);
      all_ok = all_ok && f.decomposition_ok;
      fibers.push_back(json{{"lambda", label},
                            {"conic", {print_canonical(f.conic.a),
                                       print_canonical(f.conic.b),
                                       print_canonical(f.conic.c)}},
                            {"decomposes", f.decomposition_ok},
                            {"excluded_rational_point", f.exceptional}});
    }
    return std::make_pair(all_ok, json{{"fibers", fibers}});
  });

  r.run("cubic2.generic_fiber", "fiber conic", [&]() {
    FieldDecl gd{2, 1, {"t1", "t2", "lam"}};
    ParseContext gctx = ParseContext::make(gd);
    Fraction gt1 = Fraction::variable(gctx.ring, "t1");
    Fraction gt2 = Fraction::variable(gctx.ring, "t2");
    Fraction lam = Fraction::variable(gctx.ring, "lam");
    CubicSurfaceSpec gs = cubic_surface(gt1, gt2);
    FiberResult f = fiber_at(gs, lam);
    bool coeffs_ok = f.conic.a == Fraction::one(gctx.ring) + lam.pow(3) &&
                     f.conic.b == gt1 && f.conic.c == lam * gt2;
    return std::make_pair(f.decomposition_ok && coeffs_ok,
                          json{{"conic", {print_canonical(f.conic.a),
                                          print_canonical(f.conic.b),
                                          print_canonical(f.conic.c)}}});
  });

  bool frob_ok = false;
  ConicClassification frob_class;
  r.run("cubic2.frobenius_change", "modified conic", [&]() {
    FrobeniusResult res = frobenius_base_change(s, 1);
    frob_ok = res.certificate_ok && res.conic.a == one && res.conic.b == t1 &&
              res.conic.c == t2;
    frob_class = conic_classify(res.conic);
    return std::make_pair(frob_ok,
                          json{{"certificate_residual_zero", res.certificate_ok},
                               {"conic", {print_canonical(res.conic.a),
                                          print_canonical(res.conic.b),
                                          print_canonical(res.conic.c)}}});
  });

  r.run("cubic2.frobenius_iterated", "frobenius base-change", [&]() {
    bool ok2 = frobenius_base_change(s, 2).certificate_ok;
    bool ok3 = frobenius_base_change(s, 3).certificate_ok;
    return std::make_pair(ok2 && ok3, json{{"nu_2", ok2}, {"nu_3", ok3}});
  });

  r.run("cubic2.base_change_classification", "criterion not unirational", [&]() {
    bool ok = frob_ok && frob_class.is_regular && !frob_class.is_geometrically_reduced;
    return std::make_pair(
        ok, json{{"regular", frob_class.is_regular},
                 {"geometrically_reduced", frob_class.is_geometrically_reduced},
                 {"non_unirationality", "certified ingredients verified"}});
  });

  r.run("cubic2.disjoint_conics", "fibration", [&]() {
    bool ok = c1_c2_disjoint(s);
    return std::make_pair(ok, json{{"c1_c2_disjoint", ok}});
  });

  PicardData pic = picard_lattice();

  r.run("cubic2.selfintersection", "selfintersection", [&]() {
    return std::make_pair(pic.l_self == -1, json{{"L_self", pic.l_self}});
  });

  r.run("cubic2.intersection_degrees", "fibration", [&]() {
    bool ok = pic.l_dot_c1 == 2 && pic.d_dot_c1 == 4;
    return std::make_pair(ok, json{{"L_dot_C1", pic.l_dot_c1},
                                   {"D_dot_C1", pic.d_dot_c1}});
  });

  r.run("cubic2.picard", "picard group", [&]() {
    bool ok = pic.det == -4 && pic.disc_order == 4 && pic.k_self == 3 &&
              pic.l_self == -1 && pic.d_primitive && pic.dual_pairings_ok &&
              pic.rr_parity_all_even && pic.half_c1_order == 2 &&
              pic.half_c1_parity == 1 && pic.half_c1_obstructed;
    return std::make_pair(
        ok, json{{"gram", {{pic.lattice.gram[0][0], pic.lattice.gram[0][1]},
                           {pic.lattice.gram[1][0], pic.lattice.gram[1][1]}}},
                 {"det", pic.det},
                 {"disc_group_order", pic.disc_order},
                 {"K_self", pic.k_self},
                 {"L_self", pic.l_self},
                 {"D_primitive", pic.d_primitive},
                 {"half_C1_order", pic.half_c1_order},
                 {"half_C1_parity", pic.half_c1_parity},
                 {"half_C1_obstructed", pic.half_c1_obstructed}});
  });

  r.run("cubic2.tangent_separable", "strange properties", [&]() {
    // Over the quartic constant field the points (0:0:1:w^k) are regular
    // with separable projection and non-integral tangent section.
    FieldDecl f4{2, 2, {"t1", "t2"}};
    ParseContext c4 = ParseContext::make(f4);
    Fraction ft1 = Fraction::variable(c4.ring, "t1");
    Fraction ft2 = Fraction::variable(c4.ring, "t2");
    CubicSurfaceSpec s4 = cubic_surface(ft1, ft2);
    Fraction w(MultiPoly::constant(c4.ring, c4.ring->field->generator()));
    CubicPoint a = rational_point(
        s4, {Fraction::zero(c4.ring), Fraction::zero(c4.ring),
             Fraction::one(c4.ring), w});
    TangentSection sec = tangent_section(s4, a);
    bool ok = sec.divisible && !sec.integral && !sec.purely_inseparable;
    return std::make_pair(ok, json{{"curve", print_canonical(sec.curve)},
                                   {"linear_factor", sec.linear_factor},
                                   {"integral", sec.integral},
                                   {"purely_inseparable", sec.purely_inseparable}});
  });

  r.run("cubic2.tangent_inseparable", "strange properties", [&]() {
    CubicPoint a = rational_point(s, {one, zero, zero, zero});
    TangentSection sec = tangent_section(s, a);
    bool ok = sec.divisible && !sec.integral && sec.purely_inseparable;
    return std::make_pair(ok, json{{"curve", print_canonical(sec.curve)},
                                   {"purely_inseparable", sec.purely_inseparable}});
  });

  r.run("cubic2.stratification", "regularity stratification", [&]() {
    StratificationReport two = regularity_stratification(t1, t2);
    FieldDecl d1{2, 1, {"t1"}};
    ParseContext c1 = ParseContext::make(d1);
    Fraction u = Fraction::variable(c1.ring, "t1");
    StratificationReport oneR = regularity_stratification(u, u.pow(3));
    StratificationReport zeroR = regularity_stratification(
        Fraction::one(c1.ring), Fraction::one(c1.ring));
    bool ok = two.n == 2 && two.certificate_ok && oneR.n == 1 &&
              oneR.certificate_ok && zeroR.n == 0 && zeroR.certificate_ok;
    json w1 = json{{"n", oneR.n}, {"label", oneR.label}};
    if (oneR.square_decomposition) {
      w1["a"] = print_canonical(oneR.square_decomposition->first);
      w1["b"] = print_canonical(oneR.square_decomposition->second);
    }
    return std::make_pair(
        ok, json{{"independent", {{"n", two.n}, {"label", two.label}}},
                 {"rank_one", w1},
                 {"rank_zero", {{"n", zeroR.n}, {"label", zeroR.label}}}});
  });
}

}  // namespace

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

const std::vector<std::string>& anchor_inventory() {
  static const std::vector<std::string> inventory{
      "p-independent",
      "separable extensions",
      "exchange p-independent",
      "remain p-independent",
      "fermat hypersurface",
      "regular",
      "kollar equation",
      "geometrically integral",
      "birational",
      "regular hypersurface",
      "projective equivalence",
      "rational points",
      "obvious points",
      "properties hypersurface",
      "frobenius base-change",
      "criterion not unirational",
      "cubic equation",
      "locus non-smoothness",
      "selfintersection",
      "fibration",
      "fiber computation",
      "fiber conic",
      "modified conic",
      "properties cubic",
      "strange properties",
      "picard group",
      "regularity stratification",
  };
  return inventory;
}

Report run_suite(const SuiteConfig& cfg) {
  Report report;
  report.suite = cfg.suite;
  report.config = cfg;
  Runner runner{report, cfg.timings};
  if (cfg.suite == "pindep") {
    run_pindep(runner, cfg);
  } else if (cfg.suite == "kollar") {
    if (cfg.p < 3) throw ConfigError("the kollar suite needs an odd prime");
    run_kollar(runner, cfg.p, cfg.n, cfg);
  } else if (cfg.suite == "cubic2") {
    run_cubic2(runner, cfg);
  } else if (cfg.suite == "all") {
    SuiteConfig sub = cfg;
    sub.p = 2;
    run_pindep(runner, sub);
    run_kollar(runner, 3, 1, cfg);
    run_kollar(runner, 5, 2, cfg);
    run_cubic2(runner, cfg);
  } else {
    throw ConfigError("unknown suite: " + cfg.suite);
  }
  return report;
}

namespace {

std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

}  // namespace

std::string emit_report(const Report& report, const std::string& format) {
  if (format == "json") {
    json doc;
    doc["schema"] = "report-v1";
    doc["tool"] = report.tool;
    doc["suite"] = report.suite;
    doc["config"] = json{{"suite", report.config.suite},
                         {"p", report.config.p},
                         {"n", report.config.n},
                         {"point_degree", report.config.point_degree},
                         {"budget", report.config.budget},
                         {"seed", report.config.seed},
                         {"field", report.config.field}};
    json checks = json::array();
    size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& c : report.checks) {
      json jc;
      jc["name"] = c.name;
      jc["anchor"] = c.anchor;
      jc["status"] = c.status;
      jc["witness"] = c.witness;
      if (!c.reason.empty()) jc["reason"] = c.reason;
      if (report.config.timings) jc["wall_ms"] = c.wall_ms;
      checks.push_back(std::move(jc));
      if (c.status == "pass") ++pass;
      else if (c.status == "fail") ++fail;
      else ++skipped;
    }
    doc["checks"] = std::move(checks);
    doc["summary"] = json{{"pass", pass},
                          {"fail", fail},
                          {"skipped", skipped},
                          {"total", report.checks.size()}};
    return doc.dump(2) + "\n";
  }
  if (format == "md") {
    std::ostringstream out;
    out << "# verify report: " << report.suite << "\n\n";
    out << "- tool: " << report.tool << "\n";
    out << "- config: p=" << report.config.p << " n=" << report.config.n
        << " point-degree=" << report.config.point_degree
        << " budget=" << report.config.budget
        << " seed=" << report.config.seed << "\n";
    std::string section;
    size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& c : report.checks) {
      std::string group = c.name.substr(0, c.name.find('.'));
      if (group != section) {
        section = group;
        out << "\n## " << section << "\n\n";
        out << "| check | anchor | status | witness |\n";
        out << "|---|---|---|---|\n";
      }
      out << "| " << md_escape(c.name) << " | " << md_escape(c.anchor)
          << " | " << c.status << " | "
          << md_escape(c.reason.empty() ? c.witness.dump() : c.reason)
          << " |\n";
      if (c.status == "pass") ++pass;
      else if (c.status == "fail") ++fail;
      else ++skipped;
    }
    out << "\n**summary:** pass=" << pass << ", fail=" << fail
        << ", skipped=" << skipped << "\n";
    return out.str();
  }
  throw ConfigError("unknown report format: " + format);
}

}  // namespace imperf
