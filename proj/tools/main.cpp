// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "zerocycle/curves.hpp"
#include "zerocycle/errors.hpp"
#include "zerocycle/json_io.hpp"
#include "zerocycle/numberfield.hpp"
#include "zerocycle/search.hpp"
#include "zerocycle/squares.hpp"
#include "zerocycle/surface.hpp"

namespace {

using namespace zc;

// Exit codes: 0 success (or expectation met), 1 mathematical failure,
// 2 malformed input or configuration, 3 expectation mismatch.
constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitParse = 2;
constexpr int kExitExpectation = 3;

struct Global {
  bool json = true;
  unsigned long long seed = 0;
  unsigned long precision_budget = 65536;
  int jobs = 1;
  bool timings = false;
  std::string fixtures = "fixtures";

  SquareBudget budget() const {
    SquareBudget b;
    b.max_modulus_bits = precision_budget;
    return b;
  }
  SearchOptions search_opts() const {
    SearchOptions o;
    o.jobs = jobs;
    o.budget = budget();
    return o;
  }
};

FieldPtr cubic_field() {
  return NumberField::create(UniPoly::from_strings({"1", "1", "0", "1"}));
}

FieldPtr companion_cubic_field() {
  return NumberField::create(UniPoly::from_strings({"-1", "-1", "0", "1"}));
}

FieldPtr rational_field() {
  return NumberField::create(UniPoly::from_strings({"0", "1"}));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FieldPtr load_field_or(const std::string& path, FieldPtr fallback) {
  if (path.empty()) return fallback;
  return field_from_json(load_json_file(path));
}

BiellipticSurface load_surface_or_standard(const FieldPtr& base, const std::string& path) {
  if (path.empty()) return BiellipticSurface::standard(base);
  return surface_from_json(base, load_json_file(path));
}

WeierstrassCurve load_curve_or_model(const FieldPtr& field, const std::string& path) {
  if (path.empty()) return even_quartic_to_weierstrass(Rat(3), Rat(2)).curve_over(field);
  return curve_from_json(field, load_json_file(path));
}

// The Weierstrass model attached to a surface with even conic factors
// p = x^2 + p0, q = x^2 + q0.
WeierstrassCurve model_curve_for(const BiellipticSurface& S, const FieldPtr& field) {
  if (S.p.degree() != 2 || S.q.degree() != 2 || S.p.coeff(1) != 0 ||
      S.q.coeff(1) != 0 || S.p.coeff(2) != 1 || S.q.coeff(2) != 1)
    throw MathError("surface conics must be monic, even quadratics");
  const Rat p0 = S.p.coeff(0), q0 = S.q.coeff(0);
  return even_quartic_to_weierstrass(p0 + q0, p0 * q0).curve_over(field);
}

// Odd degree-one places of good reduction, smallest first.
std::vector<PrimeSite> good_sites(const WeierstrassCurve& E, int count) {
  std::vector<PrimeSite> out;
  const auto pool = degree_one_sites(E.field(), count + 8, {2});
  for (const auto& s : pool) {
    if (!good_reduction(E, s)) continue;
    out.push_back(s);
    if (static_cast<int>(out.size()) == count) break;
  }
  if (static_cast<int>(out.size()) < count)
    throw MathError("not enough degree-one places of good reduction");
  return out;
}

// ---------------------------------------------------------------------------
// verify-point

struct VerifyArgs {
  std::string point, field, surface;
};

int cmd_verify(const Global& g, const VerifyArgs& va) {
  const Json pj = load_json_file(va.point);
  FieldPtr F;
  if (!va.field.empty()) F = field_from_json(load_json_file(va.field));
  SurfacePoint P;
  if (pj.is_object() && pj.contains("field")) {
    P = surface_point_from_json(pj);
    if (F && !same_field(*P.x.field(), *F))
      throw ParseError("--field disagrees with the field embedded in the point file");
  } else {
    if (!F) throw ParseError("point file has no embedded field; pass --field");
    P = surface_point_from_json(F, pj);
  }
  const BiellipticSurface S = load_surface_or_standard(rational_field(), va.surface);
  const bool ok = surface_contains(S, P);
  emit(Json{{"contains", ok}, {"model", P.model == SurfaceModel::A ? "A" : "B"}});
  return ok ? kExitOk : kExitMath;
}

// ---------------------------------------------------------------------------
// reproduce

struct ReproArgs {
  bool keep_going = false;
  bool skip_search = false;
};

int cmd_reproduce(const Global& g, const ReproArgs& ra) {
  const FieldPtr L = cubic_field();
  const FieldPtr Q = rational_field();
  const BiellipticSurface S = BiellipticSurface::standard(Q);
  const SquareBudget budget = g.budget();
  const EvenQuarticModel M = even_quartic_to_weierstrass(Rat(3), Rat(2));
  const WeierstrassCurve E = M.curve_over(L);

  auto fx = [&](const char* name) { return load_json_file(g.fixtures + "/" + name); };

  std::optional<SurfacePoint> witness_pt_;
  auto witness = [&]() -> const SurfacePoint& {
    if (!witness_pt_) {
      SurfacePoint P = surface_point_from_json(fx("witness_point.json"));
      if (!same_field(*P.x.field(), *L))
        throw ParseError("witness_point.json is not over the standard cubic field");
      if (P.model != SurfaceModel::A)
        throw ParseError("witness_point.json must use model A");
      witness_pt_ = std::move(P);
    }
    return *witness_pt_;
  };
  std::optional<FieldElement> a_;
  auto twist_a = [&]() -> const FieldElement& {
    if (!a_) a_ = element_from_json(L, fx("twist_a.json"));
    return *a_;
  };
  std::optional<ECPoint> G_;
  auto gen = [&]() -> const ECPoint& {
    if (!G_) G_ = ec_point_from_json(L, fx("generator_G.json"));
    return *G_;
  };
  std::optional<QuarticPoint> cp_;
  auto cpoint = [&]() -> const QuarticPoint& {
    if (!cp_) cp_ = quartic_point_from_json(L, fx("c_point_t0.json"));
    return *cp_;
  };

  struct Check {
    const char* name;
    std::function<Json()> body;
  };
  std::vector<Check> checks;

  checks.push_back({"witness-point-on-surface", [&]() -> Json {
    const SurfacePoint& P = witness();
    const BiellipticSurface SD = surface_from_json(Q, fx("surface.json"));
    if (SD.g != S.g || SD.p != S.p || SD.q != S.q)
      throw MathError("surface.json does not match the built-in model");
    if (!surface_contains(S, P))
      throw MathError("witness point fails the model-A equations");
    return Json{{"contains", true},
                {"model", "A"},
                {"x", element_to_json(P.x)},
                {"t", element_to_json(P.t)}};
  }});

  checks.push_back({"generator-from-witness", [&]() -> Json {
    const SurfacePoint& P = witness();
    const FieldElement px = eval_at(S.p, P.x);
    const FieldElement qx = eval_at(S.q, P.x);
    const FieldElement W = fe_sqrt(px * qx, budget);
    const ECPoint Gm = M.forward(P.x, W);
    if (Gm.inf || Gm.x != twist_a())
      throw MathError("image of the witness fiber does not have x = a");
    if (Gm != gen())
      throw MathError("mapped point differs from the generator fixture");
    if (!E.contains(Gm)) throw MathError("generator is not on the curve");
    return Json{{"w", element_to_json(W)}, {"generator", ec_point_to_json(Gm)}};
  }});

  checks.push_back({"descent-classes", [&]() -> Json {
    const ECPoint& G = gen();
    const FieldElement& a = twist_a();
    const FieldElement d1 = delta_phi(E, G);
    if (!fe_is_square(d1 * a, budget).is_square())
      throw MathError("delta(G) is not in the class of a");
    if (fe_is_square(d1, budget).kind != Squareness::NonSquare)
      throw MathError("delta(G) is unexpectedly trivial");
    const FieldElement d2 = delta_phi(E, ec_mul(E, 2, G));
    if (!fe_is_square(d2, budget).is_square())
      throw MathError("delta(2G) is not the trivial class");
    return Json{{"delta_g", element_to_json(d1)},
                {"delta_2g", element_to_json(d2)},
                {"delta_g_nontrivial", true}};
  }});

  checks.push_back({"rank-positivity", [&]() -> Json {
    const auto sites = degree_one_sites(L, 2);
    if (sites.size() != 2 || sites[0].p != 3 || sites[0].root != 1 ||
        sites[1].p != 11 || sites[1].root != 2)
      throw MathError("smallest degree-one places are not (3,1), (11,2)");
    const std::uint64_t c3 = ec_count_points(ec_reduce(E, sites[0]));
    const std::uint64_t c11 = ec_count_points(ec_reduce(E, sites[1]));
    if (c3 != 4) throw MathError("point count over F_3 is not 4");
    if (c11 != 12) throw MathError("point count over F_11 is not 12");
    const Int bound = torsion_bound(E, sites);
    if (bound != 12) throw MathError("torsion bound is not 12");
    const auto cert = certify_nontorsion(E, gen(), 12);
    return Json{{"sites", Json::array({Json::array({3, 1}), Json::array({11, 2})})},
                {"counts", Json::array({4, 12})},
                {"torsion_bound", bound.get_str()},
                {"multiples_checked", static_cast<int>(cert.multiples.size())}};
  }});

  checks.push_back({"quartic-fiber-point", [&]() -> Json {
    const FieldElement& a = twist_a();
    const QuarticPoint& cp = cpoint();
    const QuarticTwistCurve C = make_quartic_twist(L, a, S.g);
    if (!quartic_contains(C, cp))
      throw MathError("fixture point is not on the twisted quartic");
    if (cp.T != witness().t)
      throw MathError("fiber point sits over the wrong t");
    if (!fe_is_square(eval_at(S.g, cp.T) * a, budget).is_square())
      throw MathError("g(t0) is not in the square class of a");
    return Json{{"T", element_to_json(cp.T)}, {"U", element_to_json(cp.U)}};
  }});

  checks.push_back({"model-round-trip", [&]() -> Json {
    const SurfacePoint& P = witness();
    const SurfacePoint B = model_a_to_b(S, P);
    const auto [ga, cl, dl] = lift_point(S, B);
    const SurfacePoint back = descend_point(S, ga, cl, dl);
    if (back.x != B.x || back.y != B.y || back.z != B.z || back.t != B.t)
      throw MathError("lift/descend round trip is not the identity");
    const SurfacePoint backA = model_b_to_a(S, back);
    if (backA.x != P.x || backA.y != P.y || backA.z != P.z || backA.t != P.t)
      throw MathError("model B -> A does not return the witness point");
    const FieldElement& a = twist_a();
    const FieldElement px = eval_at(S.p, P.x);
    const FieldElement qx = eval_at(S.q, P.x);
    const FieldElement Y1 = fe_sqrt(px * a.inv(), budget);
    const FieldElement W = fe_sqrt(px * qx, budget);
    const FieldElement Z1 = W * (a * Y1).inv();
    const SurfacePoint Sp = descend_point(S, a, cpoint(), BiquadricPoint{P.x, Y1, Z1});
    if (Sp.x != B.x || Sp.y != B.y || Sp.z != B.z || Sp.t != B.t)
      throw MathError("descent through the twist by a misses the witness point");
    return Json{{"lift_twist", element_to_json(ga)},
                {"y1", element_to_json(Y1)},
                {"z1", element_to_json(Z1)}};
  }});

  checks.push_back({"zero-cycle-degree-one", [&]() -> Json {
    const Json choice = fx("degree4_choice.json");
    const Rat cx = rat_from_json(choice.at("x"));
    const Rat ct = rat_from_json(choice.at("t"));
    const ClosedPoint P4 = degree_four_point(S, cx, ct);
    if (P4.degree() != 4)
      throw MathError("chosen fiber does not give a degree-4 point");
    const SurfacePoint& P = witness();
    const ClosedPoint P3 = make_closed_point(P.x.field(), P);
    if (P3.degree() != 3) throw MathError("witness point does not have degree 3");
    const ZeroCycle cyc = zero_cycle_of_degree_one(P3, P4);
    if (cyc.degree() != 1) throw MathError("cycle degree is not 1");
    return Json{{"degree4_field", poly_to_json(P4.residue_field->defining_poly())},
                {"cycle_degree", 1}};
  }});

  checks.push_back({"negative-searches", [&]() -> Json {
    const SearchOptions so = g.search_opts();
    const SearchReport r1 = search_surface(S, Q, SearchBounds{30, 1}, so);
    if (!r1.surface_points.empty() || !r1.exhaustive || !r1.unknowns.empty())
      throw MathError("rational box is not certified empty");
    const SearchReport r2 =
        search_surface(S, companion_cubic_field(), SearchBounds{20, 4}, so);
    if (!r2.surface_points.empty() || !r2.exhaustive || !r2.unknowns.empty())
      throw MathError("companion cubic box is not certified empty");
    return Json{{"rational", search_report_to_json(r1, g.timings)},
                {"companion_cubic", search_report_to_json(r2, g.timings)}};
  }});

  checks.push_back({"fiber-density", [&]() -> Json {
    const auto pts = density_points(S, E, gen(), twist_a(), cpoint(), 5, budget);
    if (pts.size() != 5) throw MathError("expected 5 fiber points");
    Json heights = Json::array();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].t != witness().t)
        throw MathError("fiber point drifted off t = t0");
      if (!surface_contains(S, pts[i]))
        throw MathError("fiber point fails the surface equations");
      for (std::size_t j = 0; j < i; ++j)
        if (pts[i].x == pts[j].x) throw MathError("fiber points are not distinct");
      heights.push_back(pts[i].x.height().get_str());
    }
    return Json{{"count", 5}, {"x_heights", heights}};
  }});

  Json out;
  out["checks"] = Json::array();
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& c : checks) {
    Json entry;
    entry["name"] = c.name;
    if (ra.skip_search && std::string(c.name) == "negative-searches") {
      entry["status"] = "skip";
      ++skipped;
      out["checks"].push_back(std::move(entry));
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Json w = c.body();
      entry["status"] = "pass";
      entry["witness"] = std::move(w);
      ++passed;
    } catch (const std::exception& e) {
      entry["status"] = "fail";
      entry["witness"] = Json{{"error", e.what()}};
      ++failed;
    }
    if (g.timings) entry["elapsed_seconds"] = seconds_since(t0);
    out["checks"].push_back(std::move(entry));
    if (failed > 0 && !ra.keep_going) break;
  }
  out["passed"] = passed;
  out["failed"] = failed;
  out["skipped"] = skipped;
  out["ok"] = (failed == 0);
  emit(out);
  return failed == 0 ? kExitOk : kExitMath;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::string target, field, surface, a;
  long coeff_bound = 1;
  long denom_bound = 1;
  int sites = 24;
  bool expect_found = false;
  bool expect_empty = false;
};

int cmd_search(const Global& g, const SearchArgs& sa) {
  const FieldPtr F = field_from_json(load_json_file(sa.field));
  const BiellipticSurface S = load_surface_or_standard(rational_field(), sa.surface);
  const SearchBounds bounds{sa.coeff_bound, sa.denom_bound};
  SearchOptions so = g.search_opts();
  so.screening_sites = sa.sites;

  SearchReport r;
  if (sa.target == "surface") {
    if (!sa.a.empty())
      throw ParseError("--a applies only to the quartic and biquadric targets");
    r = search_surface(S, F, bounds, so);
  } else {
    const FieldElement a =
        sa.a.empty() ? F->one() : element_from_json(F, load_json_file(sa.a));
    if (sa.target == "quartic")
      r = search_quartic(make_quartic_twist(F, a, S.g), bounds, so);
    else
      r = search_biquadric(make_biquadric_twist(F, a, S.p, S.q), bounds, so);
  }

  Json out = search_report_to_json(r, g.timings);
  const bool found = !(r.quartic_points.empty() && r.biquadric_points.empty() &&
                       r.surface_points.empty());
  int rc = kExitOk;
  if (sa.expect_found) {
    out["expected"] = "found";
    if (!found) rc = kExitExpectation;
  } else if (sa.expect_empty) {
    out["expected"] = "empty";
    if (found || !r.exhaustive) rc = kExitExpectation;
  }
  if (sa.expect_found || sa.expect_empty) out["expectation_met"] = (rc == kExitOk);
  emit(out);
  return rc;
}

// ---------------------------------------------------------------------------
// ec

struct EcCommon {
  std::string field, curve;
};

int cmd_ec_add(const Global&, const EcCommon& ec, const std::string& pf,
               const std::string& qf) {
  const FieldPtr F = load_field_or(ec.field, cubic_field());
  const WeierstrassCurve E = load_curve_or_model(F, ec.curve);
  const ECPoint P = ec_point_from_json(F, load_json_file(pf));
  const ECPoint Q = ec_point_from_json(F, load_json_file(qf));
  emit(ec_point_to_json(ec_add(E, P, Q)));
  return kExitOk;
}

int cmd_ec_mul(const Global&, const EcCommon& ec, long n, const std::string& pf) {
  const FieldPtr F = load_field_or(ec.field, cubic_field());
  const WeierstrassCurve E = load_curve_or_model(F, ec.curve);
  const ECPoint P = ec_point_from_json(F, load_json_file(pf));
  emit(ec_point_to_json(ec_mul(E, n, P)));
  return kExitOk;
}

int cmd_ec_delta(const Global&, const EcCommon& ec, const std::string& pf) {
  const FieldPtr F = load_field_or(ec.field, cubic_field());
  const WeierstrassCurve E = load_curve_or_model(F, ec.curve);
  const ECPoint P = ec_point_from_json(F, load_json_file(pf));
  emit(Json{{"class", element_to_json(delta_phi(E, P))}});
  return kExitOk;
}

int cmd_ec_torsion_bound(const Global&, const EcCommon& ec, int site_count) {
  const FieldPtr F = load_field_or(ec.field, cubic_field());
  const WeierstrassCurve E = load_curve_or_model(F, ec.curve);
  const auto sites = good_sites(E, site_count);
  const Int bound = torsion_bound(E, sites);
  Json sj = Json::array();
  for (const auto& s : sites)
    sj.push_back(Json::array({s.p, s.root}));
  emit(Json{{"torsion_bound", bound.get_str()}, {"sites", sj}});
  return kExitOk;
}

int cmd_ec_nontorsion(const Global&, const EcCommon& ec, const std::string& pf,
                      long bound) {
  const FieldPtr F = load_field_or(ec.field, cubic_field());
  const WeierstrassCurve E = load_curve_or_model(F, ec.curve);
  const ECPoint P = ec_point_from_json(F, load_json_file(pf));
  if (bound <= 0) {
    const Int b = torsion_bound(E, good_sites(E, 2));
    bound = b.get_si();
  }
  const auto cert = certify_nontorsion(E, P, bound);
  emit(Json{{"bound", cert.bound},
            {"multiples_checked", static_cast<int>(cert.multiples.size())},
            {"torsion_free", true}});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// is-square / sqrt

int cmd_is_square(const Global& g, const std::string& elem, const std::string& field) {
  const FieldPtr F = load_field_or(field, cubic_field());
  const FieldElement x = element_from_json(F, load_json_file(elem));
  const SquareResult r = fe_is_square(x, g.budget());
  Json out;
  switch (r.kind) {
    case Squareness::Square: out["kind"] = "square"; break;
    case Squareness::NonSquare: out["kind"] = "nonsquare"; break;
    case Squareness::Unknown: out["kind"] = "unknown"; break;
  }
  if (r.witness) out["root"] = element_to_json(*r.witness);
  if (!r.certificate.empty()) out["certificate"] = r.certificate;
  emit(out);
  return r.is_square() ? kExitOk : kExitMath;
}

int cmd_sqrt(const Global& g, const std::string& elem, const std::string& field) {
  const FieldPtr F = load_field_or(field, cubic_field());
  const FieldElement x = element_from_json(F, load_json_file(elem));
  emit(Json{{"root", element_to_json(fe_sqrt(x, g.budget()))}});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// twists

struct TwistArgs {
  std::vector<std::string> points;
  int n_max = 1;
  std::string field, curve;
};

int cmd_twists(const Global& g, const TwistArgs& wa) {
  const FieldPtr F = load_field_or(wa.field, cubic_field());
  const WeierstrassCurve E = load_curve_or_model(F, wa.curve);
  std::vector<ECPoint> gens;
  if (wa.points.empty()) {
    gens.push_back(ec_point_from_json(F, load_json_file(g.fixtures + "/generator_G.json")));
    gens.push_back(ec_point_from_json(F, load_json_file(g.fixtures + "/torsion_T2.json")));
  } else {
    for (const auto& path : wa.points)
      gens.push_back(ec_point_from_json(F, load_json_file(path)));
  }
  const auto classes = twist_classes(E, gens, wa.n_max);
  Json arr = Json::array();
  for (const auto& c : classes) arr.push_back(element_to_json(c));
  emit(Json{{"classes", arr}, {"count", classes.size()}});
  return kExitOk;
}

// ---------------------------------------------------------------------------
// density

struct DensityArgs {
  int count = 5;
  std::string field, surface, a, generator, c_point;
};

int cmd_density(const Global& g, const DensityArgs& da) {
  const FieldPtr F = load_field_or(da.field, cubic_field());
  const BiellipticSurface S = load_surface_or_standard(rational_field(), da.surface);
  const WeierstrassCurve E = model_curve_for(S, F);
  const std::string a_path = da.a.empty() ? g.fixtures + "/twist_a.json" : da.a;
  const std::string g_path =
      da.generator.empty() ? g.fixtures + "/generator_G.json" : da.generator;
  const std::string c_path =
      da.c_point.empty() ? g.fixtures + "/c_point_t0.json" : da.c_point;
  const FieldElement a = element_from_json(F, load_json_file(a_path));
  const ECPoint G = ec_point_from_json(F, load_json_file(g_path));
  const QuarticPoint cp = quartic_point_from_json(F, load_json_file(c_path));
  const auto pts = density_points(S, E, G, a, cp, da.count, g.budget());
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(surface_point_to_json(p));
  emit(Json{{"points", arr}, {"count", pts.size()}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Global g;
  std::function<int()> run;

  CLI::App app{
      "zerocycle: exact arithmetic on a bielliptic surface, its twisted "
      "covering curves, and the zero-cycle of degree one they carry"};
  app.require_subcommand(0, 1);

  app.add_flag("--json,!--no-json", g.json,
               "emit JSON on stdout (default; JSON is the only format)");
  app.add_option("--seed", g.seed, "reproducibility seed (reserved; output is deterministic)");
  app.add_option("--precision-budget", g.precision_budget,
                 "bit cap on the square-root lifting modulus")
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for searches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--timings", g.timings, "include elapsed seconds in reports");
  app.add_option("--fixtures", g.fixtures, "directory holding the bundled data files")
      ->capture_default_str();

  // verify-point
  VerifyArgs va;
  auto* verify = app.add_subcommand(
      "verify-point", "check a surface point file against the surface equations");
  verify->fallthrough();
  verify->add_option("point", va.point, "point JSON file")->required();
  verify->add_option("--field", va.field, "field JSON file (when the point has none embedded)");
  verify->add_option("--surface", va.surface, "surface JSON file (default: built-in model)");
  verify->callback([&] { run = [&] { return cmd_verify(g, va); }; });

  // reproduce
  ReproArgs ra;
  auto* repro = app.add_subcommand(
      "reproduce", "re-derive the full certificate chain from the bundled fixtures");
  repro->fallthrough();
  repro->add_flag("--keep-going", ra.keep_going, "run every check even after a failure");
  repro->add_flag("--skip-search", ra.skip_search, "skip the exhaustive negative searches");
  repro->callback([&] { run = [&] { return cmd_reproduce(g, ra); }; });

  // search
  SearchArgs sa;
  auto* search = app.add_subcommand(
      "search", "enumerate small points on the surface or a twisted covering curve");
  search->fallthrough();
  search->add_option("target", sa.target, "surface | quartic | biquadric")
      ->required()
      ->check(CLI::IsMember({"surface", "quartic", "biquadric"}));
  search->add_option("--field", sa.field, "field JSON file for the candidate coordinates")
      ->required();
  search->add_option("--surface", sa.surface, "surface JSON file (default: built-in model)");
  search->add_option("--a", sa.a, "twist parameter JSON file (quartic/biquadric; default 1)");
  search->add_option("--coeff-bound", sa.coeff_bound, "max |numerator| per coefficient")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search->add_option("--denom-bound", sa.denom_bound, "max common denominator")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  search->add_option("--screening-sites", sa.sites,
                     "degree-one places used by the residue prefilter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* ef = search->add_flag("--expect-found", sa.expect_found,
                              "exit 3 unless at least one point is found");
  auto* ee = search->add_flag("--expect-empty", sa.expect_empty,
                              "exit 3 unless the box is exhausted with no point");
  ef->excludes(ee);
  ee->excludes(ef);
  search->callback([&] { run = [&] { return cmd_search(g, sa); }; });

  // ec
  EcCommon ec;
  auto* ecsub = app.add_subcommand("ec", "elliptic-curve arithmetic on the descent model");
  ecsub->fallthrough();
  ecsub->require_subcommand(1);
  ecsub->add_option("--field", ec.field, "field JSON file (default: built-in cubic field)");
  ecsub->add_option("--curve", ec.curve,
                    "curve JSON file (default: the surface's descent model)");

  std::string ec_add_p, ec_add_q;
  auto* ecadd = ecsub->add_subcommand("add", "add two points");
  ecadd->fallthrough();
  ecadd->add_option("P", ec_add_p, "point JSON file")->required();
  ecadd->add_option("Q", ec_add_q, "point JSON file")->required();
  ecadd->callback([&] { run = [&] { return cmd_ec_add(g, ec, ec_add_p, ec_add_q); }; });

  long ec_mul_n = 2;
  std::string ec_mul_p;
  auto* ecmul = ecsub->add_subcommand("mul", "integer multiple of a point");
  ecmul->fallthrough();
  ecmul->add_option("n", ec_mul_n, "multiplier")->required();
  ecmul->add_option("P", ec_mul_p, "point JSON file")->required();
  ecmul->callback([&] { run = [&] { return cmd_ec_mul(g, ec, ec_mul_n, ec_mul_p); }; });

  std::string ec_delta_p;
  auto* ecdelta = ecsub->add_subcommand("delta", "connecting-homomorphism square class");
  ecdelta->fallthrough();
  ecdelta->add_option("P", ec_delta_p, "point JSON file")->required();
  ecdelta->callback([&] { run = [&] { return cmd_ec_delta(g, ec, ec_delta_p); }; });

  int ec_tb_sites = 2;
  auto* ectb = ecsub->add_subcommand("torsion-bound",
                                     "torsion bound from point counts at good places");
  ectb->fallthrough();
  ectb->add_option("--sites", ec_tb_sites, "number of places to use")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ectb->callback([&] { run = [&] { return cmd_ec_torsion_bound(g, ec, ec_tb_sites); }; });

  std::string ec_nt_p;
  long ec_nt_bound = 0;
  auto* ecnt = ecsub->add_subcommand("nontorsion", "certify a point has infinite order");
  ecnt->fallthrough();
  ecnt->add_option("P", ec_nt_p, "point JSON file")->required();
  ecnt->add_option("--bound", ec_nt_bound,
                   "torsion bound to clear (default: computed from point counts)");
  ecnt->callback([&] { run = [&] { return cmd_ec_nontorsion(g, ec, ec_nt_p, ec_nt_bound); }; });

  // is-square
  std::string isq_elem, isq_field;
  auto* isq = app.add_subcommand("is-square",
                                 "three-valued square test for a field element");
  isq->fallthrough();
  isq->add_option("element", isq_elem, "element JSON file (coefficient array)")->required();
  isq->add_option("--field", isq_field, "field JSON file (default: built-in cubic field)");
  isq->callback([&] { run = [&] { return cmd_is_square(g, isq_elem, isq_field); }; });

  // sqrt
  std::string sq_elem, sq_field;
  auto* sq = app.add_subcommand("sqrt", "exact canonical square root of a field element");
  sq->fallthrough();
  sq->add_option("element", sq_elem, "element JSON file (coefficient array)")->required();
  sq->add_option("--field", sq_field, "field JSON file (default: built-in cubic field)");
  sq->callback([&] { run = [&] { return cmd_sqrt(g, sq_elem, sq_field); }; });

  // twists
  TwistArgs wa;
  auto* tw = app.add_subcommand(
      "twists", "square classes hit by the connecting homomorphism on known points");
  tw->fallthrough();
  tw->add_option("points", wa.points,
                 "point JSON files (default: bundled generator and 2-torsion point)");
  tw->add_option("--n-max", wa.n_max, "max |coefficient| in generator combinations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tw->add_option("--field", wa.field, "field JSON file (default: built-in cubic field)");
  tw->add_option("--curve", wa.curve, "curve JSON file (default: the surface's descent model)");
  tw->callback([&] { run = [&] { return cmd_twists(g, wa); }; });

  // density
  DensityArgs da;
  auto* den = app.add_subcommand(
      "density", "surface points from odd multiples of the generator in one fiber");
  den->fallthrough();
  den->add_option("--count", da.count, "number of distinct points to produce")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  den->add_option("--field", da.field, "field JSON file (default: built-in cubic field)");
  den->add_option("--surface", da.surface, "surface JSON file (default: built-in model)");
  den->add_option("--a", da.a, "twist parameter JSON file (default: bundled twist)");
  den->add_option("--generator", da.generator,
                  "generator point JSON file (default: bundled generator)");
  den->add_option("--c-point", da.c_point,
                  "quartic point JSON file (default: bundled fiber point)");
  den->callback([&] { run = [&] { return cmd_density(g, da); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  if (!run) {
    std::cout << app.help();
    return kExitOk;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    emit(Json{{"error", e.what()}});
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Json::exception& e) {
    emit(Json{{"error", e.what()}});
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    emit(Json{{"error", e.what()}});
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    emit(Json{{"error", e.what()}});
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
}
