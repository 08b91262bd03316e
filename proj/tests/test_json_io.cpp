// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "zerocycle/errors.hpp"
#include "zerocycle/json_io.hpp"

#include "support.hpp"

using namespace zctest;

TEST_CASE("rationals serialize as exact lowest-term strings") {
  CHECK(rat_to_json(Rat(7)) == Json("7"));
  CHECK(rat_to_json(Rat(-3, 6)) == Json("-1/2"));
  CHECK(rat_from_json(Json("22/7")) == Rat(22, 7));
  CHECK(rat_from_json(Json("-5")) == Rat(-5));
  CHECK(rat_from_json(Json(12)) == Rat(12));
  CHECK_THROWS_AS(rat_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rat_from_json(Json("two")), ParseError);
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), ParseError);
  std::mt19937_64 rng(30);
  for (int i = 0; i < 200; ++i) {
    Rat r = rand_rat(rng, 1000, 99);
    CHECK(rat_from_json(rat_to_json(r)) == r);
  }
}

TEST_CASE("polynomials and elements round trip") {
  auto L = cubic_field();
  auto f = UniPoly::from_strings({"-729", "-351", "-162", "0", "3"});
  CHECK(poly_from_json(poly_to_json(f)) == f);

  auto x = L->element({Rat(1, 2), Rat(-3), Rat(7, 5)});
  CHECK(element_from_json(L, element_to_json(x)) == x);

  CHECK_THROWS_AS(element_from_json(L, Json::array({"1", "2"})), ParseError);
  CHECK_THROWS_AS(element_from_json(L, Json::array({"1", "2", "3", "4"})), ParseError);
  CHECK_THROWS_AS(element_from_json(L, Json("1")), ParseError);
}

TEST_CASE("fields round trip and validate") {
  auto L = cubic_field();
  auto j = field_to_json(*L);
  CHECK(j.at("poly") == Json::array({"1", "1", "0", "1"}));
  auto L2 = field_from_json(j);
  CHECK(same_field(*L, *L2));
  CHECK_THROWS_AS(field_from_json(Json{{"poly", Json::array({"-1", "0", "1"})}}),
                  ReducibleDetected);
  CHECK_THROWS_AS(field_from_json(Json{{"nope", 1}}), ParseError);
}

TEST_CASE("curve and point serialization") {
  auto L = cubic_field();
  auto E = even_quartic_to_weierstrass(Rat(3), Rat(2)).curve_over(L);
  auto E2 = curve_from_json(L, curve_to_json(E));
  CHECK(E2.a2() == E.a2());
  CHECK(E2.a4() == E.a4());
  CHECK(E2.a6() == E.a6());

  auto G = ECPoint::affine(elem(L, 9, -4, 6), elem(L, 26, -12, 18));
  CHECK(ec_point_from_json(L, ec_point_to_json(G)) == G);
  auto inf = ec_point_from_json(L, Json{{"inf", true}});
  CHECK(inf.inf);
  CHECK(ec_point_to_json(inf) == Json{{"inf", true}});

  QuarticPoint cp{elem(L, -54, 24, -42), elem(L, 2133, -1224, 1494)};
  auto cp2 = quartic_point_from_json(L, quartic_point_to_json(cp));
  CHECK(cp2.T == cp.T);
  CHECK(cp2.U == cp.U);

  BiquadricPoint dp{elem(L, 1, 0, 1), elem(L, 0, 0, 1), elem(L, 1, 0, -1)};
  auto dp2 = biquadric_point_from_json(L, biquadric_point_to_json(dp));
  CHECK(dp2.X == dp.X);
  CHECK(dp2.Y == dp.Y);
  CHECK(dp2.Z == dp.Z);
}

TEST_CASE("twist curves round trip") {
  auto L = cubic_field();
  auto Q = rational_field();
  auto S = BiellipticSurface::standard(Q);
  auto a = elem(L, 9, -4, 6);
  auto C = make_quartic_twist(L, a, S.g);
  auto C2 = quartic_twist_from_json(L, quartic_twist_to_json(C));
  CHECK(C2.a == C.a);
  CHECK(C2.g == C.g);

  auto D = make_biquadric_twist(L, a, S.p, S.q);
  auto D2 = biquadric_twist_from_json(L, biquadric_twist_to_json(D));
  CHECK(D2.a == D.a);
  CHECK(D2.p == D.p);
  CHECK(D2.q == D.q);
}

TEST_CASE("surface and surface points round trip") {
  auto L = cubic_field();
  auto Q = rational_field();
  auto S = BiellipticSurface::standard(Q);
  auto S2 = surface_from_json(Q, surface_to_json(S));
  CHECK(S2.g == S.g);
  CHECK(S2.p == S.p);
  CHECK(S2.q == S.q);

  SurfacePoint P{SurfaceModel::A, elem(L, 1, 0, 1), elem(L, 4851, -2133, 3357),
                 elem(L, 4158, -2025, 2826), elem(L, -54, 24, -42)};
  auto j = surface_point_to_json(P);
  CHECK(j.contains("field"));
  auto P2 = surface_point_from_json(j);
  CHECK(same_field(*P2.x.field(), *L));
  CHECK(P2.model == SurfaceModel::A);
  CHECK(P2.x == P.x);
  CHECK(P2.y == P.y);
  CHECK(P2.z == P.z);
  CHECK(P2.t == P.t);

  // The same document parses against a caller-supplied field handle.
  auto P3 = surface_point_from_json(L, j);
  CHECK(P3.y == P.y);

  Json bad = j;
  bad["model"] = "C";
  CHECK_THROWS_AS(surface_point_from_json(bad), ParseError);
  Json missing = j;
  missing.erase("z");
  CHECK_THROWS_AS(surface_point_from_json(missing), ParseError);
}

TEST_CASE("parse and file errors are ParseError") {
  CHECK_THROWS_AS(parse_json("{\"a\": "), ParseError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/zerocycle.json"), ParseError);

  const char* path = "zc_test_roundtrip.json";
  {
    std::ofstream out(path);
    out << surface_point_to_json(SurfacePoint{SurfaceModel::A, cubic_field()->one(),
                                              cubic_field()->one(), cubic_field()->one(),
                                              cubic_field()->one()})
               .dump();
  }
  auto j = load_json_file(path);
  CHECK(j.at("model") == "A");
  std::remove(path);
}

TEST_CASE("search reports serialize deterministically") {
  auto Q = rational_field();
  auto S = BiellipticSurface::standard(Q);
  auto C = make_quartic_twist(Q, Q->one(), S.g);
  auto rep = search_quartic(C, SearchBounds{3, 1});
  auto j = search_report_to_json(rep);
  CHECK(j.at("target") == "quartic");
  CHECK(j.at("bounds").at("coeff_bound") == 3);
  CHECK(j.at("bounds").at("denom_bound") == 1);
  CHECK(j.at("candidates_tested") == 7);
  CHECK(j.at("points_found").is_array());
  CHECK(j.at("exhaustive") == true);
  CHECK_FALSE(j.contains("elapsed_seconds"));
  auto jt = search_report_to_json(rep, true);
  CHECK(jt.contains("elapsed_seconds"));
}
