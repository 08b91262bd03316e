// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zerocycle/errors.hpp"
#include "zerocycle/squares.hpp"
#include "zerocycle/surface.hpp"

#include "support.hpp"

using namespace zctest;

namespace {

// The bundled degree-3 witness and its companions, in model A.
struct Witness {
  FieldPtr L = cubic_field();
  FieldPtr Q = rational_field();
  BiellipticSurface S = BiellipticSurface::standard(Q);
  FieldElement x0 = elem(L, 1, 0, 1);
  FieldElement y0 = elem(L, 4851, -2133, 3357);
  FieldElement z0 = elem(L, 4158, -2025, 2826);
  FieldElement t0 = elem(L, -54, 24, -42);
  FieldElement a = elem(L, 9, -4, 6);
  SurfacePoint P{SurfaceModel::A, x0, y0, z0, t0};
};

}  // namespace

TEST_CASE("standard surface data") {
  Witness w;
  CHECK(w.S.g == UniPoly::from_strings({"-729", "-351", "-162", "0", "3"}));
  CHECK(w.S.p == UniPoly::from_strings({"1", "0", "1"}));
  CHECK(w.S.q == UniPoly::from_strings({"2", "0", "1"}));

  auto bad_g = UniPoly::from_strings({"1", "0", "1"});
  CHECK_THROWS_AS(BiellipticSurface::create(w.Q, bad_g, w.S.p, w.S.q), DegreeMismatch);
  CHECK_THROWS_AS(BiellipticSurface::create(w.Q, w.S.g, w.S.p, w.S.p), MathError);
}

TEST_CASE("witness point satisfies both models") {
  Witness w;
  CHECK(surface_contains(w.S, w.P));
  CHECK(eval_at(w.S.p, w.x0) == elem(w.L, 2, -1, 1));
  CHECK(eval_at(w.S.q, w.x0) == elem(w.L, 3, -1, 1));
  CHECK(eval_at(w.S.g, w.t0) == elem(w.L, 119199033, -55496016, 81345870));

  auto B = model_a_to_b(w.S, w.P);
  CHECK(B.model == SurfaceModel::B);
  CHECK(surface_contains(w.S, B));
  CHECK(B.y == eval_at(w.S.p, w.x0) * w.y0);
  CHECK(B.z == eval_at(w.S.q, w.x0) * w.z0);

  auto back = model_b_to_a(w.S, B);
  CHECK(back.x == w.P.x);
  CHECK(back.y == w.P.y);
  CHECK(back.z == w.P.z);
  CHECK(back.t == w.P.t);

  SurfacePoint off = w.P;
  off.y = off.y + Rat(1);
  CHECK_FALSE(surface_contains(w.S, off));
}

TEST_CASE("model conversion stops on the branch locus") {
  auto Q = rational_field();
  // p = x^2 - 1 vanishes at x = 1; g = t^4 + 1 keeps the fibers smooth there.
  auto S = BiellipticSurface::create(Q, UniPoly::from_strings({"1", "0", "0", "0", "1"}),
                                     UniPoly::from_strings({"-1", "0", "1"}),
                                     UniPoly::from_strings({"-4", "0", "1"}));
  SurfacePoint onb{SurfaceModel::B, Q->one(), Q->zero(), Q->zero(), Q->zero()};
  CHECK_THROWS_AS(model_b_to_a(S, onb), BranchLocus);
  SurfacePoint ona{SurfaceModel::A, Q->one(), Q->zero(), Q->zero(), Q->zero()};
  CHECK_THROWS_AS(model_a_to_b(S, ona), BranchLocus);
}

TEST_CASE("twisted covering pair carries the witness") {
  Witness w;
  auto [C, D] = twist_curves(w.S, w.a);
  CHECK(C.a == w.a);
  CHECK(D.a == w.a);
  CHECK(C.g == w.S.g);
  CHECK(D.p == w.S.p);
  CHECK(D.q == w.S.q);

  QuarticPoint cp{w.t0, elem(w.L, 2133, -1224, 1494)};
  BiquadricPoint dp{w.x0, elem(w.L, 0, 0, 1), elem(w.L, 1, 0, -1)};
  CHECK(quartic_contains(C, cp));
  CHECK(biquadric_contains(D, dp));

  auto sp = descend_point(w.S, w.a, cp, dp);
  CHECK(sp.model == SurfaceModel::B);
  CHECK(sp.y == elem(w.L, 15192, -6984, 10341));
  CHECK(sp.z == elem(w.L, 17325, -8208, 11835));
  CHECK(surface_contains(w.S, sp));
  CHECK(model_b_to_a(w.S, sp).y == w.y0);

  // descend verifies its inputs.
  CHECK_THROWS_AS(descend_point(w.S, w.a, QuarticPoint{w.t0, w.t0}, dp), PointNotOnCurve);
}

TEST_CASE("lift and descend are mutually inverse off the branch locus") {
  Witness w;
  auto B = model_a_to_b(w.S, w.P);
  auto [ga, cp, dp] = lift_point(w.S, B);
  CHECK(ga == eval_at(w.S.g, w.t0));
  CHECK(cp.T == w.t0);
  CHECK(cp.U == w.L->one());
  auto back = descend_point(w.S, ga, cp, dp);
  CHECK(back.x == B.x);
  CHECK(back.y == B.y);
  CHECK(back.z == B.z);
  CHECK(back.t == B.t);

  // Lifting expects model B; model A must be converted first.
  CHECK_THROWS_AS(lift_point(w.S, w.P), MathError);
}

TEST_CASE("closed points and the degree-one cycle") {
  Witness w;
  auto P3 = make_closed_point(w.L, w.P);
  CHECK(P3.degree() == 3);
  auto P4 = degree_four_point(w.S, Rat(0), Rat(0));
  CHECK(P4.degree() == 4);
  CHECK(P4.residue_field->defining_poly() ==
        UniPoly::from_strings({"1", "0", "6", "0", "1"}));
  auto cyc = zero_cycle_of_degree_one(P3, P4);
  CHECK(cyc.degree() == 1);
  CHECK(cyc.terms.size() == 2);
  CHECK(cyc.terms[0].first == 1);
  CHECK(cyc.terms[1].first == -1);

  CHECK_THROWS_AS(zero_cycle_of_degree_one(P4, P3), DegreeMismatch);
  CHECK_THROWS_AS(zero_cycle_of_degree_one(P3, P3), DegreeMismatch);
}

TEST_CASE("degree-four construction falls back to smaller residue fields") {
  auto Q = rational_field();
  const auto p = UniPoly::from_strings({"1", "0", "1"});
  const auto q = UniPoly::from_strings({"2", "0", "1"});
  const auto q4 = UniPoly::from_strings({"4", "0", "1"});

  // g(0)p(0) = 1 and g(0)q4(0) = 4: both rational squares, residue field Q.
  auto S1 = BiellipticSurface::create(Q, UniPoly::from_strings({"1", "0", "0", "0", "1"}),
                                      p, q4);
  auto P1 = degree_four_point(S1, Rat(0), Rat(0));
  CHECK(P1.degree() == 1);

  // g(0)p(0) = 2 and g(0)q(0) = 4: one square, residue field Q(sqrt 2).
  auto S2 = BiellipticSurface::create(Q, UniPoly::from_strings({"2", "0", "0", "0", "2"}),
                                      UniPoly::from_strings({"1", "0", "2"}), q);
  auto P2 = degree_four_point(S2, Rat(0), Rat(0));
  CHECK(P2.degree() == 2);

  // g(0)p(0) = 2 and g(0)q(0) = 8: same squarefree kernel, residue Q(sqrt 2).
  auto S3 = BiellipticSurface::create(Q, UniPoly::from_strings({"2", "0", "0", "0", "2"}),
                                      UniPoly::from_strings({"1", "0", "1"}), q4);
  auto P3 = degree_four_point(S3, Rat(0), Rat(0));
  CHECK(P3.degree() == 2);
}

TEST_CASE("surface handles only matching fields") {
  Witness w;
  CHECK_THROWS_AS(make_closed_point(w.Q, w.P), MathError);
}
