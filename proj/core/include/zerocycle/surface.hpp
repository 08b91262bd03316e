// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <tuple>
#include <vector>

#include "zerocycle/curves.hpp"
#include "zerocycle/numberfield.hpp"

namespace zc {

// The bielliptic surface in two affine models:
//   model A:  p(x) y^2 = g(t),  q(x) z^2 = g(t)
//   model B:  y^2 = g(t) p(x),  z^2 = g(t) q(x)
// with deg g = 4 and deg p = deg q = 2.  The default data is
// g = 3t^4 - 162t^2 - 351t - 729, p = x^2 + 1, q = x^2 + 2.
struct BiellipticSurface {
  FieldPtr field;
  UniPoly g, p, q;

  static BiellipticSurface standard(const FieldPtr& field);
  static BiellipticSurface create(const FieldPtr& field, UniPoly g, UniPoly p, UniPoly q);
};

enum class SurfaceModel { A, B };

struct SurfacePoint {
  SurfaceModel model = SurfaceModel::A;
  FieldElement x, y, z, t;
};

bool surface_contains(const BiellipticSurface& S, const SurfacePoint& P);

// Change of variables between the models: y_B = p(x) y_A, z_B = q(x) z_A,
// and back by division.  Off the branch locus these are mutually inverse.
SurfacePoint model_a_to_b(const BiellipticSurface& S, const SurfacePoint& P);
SurfacePoint model_b_to_a(const BiellipticSurface& S, const SurfacePoint& P);

// The twisted covering pair C^a: aU^2 = g(T) and D^a: aY^2 = p(X),
// aZ^2 = q(X).
std::pair<QuarticTwistCurve, BiquadricTwistCurve> twist_curves(const BiellipticSurface& S,
                                                               const FieldElement& a);

// The covering map down to the surface: x = X, t = T, y = aUY, z = aUZ
// (model B).  For a = 1 this is the classical form y = UY, z = UZ.
SurfacePoint descend_point(const BiellipticSurface& S, const FieldElement& a,
                           const QuarticPoint& cp, const BiquadricPoint& dp);

// A model-B point off g(t) = 0 lifts to the twist by a = g(t):
// (T, U) = (t, 1) on C^a and (X, Y, Z) = (x, y/g(t), z/g(t)) on D^a.
std::tuple<FieldElement, QuarticPoint, BiquadricPoint> lift_point(
    const BiellipticSurface& S, const SurfacePoint& P);

// A surface point together with the number field its coordinates generate.
struct ClosedPoint {
  FieldPtr residue_field;
  SurfacePoint point;
  int degree() const { return residue_field->degree(); }
};

ClosedPoint make_closed_point(const FieldPtr& residue_field, SurfacePoint point);

// Formal integer combination of closed points.
struct ZeroCycle {
  std::vector<std::pair<long, ClosedPoint>> terms;
  Int degree() const {
    Int d = 0;
    for (const auto& [m, P] : terms) d += Int(m) * P.degree();
    return d;
  }
};

// The evident closed point over Q(sqrt(g(t)p(x)), sqrt(g(t)q(x))) above a
// rational (x, t): residue degree 1, 2 or 4 depending on which of the two
// products (and their ratio) are rational squares.  The surface must be the
// rational model (base field Q).
ClosedPoint degree_four_point(const BiellipticSurface& S, const Rat& x, const Rat& t);

// 1 * [P4] - 1 * [P3]; degrees must be exactly 4 and 3.
ZeroCycle zero_cycle_of_degree_one(const ClosedPoint& P3, const ClosedPoint& P4);

}  // namespace zc
