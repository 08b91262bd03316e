// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zerocycle/numberfield.hpp"

namespace zc {

// aU^2 = g(T), deg g = 4.  A point container; no group structure.
struct QuarticTwistCurve {
  FieldPtr field;
  FieldElement a;
  UniPoly g;
};

// aY^2 = p(X), aZ^2 = q(X), deg p = deg q = 2, p != q.
struct BiquadricTwistCurve {
  FieldPtr field;
  FieldElement a;
  UniPoly p, q;
};

struct QuarticPoint {
  FieldElement T, U;
};

struct BiquadricPoint {
  FieldElement X, Y, Z;
};

QuarticTwistCurve make_quartic_twist(const FieldPtr& field, const FieldElement& a,
                                     const UniPoly& g);
BiquadricTwistCurve make_biquadric_twist(const FieldPtr& field, const FieldElement& a,
                                         const UniPoly& p, const UniPoly& q);

bool quartic_contains(const QuarticTwistCurve& C, const QuarticPoint& P);
bool biquadric_contains(const BiquadricTwistCurve& D, const BiquadricPoint& P);

// Affine or infinite point; the infinite point carries no coordinates.
struct ECPoint {
  bool inf = true;
  FieldElement x, y;

  static ECPoint infinity() { return ECPoint{}; }
  static ECPoint affine(FieldElement px, FieldElement py) {
    return ECPoint{false, std::move(px), std::move(py)};
  }
};

bool operator==(const ECPoint& a, const ECPoint& b);
inline bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }

// y^2 = x^3 + a2 x^2 + a4 x + a6 with nonzero cubic discriminant.
class WeierstrassCurve {
 public:
  static WeierstrassCurve create(const FieldPtr& field, FieldElement a2, FieldElement a4,
                                 FieldElement a6);

  const FieldPtr& field() const { return field_; }
  const FieldElement& a2() const { return a2_; }
  const FieldElement& a4() const { return a4_; }
  const FieldElement& a6() const { return a6_; }
  // Discriminant of the right-hand cubic (nonzero iff nonsingular, p odd).
  const FieldElement& cubic_disc() const { return disc_; }

  bool contains(const ECPoint& P) const;
  FieldElement rhs(const FieldElement& x) const;

 private:
  WeierstrassCurve(FieldPtr field, FieldElement a2, FieldElement a4, FieldElement a6,
                   FieldElement disc)
      : field_(std::move(field)), a2_(std::move(a2)), a4_(std::move(a4)),
        a6_(std::move(a6)), disc_(std::move(disc)) {}

  FieldPtr field_;
  FieldElement a2_, a4_, a6_, disc_;
};

// Chord-tangent group law; operands are verified on the curve.
ECPoint ec_add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_neg(const WeierstrassCurve& E, const ECPoint& P);
ECPoint ec_mul(const WeierstrassCurve& E, long n, const ECPoint& P);

// The even quartic v^2 = u^4 + pc u^2 + rc and its cubic model
// y^2 = x^3 - 2 pc x^2 + (pc^2 - 4 rc) x.  The birational maps send
// (u, v) -> (x, y) = (2(v + u^2) + pc, 2ux); the infinite branch with
// v ~ +u^2 becomes the origin and the branch with v ~ -u^2 becomes the
// 2-torsion point (0, 0).
struct EvenQuarticModel {
  Rat pc, rc;

  WeierstrassCurve curve_over(const FieldPtr& field) const;
  // Verifies (u, v) on the quartic, then maps; the image is affine.
  ECPoint forward(const FieldElement& u, const FieldElement& v) const;
  // Defined for affine P with x != 0: u = y/(2x), v = (x - pc)/2 - u^2.
  std::pair<FieldElement, FieldElement> inverse(const WeierstrassCurve& E,
                                                const ECPoint& P) const;
};

EvenQuarticModel even_quartic_to_weierstrass(const Rat& pc, const Rat& rc);

// Quotient to the quartic model of D': for P = (X, Y, Z) on the twist D^a,
// the pair (X, W = aYZ) satisfies W^2 = p(X)q(X); composed with the even
// quartic map this lands on the cubic model.
ECPoint phi_image(const BiquadricTwistCurve& D, const BiquadricPoint& P,
                  const EvenQuarticModel& M);

// Connecting homomorphism on a model with a6 = 0 (rational 2-torsion at
// x = 0): class of x(P) for affine P with x != 0, the class a4 at (0, 0),
// and 1 at the origin.  Representatives are not canonicalized.
FieldElement delta_phi(const WeierstrassCurve& E, const ECPoint& P);

// Reduction of a curve at a degree-one place, and point counting.
struct CurveModP {
  std::uint64_t p = 0;
  std::uint64_t a2 = 0, a4 = 0, a6 = 0;
};

CurveModP ec_reduce(const WeierstrassCurve& E, const PrimeSite& site);
bool good_reduction(const WeierstrassCurve& E, const PrimeSite& site);
// #E(F_p) including infinity, by brute force with a residue table.
std::uint64_t ec_count_points(const CurveModP& E);

// Torsion bound from point counts at >= 2 distinct odd degree-one places of
// good reduction: for each prime l, the l-part of the bound is the minimum
// of v_l(#E(F_p)) over the used sites with p != l.
Int torsion_bound(const WeierstrassCurve& E, const std::vector<PrimeSite>& sites);

struct NonTorsionCertificate {
  long bound = 0;
  // n P for n = 1..bound, none equal to infinity.
  std::vector<ECPoint> multiples;
};

// Throws TorsionDetected(n) if nP = infinity for some n <= bound.
NonTorsionCertificate certify_nontorsion(const WeierstrassCurve& E, const ECPoint& P,
                                         long bound);

}  // namespace zc
