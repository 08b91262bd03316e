// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include "zerocycle/curves.hpp"

#include <algorithm>

#include "zerocycle/errors.hpp"
#include "zerocycle/modarith.hpp"

namespace zc {

QuarticTwistCurve make_quartic_twist(const FieldPtr& field, const FieldElement& a,
                                     const UniPoly& g) {
  if (a.is_zero()) throw ZeroTwist();
  if (g.degree() != 4) throw DegreeMismatch("quartic twist needs deg g = 4");
  return QuarticTwistCurve{field, a, g};
}

BiquadricTwistCurve make_biquadric_twist(const FieldPtr& field, const FieldElement& a,
                                         const UniPoly& p, const UniPoly& q) {
  if (a.is_zero()) throw ZeroTwist();
  if (p.degree() != 2 || q.degree() != 2)
    throw DegreeMismatch("biquadric twist needs deg p = deg q = 2");
  if (p == q) throw MathError("biquadric twist needs p != q");
  return BiquadricTwistCurve{field, a, p, q};
}

bool quartic_contains(const QuarticTwistCurve& C, const QuarticPoint& P) {
  return C.a * P.U * P.U == eval_at(C.g, P.T);
}

bool biquadric_contains(const BiquadricTwistCurve& D, const BiquadricPoint& P) {
  return D.a * P.Y * P.Y == eval_at(D.p, P.X) && D.a * P.Z * P.Z == eval_at(D.q, P.X);
}

bool operator==(const ECPoint& a, const ECPoint& b) {
  if (a.inf || b.inf) return a.inf == b.inf;
  return a.x == b.x && a.y == b.y;
}

WeierstrassCurve WeierstrassCurve::create(const FieldPtr& field, FieldElement a2,
                                          FieldElement a4, FieldElement a6) {
  // Discriminant of x^3 + a x^2 + b x + c.
  const FieldElement &a = a2, &b = a4, &c = a6;
  FieldElement disc = a * b * c * Rat(18) - a * a * a * c * Rat(4) + a * a * b * b -
                      b * b * b * Rat(4) - c * c * Rat(27);
  if (disc.is_zero()) throw SingularCurve();
  return WeierstrassCurve(field, std::move(a2), std::move(a4), std::move(a6),
                          std::move(disc));
}

FieldElement WeierstrassCurve::rhs(const FieldElement& x) const {
  return ((x + a2_) * x + a4_) * x + a6_;
}

bool WeierstrassCurve::contains(const ECPoint& P) const {
  if (P.inf) return true;
  return P.y * P.y == rhs(P.x);
}

namespace {

void require_on_curve(const WeierstrassCurve& E, const ECPoint& P) {
  if (!E.contains(P)) throw PointNotOnCurve();
}

}  // namespace

ECPoint ec_neg(const WeierstrassCurve& E, const ECPoint& P) {
  require_on_curve(E, P);
  if (P.inf) return P;
  return ECPoint::affine(P.x, -P.y);
}

ECPoint ec_add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q) {
  require_on_curve(E, P);
  require_on_curve(E, Q);
  if (P.inf) return Q;
  if (Q.inf) return P;
  FieldElement lambda;
  if (P.x == Q.x) {
    if (P.y == -Q.y) return ECPoint::infinity();
    // Tangent slope (P.y != 0 here, else P = -Q above).
    lambda = (P.x * P.x * Rat(3) + E.a2() * P.x * Rat(2) + E.a4()) / (P.y * Rat(2));
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  FieldElement x3 = lambda * lambda - E.a2() - P.x - Q.x;
  FieldElement y3 = lambda * (P.x - x3) - P.y;
  return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint ec_mul(const WeierstrassCurve& E, long n, const ECPoint& P) {
  require_on_curve(E, P);
  if (n < 0) return ec_mul(E, -n, ec_neg(E, P));
  ECPoint acc = ECPoint::infinity();
  ECPoint base = P;
  unsigned long u = static_cast<unsigned long>(n);
  while (u) {
    if (u & 1) acc = ec_add(E, acc, base);
    if (u >>= 1) base = ec_add(E, base, base);
  }
  return acc;
}

EvenQuarticModel even_quartic_to_weierstrass(const Rat& pc, const Rat& rc) {
  if (rc == 0 || pc * pc - 4 * rc == 0) throw SingularQuartic();
  return EvenQuarticModel{pc, rc};
}

WeierstrassCurve EvenQuarticModel::curve_over(const FieldPtr& field) const {
  return WeierstrassCurve::create(field, field->from_rat(-2 * pc),
                                  field->from_rat(pc * pc - 4 * rc), field->zero());
}

ECPoint EvenQuarticModel::forward(const FieldElement& u, const FieldElement& v) const {
  FieldElement u2 = u * u;
  if (v * v != u2 * u2 + u2 * pc + rc)
    throw PointNotOnCurve("(u, v) is not on the even quartic");
  FieldElement x = (v + u2) * Rat(2) + pc;
  FieldElement y = u * x * Rat(2);
  return ECPoint::affine(std::move(x), std::move(y));
}

std::pair<FieldElement, FieldElement> EvenQuarticModel::inverse(const WeierstrassCurve& E,
                                                                const ECPoint& P) const {
  require_on_curve(E, P);
  if (P.inf || P.x.is_zero())
    throw MathError("this point corresponds to a point at infinity of the quartic");
  FieldElement u = P.y / (P.x * Rat(2));
  FieldElement v = (P.x - pc) * Rat(1, 2) - u * u;
  return {std::move(u), std::move(v)};
}

ECPoint phi_image(const BiquadricTwistCurve& D, const BiquadricPoint& P,
                  const EvenQuarticModel& M) {
  if (!biquadric_contains(D, P)) throw PointNotOnCurve("point is not on the twist");
  FieldElement W = D.a * P.Y * P.Z;
  return M.forward(P.X, W);
}

FieldElement delta_phi(const WeierstrassCurve& E, const ECPoint& P) {
  if (!E.a6().is_zero())
    throw MathError("connecting homomorphism needs the 2-torsion model (a6 = 0)");
  require_on_curve(E, P);
  const FieldPtr& F = E.field();
  if (P.inf) return F->one();
  if (P.x.is_zero()) return E.a4();
  return P.x;
}

CurveModP ec_reduce(const WeierstrassCurve& E, const PrimeSite& site) {
  return CurveModP{site.p, reduce_at(E.a2(), site), reduce_at(E.a4(), site),
                   reduce_at(E.a6(), site)};
}

bool good_reduction(const WeierstrassCurve& E, const PrimeSite& site) {
  if (site.p == 2) return false;
  CurveModP R;
  try {
    R = ec_reduce(E, site);
  } catch (const BadReduction&) {
    return false;
  }
  uint64_t p = R.p, a = R.a2, b = R.a4, c = R.a6;
  // 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2 mod p
  uint64_t t1 = mulmod_u64(mulmod_u64(mulmod_u64(18 % p, a, p), b, p), c, p);
  uint64_t t2 = mulmod_u64(mulmod_u64(mulmod_u64(mulmod_u64(4 % p, a, p), a, p), a, p), c, p);
  uint64_t t3 = mulmod_u64(mulmod_u64(mulmod_u64(a, a, p), b, p), b, p);
  uint64_t t4 = mulmod_u64(mulmod_u64(mulmod_u64(4 % p, b, p), b, p), b, p);
  uint64_t t5 = mulmod_u64(mulmod_u64(27 % p, c, p), c, p);
  uint64_t disc = ((t1 + t3) % p + 3 * p - t2 % p - t4 % p) % p;
  disc = (disc + p - t5 % p) % p;
  return disc != 0;
}

std::uint64_t ec_count_points(const CurveModP& E) {
  uint64_t p = E.p;
  std::vector<uint32_t> ysols(p, 0);
  for (uint64_t y = 0; y < p; ++y) ++ysols[mulmod_u64(y, y, p)];
  uint64_t count = 1;  // infinity
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t r = (mulmod_u64(mulmod_u64(x, x, p), x, p) +
                  mulmod_u64(E.a2, mulmod_u64(x, x, p), p) + mulmod_u64(E.a4, x, p) +
                  E.a6) % p;
    count += ysols[r];
  }
  return count;
}

namespace {

std::vector<std::pair<uint64_t, int>> factor_small(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

Int torsion_bound(const WeierstrassCurve& E, const std::vector<PrimeSite>& sites) {
  if (sites.size() < 2) throw BadSite("torsion bound needs at least two sites");
  std::vector<uint64_t> primes;
  std::vector<uint64_t> counts;
  for (const auto& site : sites) {
    if (site.p == 2) throw BadSite("torsion bound sites must be odd");
    if (std::find(primes.begin(), primes.end(), site.p) != primes.end())
      throw BadSite("torsion bound sites must have distinct primes");
    if (!good_reduction(E, site)) throw BadSite("bad reduction at a torsion-bound site");
    primes.push_back(site.p);
    counts.push_back(ec_count_points(ec_reduce(E, site)));
  }

  // Collect candidate primes l from all the counts.
  std::vector<uint64_t> ells;
  for (uint64_t c : counts)
    for (const auto& fac : factor_small(c))
      if (std::find(ells.begin(), ells.end(), fac.first) == ells.end())
        ells.push_back(fac.first);
  std::sort(ells.begin(), ells.end());

  Int bound = 1;
  for (uint64_t l : ells) {
    int v = -1;
    for (size_t i = 0; i < counts.size(); ++i) {
      if (primes[i] == l) continue;  // the p-part does not inject at p
      int e = 0;
      uint64_t c = counts[i];
      while (c % l == 0) { c /= l; ++e; }
      if (v < 0 || e < v) v = e;
    }
    for (int i = 0; i < v; ++i) bound *= static_cast<long>(l);
  }
  return bound;
}

NonTorsionCertificate certify_nontorsion(const WeierstrassCurve& E, const ECPoint& P,
                                         long bound) {
  require_on_curve(E, P);
  if (P.inf) throw TorsionDetected(1);
  NonTorsionCertificate cert;
  cert.bound = bound;
  ECPoint acc = P;
  for (long n = 1; n <= bound; ++n) {
    if (n > 1) acc = ec_add(E, acc, P);
    if (acc.inf) throw TorsionDetected(static_cast<int>(n));
    cert.multiples.push_back(acc);
  }
  return cert;
}

}  // namespace zc
