// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "zerocycle/curves.hpp"
#include "zerocycle/errors.hpp"
#include "zerocycle/squares.hpp"

#include "support.hpp"

using namespace zctest;

namespace {

// The descent model over the cubic field, with its named points.
struct Model {
  FieldPtr L = cubic_field();
  EvenQuarticModel M = even_quartic_to_weierstrass(Rat(3), Rat(2));
  WeierstrassCurve E = M.curve_over(L);
  ECPoint G = ECPoint::affine(elem(L, 9, -4, 6), elem(L, 26, -12, 18));
  ECPoint T2 = ECPoint::affine(L->zero(), L->zero());

  ECPoint combo(std::mt19937_64& rng, int span = 6) const {
    std::uniform_int_distribution<int> m(-span, span);
    std::uniform_int_distribution<int> t(0, 1);
    ECPoint P = ec_mul(E, m(rng), G);
    if (t(rng)) P = ec_add(E, P, T2);
    return P;
  }
};

}  // namespace

TEST_CASE("even quartic model produces the descent curve") {
  Model m;
  CHECK(m.E.a2() == m.L->from_int(-6));
  CHECK(m.E.a4() == m.L->one());
  CHECK(m.E.a6().is_zero());
  CHECK_FALSE(m.E.cubic_disc().is_zero());
  CHECK(m.E.contains(m.G));
  CHECK(m.E.contains(m.T2));
  CHECK(m.E.contains(ECPoint::infinity()));

  CHECK_THROWS_AS(even_quartic_to_weierstrass(Rat(2), Rat(1)), SingularQuartic);
  CHECK_THROWS_AS(even_quartic_to_weierstrass(Rat(3), Rat(0)), SingularQuartic);
}

TEST_CASE("singular cubics are rejected") {
  auto Q = rational_field();
  CHECK_THROWS_AS(
      WeierstrassCurve::create(Q, Q->zero(), Q->zero(), Q->zero()), SingularCurve);
}

TEST_CASE("known-answer multiples of the generator") {
  Model m;
  auto G2 = ec_mul(m.E, 2, m.G);
  CHECK(G2.x == elem(m.L, 4, -1, 3));
  auto G3 = ec_mul(m.E, 3, m.G);
  CHECK(G3.x == m.L->element({Rat(633, 121), Rat(20, 121), Rat(582, 121)}));
  CHECK(ec_mul(m.E, 2, m.T2).inf);
  CHECK(ec_add(m.E, m.G, m.T2).x == elem(m.L, 1, 0, -2));
  CHECK(ec_mul(m.E, 0, m.G).inf);
}

TEST_CASE("group law properties on seeded combinations") {
  Model m;
  std::mt19937_64 rng(20);
  for (int i = 0; i < 100; ++i) {
    auto P = m.combo(rng, 4);
    auto Q = m.combo(rng, 4);
    auto R = m.combo(rng, 4);
    CHECK(ec_add(m.E, ec_add(m.E, P, Q), R) == ec_add(m.E, P, ec_add(m.E, Q, R)));
  }
  for (int i = 0; i < 30; ++i) {
    auto P = m.combo(rng);
    auto Q = m.combo(rng);
    CHECK(ec_add(m.E, P, Q) == ec_add(m.E, Q, P));
    CHECK(ec_add(m.E, P, ec_neg(m.E, P)).inf);
    CHECK(ec_add(m.E, P, ECPoint::infinity()) == P);
  }
}

TEST_CASE("scalar multiplication agrees with iterated addition") {
  Model m;
  ECPoint acc = ECPoint::infinity();
  for (int n = 1; n <= 9; ++n) {
    acc = ec_add(m.E, acc, m.G);
    CHECK(ec_mul(m.E, n, m.G) == acc);
    CHECK(ec_mul(m.E, -n, m.G) == ec_neg(m.E, acc));
  }
}

TEST_CASE("operands must lie on the curve") {
  Model m;
  auto bogus = ECPoint::affine(m.L->one(), m.L->one());
  REQUIRE_FALSE(m.E.contains(bogus));
  CHECK_THROWS_AS(ec_add(m.E, bogus, m.G), PointNotOnCurve);
  CHECK_THROWS_AS(ec_mul(m.E, 2, bogus), PointNotOnCurve);
}

TEST_CASE("quartic and Weierstrass models are birational") {
  Model m;
  auto x0 = elem(m.L, 1, 0, 1);
  auto W0 = elem(m.L, 2, -1, 2);
  auto G = m.M.forward(x0, W0);
  CHECK(G == m.G);
  auto [u, v] = m.M.inverse(m.E, G);
  CHECK(u == x0);
  CHECK(v == W0);

  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    auto P = m.combo(rng);
    if (P.inf || P.x.is_zero()) continue;
    auto [pu, pv] = m.M.inverse(m.E, P);
    CHECK(m.M.forward(pu, pv) == P);
  }

  // forward rejects pairs that miss the quartic.
  CHECK_THROWS_AS(m.M.forward(x0, x0), PointNotOnCurve);
}

TEST_CASE("phi image lands on the descent curve") {
  Model m;
  auto a = elem(m.L, 9, -4, 6);
  auto D = make_biquadric_twist(m.L, a, UniPoly::from_strings({"1", "0", "1"}),
                                UniPoly::from_strings({"2", "0", "1"}));
  BiquadricPoint dp{elem(m.L, 1, 0, 1), elem(m.L, 0, 0, 1), elem(m.L, 1, 0, -1)};
  REQUIRE(biquadric_contains(D, dp));
  CHECK(phi_image(D, dp, m.M) == m.G);
}

TEST_CASE("connecting homomorphism special values and known classes") {
  Model m;
  auto a = elem(m.L, 9, -4, 6);
  CHECK(delta_phi(m.E, ECPoint::infinity()) == m.L->one());
  CHECK(delta_phi(m.E, m.T2) == m.E.a4());
  CHECK(delta_phi(m.E, m.G) == a);
  CHECK(fe_is_square(delta_phi(m.E, ec_mul(m.E, 2, m.G))).is_square());
}

TEST_CASE("connecting homomorphism is multiplicative up to squares") {
  Model m;
  std::mt19937_64 rng(22);
  for (int i = 0; i < 50; ++i) {
    auto P = m.combo(rng, 3);
    auto Q = m.combo(rng, 3);
    auto prod = delta_phi(m.E, ec_add(m.E, P, Q)) * delta_phi(m.E, P) * delta_phi(m.E, Q);
    CHECK(fe_is_square(prod).is_square());
  }
}

TEST_CASE("reduction and point counts at the named places") {
  Model m;
  PrimeSite s3{m.L, 3, 1}, s11{m.L, 11, 2};
  REQUIRE(good_reduction(m.E, s3));
  REQUIRE(good_reduction(m.E, s11));
  CHECK(ec_count_points(ec_reduce(m.E, s3)) == 4);
  CHECK(ec_count_points(ec_reduce(m.E, s11)) == 12);
  CHECK(torsion_bound(m.E, {s3, s11}) == 12);
}

TEST_CASE("point counts respect the Hasse interval") {
  auto Q = rational_field();
  // y^2 = x^3 + 1 over Q, checked at every odd good place below 60.
  auto E = WeierstrassCurve::create(Q, Q->zero(), Q->zero(), Q->one());
  auto sites = degree_one_sites(Q, 17, {2});
  int used = 0;
  for (const auto& s : sites) {
    if (s.p >= 60 || !good_reduction(E, s)) continue;
    const double n = static_cast<double>(ec_count_points(ec_reduce(E, s)));
    const double p = static_cast<double>(s.p);
    CHECK(std::abs(n - (p + 1)) <= 2.0 * std::sqrt(p) + 1e-9);
    ++used;
  }
  CHECK(used >= 10);
}

TEST_CASE("torsion is detected and certified") {
  Model m;
  auto cert = certify_nontorsion(m.E, m.G, 12);
  CHECK(cert.bound == 12);
  CHECK(cert.multiples.size() == 12);
  for (const auto& P : cert.multiples) CHECK_FALSE(P.inf);

  CHECK_THROWS_AS(certify_nontorsion(m.E, m.T2, 12), TorsionDetected);
  try {
    certify_nontorsion(m.E, m.T2, 12);
  } catch (const TorsionDetected& e) {
    CHECK(e.order == 2);
  }

  // A rational curve with a visible 6-torsion point.
  auto Q = rational_field();
  auto E6 = WeierstrassCurve::create(Q, Q->zero(), Q->zero(), Q->one());
  auto P6 = ECPoint::affine(Q->from_int(2), Q->from_int(3));
  REQUIRE(E6.contains(P6));
  CHECK(ec_mul(E6, 6, P6).inf);
  CHECK_THROWS_AS(certify_nontorsion(E6, P6, 10), TorsionDetected);
}

TEST_CASE("twist containers validate their data") {
  auto L = cubic_field();
  auto g = UniPoly::from_strings({"-729", "-351", "-162", "0", "3"});
  auto p = UniPoly::from_strings({"1", "0", "1"});
  auto q = UniPoly::from_strings({"2", "0", "1"});
  CHECK_THROWS_AS(make_quartic_twist(L, L->zero(), g), ZeroTwist);
  CHECK_THROWS_AS(make_quartic_twist(L, L->one(), p), DegreeMismatch);
  CHECK_THROWS_AS(make_biquadric_twist(L, L->one(), p, p), MathError);
  CHECK_THROWS_AS(make_biquadric_twist(L, L->zero(), p, q), ZeroTwist);

  auto C = make_quartic_twist(L, L->one(), g);
  CHECK_FALSE(quartic_contains(C, QuarticPoint{L->zero(), L->zero()}));
}
