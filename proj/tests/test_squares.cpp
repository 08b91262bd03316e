// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zerocycle/errors.hpp"
#include "zerocycle/numberfield.hpp"
#include "zerocycle/squares.hpp"

#include "support.hpp"

using namespace zctest;

TEST_CASE("known squares and non-squares in the cubic field") {
  auto L = cubic_field();
  auto th = L->generator();
  auto px0 = elem(L, 2, -1, 1);  // theta^2 - theta + 2
  auto a = elem(L, 9, -4, 6);

  // a = px0 * (theta^2 - theta + 1)^2, so a/px0 is the square of [1,-1,1].
  auto r = fe_is_square(a * px0.inv());
  REQUIRE(r.is_square());
  CHECK(*r.witness == elem(L, 1, -1, 1));

  auto w = fe_is_square(px0 * elem(L, 3, -1, 1));
  REQUIRE(w.is_square());
  CHECK(*w.witness == elem(L, 2, -1, 2));

  CHECK(fe_is_square(a).kind == Squareness::NonSquare);
  CHECK(fe_is_square(th).kind == Squareness::NonSquare);
  CHECK(fe_is_square(L->from_int(-1)).kind == Squareness::NonSquare);
  CHECK(fe_is_square(L->from_int(49)).is_square());
  CHECK(fe_is_square(L->zero()).is_square());
  CHECK(fe_is_square(L->zero()).witness->is_zero());

  // g(t0) * a is a square: the twisted quartic has a point over t0.
  auto gt0 = elem(L, 119199033, -55496016, 81345870);
  CHECK(fe_is_square(gt0 * a).is_square());
}

TEST_CASE("non-square certificates name a reason") {
  auto L = cubic_field();
  auto r = fe_is_square(L->generator());
  REQUIRE(r.kind == Squareness::NonSquare);
  CHECK_FALSE(r.certificate.empty());
  // Negative at the unique real embedding: rejected by sign, not by a site.
  auto s = fe_is_square(L->from_int(-4));
  REQUIRE(s.kind == Squareness::NonSquare);
  CHECK_FALSE(s.certificate.empty());
}

TEST_CASE("sqrt round trips on seeded squares") {
  auto L = cubic_field();
  std::mt19937_64 rng(10);
  for (int i = 0; i < 500; ++i) {
    auto x = rand_nonzero(L, rng);
    auto sq = x * x;
    auto root = fe_sqrt(sq);
    CHECK(root * root == sq);
    CHECK((root == x || root == -x));
    CHECK(sign_at_real_embedding(root) >= 0);

    auto r = fe_is_square(sq);
    REQUIRE(r.is_square());
    CHECK(*r.witness == root);
  }
}

TEST_CASE("multiplying by theta leaves the square classes") {
  auto L = cubic_field();
  auto th = L->generator();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto x = rand_nonzero(L, rng);
    CHECK(fe_is_square(th * x * x).kind == Squareness::NonSquare);
  }
}

TEST_CASE("rational square decisions") {
  auto Q = rational_field();
  auto r = fe_is_square(Q->from_rat(Rat(4, 9)));
  REQUIRE(r.is_square());
  CHECK(r.witness->rat_value() == Rat(2, 3));
  CHECK(fe_is_square(Q->from_int(2)).kind == Squareness::NonSquare);
  CHECK(fe_is_square(Q->from_int(-9)).kind == Squareness::NonSquare);
  CHECK(fe_sqrt(Q->from_rat(Rat(49, 4))).rat_value() == Rat(7, 2));
}

TEST_CASE("sqrt rejects certified non-squares") {
  auto L = cubic_field();
  CHECK_THROWS_AS(fe_sqrt(L->generator()), NotASquare);
  CHECK_THROWS_AS(fe_sqrt(L->from_int(-1)), NotASquare);
}

TEST_CASE("canonical root sign convention") {
  auto L = cubic_field();
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    auto x = rand_nonzero(L, rng);
    auto canon = canonical_root_sign(x);
    CHECK((canon == x || canon == -x));
    CHECK(sign_at_real_embedding(canon) >= 0);
  }
}

TEST_CASE("budget exhaustion reports unknown, never a wrong answer") {
  auto L = cubic_field();
  // A square with coefficients far beyond what a 16-bit modulus can
  // reconstruct: the layered test must answer Unknown, not NonSquare.
  auto big = L->element({Rat("123456789123456789123456789"),
                         Rat("-987654321987654321987654321"),
                         Rat("555555555555555555555555555")});
  auto sq = big * big;
  SquareBudget tiny;
  tiny.max_modulus_bits = 16;
  CHECK(fe_is_square(sq, tiny).kind == Squareness::Unknown);
  CHECK_THROWS_AS(fe_sqrt(sq, tiny), NotASquare);

  // The default budget resolves the same element exactly.
  auto r = fe_is_square(sq);
  REQUIRE(r.is_square());
  CHECK(*r.witness * *r.witness == sq);
}
