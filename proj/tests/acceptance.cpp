// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one self-contained check per shipped claim, one PASS/FAIL
// line each, nonzero exit if any fails.  Every tolerance and time budget is
// pinned here; all arithmetic is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "zerocycle/curves.hpp"
#include "zerocycle/errors.hpp"
#include "zerocycle/json_io.hpp"
#include "zerocycle/search.hpp"
#include "zerocycle/squares.hpp"
#include "zerocycle/surface.hpp"

#include "support.hpp"

using namespace zctest;

namespace {

// Wall-clock budgets per criterion, seconds.
constexpr double kBudget[] = {
    1.0,    // 1 witness point verification
    1.0,    // 2 twist-class identity
    1.0,    // 3 generator on the quartic model
    5.0,    // 4 connecting-homomorphism classes
    30.0,   // 5 non-torsion certificate
    600.0,  // 6 quartic fiber search
    5.0,    // 7 lift/descend round trip
    1.0,    // 8 zero-cycle of degree one
    600.0,  // 9 exhaustive negative searches
    300.0,  // 10 fiber density
    600.0,  // 11 property suites
};

struct Fail : std::runtime_error {
  explicit Fail(const std::string& what) : std::runtime_error(what) {}
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Fail(what);
}

// Shared exact data: the standard surface, field, curve and witness values.
struct Data {
  FieldPtr L = cubic_field();
  FieldPtr Q = rational_field();
  BiellipticSurface S = BiellipticSurface::standard(Q);
  EvenQuarticModel M = even_quartic_to_weierstrass(Rat(3), Rat(2));
  WeierstrassCurve E = M.curve_over(L);

  FieldElement x0 = elem(L, 1, 0, 1);
  FieldElement y0 = elem(L, 4851, -2133, 3357);
  FieldElement z0 = elem(L, 4158, -2025, 2826);
  FieldElement t0 = elem(L, -54, 24, -42);
  FieldElement a = elem(L, 9, -4, 6);     // 6 theta^2 - 4 theta + 9
  FieldElement px0 = elem(L, 2, -1, 1);   // p(x0) = theta^2 - theta + 2
  FieldElement W0 = elem(L, 2, -1, 2);    // 2 theta^2 - theta + 2
  FieldElement U0 = elem(L, 2133, -1224, 1494);
  SurfacePoint P{SurfaceModel::A, x0, y0, z0, t0};
  ECPoint G = ECPoint::affine(a, elem(L, 26, -12, 18));
  ECPoint T2 = ECPoint::affine(L->zero(), L->zero());
};

void c1_witness_point(const Data& d) {
  expect(surface_contains(d.S, d.P), "witness point rejected by exact check");
  SurfacePoint off = d.P;
  off.y = off.y + Rat(1);
  expect(!surface_contains(d.S, off), "perturbed point accepted");
}

void c2_twist_class_identity(const Data& d) {
  auto r = fe_is_square(d.a * d.px0.inv());
  expect(r.is_square(), "a / p(x0) is not a square");
  const FieldElement w = elem(d.L, 1, -1, 1);  // theta^2 - theta + 1
  expect(*r.witness == w || *r.witness == -w, "witness is not +-(theta^2 - theta + 1)");
  expect(d.px0 * w * w == d.a, "a != p(x0) * (theta^2 - theta + 1)^2");
}

void c3_generator_on_quartic_model(const Data& d) {
  expect(d.W0 * d.W0 == d.px0 * elem(d.L, 3, -1, 1), "W0^2 != p(x0) q(x0)");
  const ECPoint img = d.M.forward(d.x0, d.W0);
  expect(!img.inf && img.x == d.a, "Weierstrass image x-coordinate is not a");
  expect(img == d.G, "image differs from the recorded generator");
  expect(d.E.contains(d.G), "generator not on the curve");
}

void c4_delta_classes(const Data& d) {
  expect(fe_is_square(delta_phi(d.E, d.G) * d.a).is_square(),
         "delta(G) not in the class of a");
  expect(fe_is_square(delta_phi(d.E, ec_mul(d.E, 2, d.G))).is_square(),
         "delta(2G) not trivial");
  expect(fe_is_square(delta_phi(d.E, d.G)).kind == Squareness::NonSquare,
         "delta(G) unexpectedly trivial");
}

void c5_nontorsion_certificate(const Data& d) {
  PrimeSite s3{d.L, 3, 1}, s11{d.L, 11, 2};
  expect(ec_count_points(ec_reduce(d.E, s3)) == 4, "#E(F_3) != 4");
  const Int bound = torsion_bound(d.E, {s3, s11});
  expect(bound == 12, "torsion bound != 12");
  const auto cert = certify_nontorsion(d.E, d.G, bound.get_si());
  expect(cert.multiples.size() == 12, "certificate does not cover n = 1..12");
}

void c6_quartic_fiber_search(const Data& d) {
  expect(fe_is_square(eval_at(d.S.g, d.t0) * d.a).is_square(), "g(t0) a is not a square");
  const auto C = make_quartic_twist(d.L, d.a, d.S.g);
  const auto rep = search_quartic(C, SearchBounds{54, 1});
  expect(rep.exhaustive && rep.unknowns.empty(), "search is not exhaustive");
  expect(rep.quartic_points.size() == 1, "expected exactly one fiber");
  expect(rep.quartic_points[0].T == d.t0, "search did not find T = t0");
  expect(rep.quartic_points[0].U == d.U0 || rep.quartic_points[0].U == -d.U0,
         "witness U is not +-U0");
}

void c7_round_trip(const Data& d) {
  const SurfacePoint B = model_a_to_b(d.S, d.P);
  const auto [ga, cp, dp] = lift_point(d.S, B);
  const SurfacePoint back = descend_point(d.S, ga, cp, dp);
  expect(back.x == B.x && back.y == B.y && back.z == B.z && back.t == B.t,
         "lift/descend is not the identity");
  const SurfacePoint backA = model_b_to_a(d.S, back);
  expect(backA.x == d.P.x && backA.y == d.P.y && backA.z == d.P.z && backA.t == d.P.t,
         "model B -> A does not recover the witness");
  const FieldElement Y1 = fe_sqrt(d.px0 * d.a.inv());
  const FieldElement Z1 = d.W0 * (d.a * Y1).inv();
  const SurfacePoint sp =
      descend_point(d.S, d.a, QuarticPoint{d.t0, d.U0}, BiquadricPoint{d.x0, Y1, Z1});
  expect(sp.y == B.y && sp.z == B.z, "twist descent misses the witness orbit");
}

void c8_zero_cycle(const Data& d) {
  const ClosedPoint P4 = degree_four_point(d.S, Rat(0), Rat(0));
  expect(P4.degree() == 4, "degree-4 point has the wrong degree");
  const ClosedPoint P3 = make_closed_point(d.L, d.P);
  expect(P3.degree() == 3, "witness closed point has the wrong degree");
  expect(zero_cycle_of_degree_one(P3, P4).degree() == 1, "cycle degree != 1");
}

void c9_negative_searches(const Data& d) {
  const auto r1 = search_surface(d.S, d.Q, SearchBounds{30, 1});
  expect(r1.surface_points.empty() && r1.exhaustive && r1.unknowns.empty(),
         "rational box not certified empty");
  const auto r2 = search_surface(d.S, companion_cubic_field(), SearchBounds{20, 4});
  expect(r2.surface_points.empty() && r2.exhaustive && r2.unknowns.empty(),
         "companion cubic box not certified empty");
}

void c10_fiber_density(const Data& d) {
  const auto pts = density_points(d.S, d.E, d.G, d.a, QuarticPoint{d.t0, d.U0}, 5);
  expect(pts.size() == 5, "expected 5 points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    expect(surface_contains(d.S, pts[i]), "density point off the surface");
    for (std::size_t j = 0; j < i; ++j)
      expect(!(pts[i].x == pts[j].x), "density points share an x-coordinate");
  }
}

void c11_property_suites(const Data& d) {
  // Field axioms, 500 seeded cases.
  {
    std::mt19937_64 rng(0xC0FFEE);
    for (int i = 0; i < 500; ++i) {
      auto x = rand_element(d.L, rng);
      auto y = rand_element(d.L, rng);
      auto z = rand_element(d.L, rng);
      expect((x + y) + z == x + (y + z), "addition not associative");
      expect((x * y) * z == x * (y * z), "multiplication not associative");
      expect(x * (y + z) == x * y + x * z, "distributivity fails");
      expect(x * y == y * x, "multiplication not commutative");
      if (!z.is_zero()) expect((x / z) * z == x, "division round trip fails");
    }
  }
  // Square-root round trips, 500 cases.
  {
    std::mt19937_64 rng(0xBEEF);
    for (int i = 0; i < 500; ++i) {
      auto x = rand_nonzero(d.L, rng, 9, 4);
      auto sq = x * x;
      auto root = fe_sqrt(sq);
      expect(root * root == sq, "sqrt round trip fails");
      auto r = fe_is_square(sq);
      expect(r.is_square() && *r.witness == root, "is_square disagrees with sqrt");
    }
  }
  // Group-law associativity, 100 seeded triples.
  {
    std::mt19937_64 rng(0xABCD);
    std::uniform_int_distribution<int> m(-4, 4), t(0, 1);
    auto combo = [&](int k, int e) {
      ECPoint P = ec_mul(d.E, k, d.G);
      if (e) P = ec_add(d.E, P, d.T2);
      return P;
    };
    for (int i = 0; i < 100; ++i) {
      auto P = combo(m(rng), t(rng));
      auto Q = combo(m(rng), t(rng));
      auto R = combo(m(rng), t(rng));
      expect(ec_add(d.E, ec_add(d.E, P, Q), R) == ec_add(d.E, P, ec_add(d.E, Q, R)),
             "group law not associative");
    }
  }
  // Connecting homomorphism multiplicativity, 50 seeded pairs.
  {
    std::mt19937_64 rng(0x5EED);
    std::uniform_int_distribution<int> m(-3, 3), t(0, 1);
    for (int i = 0; i < 50; ++i) {
      ECPoint P = ec_mul(d.E, m(rng), d.G);
      if (t(rng)) P = ec_add(d.E, P, d.T2);
      ECPoint Q = ec_mul(d.E, m(rng), d.G);
      if (t(rng)) Q = ec_add(d.E, Q, d.T2);
      auto prod =
          delta_phi(d.E, ec_add(d.E, P, Q)) * delta_phi(d.E, P) * delta_phi(d.E, Q);
      expect(fe_is_square(prod).is_square(), "delta not multiplicative up to squares");
    }
  }
  // Worker-count determinism of search reports.
  {
    SearchOptions one, eight;
    one.jobs = 1;
    eight.jobs = 8;
    auto F = companion_cubic_field();
    auto r1 = search_surface(d.S, F, SearchBounds{6, 2}, one);
    auto r8 = search_surface(d.S, F, SearchBounds{6, 2}, eight);
    expect(search_report_to_json(r1).dump() == search_report_to_json(r8).dump(),
           "reports differ across worker counts");
    auto e1 = enumerate_elements(d.L, SearchBounds{2, 2});
    auto e2 = enumerate_elements(d.L, SearchBounds{2, 2});
    expect(e1.size() == e2.size(), "enumeration size unstable");
    for (std::size_t i = 0; i < e1.size(); ++i)
      expect(e1[i] == e2[i], "enumeration order unstable");
  }
}

}  // namespace

int main() {
  const Data d;
  struct Criterion {
    const char* name;
    std::function<void(const Data&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"witness point verifies on the surface", c1_witness_point},
      {"twist parameter equals p(x0) times a square", c2_twist_class_identity},
      {"generator maps to Weierstrass x = a", c3_generator_on_quartic_model},
      {"connecting homomorphism sends G to a, 2G to 1", c4_delta_classes},
      {"torsion bound 12 and non-torsion certificate", c5_nontorsion_certificate},
      {"bounded quartic search finds the fiber at t0", c6_quartic_fiber_search},
      {"lift/descend round trip recovers the witness", c7_round_trip},
      {"zero-cycle of degree one assembled", c8_zero_cycle},
      {"negative searches certified empty", c9_negative_searches},
      {"five distinct fiber points produced", c10_fiber_density},
      {"property suites (axioms, sqrt, group law, delta, determinism)",
       c11_property_suites},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string message;
    bool ok = true;
    try {
      criteria[i].body(d);
    } catch (const std::exception& e) {
      ok = false;
      message = e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
    if (ok && dt > kBudget[i]) {
      ok = false;
      message = "exceeded time budget of " + std::to_string(kBudget[i]) + " s";
    }
    std::printf("[%s] %2zu. %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, dt, message.empty() ? "" : " -- ", message.c_str());
    if (!ok) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
