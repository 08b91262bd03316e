// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zerocycle/curves.hpp"
#include "zerocycle/squares.hpp"
#include "zerocycle/surface.hpp"

namespace zc {

// Height box for enumeration: per-coefficient numerators bounded by
// coeff_bound, common denominator bounded by denom_bound, lowest terms.
struct SearchBounds {
  long coeff_bound = 1;
  long denom_bound = 1;
};

struct SearchOptions {
  int jobs = 1;
  // Degree-one places used for the cheap quadratic-residue prefilter.
  // Screening never changes results, only cost.
  int screening_sites = 24;
  SquareBudget budget{};
};

struct SearchReport {
  std::string target;
  SearchBounds bounds;
  std::uint64_t candidates_tested = 0;
  std::vector<QuarticPoint> quartic_points;
  std::vector<BiquadricPoint> biquadric_points;
  std::vector<SurfacePoint> surface_points;
  // Candidates whose exact square test ran out of budget; nonempty forces
  // exhaustive = false.
  std::vector<std::string> unknowns;
  bool exhaustive = true;
  double elapsed_seconds = 0.0;
};

// The full element stream for the bounds, ordered by height, then common
// denominator, then coefficient entries in the order 0, -1, 1, -2, 2, ...
// (constant coefficient first).  Every admissible element appears exactly
// once.  Intended for small boxes; searches use the packed form internally.
std::vector<FieldElement> enumerate_elements(const FieldPtr& field,
                                             const SearchBounds& bounds);

// Points (T, U) on aU^2 = g(T) with T in the stream.
SearchReport search_quartic(const QuarticTwistCurve& C, const SearchBounds& bounds,
                            const SearchOptions& options = {});

// Points (X, Y, Z) on aY^2 = p(X), aZ^2 = q(X) with X in the stream.
SearchReport search_biquadric(const BiquadricTwistCurve& D, const SearchBounds& bounds,
                              const SearchOptions& options = {});

// Surface points over the field: all (x, t) pairs from the stream, testing
// that g(t)p(x) and g(t)q(x) are both squares.
SearchReport search_surface(const BiellipticSurface& S, const FieldPtr& field,
                            const SearchBounds& bounds, const SearchOptions& options = {});

// Square classes delta(P) over all combinations sum c_i G_i, |c_i| <= n_max.
// Deduplicated (no two entries with a square product), always containing the
// trivial class, sorted by representative height.  Realized from the known
// points handed in, not from a descent computation.
std::vector<FieldElement> twist_classes(const WeierstrassCurve& E,
                                        const std::vector<ECPoint>& generators,
                                        int n_max);

// Surface points from odd multiples mG of an infinite-order generator whose
// class is a: each mG maps to quartic coordinates (X, W), lifts to the
// twisted pair via Y = sqrt(p(X)/a), Z = W/(aY), and descends with the fixed
// quartic point.  Returns the first count distinct points.
std::vector<SurfacePoint> density_points(const BiellipticSurface& S,
                                         const WeierstrassCurve& E,
                                         const ECPoint& generator, const FieldElement& a,
                                         const QuarticPoint& c_point, int count,
                                         const SquareBudget& budget = {});

}  // namespace zc
