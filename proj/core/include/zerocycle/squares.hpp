// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "zerocycle/numberfield.hpp"

namespace zc {

enum class Squareness { Square, NonSquare, Unknown };

struct SquareResult {
  Squareness kind = Squareness::Unknown;
  // Canonical square root when kind == Square.
  std::optional<FieldElement> witness;
  // Human-readable reason when kind == NonSquare (embedding index or site).
  std::string certificate;

  bool is_square() const { return kind == Squareness::Square; }
};

struct SquareBudget {
  // Degree-one sites consulted for quadratic-residue screening.
  int screening_sites = 20;
  // Cap on the Hensel modulus p^k, in bits; square-root search gives up
  // beyond this (Unknown from fe_is_square, NotASquare from fe_sqrt).
  unsigned long max_modulus_bits = 65536;
};

// Layered three-valued square test: exact zero, rigorous real-embedding
// signs, quadratic-residue screening at degree-one sites, then an attempted
// exact square root.  Never wrong; Unknown only on budget exhaustion.
SquareResult fe_is_square(const FieldElement& alpha, const SquareBudget& budget = {});

// Exact canonical square root: the root whose first real embedding is >= 0
// (odd-degree fields always have one); in a field with no real embedding,
// the root whose first nonzero coefficient is positive.  Roots are found by
// lifting modulo a completely-split prime, interpolating the coefficient
// vector mod p^k, rational reconstruction, and exact verification.
// Throws NotASquare when alpha is certified or presumed non-square.
FieldElement fe_sqrt(const FieldElement& alpha, const SquareBudget& budget = {});

// Flip the sign of a nonzero root if needed so it satisfies the canonical
// convention above.
FieldElement canonical_root_sign(FieldElement root);

}  // namespace zc
