// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "zerocycle/bigfloat.hpp"
#include "zerocycle/numberfield.hpp"

namespace zc {

// One archimedean value of an element: a real embedding (im = 0) or one
// member of a complex-conjugate pair.
struct EmbeddingValue {
  BigFloat re, im;
  bool is_real = false;
};

// Roots of the defining polynomial at a working precision: real roots first
// (ascending), then complex roots ordered by (im, re).
struct RootApproximations {
  mpfr_prec_t prec = 0;
  int n_real = 0;
  std::vector<EmbeddingValue> roots;
};

// Field root cache accessor; refines monotonically, never drops precision.
std::shared_ptr<const RootApproximations> root_approximations(const NumberField& F,
                                                              mpfr_prec_t prec);

// One value per root of f, in the root order above, each accurate to about
// 2^(-prec) (internal working precision adds generous guard bits).
std::vector<EmbeddingValue> fe_embeddings(const FieldElement& alpha, unsigned prec);

}  // namespace zc
