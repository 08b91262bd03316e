// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <vector>

#include "zerocycle/numberfield.hpp"

namespace zctest {

using namespace zc;

inline FieldPtr cubic_field() {
  return NumberField::create(UniPoly::from_strings({"1", "1", "0", "1"}));
}

inline FieldPtr companion_cubic_field() {
  return NumberField::create(UniPoly::from_strings({"-1", "-1", "0", "1"}));
}

inline FieldPtr rational_field() {
  return NumberField::create(UniPoly::from_strings({"0", "1"}));
}

inline FieldElement elem(const FieldPtr& F, long c0, long c1, long c2) {
  return F->element({Rat(c0), Rat(c1), Rat(c2)});
}

inline Rat rand_rat(std::mt19937_64& rng, long num_bound = 12, long den_bound = 6) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline FieldElement rand_element(const FieldPtr& F, std::mt19937_64& rng,
                                 long num_bound = 12, long den_bound = 6) {
  std::vector<Rat> c;
  c.reserve(F->degree());
  for (int i = 0; i < F->degree(); ++i) c.push_back(rand_rat(rng, num_bound, den_bound));
  return F->element(std::move(c));
}

inline FieldElement rand_nonzero(const FieldPtr& F, std::mt19937_64& rng,
                                 long num_bound = 12, long den_bound = 6) {
  for (;;) {
    FieldElement x = rand_element(F, rng, num_bound, den_bound);
    if (!x.is_zero()) return x;
  }
}

}  // namespace zctest
