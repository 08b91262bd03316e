// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include "zerocycle/rational.hpp"

namespace zc {

Int squarefree_part(const Int& n, unsigned long trial_bound) {
  if (n == 0) return 0;
  Int rest = abs(n);
  Int out = (n < 0) ? -1 : 1;

  // Strip small prime factors, keeping each prime mod 2.
  Int p = 2;
  while (rest > 1 && p <= trial_bound) {
    if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      long e = 0;
      do {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++e;
      } while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()));
      if (e % 2 != 0) out *= p;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (rest > 1 && p * p > rest) {
      // Rough cofactor is now prime.
      out *= rest;
      rest = 1;
    }
  }

  // Remaining rough cofactor has no prime factor below the trial bound;
  // peel off a perfect-square shape, otherwise treat it as squarefree.
  if (rest > 1) {
    if (is_perfect_square(rest)) {
      rest = 1;
    }
    out *= rest;
  }
  return out;
}

}  // namespace zc
