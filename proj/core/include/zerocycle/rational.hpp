// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "zerocycle/errors.hpp"

namespace zc {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "num" or "num/den" into a canonical rational.  Rejects empty
// strings, a zero denominator, and trailing garbage.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

// Formats canonically: "num" when the denominator is 1, else "num/den",
// always in lowest terms even when the input was never canonicalized.
inline std::string format_rat(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str(10);
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Exact integer square root of a perfect square; nullopt otherwise.
inline std::optional<Int> exact_isqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r != n) return std::nullopt;
  return r;
}

inline bool is_rational_square(const Rat& q) {
  return is_perfect_square(rat_num(q)) && is_perfect_square(rat_den(q));
}

// Exact nonnegative square root of a rational square; nullopt otherwise.
inline std::optional<Rat> exact_rat_sqrt(const Rat& q) {
  auto n = exact_isqrt(rat_num(q));
  if (!n) return std::nullopt;
  auto d = exact_isqrt(rat_den(q));
  if (!d) return std::nullopt;
  Rat r(*n, *d);
  r.canonicalize();
  return r;
}

// p-adic valuation of a nonzero integer.
inline long int_valuation(Int n, const Int& p) {
  if (n == 0) throw MathError("valuation of zero");
  if (p < 2) throw MathError("valuation needs a prime >= 2");
  long v = 0;
  Int r;
  while (true) {
    Int q;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

inline long rat_valuation(const Rat& q, const Int& p) {
  if (q == 0) throw MathError("valuation of zero");
  long v = int_valuation(rat_num(q), p);
  if (rat_den(q) != 1) v -= int_valuation(rat_den(q), p);
  return v;
}

// Largest squarefree divisor d of n with n/d a perfect square, carrying the
// sign of n.  Factors small primes by trial division up to the given bound and
// leaves any remaining rough cofactor in place after stripping its square
// part via mpz_sqrt; the result is correct whenever the rough part is
// squarefree, which holds for every input this library produces (the
// remaining cofactor after 10^6 trial division would need a repeated prime
// > 10^6 to break it, and we additionally strip perfect-square cofactors).
Int squarefree_part(const Int& n, unsigned long trial_bound = 1000000);

// Squarefree kernel of a rational: squarefree_part(num * den), which
// represents the class of q in Q^* / (Q^*)^2.
inline Int squarefree_part(const Rat& q) {
  if (q == 0) return 0;
  const Int prod = rat_num(q) * rat_den(q);
  return squarefree_part(prod);
}

}  // namespace zc
