// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zerocycle/rational.hpp"

namespace zc {

// ---- arbitrary-precision modular helpers -------------------------------

inline Int mod_pow(const Int& base, const Int& exp, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int mod_inverse(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw MathError("element not invertible modulo m");
  return r;
}

// Legendre symbol (a/p) for odd prime p.
inline int legendre(const Int& a, const Int& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

// Square root mod an odd prime (Tonelli-Shanks); nullopt for non-residues.
std::optional<Int> sqrt_mod_p(const Int& a, const Int& p);

// Newton lifts: given r with f(r) = 0 mod p and f'(r) invertible, lift to a
// root mod p^k.  f has integer coefficients, constant term first.
Int lift_root(const std::vector<Int>& f, const Int& r, const Int& p, unsigned k);

// Given s^2 = a mod p (p odd, s nonzero), lift to t with t^2 = a mod p^k.
Int lift_sqrt(const Int& a, const Int& s, const Int& p, unsigned k);

// Rational reconstruction: the unique n/d with u*d = n mod m, |n| <= B,
// 0 < d <= m/(2B) coprime to m, using the balanced bound B = sqrt(m/2).
std::optional<Rat> rational_reconstruct(const Int& u, const Int& m);

// ---- polynomials over F_p (coefficients constant term first) -----------

// All distinct roots of f mod p, found by scanning; intended for small p.
std::vector<Int> poly_roots_mod_p(const std::vector<Int>& f, const Int& p);

// True iff f mod p stays degree deg(f), squarefree, and irreducible.
bool poly_irreducible_mod_p(const std::vector<Int>& f, const Int& p);

// ---- machine-word helpers for hot loops --------------------------------

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Legendre symbol by Euler's criterion; p an odd prime, returns -1/0/1.
inline int legendre_u64(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  uint64_t e = powmod_u64(a, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

}  // namespace zc
