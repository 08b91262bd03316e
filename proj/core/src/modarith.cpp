// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include "zerocycle/modarith.hpp"

#include <algorithm>

namespace zc {

std::optional<Int> sqrt_mod_p(const Int& a0, const Int& p) {
  Int a = a0 % p;
  if (a < 0) a += p;
  if (a == 0) return Int(0);
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);

  // Tonelli-Shanks.  p - 1 = q * 2^s with q odd.
  Int q = p - 1;
  unsigned long s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  Int z = 2;
  while (legendre(z, p) != -1) ++z;
  Int m(static_cast<long>(s));
  Int c = mod_pow(z, q, p);
  Int t = mod_pow(a, q, p);
  Int r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    Int tt = t;
    long i = 0;
    while (tt != 1) { tt = tt * tt % p; ++i; }
    Int b = c;
    for (long j = 0; j < m.get_si() - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

namespace {

Int horner_mod(const std::vector<Int>& f, const Int& x, const Int& m) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % m;
  if (acc < 0) acc += m;
  return acc;
}

}  // namespace

Int lift_root(const std::vector<Int>& f, const Int& r0, const Int& p, unsigned k) {
  std::vector<Int> df(f.size() > 1 ? f.size() - 1 : 0);
  for (size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * static_cast<long>(i);

  Int r = r0 % p;
  if (r < 0) r += p;
  Int mod = p;
  unsigned prec = 1;
  while (prec < k) {
    unsigned next = std::min(prec * 2, k);
    Int next_mod = mod;
    for (unsigned i = prec; i < next; ++i) next_mod *= p;
    Int fr = horner_mod(f, r, next_mod);
    Int dfr = horner_mod(df, r, next_mod);
    r = (r - fr * mod_inverse(dfr, next_mod)) % next_mod;
    if (r < 0) r += next_mod;
    mod = next_mod;
    prec = next;
  }
  return r;
}

Int lift_sqrt(const Int& a, const Int& s0, const Int& p, unsigned k) {
  Int s = s0 % p;
  if (s < 0) s += p;
  Int mod = p;
  unsigned prec = 1;
  while (prec < k) {
    unsigned next = std::min(prec * 2, k);
    Int next_mod = mod;
    for (unsigned i = prec; i < next; ++i) next_mod *= p;
    Int inv2 = mod_inverse(2, next_mod);
    s = (s + (a % next_mod) * mod_inverse(s, next_mod)) % next_mod * inv2 % next_mod;
    if (s < 0) s += next_mod;
    mod = next_mod;
    prec = next;
  }
  return s;
}

std::optional<Rat> rational_reconstruct(const Int& u0, const Int& m) {
  Int u = u0 % m;
  if (u < 0) u += m;
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int((m - 1) / 2).get_mpz_t());

  Int r0 = m, r1 = u;
  Int t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  Int n = r1, d = t1;
  if (d < 0) { n = -n; d = -d; }
  if (d > bound) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1 && !(n == 0 && d == 1)) return std::nullopt;
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::vector<Int> poly_roots_mod_p(const std::vector<Int>& f, const Int& p) {
  if (!p.fits_ulong_p() || p < 2)
    throw MathError("root scan requires a small positive prime");
  uint64_t pu = p.get_ui();
  std::vector<uint64_t> fu(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Int c = f[i] % p;
    if (c < 0) c += p;
    fu[i] = c.get_ui();
  }
  std::vector<Int> roots;
  for (uint64_t t = 0; t < pu; ++t) {
    uint64_t acc = 0;
    for (auto it = fu.rbegin(); it != fu.rend(); ++it) acc = (mulmod_u64(acc, t, pu) + *it) % pu;
    if (acc == 0) roots.emplace_back(static_cast<unsigned long>(t));
  }
  return roots;
}

namespace {

using FpPoly = std::vector<Int>;  // constant term first, coeffs in [0, p)

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_reduce_coeffs(const std::vector<Int>& f, const Int& p) {
  FpPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    r[i] = f[i] % p;
    if (r[i] < 0) r[i] += p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  fp_trim(c);
  return c;
}

// Remainder of a by monic m.
FpPoly fp_mod(FpPoly a, const FpPoly& m, const Int& p) {
  while (a.size() >= m.size()) {
    Int q = a.back();
    size_t shift = a.size() - m.size();
    if (q != 0)
      for (size_t i = 0; i < m.size(); ++i) {
        a[shift + i] = (a[shift + i] - q * m[i]) % p;
        if (a[shift + i] < 0) a[shift + i] += p;
      }
    a.pop_back();
    fp_trim(a);
  }
  return a;
}

FpPoly fp_powmod(const FpPoly& base, Int e, const FpPoly& m, const Int& p) {
  FpPoly r{Int(1)};
  FpPoly b = fp_mod(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_mod(fp_mul(r, b, p), m, p);
    b = fp_mod(fp_mul(b, b, p), m, p);
    e /= 2;
  }
  return r;
}

FpPoly fp_make_monic(FpPoly a, const Int& p) {
  if (a.empty()) return a;
  Int inv = mod_inverse(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Int& p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(std::move(a), fp_make_monic(b, p), p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_make_monic(std::move(a), p);
}

FpPoly fp_derivative(const FpPoly& a, const Int& p) {
  if (a.size() <= 1) return {};
  FpPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<long>(i) % p;
  fp_trim(d);
  return d;
}

}  // namespace

bool poly_irreducible_mod_p(const std::vector<Int>& f, const Int& p) {
  FpPoly fp = fp_reduce_coeffs(f, p);
  if (fp.size() != f.size()) return false;  // degree dropped mod p
  size_t n = fp.size() - 1;
  if (n == 0) return false;
  fp = fp_make_monic(std::move(fp), p);
  if (n == 1) return true;

  if (fp_gcd(fp, fp_derivative(fp, p), p).size() > 1) return false;

  // f irreducible of degree n iff x^(p^n) = x mod f and, for each prime
  // divisor q of n, gcd(x^(p^(n/q)) - x, f) is constant.
  FpPoly x{Int(0), Int(1)};
  FpPoly h = x;
  std::vector<FpPoly> frob(n + 1);  // frob[d] = x^(p^d) mod f
  frob[0] = x;
  for (size_t d = 1; d <= n; ++d) {
    h = fp_powmod(h, p, fp, p);
    frob[d] = h;
  }
  if (frob[n] != x) return false;
  for (size_t q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    bool q_prime = true;
    for (size_t d = 2; d * d <= q; ++d)
      if (q % d == 0) { q_prime = false; break; }
    if (!q_prime) continue;
    FpPoly g = frob[n / q];
    if (g.empty()) g = FpPoly{Int(0)};
    // g - x
    FpPoly diff = g;
    if (diff.size() < 2) diff.resize(2, Int(0));
    diff[1] = (diff[1] - 1) % p;
    if (diff[1] < 0) diff[1] += p;
    fp_trim(diff);
    if (fp_gcd(fp, diff, p).size() > 1) return false;
  }
  return true;
}

}  // namespace zc
