// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zerocycle/rational.hpp"

namespace zc {

// Dense univariate polynomial over Q, coefficients stored constant term
// first.  The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rat& a);
  // x^k
  static UniPoly monomial(int k, const Rat& a = 1);
  static UniPoly from_strings(const std::vector<std::string>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  // Coefficient of x^k (zero beyond the degree).
  const Rat& coeff(int k) const;
  const Rat& leading() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

  Rat eval(const Rat& x) const;
  UniPoly derivative() const;
  // Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
  UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }

  // Monic gcd.
  static UniPoly gcd(UniPoly a, UniPoly b);
  // g = gcd(a,b) monic, with g = s*a + t*b.
  static void xgcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t);

  static Rat resultant(const UniPoly& a, const UniPoly& b);
  Rat discriminant() const;

  bool is_squarefree() const;
  // Rational roots (each listed once).
  std::vector<Rat> rational_roots() const;
  // True iff irreducible over Q; complete for degree <= 3, where it reduces
  // to the absence of rational roots.  Degree >= 4 callers go through the
  // number-field constructor, which has its own policy.
  bool irreducible_deg_le3() const;

  // Number of distinct real roots in (a, b], by Sturm's theorem.
  int sturm_count(const Rat& a, const Rat& b) const;
  int real_root_count() const;
  // Disjoint isolating intervals (a_i, b_i], one real root each, ascending.
  std::vector<std::pair<Rat, Rat>> isolate_real_roots() const;
  // A bound M with every real root in (-M, M].
  Rat root_bound() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

inline UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

}  // namespace zc
