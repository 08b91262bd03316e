// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "zerocycle/unipoly.hpp"

namespace zc {

class FieldElement;
struct RootApproximations;

// K = Q[x]/(f) for monic irreducible integer f, elements in the power basis
// 1, theta, theta^2, ...  Degree 1 gives K = Q.  Instances are immutable and
// shared; construct through create().
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  // Verifies irreducibility completely for degree <= 3 (rational-root test)
  // and by mod-p screening for degree >= 4.  Screening proves irreducibility
  // when it succeeds but cannot always succeed (e.g. x^4 + 6x^2 + 1 factors
  // modulo every prime); callers who know their polynomial is irreducible
  // pass assert_irreducible to skip the inconclusive screen.
  static std::shared_ptr<const NumberField> create(const UniPoly& f,
                                                   bool assert_irreducible = false);

  int degree() const { return n_; }
  const UniPoly& defining_poly() const { return f_; }
  // Polynomial discriminant of the defining polynomial (not compensated to
  // the field discriminant; for the monogenic fields in use they agree).
  const Int& discriminant() const { return disc_; }
  bool is_rational() const { return n_ == 1; }

  FieldElement element(std::vector<Rat> coeffs) const;
  FieldElement from_rat(const Rat& r) const;
  FieldElement from_int(long v) const;
  FieldElement zero() const;
  FieldElement one() const;
  // The class of x, i.e. the generator theta.
  FieldElement generator() const;

  // Number of real roots of f, and isolating intervals (lo, hi) per real
  // root, ascending, each refined to width <= max_width.  Intervals narrow
  // monotonically across calls (cached).  For degree 1 the interval is the
  // exact root twice.
  std::vector<std::pair<Rat, Rat>> real_root_intervals(const Rat& max_width) const;
  int real_root_count() const;

  // Multiplication-reduction table: row j holds theta^(degree+j) in the
  // power basis, j = 0 .. degree-2.
  const std::vector<std::vector<Rat>>& power_table() const { return powtab_; }

  // Cache slot for floating root approximations, managed by the embedding
  // code; refined monotonically.
  mutable std::mutex emb_mu_;
  mutable std::shared_ptr<const RootApproximations> emb_cache_;

 private:
  NumberField(UniPoly f, Int disc);

  UniPoly f_;
  int n_;
  Int disc_;
  std::vector<std::vector<Rat>> powtab_;

  mutable std::mutex real_mu_;
  mutable std::vector<std::pair<Rat, Rat>> real_intervals_;
  mutable bool real_isolated_ = false;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// True when the two handles denote the same field (same object or equal
// defining polynomial), so fixture-loaded copies interoperate.
bool same_field(const NumberField& a, const NumberField& b);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rat> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(int i) const { return c_.at(i); }
  int degree() const { return static_cast<int>(c_.size()); }

  bool is_zero() const;
  // True when all power-basis coefficients above the constant vanish.
  bool is_rational() const;
  const Rat& rat_value() const;  // requires is_rational()

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator*(const Rat& s) const;
  FieldElement operator+(const Rat& s) const;
  FieldElement operator-(const Rat& s) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inv() const;
  FieldElement pow(long e) const;

  // Norm, trace and minimal polynomial via the characteristic polynomial of
  // multiplication by this element on the power basis.
  Rat norm() const;
  Rat trace() const;
  UniPoly minpoly() const;
  UniPoly char_poly() const;

  // Naive height: clear coefficients to a common denominator d, then take
  // max(d, max |numerator|).
  Int height() const;

  std::string str(const std::string& var = "t") const;

 private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  std::vector<Rat> c_;
};

inline FieldElement operator*(const Rat& s, const FieldElement& a) { return a * s; }

// Horner evaluation of a rational polynomial at a field element.
FieldElement eval_at(const UniPoly& poly, const FieldElement& alpha);

// Exact sign (-1, 0, +1) of the image of alpha under the index-th real
// embedding (ascending order), decided by interval arithmetic over Q with
// automatic refinement.  index defaults to the first real embedding.
int sign_at_real_embedding(const FieldElement& alpha, int index = 0);

// A degree-one prime of the field: a rational prime p not dividing the
// defining-polynomial discriminant together with a root of f mod p.
struct PrimeSite {
  FieldPtr field;
  unsigned long p = 0;
  unsigned long root = 0;
};

// The count smallest usable primes (p prime, p not dividing disc f, p not in
// avoid, f has a root mod p), each paired with its smallest root.
std::vector<PrimeSite> degree_one_sites(const FieldPtr& field, int count,
                                        const std::vector<unsigned long>& avoid = {});

// Reduction at a site: substitute theta -> root and reduce mod p.  Throws
// BadReduction when p divides a coefficient denominator.
unsigned long reduce_at(const FieldElement& alpha, const PrimeSite& site);

}  // namespace zc
