// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include "zerocycle/numberfield.hpp"

#include <algorithm>
#include <sstream>

#include "zerocycle/errors.hpp"
#include "zerocycle/modarith.hpp"

namespace zc {

NumberField::NumberField(UniPoly f, Int disc)
    : f_(std::move(f)), n_(f_.degree()), disc_(std::move(disc)) {
  // Rows of theta^(n+j), j = 0..n-2, in the power basis; theta^n is read off
  // the defining relation and higher powers follow by shift-and-reduce.
  if (n_ >= 2) {
    std::vector<Rat> row(n_);
    for (int i = 0; i < n_; ++i) row[i] = -f_.coeff(i);
    powtab_.push_back(row);
    for (int j = 1; j <= n_ - 2; ++j) {
      std::vector<Rat> next(n_, Rat(0));
      const std::vector<Rat>& prev = powtab_.back();
      Rat top = prev[n_ - 1];
      for (int i = 0; i + 1 < n_; ++i) next[i + 1] = prev[i];
      if (top != 0)
        for (int i = 0; i < n_; ++i) next[i] += top * powtab_[0][i];
      powtab_.push_back(std::move(next));
    }
  }
}

std::shared_ptr<const NumberField> NumberField::create(const UniPoly& f,
                                                       bool assert_irreducible) {
  if (f.degree() < 1) throw MathError("defining polynomial needs degree >= 1");
  if (!f.is_monic()) throw NotMonic();
  for (const auto& c : f.coeffs())
    if (rat_den(c) != 1)
      throw MathError("defining polynomial must have integer coefficients");

  Rat disc_q = f.discriminant();
  Int disc = rat_num(disc_q);
  if (f.degree() > 1) {
    if (disc == 0) throw ReducibleDetected("defining polynomial has a repeated factor");
    if (!f.rational_roots().empty())
      throw ReducibleDetected("defining polynomial has a rational root");
    if (f.degree() >= 4 && !assert_irreducible) {
      std::vector<Int> z(f.coeffs().size());
      for (size_t i = 0; i < z.size(); ++i) z[i] = rat_num(f.coeff(static_cast<int>(i)));
      bool certified = false;
      Int p = 2;
      int tried = 0;
      while (tried < 25) {
        if (disc % p != 0) {
          ++tried;
          if (poly_irreducible_mod_p(z, p)) { certified = true; break; }
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      }
      if (!certified)
        throw ReducibleDetected(
            "mod-p irreducibility screening was inconclusive; pass "
            "assert_irreducible for a polynomial known to be irreducible");
    }
  }
  return std::shared_ptr<const NumberField>(new NumberField(f, disc));
}

FieldElement NumberField::element(std::vector<Rat> coeffs) const {
  if (static_cast<int>(coeffs.size()) > n_)
    throw DegreeMismatch("coefficient vector longer than field degree");
  coeffs.resize(n_, Rat(0));
  for (auto& c : coeffs) c.canonicalize();
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement NumberField::from_rat(const Rat& r) const {
  std::vector<Rat> c(n_, Rat(0));
  c[0] = r;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_int(long v) const { return from_rat(Rat(v)); }
FieldElement NumberField::zero() const { return from_rat(0); }
FieldElement NumberField::one() const { return from_rat(1); }

FieldElement NumberField::generator() const {
  if (n_ == 1) return from_rat(-f_.coeff(0));
  std::vector<Rat> c(n_, Rat(0));
  c[1] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

std::vector<std::pair<Rat, Rat>> NumberField::real_root_intervals(const Rat& max_width) const {
  std::lock_guard<std::mutex> lock(real_mu_);
  if (!real_isolated_) {
    if (n_ == 1) {
      Rat r = -f_.coeff(0);
      real_intervals_.emplace_back(r, r);
    } else {
      for (auto& [a, b] : f_.isolate_real_roots()) real_intervals_.emplace_back(a, b);
    }
    real_isolated_ = true;
  }
  if (n_ > 1) {
    for (auto& [lo, hi] : real_intervals_) {
      int slo = sgn(f_.eval(lo));
      while (hi - lo > max_width) {
        Rat mid = (lo + hi) / 2;
        int sm = sgn(f_.eval(mid));
        // Roots are irrational for irreducible degree >= 2, so sm != 0.
        if (sm == slo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
  }
  return real_intervals_;
}

int NumberField::real_root_count() const {
  return static_cast<int>(real_root_intervals(Rat(1)).size());
}

bool same_field(const NumberField& a, const NumberField& b) {
  if (&a == &b) return true;
  return a.defining_poly() == b.defining_poly();
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!field_ || !o.field_ || !same_field(*field_, *o.field_)) throw FieldMismatch();
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const Rat& FieldElement::rat_value() const {
  if (!is_rational()) throw MathError("element is not rational");
  return c_[0];
}

FieldElement FieldElement::operator-() const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] - o.c_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  int n = static_cast<int>(c_.size());
  std::vector<Rat> conv(2 * n - 1, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < n; ++j) conv[i + j] += c_[i] * o.c_[j];
  }
  std::vector<Rat> c(conv.begin(), conv.begin() + n);
  const auto& tab = field_->power_table();
  for (int k = n; k <= 2 * n - 2; ++k) {
    if (conv[k] == 0) continue;
    const auto& row = tab[k - n];
    for (int i = 0; i < n; ++i) c[i] += conv[k] * row[i];
  }
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const Rat& s) const {
  std::vector<Rat> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const Rat& s) const {
  std::vector<Rat> c = c_;
  c[0] += s;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const Rat& s) const {
  std::vector<Rat> c = c_;
  c[0] -= s;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inv();
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  if (field_->degree() == 1) return FieldElement(field_, {Rat(1) / c_[0]});
  UniPoly rep{std::vector<Rat>(c_)};
  UniPoly g, s, t;
  UniPoly::xgcd(rep, field_->defining_poly(), g, s, t);
  if (g.degree() != 0)
    throw MathError("defining polynomial is not coprime to a nonzero element");
  UniPoly red = s % field_->defining_poly();
  std::vector<Rat> c(field_->degree(), Rat(0));
  for (int i = 0; i <= red.degree(); ++i) c[i] = red.coeff(i);
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement acc = field_->one();
  FieldElement base = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) acc = acc * base;
    base = base * base;
    u >>= 1;
  }
  return acc;
}

namespace {

// Characteristic polynomial of the n x n rational matrix by the
// Faddeev-LeVerrier recurrence (exact divisions only).
std::vector<Rat> char_poly_of_matrix(const std::vector<std::vector<Rat>>& A) {
  int n = static_cast<int>(A.size());
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  for (int k = 1; k <= n; ++k) {
    // M <- A*M + c[n-k+1]*I
    std::vector<std::vector<Rat>> AM(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (A[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) AM[i][j] += A[i][l] * M[l][j];
      }
    for (int i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = std::move(AM);
    Rat tr(0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / Rat(k);
  }
  return c;
}

}  // namespace

UniPoly FieldElement::char_poly() const {
  int n = field_->degree();
  // Column j = coefficients of alpha * theta^j.
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n, Rat(0)));
  FieldElement col = *this;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) A[i][j] = col.c_[i];
    if (j + 1 < n) col = col * field_->generator();
  }
  return UniPoly(char_poly_of_matrix(A));
}

Rat FieldElement::trace() const {
  UniPoly cp = char_poly();
  return -cp.coeff(field_->degree() - 1);
}

Rat FieldElement::norm() const {
  UniPoly cp = char_poly();
  Rat c0 = cp.coeff(0);
  return (field_->degree() % 2 != 0) ? -c0 : c0;
}

UniPoly FieldElement::minpoly() const {
  UniPoly cp = char_poly();
  UniPoly d = UniPoly::gcd(cp, cp.derivative());
  if (d.degree() == 0) return cp;
  return cp / d;
}

Int FieldElement::height() const {
  Int d = 1;
  for (const auto& x : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), rat_den(x).get_mpz_t());
  Int h = d;
  for (const auto& x : c_) {
    Rat scaled = x * Rat(d);
    Int m = abs(rat_num(scaled));
    if (m > h) h = m;
  }
  return h;
}

std::string FieldElement::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    Rat mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) os << format_rat(mag);
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) return "0";
  return os.str();
}

FieldElement eval_at(const UniPoly& poly, const FieldElement& alpha) {
  const FieldPtr& F = alpha.field();
  FieldElement acc = F->zero();
  const auto& cs = poly.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * alpha + *it;
  return acc;
}

namespace {

struct RatInterval {
  Rat lo, hi;
};

RatInterval ival_mul(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

}  // namespace

int sign_at_real_embedding(const FieldElement& alpha, int index) {
  const FieldPtr& F = alpha.field();
  if (alpha.is_zero()) return 0;
  if (F->degree() == 1) {
    if (index != 0) throw MathError("no such real embedding");
    return sgn(alpha.coeff(0));
  }
  Rat width(1, 16);
  for (int round = 0; round < 64; ++round) {
    auto intervals = F->real_root_intervals(width);
    if (index < 0 || index >= static_cast<int>(intervals.size()))
      throw MathError("no such real embedding");
    RatInterval x{intervals[index].first, intervals[index].second};
    RatInterval acc{Rat(0), Rat(0)};
    const auto& cs = alpha.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      acc = ival_mul(acc, x);
      acc.lo += *it;
      acc.hi += *it;
    }
    if (acc.lo > 0) return 1;
    if (acc.hi < 0) return -1;
    width /= 256;
  }
  throw MathError("real-embedding sign did not stabilize");
}

std::vector<PrimeSite> degree_one_sites(const FieldPtr& field, int count,
                                        const std::vector<unsigned long>& avoid) {
  std::vector<PrimeSite> sites;
  const auto& f = field->defining_poly();
  std::vector<Int> z(f.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) z[i] = rat_num(f.coeff(static_cast<int>(i)));
  Int p = 2;
  while (static_cast<int>(sites.size()) < count) {
    bool skip = field->discriminant() % p == 0;
    if (!skip)
      for (unsigned long a : avoid)
        if (p == a) { skip = true; break; }
    if (!skip) {
      auto roots = poly_roots_mod_p(z, p);
      if (!roots.empty())
        sites.push_back(PrimeSite{field, p.get_ui(), roots.front().get_ui()});
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  return sites;
}

unsigned long reduce_at(const FieldElement& alpha, const PrimeSite& site) {
  if (!site.field || !alpha.field() || !same_field(*alpha.field(), *site.field))
    throw FieldMismatch();
  uint64_t p = site.p;
  uint64_t acc = 0;
  const auto& cs = alpha.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    uint64_t den = mpz_fdiv_ui(rat_den(*it).get_mpz_t(), p);
    if (den == 0)
      throw BadReduction("coefficient denominator divisible by the site prime");
    uint64_t num = mpz_fdiv_ui(rat_num(*it).get_mpz_t(), p);
    uint64_t val = mulmod_u64(num, powmod_u64(den, p - 2, p), p);
    acc = (mulmod_u64(acc, site.root, p) + val) % p;
  }
  return acc;
}

}  // namespace zc
