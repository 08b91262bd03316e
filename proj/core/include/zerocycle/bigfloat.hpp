// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <mpfr.h>

#include <string>

#include "zerocycle/rational.hpp"

namespace zc {

// Thin RAII wrapper over mpfr_t, round-to-nearest everywhere.  Binary
// operations compute at the larger operand precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_rat(const Rat& q, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat from_int(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
  }
  static BigFloat from_double(double v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
  }
  // 2^e at the given precision.
  static BigFloat pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  std::string str(int digits = 20) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) return "?";
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigFloat abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace zc
