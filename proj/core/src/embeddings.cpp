// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include "zerocycle/embeddings.hpp"

#include <algorithm>

#include "zerocycle/errors.hpp"

namespace zc {

namespace {

struct Cpx {
  BigFloat re, im;
};

Cpx cpx(mpfr_prec_t prec) { return Cpx{BigFloat(prec), BigFloat(prec)}; }

Cpx operator-(const Cpx& a, const Cpx& b) { return {a.re - b.re, a.im - b.im}; }
Cpx operator*(const Cpx& a, const Cpx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cpx operator/(const Cpx& a, const Cpx& b) {
  BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
BigFloat abs2(const Cpx& a) { return a.re * a.re + a.im * a.im; }

BigFloat horner_real(const std::vector<BigFloat>& c, const BigFloat& x) {
  BigFloat acc(x.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Cpx horner_cpx(const std::vector<BigFloat>& c, const Cpx& z) {
  Cpx acc = cpx(z.re.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z;
    acc.re = acc.re + *it;
  }
  return acc;
}

std::vector<BigFloat> to_floats(const UniPoly& p, mpfr_prec_t prec) {
  std::vector<BigFloat> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(BigFloat::from_rat(q, prec));
  return c;
}

// Newton refinement of a simple real root starting inside its basin.
BigFloat polish_real(const std::vector<BigFloat>& f, const std::vector<BigFloat>& df,
                     BigFloat x, mpfr_prec_t prec) {
  BigFloat eps = BigFloat::pow2(-(static_cast<long>(prec) - 8), prec);
  for (int it = 0; it < 120; ++it) {
    BigFloat step = horner_real(f, x) / horner_real(df, x);
    x = x - step;
    BigFloat scale = x.abs();
    if (cmp(scale, BigFloat::from_int(1, prec)) < 0) scale = BigFloat::from_int(1, prec);
    if (step.abs() <= eps * scale) break;
  }
  return x;
}

Cpx polish_cpx(const std::vector<BigFloat>& f, const std::vector<BigFloat>& df, Cpx z,
               mpfr_prec_t prec) {
  BigFloat eps2 = BigFloat::pow2(-2 * (static_cast<long>(prec) - 8), prec);
  for (int it = 0; it < 120; ++it) {
    Cpx step = horner_cpx(f, z) / horner_cpx(df, z);
    z = z - step;
    BigFloat scale = abs2(z);
    if (cmp(scale, BigFloat::from_int(1, prec)) < 0) scale = BigFloat::from_int(1, prec);
    if (abs2(step) <= eps2 * scale) break;
  }
  return z;
}

// Synthetic division of a monic polynomial by (x - r); returns the monic
// quotient, discarding the (tiny) remainder.
std::vector<BigFloat> deflate(const std::vector<BigFloat>& c, const BigFloat& r) {
  size_t d = c.size() - 1;
  std::vector<BigFloat> q(d, BigFloat(r.prec()));
  q[d - 1] = c[d];
  for (size_t k = d - 1; k-- > 0;) q[k] = c[k + 1] + r * q[k + 1];
  return q;
}

}  // namespace

std::shared_ptr<const RootApproximations> root_approximations(const NumberField& F,
                                                              mpfr_prec_t prec) {
  std::lock_guard<std::mutex> lock(F.emb_mu_);
  if (F.emb_cache_ && F.emb_cache_->prec >= prec) return F.emb_cache_;

  mpfr_prec_t work = std::max<mpfr_prec_t>(prec, 64) + 32;
  auto out = std::make_shared<RootApproximations>();
  out->prec = work;
  int n = F.degree();
  const UniPoly& f = F.defining_poly();

  if (n == 1) {
    EmbeddingValue v{BigFloat::from_rat(-f.coeff(0), work), BigFloat(work), true};
    out->roots.push_back(std::move(v));
    out->n_real = 1;
    F.emb_cache_ = out;
    return out;
  }

  auto fc = to_floats(f, work);
  auto dfc = to_floats(f.derivative(), work);

  // Real roots: rational isolation to 2^-24, then Newton at full precision.
  auto intervals = F.real_root_intervals(Rat(1, 1 << 24));
  std::vector<BigFloat> reals;
  for (const auto& [lo, hi] : intervals) {
    BigFloat x = BigFloat::from_rat((lo + hi) / 2, work);
    reals.push_back(polish_real(fc, dfc, std::move(x), work));
  }
  out->n_real = static_cast<int>(reals.size());
  for (auto& r : reals)
    out->roots.push_back(EmbeddingValue{r, BigFloat(work), true});

  int m = n - out->n_real;
  if (m > 0) {
    // Deflate the real roots away, then Durand-Kerner on the remainder and a
    // final Newton polish against the undeflated polynomial.
    std::vector<BigFloat> g = fc;
    for (const auto& r : reals) g = deflate(g, r);
    std::vector<Cpx> z;
    Cpx seed{BigFloat::from_double(0.4, work), BigFloat::from_double(0.9, work)};
    Cpx acc{BigFloat::from_int(1, work), BigFloat(work)};
    for (int j = 0; j < m; ++j) {
      acc = acc * seed;
      z.push_back(acc);
    }
    BigFloat tol2 = BigFloat::pow2(-2 * (static_cast<long>(work) - 16), work);
    for (int iter = 0; iter < 500; ++iter) {
      BigFloat worst(work);
      for (int j = 0; j < m; ++j) {
        Cpx denom{BigFloat::from_int(1, work), BigFloat(work)};
        for (int l = 0; l < m; ++l)
          if (l != j) denom = denom * (z[j] - z[l]);
        Cpx d = horner_cpx(g, z[j]) / denom;
        z[j] = z[j] - d;
        BigFloat d2 = abs2(d);
        if (cmp(d2, worst) > 0) worst = d2;
      }
      if (cmp(worst, tol2) < 0) break;
    }
    for (auto& zj : z) zj = polish_cpx(fc, dfc, zj, work);
    std::sort(z.begin(), z.end(), [](const Cpx& a, const Cpx& b) {
      int c = cmp(a.im, b.im);
      if (c != 0) return c < 0;
      return cmp(a.re, b.re) < 0;
    });
    for (auto& zj : z)
      out->roots.push_back(EmbeddingValue{zj.re, zj.im, false});
  }

  F.emb_cache_ = out;
  return out;
}

std::vector<EmbeddingValue> fe_embeddings(const FieldElement& alpha, unsigned prec) {
  if (prec < 32) prec = 32;
  const NumberField& F = *alpha.field();
  Int h = alpha.height();
  mpfr_prec_t work = static_cast<mpfr_prec_t>(prec) + 64 +
                     static_cast<mpfr_prec_t>(mpz_sizeinbase(h.get_mpz_t(), 2)) +
                     8 * F.degree();
  auto roots = root_approximations(F, work);

  std::vector<BigFloat> ac;
  ac.reserve(alpha.coeffs().size());
  for (const auto& q : alpha.coeffs()) ac.push_back(BigFloat::from_rat(q, work));

  std::vector<EmbeddingValue> out;
  out.reserve(roots->roots.size());
  for (const auto& r : roots->roots) {
    if (r.is_real) {
      out.push_back(EmbeddingValue{horner_real(ac, r.re), BigFloat(work), true});
    } else {
      Cpx v = horner_cpx(ac, Cpx{r.re, r.im});
      out.push_back(EmbeddingValue{v.re, v.im, false});
    }
  }
  return out;
}

}  // namespace zc
