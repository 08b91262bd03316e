// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include "zerocycle/squares.hpp"

#include <sstream>
#include <variant>

#include "zerocycle/errors.hpp"
#include "zerocycle/modarith.hpp"

namespace zc {

namespace {

// Outcome of the internal square-root attempt, sharper than the public API:
// distinguishes a certified non-square from plain budget exhaustion.
struct Found { FieldElement root; };
struct Certified { std::string reason; };
struct Exhausted { std::string reason; };
using SqrtOutcome = std::variant<Found, Certified, Exhausted>;

// A completely-split odd prime for f: p coprime to disc and to all
// coefficient denominators of alpha, with deg(f) distinct roots mod p and
// alpha nonzero at each of them.
struct SplitData {
  Int p;
  std::vector<Int> roots;   // roots of f mod p
  std::vector<Int> values;  // alpha at each root, mod p
};

std::optional<Int> reduce_int_mod(const Rat& q, const Int& m) {
  Int den = rat_den(q) % m;
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  Int v = rat_num(q) % m * inv % m;
  if (v < 0) v += m;
  return v;
}

// Evaluate alpha's coefficient polynomial at x modulo m (all denominators
// must be invertible mod m).
std::optional<Int> eval_alpha_mod(const FieldElement& a, const Int& x, const Int& m) {
  Int acc = 0;
  const auto& cs = a.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    auto c = reduce_int_mod(*it, m);
    if (!c) return std::nullopt;
    acc = (acc * x + *c) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

std::variant<SplitData, Certified, Exhausted> find_split_prime(const FieldElement& a) {
  const NumberField& F = *a.field();
  int n = F.degree();
  std::vector<Int> fz(F.defining_poly().coeffs().size());
  for (size_t i = 0; i < fz.size(); ++i)
    fz[i] = rat_num(F.defining_poly().coeff(static_cast<int>(i)));

  Int p = 2;
  int seen = 0;
  while (seen < 6000) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    ++seen;
    if (F.discriminant() % p == 0) continue;
    auto roots = poly_roots_mod_p(fz, p);
    if (static_cast<int>(roots.size()) != n) continue;
    SplitData sd;
    sd.p = p;
    sd.roots = std::move(roots);
    bool usable = true;
    for (const auto& r : sd.roots) {
      auto v = eval_alpha_mod(a, r, p);
      if (!v || *v == 0) { usable = false; break; }
      int chi = legendre(*v, p);
      if (chi == -1) {
        std::ostringstream os;
        os << "quadratic non-residue at the degree-one place (" << p.get_str()
           << ", " << r.get_str() << ")";
        return Certified{os.str()};
      }
      sd.values.push_back(*v);
    }
    if (usable) return sd;
  }
  return Exhausted{"no usable completely-split prime found within the scan bound"};
}

SqrtOutcome sqrt_attempt(const FieldElement& a, const SquareBudget& budget) {
  const FieldPtr& Fp = a.field();
  const NumberField& F = *Fp;
  if (a.is_zero()) return Found{a};

  if (F.degree() == 1) {
    const Rat& q = a.rat_value();
    if (q < 0) return Certified{"negative rational"};
    auto r = exact_rat_sqrt(q);
    if (!r) return Certified{"rational non-square"};
    return Found{Fp->from_rat(*r)};
  }

  // Rigorous sign reject at every real embedding.
  int n_real = F.real_root_count();
  for (int i = 0; i < n_real; ++i)
    if (sign_at_real_embedding(a, i) < 0) {
      std::ostringstream os;
      os << "negative at real embedding " << i;
      return Certified{os.str()};
    }

  auto split = find_split_prime(a);
  if (std::holds_alternative<Certified>(split)) return std::get<Certified>(split);
  if (std::holds_alternative<Exhausted>(split)) return std::get<Exhausted>(split);
  const SplitData& sd = std::get<SplitData>(split);
  int n = F.degree();

  std::vector<Int> fz(F.defining_poly().coeffs().size());
  for (size_t i = 0; i < fz.size(); ++i)
    fz[i] = rat_num(F.defining_poly().coeff(static_cast<int>(i)));

  std::vector<Int> base_sqrt(n);
  for (int i = 0; i < n; ++i) {
    auto s = sqrt_mod_p(sd.values[i], sd.p);
    if (!s) return Certified{"quadratic non-residue at a split place"};  // unreachable
    base_sqrt[i] = *s;
  }

  double logp = mpz_sizeinbase(sd.p.get_mpz_t(), 2);
  unsigned k = static_cast<unsigned>(192.0 / logp) + 2;

  while (true) {
    Int M = 1;
    for (unsigned i = 0; i < k; ++i) M *= sd.p;
    if (mpz_sizeinbase(M.get_mpz_t(), 2) > budget.max_modulus_bits)
      return Exhausted{"square-root precision budget exhausted"};

    // Lift roots of f and the scalar square roots to mod p^k.
    std::vector<Int> r(n), s(n);
    bool lift_ok = true;
    for (int i = 0; i < n; ++i) {
      r[i] = lift_root(fz, sd.roots[i], sd.p, k);
      auto vi = eval_alpha_mod(a, r[i], M);
      if (!vi) { lift_ok = false; break; }
      s[i] = lift_sqrt(*vi, base_sqrt[i], sd.p, k);
    }
    if (!lift_ok) return Exhausted{"denominator collision while lifting"};  // unreachable

    // Lagrange basis L_i(x) mod M (pairwise differences are units mod p).
    std::vector<std::vector<Int>> basis(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) {
      std::vector<Int> num{Int(1)};
      Int den = 1;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        // num *= (x - r[j])
        std::vector<Int> next(num.size() + 1, Int(0));
        for (size_t t = 0; t < num.size(); ++t) {
          next[t + 1] = (next[t + 1] + num[t]) % M;
          next[t] = (next[t] - num[t] * r[j]) % M;
        }
        num = std::move(next);
        den = den * (r[i] - r[j]) % M;
      }
      Int dinv = mod_inverse(((den % M) + M) % M, M);
      for (int t = 0; t < n; ++t) {
        Int c = num[t] % M * dinv % M;
        if (c < 0) c += M;
        basis[i][t] = c;
      }
    }

    // Try the 2^(n-1) sign patterns (global sign is free).
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
      std::vector<Int> coef(n, Int(0));
      for (int i = 0; i < n; ++i) {
        bool flip = i > 0 && ((mask >> (i - 1)) & 1);
        Int si = flip ? M - s[i] : s[i];
        for (int t = 0; t < n; ++t) coef[t] = (coef[t] + si * basis[i][t]) % M;
      }
      std::vector<Rat> rec(n);
      bool ok = true;
      for (int t = 0; t < n; ++t) {
        auto q = rational_reconstruct(coef[t], M);
        if (!q) { ok = false; break; }
        rec[t] = *q;
      }
      if (!ok) continue;
      FieldElement cand = Fp->element(std::move(rec));
      if (cand * cand == a) return Found{canonical_root_sign(std::move(cand))};
    }
    k *= 2;
  }
}

}  // namespace

FieldElement canonical_root_sign(FieldElement root) {
  if (root.is_zero()) return root;
  const NumberField& F = *root.field();
  bool flip;
  if (F.degree() == 1) {
    flip = root.coeff(0) < 0;
  } else if (F.real_root_count() > 0) {
    flip = sign_at_real_embedding(root, 0) < 0;
  } else {
    // No real embedding: normalize the first nonzero coefficient positive.
    flip = false;
    for (const auto& c : root.coeffs()) {
      if (c == 0) continue;
      flip = c < 0;
      break;
    }
  }
  return flip ? -root : root;
}

SquareResult fe_is_square(const FieldElement& alpha, const SquareBudget& budget) {
  SquareResult res;
  if (alpha.is_zero()) {
    res.kind = Squareness::Square;
    res.witness = alpha;
    return res;
  }
  const FieldPtr& Fp = alpha.field();
  const NumberField& F = *Fp;

  if (F.degree() == 1) {
    const Rat& q = alpha.rat_value();
    auto r = exact_rat_sqrt(q);
    if (r) {
      res.kind = Squareness::Square;
      res.witness = Fp->from_rat(*r);
    } else {
      res.kind = Squareness::NonSquare;
      res.certificate = q < 0 ? "negative rational" : "rational non-square";
    }
    return res;
  }

  int n_real = F.real_root_count();
  for (int i = 0; i < n_real; ++i)
    if (sign_at_real_embedding(alpha, i) < 0) {
      res.kind = Squareness::NonSquare;
      std::ostringstream os;
      os << "negative at real embedding " << i;
      res.certificate = os.str();
      return res;
    }

  auto sites = degree_one_sites(Fp, budget.screening_sites, {2});
  for (const auto& site : sites) {
    unsigned long v;
    try {
      v = reduce_at(alpha, site);
    } catch (const BadReduction&) {
      continue;  // denominator meets the site; inconclusive here
    }
    if (v == 0) continue;
    if (legendre_u64(v, site.p) == -1) {
      res.kind = Squareness::NonSquare;
      std::ostringstream os;
      os << "quadratic non-residue at the degree-one place (" << site.p << ", "
         << site.root << ")";
      res.certificate = os.str();
      return res;
    }
  }

  SqrtOutcome out = sqrt_attempt(alpha, budget);
  if (std::holds_alternative<Found>(out)) {
    res.kind = Squareness::Square;
    res.witness = std::get<Found>(out).root;
  } else if (std::holds_alternative<Certified>(out)) {
    res.kind = Squareness::NonSquare;
    res.certificate = std::get<Certified>(out).reason;
  } else {
    res.kind = Squareness::Unknown;
    res.certificate = std::get<Exhausted>(out).reason;
  }
  return res;
}

FieldElement fe_sqrt(const FieldElement& alpha, const SquareBudget& budget) {
  SqrtOutcome out = sqrt_attempt(alpha, budget);
  if (std::holds_alternative<Found>(out)) return std::get<Found>(out).root;
  if (std::holds_alternative<Certified>(out))
    throw NotASquare("element is not a square: " + std::get<Certified>(out).reason);
  throw NotASquare("no exact square root within budget: " +
                   std::get<Exhausted>(out).reason);
}

}  // namespace zc
