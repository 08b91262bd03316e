// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include "zerocycle/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>

#include "zerocycle/errors.hpp"
#include "zerocycle/modarith.hpp"

namespace zc {
namespace {

constexpr int kMaxEnumDegree = 8;
constexpr int kMaxSites = 40;
constexpr double kMaxStreamSize = 3e7;

// Packed candidate: [height, denominator, c0, ..., c_{n-1}].
using Cand = std::array<std::int32_t, 2 + kMaxEnumDegree>;

// Integer order 0, -1, 1, -2, 2, ...: absolute value first, negatives before
// positives on ties.
inline bool int_before(std::int32_t a, std::int32_t b) {
  long aa = std::labs(a), ab = std::labs(b);
  if (aa != ab) return aa < ab;
  return a < b;
}

struct CandLess {
  int n;
  bool operator()(const Cand& a, const Cand& b) const {
    if (a[0] != b[0]) return a[0] < b[0];
    if (a[1] != b[1]) return a[1] < b[1];
    for (int i = 0; i < n; ++i)
      if (a[2 + i] != b[2 + i]) return int_before(a[2 + i], b[2 + i]);
    return false;
  }
};

// Numerator vectors in [-coeff_bound, coeff_bound]^n over denominators
// 1..denom_bound, in lowest terms (gcd of contents and denominator is 1),
// sorted by (height, denominator, coefficients).
std::vector<Cand> packed_stream(int n, const SearchBounds& b) {
  if (n > kMaxEnumDegree)
    throw MathError("enumeration supports fields of degree at most 8");
  if (b.coeff_bound < 0 || b.denom_bound < 1)
    throw MathError("bounds need coeff_bound >= 0 and denom_bound >= 1");
  const long cb = b.coeff_bound, db = b.denom_bound;
  const double per = std::pow(2.0 * static_cast<double>(cb) + 1.0, n);
  if (per * static_cast<double>(db) > kMaxStreamSize)
    throw MathError("search box too large for in-memory enumeration");

  std::vector<Cand> out;
  out.reserve(static_cast<size_t>(per * static_cast<double>(db)));
  std::vector<long> c(n);
  for (long d = 1; d <= db; ++d) {
    std::fill(c.begin(), c.end(), -cb);
    for (;;) {
      long g = d;
      for (int i = 0; i < n && g != 1; ++i) g = std::gcd(g, std::labs(c[i]));
      if (g == 1) {
        Cand cd{};
        long h = d;
        for (int i = 0; i < n; ++i) {
          cd[2 + i] = static_cast<std::int32_t>(c[i]);
          h = std::max(h, std::labs(c[i]));
        }
        cd[0] = static_cast<std::int32_t>(h);
        cd[1] = static_cast<std::int32_t>(d);
        out.push_back(cd);
      }
      int j = 0;
      while (j < n && c[j] == cb) { c[j] = -cb; ++j; }
      if (j == n) break;
      ++c[j];
    }
  }
  std::sort(out.begin(), out.end(), CandLess{n});
  return out;
}

FieldElement unpack(const FieldPtr& field, const Cand& cd) {
  int n = field->degree();
  std::vector<Rat> co(n);
  for (int i = 0; i < n; ++i) {
    Rat r(static_cast<long>(cd[2 + i]), static_cast<unsigned long>(cd[1]));
    r.canonicalize();
    co[i] = r;
  }
  return field->element(std::move(co));
}

// ---- modular prefilter --------------------------------------------------
//
// A candidate that solves the exact equation reduces, at every degree-one
// place where its denominator is a unit, to a solution mod p; a Legendre
// symbol of -1 there rules it out for certain.  The filter only discards,
// never accepts: survivors still face the exact square tests.

std::optional<std::vector<std::uint64_t>> poly_mod(const UniPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c(static_cast<size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    const Rat r = f.coeff(i);
    std::uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
    if (den == 0) return std::nullopt;
    std::uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
    c[static_cast<size_t>(i)] = mulmod_u64(num, powmod_u64(den, p - 2, p), p);
  }
  return c;
}

inline std::uint64_t horner_mod(const std::vector<std::uint64_t>& c, std::uint64_t x,
                                std::uint64_t p) {
  std::uint64_t v = 0;
  for (size_t i = c.size(); i-- > 0;) v = (mulmod_u64(v, x, p) + c[i]) % p;
  return v;
}

// Residues of every candidate at every accepted site, laid out site major:
// res[s * count + i], so screening passes stream one small slice per site.
// Index p (one past the residues) marks candidates whose denominator
// vanishes at the site; every table treats it as a pass.
std::vector<std::uint16_t> candidate_residues(const std::vector<Cand>& cands, int n,
                                              const std::vector<PrimeSite>& sites) {
  const size_t S = sites.size();
  std::vector<std::uint16_t> res(cands.size() * S);
  for (size_t s = 0; s < S; ++s) {
    const std::uint64_t p = sites[s].p;
    if (p + 1 > 60000) throw MathError("screening site prime too large");
    std::uint16_t* slice = &res[s * cands.size()];
    std::vector<std::uint64_t> pw(static_cast<size_t>(n));
    pw[0] = 1 % p;
    for (int i = 1; i < n; ++i)
      pw[static_cast<size_t>(i)] = mulmod_u64(pw[static_cast<size_t>(i) - 1], sites[s].root, p);
    // denominators are small and repeat: cache their inverses
    std::vector<std::uint64_t> dinv;
    for (size_t i = 0; i < cands.size(); ++i) {
      const Cand& cd = cands[i];
      const auto d = static_cast<std::uint64_t>(cd[1]);
      if (d % p == 0) {
        slice[i] = static_cast<std::uint16_t>(p);
        continue;
      }
      if (d >= dinv.size()) dinv.resize(d + 1, 0);
      if (dinv[d] == 0) dinv[d] = powmod_u64(d % p, p - 2, p);
      std::uint64_t acc = 0;
      for (int j = 0; j < n; ++j) {
        auto cj = static_cast<std::int64_t>(cd[2 + j]) % static_cast<std::int64_t>(p);
        if (cj < 0) cj += static_cast<std::int64_t>(p);
        acc = (acc + mulmod_u64(static_cast<std::uint64_t>(cj), pw[static_cast<size_t>(j)], p)) % p;
      }
      slice[i] = static_cast<std::uint16_t>(mulmod_u64(acc, dinv[d], p));
    }
  }
  return res;
}

// One-variable reject table: rej[r] = 1 iff the residue r is impossible.
struct RejectTable {
  std::uint32_t p = 0;
  std::vector<std::uint8_t> rej;  // p + 1 entries, sentinel entry always 0
};

inline int enc_chi(std::uint64_t v, std::uint64_t p) {
  if (v == 0) return 0;
  return legendre_u64(v, p) == 1 ? 1 : 2;
}

// Candidate sites for screening; p = 2 is useless for quadratic residues.
std::vector<PrimeSite> screening_candidates(const FieldPtr& field, int want) {
  if (want <= 0) return {};
  return degree_one_sites(field, std::min(want, kMaxSites) + 8, {2});
}

// g(T) a must be a square: reject T-residues where chi(g(r) a) = -1.
void quartic_tables(const QuarticTwistCurve& C, int want,
                    std::vector<PrimeSite>& sites, std::vector<RejectTable>& tabs) {
  for (const auto& s : screening_candidates(C.field, want)) {
    if (static_cast<int>(sites.size()) >= std::min(want, kMaxSites)) break;
    auto gm = poly_mod(C.g, s.p);
    if (!gm) continue;
    std::uint64_t abar;
    try {
      abar = reduce_at(C.a, s);
    } catch (const BadReduction&) {
      continue;
    }
    if (abar == 0) continue;
    RejectTable t;
    t.p = static_cast<std::uint32_t>(s.p);
    t.rej.assign(s.p + 1, 0);
    for (std::uint64_t r = 0; r < s.p; ++r) {
      std::uint64_t v = mulmod_u64(horner_mod(*gm, r, s.p), abar, s.p);
      t.rej[r] = legendre_u64(v, s.p) == -1 ? 1 : 0;
    }
    sites.push_back(s);
    tabs.push_back(std::move(t));
  }
}

// p(X) a and q(X) a must both be squares.
void biquadric_tables(const BiquadricTwistCurve& D, int want,
                      std::vector<PrimeSite>& sites, std::vector<RejectTable>& tabs) {
  for (const auto& s : screening_candidates(D.field, want)) {
    if (static_cast<int>(sites.size()) >= std::min(want, kMaxSites)) break;
    auto pm = poly_mod(D.p, s.p);
    auto qm = poly_mod(D.q, s.p);
    if (!pm || !qm) continue;
    std::uint64_t abar;
    try {
      abar = reduce_at(D.a, s);
    } catch (const BadReduction&) {
      continue;
    }
    if (abar == 0) continue;
    RejectTable t;
    t.p = static_cast<std::uint32_t>(s.p);
    t.rej.assign(s.p + 1, 0);
    for (std::uint64_t r = 0; r < s.p; ++r) {
      bool bad = legendre_u64(mulmod_u64(horner_mod(*pm, r, s.p), abar, s.p), s.p) == -1 ||
                 legendre_u64(mulmod_u64(horner_mod(*qm, r, s.p), abar, s.p), s.p) == -1;
      t.rej[r] = bad ? 1 : 0;
    }
    sites.push_back(s);
    tabs.push_back(std::move(t));
  }
}

// Two-variable tables for the surface pair test: a pair (x, t) dies at a
// site when chi(g) chi(p) = -1 or chi(g) chi(q) = -1 there.  Rows are
// indexed by the x-class (chi(p), chi(q)) and read off at the t-residue;
// class 9 is the all-pass row for sentinel x-residues.
struct PairTable {
  std::uint32_t p = 0;
  std::vector<std::uint8_t> xcls;  // p + 1 entries, value 0..8 or 9
  std::vector<std::uint8_t> rows;  // 10 rows of p + 1 bytes
};

void surface_tables(const BiellipticSurface& S, const FieldPtr& field, int want,
                    std::vector<PrimeSite>& sites, std::vector<PairTable>& tabs) {
  for (const auto& s : screening_candidates(field, want)) {
    if (static_cast<int>(sites.size()) >= std::min(want, kMaxSites)) break;
    auto gm = poly_mod(S.g, s.p);
    auto pm = poly_mod(S.p, s.p);
    auto qm = poly_mod(S.q, s.p);
    if (!gm || !pm || !qm) continue;
    const std::uint64_t p = s.p;
    PairTable t;
    t.p = static_cast<std::uint32_t>(p);
    t.xcls.assign(p + 1, 9);
    std::vector<std::uint8_t> eg(p);
    for (std::uint64_t r = 0; r < p; ++r) {
      eg[r] = static_cast<std::uint8_t>(enc_chi(horner_mod(*gm, r, p), p));
      int ep = enc_chi(horner_mod(*pm, r, p), p);
      int eq = enc_chi(horner_mod(*qm, r, p), p);
      t.xcls[r] = static_cast<std::uint8_t>(ep * 3 + eq);
    }
    t.rows.assign(10 * (p + 1), 0);
    for (int k = 0; k < 9; ++k) {
      const int ep = k / 3, eq = k % 3;
      std::uint8_t* row = &t.rows[static_cast<size_t>(k) * (p + 1)];
      for (std::uint64_t r = 0; r < p; ++r) {
        const int g = eg[r];
        bool bad = (g == 1 && ep == 2) || (g == 2 && ep == 1) ||
                   (g == 1 && eq == 2) || (g == 2 && eq == 1);
        row[r] = bad ? 1 : 0;
      }
    }
    sites.push_back(s);
    tabs.push_back(std::move(t));
  }
}

void run_workers(int jobs, const std::function<void()>& fn) {
  if (jobs <= 1) {
    fn();
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(jobs));
  for (int i = 0; i < jobs; ++i) threads.emplace_back(fn);
  for (auto& t : threads) t.join();
}

// Indices surviving the one-variable filter, ascending.  Chunks are claimed
// through an atomic counter and merged in chunk order, so the output does
// not depend on the number of workers.  The filter runs site by site over
// shrinking survivor lists: the first pass streams one contiguous residue
// slice, later passes only touch survivors.
std::vector<std::uint32_t> screen_stream(size_t count, const std::vector<std::uint16_t>& res,
                                         const std::vector<RejectTable>& tabs, int jobs) {
  const size_t S = tabs.size();
  const size_t chunk = 8192;
  const size_t nchunks = (count + chunk - 1) / chunk;
  std::vector<std::vector<std::uint32_t>> hits(nchunks);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    std::vector<std::uint32_t> bufa, bufb;
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= nchunks) return;
      auto& local = hits[k];
      const size_t lo = k * chunk;
      const size_t hi = std::min(count, lo + chunk);
      if (S == 0) {
        for (size_t i = lo; i < hi; ++i) local.push_back(static_cast<std::uint32_t>(i));
        continue;
      }
      bufa.clear();
      {
        const std::uint16_t* slice = &res[0];
        const std::uint8_t* rej = tabs[0].rej.data();
        for (size_t i = lo; i < hi; ++i)
          if (!rej[slice[i]]) bufa.push_back(static_cast<std::uint32_t>(i));
      }
      auto* cur = &bufa;
      auto* nxt = &bufb;
      for (size_t s = 1; s < S && !cur->empty(); ++s) {
        nxt->clear();
        const std::uint16_t* slice = &res[s * count];
        const std::uint8_t* rej = tabs[s].rej.data();
        for (std::uint32_t i : *cur)
          if (!rej[slice[i]]) nxt->push_back(i);
        std::swap(cur, nxt);
      }
      local.insert(local.end(), cur->begin(), cur->end());
    }
  };
  run_workers(jobs, worker);
  std::vector<std::uint32_t> all;
  for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  return all;
}

// Pairs (x index, t index) surviving the two-variable filter, in
// lexicographic order; same deterministic chunking as above.  The first few
// sites are evaluated as per-class pass bitmasks over t, combined by AND, so
// the bulk of the count^2 grid costs one word operation per 64 pairs; only
// survivors (a fraction of a percent) probe the remaining sites.
std::vector<std::pair<std::uint32_t, std::uint32_t>> screen_pairs(
    size_t count, const std::vector<std::uint16_t>& res,
    const std::vector<PairTable>& tabs, int jobs) {
  const size_t S = tabs.size();
  const size_t B = std::min<size_t>(S, 8);  // sites handled as bitmasks
  const size_t W = (count + 63) / 64;

  // pass_masks[(s * 10 + k) * W + w]: bit ti of word w set iff the pair
  // passes site s when the x-class is k (bits past count stay clear)
  std::vector<std::uint64_t> pass_masks(B * 10 * W, 0);
  for (size_t s = 0; s < B; ++s) {
    const PairTable& t = tabs[s];
    const std::uint16_t* slice = &res[s * count];
    for (size_t k = 0; k < 10; ++k) {
      const std::uint8_t* row = &t.rows[k * (t.p + 1)];
      std::uint64_t* mask = &pass_masks[(s * 10 + k) * W];
      for (size_t ti = 0; ti < count; ++ti)
        if (!row[slice[ti]]) mask[ti / 64] |= std::uint64_t{1} << (ti % 64);
    }
  }

  const size_t chunk = 64;
  const size_t nchunks = (count + chunk - 1) / chunk;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> hits(nchunks);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    std::array<const std::uint64_t*, 8> masks{};
    std::array<const std::uint8_t*, kMaxSites> rows{};
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= nchunks) return;
      auto& local = hits[k];
      const size_t hi = std::min(count, (k + 1) * chunk);
      for (size_t x = k * chunk; x < hi; ++x) {
        if (S == 0) {
          for (size_t ti = 0; ti < count; ++ti)
            local.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(ti));
          continue;
        }
        for (size_t s = 0; s < S; ++s) {
          const PairTable& t = tabs[s];
          const size_t cls = t.xcls[res[s * count + x]];
          if (s < B) masks[s] = &pass_masks[(s * 10 + cls) * W];
          rows[s] = &t.rows[cls * (t.p + 1)];
        }
        for (size_t w = 0; w < W; ++w) {
          std::uint64_t bits = masks[0][w];
          for (size_t s = 1; s < B; ++s) bits &= masks[s][w];
          while (bits) {
            const auto ti = static_cast<std::uint32_t>(
                w * 64 + static_cast<size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
            bool ok = true;
            for (size_t s = B; s < S; ++s)
              if (rows[s][res[s * count + ti]]) {
                ok = false;
                break;
              }
            if (ok) local.emplace_back(static_cast<std::uint32_t>(x), ti);
          }
        }
      }
    }
  };
  run_workers(jobs, worker);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
  for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  return all;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<FieldElement> enumerate_elements(const FieldPtr& field,
                                             const SearchBounds& bounds) {
  auto packed = packed_stream(field->degree(), bounds);
  std::vector<FieldElement> out;
  out.reserve(packed.size());
  for (const auto& cd : packed) out.push_back(unpack(field, cd));
  return out;
}

SearchReport search_quartic(const QuarticTwistCurve& C, const SearchBounds& bounds,
                            const SearchOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.target = "quartic";
  rep.bounds = bounds;

  const auto packed = packed_stream(C.field->degree(), bounds);
  rep.candidates_tested = packed.size();

  std::vector<PrimeSite> sites;
  std::vector<RejectTable> tabs;
  quartic_tables(C, options.screening_sites, sites, tabs);
  const auto res = candidate_residues(packed, C.field->degree(), sites);
  const auto survivors = screen_stream(packed.size(), res, tabs, options.jobs);

  const FieldElement ainv = C.a.inv();
  for (std::uint32_t i : survivors) {
    const FieldElement T = unpack(C.field, packed[i]);
    const SquareResult sq = fe_is_square(eval_at(C.g, T) * C.a, options.budget);
    if (sq.kind == Squareness::NonSquare) continue;
    if (sq.kind == Squareness::Unknown) {
      rep.unknowns.push_back(T.str());
      rep.exhaustive = false;
      continue;
    }
    QuarticPoint P{T, *sq.witness * ainv};
    if (!quartic_contains(C, P))
      throw MathError("square witness failed the quartic equation");
    rep.quartic_points.push_back(std::move(P));
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

SearchReport search_biquadric(const BiquadricTwistCurve& D, const SearchBounds& bounds,
                              const SearchOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.target = "biquadric";
  rep.bounds = bounds;

  const auto packed = packed_stream(D.field->degree(), bounds);
  rep.candidates_tested = packed.size();

  std::vector<PrimeSite> sites;
  std::vector<RejectTable> tabs;
  biquadric_tables(D, options.screening_sites, sites, tabs);
  const auto res = candidate_residues(packed, D.field->degree(), sites);
  const auto survivors = screen_stream(packed.size(), res, tabs, options.jobs);

  const FieldElement ainv = D.a.inv();
  for (std::uint32_t i : survivors) {
    const FieldElement X = unpack(D.field, packed[i]);
    const SquareResult sp = fe_is_square(eval_at(D.p, X) * D.a, options.budget);
    if (sp.kind == Squareness::NonSquare) continue;
    const SquareResult sq =
        sp.kind == Squareness::Square ? fe_is_square(eval_at(D.q, X) * D.a, options.budget)
                                      : SquareResult{};
    if (sp.kind == Squareness::Unknown || sq.kind == Squareness::Unknown) {
      rep.unknowns.push_back(X.str());
      rep.exhaustive = false;
      continue;
    }
    if (sq.kind == Squareness::NonSquare) continue;
    BiquadricPoint P{X, *sp.witness * ainv, *sq.witness * ainv};
    if (!biquadric_contains(D, P))
      throw MathError("square witnesses failed the biquadric equations");
    rep.biquadric_points.push_back(std::move(P));
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

SearchReport search_surface(const BiellipticSurface& S, const FieldPtr& field,
                            const SearchBounds& bounds, const SearchOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.target = "surface";
  rep.bounds = bounds;

  const auto packed = packed_stream(field->degree(), bounds);
  rep.candidates_tested =
      static_cast<std::uint64_t>(packed.size()) * static_cast<std::uint64_t>(packed.size());

  std::vector<PrimeSite> sites;
  std::vector<PairTable> tabs;
  surface_tables(S, field, options.screening_sites, sites, tabs);
  const auto res = candidate_residues(packed, field->degree(), sites);
  const auto survivors = screen_pairs(packed.size(), res, tabs, options.jobs);

  for (const auto& [xi, ti] : survivors) {
    const FieldElement x = unpack(field, packed[xi]);
    const FieldElement t = unpack(field, packed[ti]);
    const FieldElement g_t = eval_at(S.g, t);
    const SquareResult sy = fe_is_square(g_t * eval_at(S.p, x), options.budget);
    if (sy.kind == Squareness::NonSquare) continue;
    const SquareResult sz = sy.kind == Squareness::Square
                                ? fe_is_square(g_t * eval_at(S.q, x), options.budget)
                                : SquareResult{};
    if (sy.kind == Squareness::Unknown || sz.kind == Squareness::Unknown) {
      rep.unknowns.push_back("x = " + x.str() + ", t = " + t.str());
      rep.exhaustive = false;
      continue;
    }
    if (sz.kind == Squareness::NonSquare) continue;
    SurfacePoint B{SurfaceModel::B, x, *sy.witness, *sz.witness, t};
    if (!surface_contains(S, B))
      throw MathError("square witnesses failed the surface equations");
    try {
      rep.surface_points.push_back(model_b_to_a(S, B));
    } catch (const BranchLocus&) {
      rep.surface_points.push_back(std::move(B));
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

std::vector<FieldElement> twist_classes(const WeierstrassCurve& E,
                                        const std::vector<ECPoint>& generators,
                                        int n_max) {
  if (n_max < 0) throw MathError("twist class bound must be nonnegative");
  const FieldPtr& F = E.field();

  // representative per class, preferring the smallest height seen
  std::vector<FieldElement> reps{F->one()};
  auto record = [&](const FieldElement& d) {
    for (auto& r : reps) {
      SquareResult s = fe_is_square(d * r);
      if (s.kind == Squareness::Unknown)
        throw MathError("class comparison exceeded the square-test budget");
      if (s.is_square()) {
        if (d.height() < r.height()) r = d;
        return;
      }
    }
    reps.push_back(d);
  };

  const size_t k = generators.size();
  std::vector<long> c(k, -static_cast<long>(n_max));
  for (;;) {
    ECPoint P = ECPoint::infinity();
    for (size_t i = 0; i < k; ++i) P = ec_add(E, P, ec_mul(E, c[i], generators[i]));
    record(delta_phi(E, P));
    size_t j = 0;
    while (j < k && c[j] == n_max) { c[j] = -n_max; ++j; }
    if (j == k) break;
    ++c[j];
  }

  std::sort(reps.begin(), reps.end(), [](const FieldElement& a, const FieldElement& b) {
    const Int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (size_t i = 0; i < ca.size(); ++i)
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
  });
  return reps;
}

std::vector<SurfacePoint> density_points(const BiellipticSurface& S,
                                         const WeierstrassCurve& E,
                                         const ECPoint& generator, const FieldElement& a,
                                         const QuarticPoint& c_point, int count,
                                         const SquareBudget& budget) {
  if (count <= 0) return {};
  const FieldPtr& F = E.field();

  // the shared quartic model needs p and q monic and even
  auto even_part = [](const UniPoly& f) -> Rat {
    if (f.degree() != 2 || f.coeff(1) != 0 || f.coeff(2) != 1)
      throw MathError("density construction needs p, q of the form x^2 + c");
    return f.coeff(0);
  };
  const Rat p0 = even_part(S.p), q0 = even_part(S.q);
  const EvenQuarticModel M = even_quartic_to_weierstrass(p0 + q0, p0 * q0);
  const WeierstrassCurve EM = M.curve_over(F);
  if (EM.a2() != E.a2() || EM.a4() != E.a4() || EM.a6() != E.a6())
    throw MathError("curve does not match the surface quartic model");

  const QuarticTwistCurve C = make_quartic_twist(F, a, S.g);
  if (!quartic_contains(C, c_point))
    throw PointNotOnCurve("the fixed quartic point is not on the given twist");

  // generator must sit in the class of a, with infinite order
  {
    SquareResult cls = fe_is_square(delta_phi(E, generator) * a, budget);
    if (!cls.is_square())
      throw MathError("generator class does not match the twist parameter");
  }
  {
    std::vector<PrimeSite> good;
    for (const auto& s : degree_one_sites(F, 12, {2})) {
      if (good_reduction(E, s)) good.push_back(s);
      if (good.size() == 2) break;
    }
    if (good.size() < 2)
      throw MathError("not enough good-reduction sites for a torsion bound");
    const Int bound = torsion_bound(E, good);
    certify_nontorsion(E, generator, bound.get_si());
  }

  std::vector<SurfacePoint> points;
  const ECPoint step = ec_mul(E, 2, generator);
  ECPoint P = generator;
  const long max_iters = std::max(64L, 8L * count);
  for (long it = 0; it < max_iters && static_cast<int>(points.size()) < count; ++it) {
    if (it > 0) P = ec_add(E, P, step);
    if (P.inf || P.x.is_zero()) continue;  // odd multiples of a nontorsion point
    auto [X, W] = M.inverse(E, P);
    const FieldElement pX = eval_at(S.p, X);
    if (pX.is_zero()) continue;

    // x(P) lies in the class of a for odd multiples, and p(X) x(P) is a
    // square identically, so p(X)/a must be a square: a failure here can
    // only be the modulus budget.
    const SquareResult sq = fe_is_square(pX * a.inv(), budget);
    if (sq.kind == Squareness::Unknown) throw SqrtBudgetExceeded();
    if (sq.kind == Squareness::NonSquare)
      throw MathError("odd multiple left the expected square class");
    const FieldElement Y = *sq.witness;
    if (Y.is_zero()) continue;
    const FieldElement Z = W * (a * Y).inv();

    SurfacePoint sp = descend_point(S, a, c_point, BiquadricPoint{X, Y, Z});
    if (!surface_contains(S, sp))
      throw MathError("descended point failed the surface equations");
    bool dup = false;
    for (const auto& prev : points)
      if (prev.x == sp.x) dup = true;
    if (!dup) points.push_back(std::move(sp));
  }
  if (static_cast<int>(points.size()) < count)
    throw MathError("generator produced too few distinct surface points");
  return points;
}

}  // namespace zc
