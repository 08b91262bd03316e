// Copyright 2026 the zerocycle authors
// SPDX-License-Identifier: Apache-2.0

#include "zerocycle/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "zerocycle/errors.hpp"

namespace zc {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& a) {
  if (a == 0) return UniPoly();
  return UniPoly({a});
}

UniPoly UniPoly::monomial(int k, const Rat& a) {
  if (a == 0) return UniPoly();
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = a;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rat(s));
  return UniPoly(std::move(c));
}

const Rat& UniPoly::coeff(int k) const {
  static const Rat zero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

const Rat& UniPoly::leading() const {
  if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& a : r.c_) a = -a;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& s) const {
  if (s == 0) return UniPoly();
  UniPoly r(*this);
  for (auto& a : r.c_) a *= s;
  return r;
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (degree() < d.degree()) return {UniPoly(), *this};
  std::vector<Rat> rem = c_;
  std::vector<Rat> quo(degree() - d.degree() + 1, Rat(0));
  const Rat& lc = d.leading();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    Rat q = rem[k + d.degree()] / lc;
    quo[k] = q;
    if (q == 0) continue;
    for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= q * d.c_[i];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rat(1) / a.leading());
}

void UniPoly::xgcd(const UniPoly& a, const UniPoly& b, UniPoly& g, UniPoly& s, UniPoly& t) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  g = r0; s = s0; t = t0;
  if (!g.is_zero()) {
    Rat inv = Rat(1) / g.leading();
    g = g * inv; s = s * inv; t = t * inv;
  }
}

Rat UniPoly::resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  int m = a.degree(), n = b.degree();
  if (m == 0) {
    Rat r(1);
    for (int i = 0; i < n; ++i) r *= a.leading();
    return r;
  }
  if (n == 0) {
    Rat r(1);
    for (int i = 0; i < m; ++i) r *= b.leading();
    return r;
  }
  UniPoly r = a % b;
  if (r.is_zero()) return 0;
  int d = r.degree();
  Rat lead(1);
  for (int i = 0; i < m - d; ++i) lead *= b.leading();
  Rat sign = (m % 2 != 0 && n % 2 != 0) ? Rat(-1) : Rat(1);
  return sign * lead * resultant(b, r);
}

Rat UniPoly::discriminant() const {
  int n = degree();
  if (n < 1) throw MathError("discriminant needs degree >= 1");
  Rat res = resultant(*this, derivative());
  Rat sign = ((n * (n - 1) / 2) % 2 != 0) ? Rat(-1) : Rat(1);
  return sign * res / leading();
}

bool UniPoly::is_squarefree() const {
  if (degree() < 1) return !is_zero();
  return gcd(*this, derivative()).degree() == 0;
}

namespace {

std::vector<Int> positive_divisors(const Int& n) {
  Int m = abs(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= m; ++d) {
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      Int q = m / d;
      if (q != d) large.push_back(q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rat> UniPoly::rational_roots() const {
  std::vector<Rat> roots;
  if (degree() < 1) return roots;

  // Clear denominators to a primitive integer polynomial.
  Int den_lcm = 1;
  for (const auto& a : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), rat_den(a).get_mpz_t());
  std::vector<Int> z(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    Rat s = c_[i] * Rat(den_lcm);
    z[i] = rat_num(s);
  }
  size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low + 1 >= z.size()) return roots;

  for (const Int& p : positive_divisors(z[low]))
    for (const Int& q : positive_divisors(z.back())) {
      Rat cand(p, q);
      cand.canonicalize();
      if (eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
        roots.push_back(cand);
      cand = -cand;
      if (eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
        roots.push_back(cand);
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool UniPoly::irreducible_deg_le3() const {
  int n = degree();
  if (n < 1) return false;
  if (n == 1) return true;
  if (n > 3) throw DegreeMismatch("rational-root irreducibility test only decides degree <= 3");
  return rational_roots().empty();
}

namespace {

int sign_of(const Rat& q) {
  return sgn(q);
}

// Sign variation count of the Sturm chain evaluated at x.
int variations(const std::vector<UniPoly>& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

std::vector<UniPoly> sturm_chain(const UniPoly& f) {
  // Work with the squarefree part so variation differences count distinct
  // real roots even for inputs with repeated factors.
  UniPoly g = f;
  UniPoly d = UniPoly::gcd(f, f.derivative());
  if (d.degree() > 0) g = (f / d);
  std::vector<UniPoly> chain;
  chain.push_back(g);
  chain.push_back(g.derivative());
  while (!chain.back().is_zero()) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain.back();
    chain.push_back(-(a % b));
  }
  chain.pop_back();
  return chain;
}

}  // namespace

int UniPoly::sturm_count(const Rat& a, const Rat& b) const {
  if (degree() < 1) return 0;
  if (!(a < b)) return 0;
  auto chain = sturm_chain(*this);
  return variations(chain, a) - variations(chain, b);
}

Rat UniPoly::root_bound() const {
  if (degree() < 1) return 1;
  Rat m(0);
  for (int i = 0; i < degree(); ++i) {
    Rat t = abs(coeff(i) / leading());
    if (t > m) m = t;
  }
  return m + 1;
}

int UniPoly::real_root_count() const {
  if (degree() < 1) return 0;
  Rat M = root_bound();
  return sturm_count(-M, M);
}

std::vector<std::pair<Rat, Rat>> UniPoly::isolate_real_roots() const {
  std::vector<std::pair<Rat, Rat>> out;
  if (degree() < 1) return out;
  auto chain = sturm_chain(*this);
  Rat M = root_bound();
  // Work queue of half-open intervals (lo, hi] with their variation counts.
  struct Item { Rat lo, hi; int vlo, vhi; };
  std::vector<Item> work;
  int vlo = variations(chain, -M), vhi = variations(chain, M);
  if (vlo - vhi > 0) work.push_back({-M, M, vlo, vhi});
  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    int count = it.vlo - it.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.emplace_back(it.lo, it.hi);
      continue;
    }
    Rat mid = (it.lo + it.hi) / 2;
    int vm = variations(chain, mid);
    work.push_back({mid, it.hi, vm, it.vhi});
    work.push_back({it.lo, mid, it.vlo, vm});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& a = coeff(k);
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
  return os.str();
}

}  // namespace zc
