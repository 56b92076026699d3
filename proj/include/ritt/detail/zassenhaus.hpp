#pragma once

// Factorization of squarefree primitive polynomials in Z[x]: factor modulo a
// small prime, Hensel-lift the modular factors above the Landau-Mignotte
// bound, and recombine subsets of lifted factors, smallest subsets first.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ritt/error.hpp"

namespace ritt::detail {

using ZPoly = std::vector<mpz_class>;  // lowest degree first, trimmed
using MPoly = std::vector<std::uint64_t>;  // coefficients in [0, p)

// ---------------------------------------------------------------- Z[x]

inline void ztrim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

inline mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Primitive part with positive leading coefficient.
inline ZPoly zprimitive(ZPoly p) {
  ztrim(p);
  if (p.empty()) return p;
  mpz_class g = zcontent(p);
  if (sgn(p.back()) < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

// Exact division a / b in Z[x]; empty optional-like flag through `ok`.
inline bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  ZPoly r(a);
  if (b.empty()) return false;
  if (r.size() < b.size()) return r.empty();
  ZPoly q(r.size() - b.size() + 1);
  for (std::size_t i = r.size(); i-- >= b.size();) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    std::size_t shift = i + 1 - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= t * b[j];
    q[shift] = t;
  }
  ztrim(r);
  if (!r.empty()) return false;
  ztrim(q);
  quotient = std::move(q);
  return true;
}

// ---------------------------------------------------------------- F_p[x]

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline void mtrim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mdeg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

inline MPoly mreduce(const ZPoly& f, std::uint64_t p) {
  MPoly r(f.size());
  mpz_class t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = t.get_ui();
  }
  mtrim(r);
  return r;
}

inline MPoly madd(const MPoly& a, const MPoly& b, std::uint64_t p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  mtrim(r);
  return r;
}

inline MPoly msub(const MPoly& a, const MPoly& b, std::uint64_t p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  mtrim(r);
  return r;
}

inline MPoly mmul(const MPoly& a, const MPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

inline MPoly mscale(const MPoly& a, std::uint64_t c, std::uint64_t p) {
  MPoly r(a);
  for (auto& v : r) v = mulmod(v, c, p);
  mtrim(r);
  return r;
}

inline std::pair<MPoly, MPoly> mdivrem(const MPoly& a, const MPoly& b, std::uint64_t p) {
  if (b.empty()) fail(ErrorCode::Internal, "modular division by zero");
  MPoly r(a);
  mtrim(r);
  if (r.size() < b.size()) return {{}, r};
  MPoly q(r.size() - b.size() + 1, 0);
  const std::uint64_t inv = invmod(b.back(), p);
  for (std::size_t i = r.size(); i-- >= b.size();) {
    if (r[i] == 0) continue;
    std::uint64_t t = mulmod(r[i], inv, p);
    std::size_t shift = i + 1 - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = (r[shift + j] + p - mulmod(t, b[j], p)) % p;
    q[shift] = t;
  }
  mtrim(r);
  mtrim(q);
  return {q, r};
}

inline MPoly mrem(const MPoly& a, const MPoly& b, std::uint64_t p) { return mdivrem(a, b, p).second; }

inline MPoly mmonic(const MPoly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return mscale(a, invmod(a.back(), p), p);
}

inline MPoly mgcd(MPoly a, MPoly b, std::uint64_t p) {
  while (!b.empty()) {
    MPoly r = mrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

// s, t with s a + t b = 1 (a, b coprime), deg s < deg b, deg t < deg a.
inline std::pair<MPoly, MPoly> mbezout(const MPoly& a, const MPoly& b, std::uint64_t p) {
  MPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mdivrem(r0, r1, p);
    MPoly s = msub(s0, mmul(q, s1, p), p);
    MPoly t = msub(t0, mmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.size() != 1) fail(ErrorCode::Internal, "Bezout coefficients of non-coprime polynomials");
  const std::uint64_t inv = invmod(r0[0], p);
  return {mscale(s0, inv, p), mscale(t0, inv, p)};
}

inline MPoly mderivative(const MPoly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  MPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  mtrim(r);
  return r;
}

// base^e mod f, with a multiprecision exponent.
inline MPoly mpowmod(const MPoly& base, const mpz_class& e, const MPoly& f, std::uint64_t p) {
  MPoly result{1};
  MPoly b = mrem(base, f, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mrem(mmul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mrem(mmul(result, b, p), f, p);
  }
  return result;
}

// Distinct-degree factorization of a monic squarefree f: pairs (product of
// all irreducible factors of degree d, d).
inline std::vector<std::pair<MPoly, int>> distinct_degree(MPoly f, std::uint64_t p) {
  std::vector<std::pair<MPoly, int>> out;
  const MPoly x{0, 1};
  MPoly h = x;
  const mpz_class pz = static_cast<unsigned long>(p);
  for (int d = 1; 2 * d <= mdeg(f); ++d) {
    h = mpowmod(h, pz, f, p);
    MPoly g = mgcd(f, msub(h, x, p), p);
    if (mdeg(g) > 0) {
      out.emplace_back(g, d);
      f = mdivrem(f, g, p).first;
      h = mrem(h, f, p);
    }
  }
  if (mdeg(f) > 0) out.emplace_back(f, mdeg(f));
  return out;
}

// Cantor-Zassenhaus splitting of a product of irreducibles of degree d
// (p odd). The generator is seeded by the caller so results are reproducible.
inline void equal_degree(const MPoly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<MPoly>& out) {
  const int n = mdeg(f);
  if (n == d) {
    out.push_back(mmonic(f, p));
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  while (true) {
    MPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = dist(rng);
    mtrim(a);
    if (mdeg(a) < 1) continue;
    MPoly b = mpowmod(a, e, f, p);
    b = msub(b, MPoly{1}, p);
    MPoly g = mgcd(f, b, p);
    if (mdeg(g) > 0 && mdeg(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(mdivrem(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over F_p.
inline std::vector<MPoly> factor_mod_p(const MPoly& f, std::uint64_t p) {
  std::mt19937_64 rng(0x5eed + p);
  std::vector<MPoly> out;
  for (const auto& [g, d] : distinct_degree(f, p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const MPoly& a, const MPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// ---------------------------------------------------------------- Hensel lifting

inline ZPoly zreduce_mod(const ZPoly& a, const mpz_class& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

inline ZPoly from_mpoly(const MPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

// F monic modulo p^k, F = g h (mod p) with g, h monic and coprime mod p.
// Linear lifting; returns monic G, H with F = G H (mod p^k).
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, const MPoly& g, const MPoly& h, std::uint64_t p, int k) {
  auto [s, t] = mbezout(g, h, p);
  ZPoly G = from_mpoly(g), H = from_mpoly(h);
  mpz_class pj = static_cast<unsigned long>(p);
  for (int j = 1; j < k; ++j) {
    ZPoly gh = zmul(G, H);
    ZPoly E(std::max(F.size(), gh.size()));
    for (std::size_t i = 0; i < F.size(); ++i) E[i] += F[i];
    for (std::size_t i = 0; i < gh.size(); ++i) E[i] -= gh[i];
    for (auto& c : E) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    ztrim(E);
    MPoly e = mreduce(E, p);
    auto [q, r] = mdivrem(mmul(s, e, p), h, p);
    MPoly dg = madd(mmul(t, e, p), mmul(q, g, p), p);
    const MPoly& dh = r;
    for (std::size_t i = 0; i < dg.size(); ++i) G[i] += pj * static_cast<unsigned long>(dg[i]);
    for (std::size_t i = 0; i < dh.size(); ++i) H[i] += pj * static_cast<unsigned long>(dh[i]);
    pj *= static_cast<unsigned long>(p);
  }
  return {G, H};
}

inline void hensel_tree(const ZPoly& F, const std::vector<MPoly>& factors, std::size_t lo, std::size_t hi,
                        std::uint64_t p, int k, const mpz_class& modulus, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zreduce_mod(F, modulus));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  MPoly g{1}, h{1};
  for (std::size_t i = lo; i < mid; ++i) g = mmul(g, factors[i], p);
  for (std::size_t i = mid; i < hi; ++i) h = mmul(h, factors[i], p);
  auto [G, H] = hensel_pair(F, g, h, p, k);
  hensel_tree(zreduce_mod(G, modulus), factors, lo, mid, p, k, modulus, out);
  hensel_tree(zreduce_mod(H, modulus), factors, mid, hi, p, k, modulus, out);
}

// ---------------------------------------------------------------- driver

inline bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Symmetric representative of c modulo m.
inline mpz_class symmetric_mod(const mpz_class& c, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

struct PrimeChoice {
  std::uint64_t p = 0;
  std::vector<MPoly> factors;
};

// Among the first few usable primes (p >= 3, p does not divide lc(f), f
// squarefree mod p) keep the one giving the fewest modular factors; ties go
// to the smaller prime.
inline PrimeChoice choose_prime(const ZPoly& f, int candidates = 5) {
  PrimeChoice best;
  int usable = 0;
  for (std::uint64_t p = 3; usable < candidates; p += 2) {
    if (!is_small_prime(p)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    MPoly fp = mreduce(f, p);
    if (mdeg(mgcd(fp, mderivative(fp, p), p)) != 0) continue;
    ++usable;
    auto factors = factor_mod_p(mmonic(fp, p), p);
    if (best.p == 0 || factors.size() < best.factors.size()) {
      best.p = p;
      best.factors = std::move(factors);
    }
    if (best.factors.size() == 1) break;
  }
  return best;
}

// Landau-Mignotte style bound on the coefficients of lc(f) * g / lc(g) for any
// factor g of f: |lc(f)| * 2^deg(f) * ||f||_2.
inline mpz_class lifting_bound(const ZPoly& f) {
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  mpz_class b = abs(f.back()) * root;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(zdeg(f)));
  return b;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors over Z of a squarefree primitive f with deg f >= 1 and
// positive leading coefficient. Factors are primitive with positive leading
// coefficient.
inline std::vector<ZPoly> zassenhaus(ZPoly f) {
  f = zprimitive(std::move(f));
  if (zdeg(f) <= 1) return {f};
  PrimeChoice choice = choose_prime(f);
  if (choice.factors.size() <= 1) return {f};
  const std::uint64_t p = choice.p;

  const mpz_class bound = 2 * lifting_bound(f);
  mpz_class modulus = static_cast<unsigned long>(p);
  int k = 1;
  while (modulus <= bound) {
    modulus *= static_cast<unsigned long>(p);
    ++k;
  }

  mpz_class lc_inv;
  mpz_class lc_mod;
  mpz_fdiv_r(lc_mod.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
  mpz_invert(lc_inv.get_mpz_t(), lc_mod.get_mpz_t(), modulus.get_mpz_t());
  ZPoly F(f);
  for (auto& c : F) c *= lc_inv;
  F = zreduce_mod(F, modulus);

  std::vector<ZPoly> lifted;
  hensel_tree(F, choice.factors, 0, choice.factors.size(), p, k, modulus, lifted);

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  for (std::size_t size = 1; 2 * size <= remaining.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    do {
      const mpz_class& lc = f.back();
      // Cheap constant-term test first.
      mpz_class c0 = lc;
      for (auto i : idx) c0 = (c0 * (lifted[remaining[i]].empty() ? mpz_class(0) : lifted[remaining[i]][0])) % modulus;
      c0 = symmetric_mod(c0, modulus);
      if (sgn(c0) == 0) {
        if (sgn(f[0]) != 0) continue;
      } else if (!mpz_divisible_p(mpz_class(lc * f[0]).get_mpz_t(), c0.get_mpz_t())) {
        continue;
      }
      ZPoly g{lc};
      for (auto i : idx) g = zreduce_mod(zmul(g, lifted[remaining[i]]), modulus);
      for (auto& c : g) c = symmetric_mod(c, modulus);
      ztrim(g);
      g = zprimitive(g);
      ZPoly quotient;
      if (!zdivides(f, g, quotient)) continue;
      result.push_back(g);
      f = quotient;
      std::vector<std::size_t> next;
      std::size_t pos = 0;
      for (std::size_t j = 0; j < remaining.size(); ++j) {
        if (pos < idx.size() && idx[pos] == j) {
          ++pos;
          continue;
        }
        next.push_back(remaining[j]);
      }
      remaining = std::move(next);
      found = true;
      break;
    } while (next_combination(idx, remaining.size()));
    if (!found) ++size;
  }
  if (zdeg(f) > 0) result.push_back(zprimitive(f));
  return result;
}

}  // namespace ritt::detail
