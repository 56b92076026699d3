#pragma once

// Shared helpers for the test binaries: fixed fields, seeded random
// generators, and independent oracles that do not go through the library's
// own algorithms.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ritt/ritt.hpp"

namespace ritt {

// Readable values in assertion failures.
inline void PrintTo(const FieldElement& a, std::ostream* os) { *os << to_string(a); }
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const RationalFunction& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const MoebiusUnit& u, std::ostream* os) { *os << to_string(u); }
inline void PrintTo(const FiniteUnitGroup& g, std::ostream* os) { *os << to_string(g); }
inline void PrintTo(const Field& k, std::ostream* os) { *os << to_string(k); }

}  // namespace ritt

namespace rt {

using namespace ritt;

inline const Field& Q() {
  static const Field k = Field::rationals();
  return k;
}
inline const Field& Qi() {
  static const Field k = parse_field("Q[i]/(i^2+1)");
  return k;
}
inline const Field& Qw() {
  static const Field k = parse_field("Q[w]/(w^3-2)");
  return k;
}
inline const Field& Qa() {
  static const Field k = parse_field("Q[a]/(a^2+a+1)");
  return k;
}

inline RationalFunction F(const std::string& s, const Field& k = Q()) { return parse_expression(s, k); }
inline Polynomial P(const std::string& s, const Field& k = Q()) {
  const RationalFunction f = parse_expression(s, k);
  EXPECT_TRUE(f.is_polynomial()) << s;
  return f.num();
}
inline MoebiusUnit U(const std::string& s, const Field& k = Q()) { return MoebiusUnit::from_rf(F(s, k)); }
inline FieldElement E(const std::string& s, const Field& k) { return F(s, k).eval(k.zero()); }

inline FiniteUnitGroup group_of(const std::vector<std::string>& us, const Field& k = Q()) {
  std::vector<MoebiusUnit> v;
  for (const auto& s : us) v.push_back(U(s, k));
  return FiniteUnitGroup(k, v);
}

// Closure of a generating set under composition, by repeated products.
inline FiniteUnitGroup generated(const std::vector<MoebiusUnit>& gens) {
  const Field& k = gens.front().field();
  std::set<MoebiusUnit> s{MoebiusUnit::identity(k)};
  std::vector<MoebiusUnit> frontier{MoebiusUnit::identity(k)};
  while (!frontier.empty()) {
    std::vector<MoebiusUnit> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        MoebiusUnit p = compose(a, g);
        if (s.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
    if (s.size() > 200) break;
  }
  return FiniteUnitGroup(k, std::vector<MoebiusUnit>(s.begin(), s.end()));
}

// Cyclic and dihedral groups realized in PGL2(Q), n in {2, 3, 4, 6}.
inline MoebiusUnit rotation(int n) {
  switch (n) {
    case 2: return U("-x");
    case 3: return U("1/(1-x)");
    case 4: return U("(x+1)/(1-x)");
    case 6: return U("(2*x+1)/(1-x)");
  }
  throw std::invalid_argument("rotation order");
}
inline MoebiusUnit reflection(int n) {
  switch (n) {
    case 2: return U("1/x");
    case 3: return U("1-x");
    case 4: return U("-x");
    case 6: return U("1/x");
  }
  throw std::invalid_argument("reflection order");
}
inline FiniteUnitGroup cyclic_q(int n) { return generated({rotation(n)}); }
inline FiniteUnitGroup dihedral_q(int n) { return generated({rotation(n), reflection(n)}); }

// ---------------------------------------------------------------- random

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  BigRational rational(long bound = 5) {
    BigRational q(integer(-bound, bound), integer(1, 3));
    q.canonicalize();
    return q;
  }

  FieldElement element(const Field& k, long bound = 5) {
    std::vector<BigRational> cs;
    for (int i = 0; i < k.degree(); ++i) cs.push_back(i == 0 || coin() ? rational(bound) : BigRational(0));
    return FieldElement(k, cs);
  }

  FieldElement nonzero(const Field& k, long bound = 5) {
    for (;;) {
      auto e = element(k, bound);
      if (!e.is_zero()) return e;
    }
  }

  Polynomial poly(const Field& k, int deg, long bound = 5) {
    std::vector<FieldElement> cs;
    for (int i = 0; i < deg; ++i) cs.push_back(element(k, bound));
    cs.push_back(nonzero(k, bound));
    return Polynomial(k, cs);
  }

  // Integer coefficients in [-bound, bound], exact degree `deg`.
  Polynomial int_poly(int deg, long bound) {
    std::vector<BigRational> cs;
    for (int i = 0; i < deg; ++i) cs.emplace_back(integer(-bound, bound));
    long lead = 0;
    while (lead == 0) lead = integer(-bound, bound);
    cs.emplace_back(lead);
    return Polynomial::from_rationals(Q(), cs);
  }

  // Nonconstant rational function with 1 <= degree <= max_deg.
  RationalFunction rf(const Field& k, int max_deg, long bound = 4) {
    for (;;) {
      const int dn = static_cast<int>(integer(0, max_deg));
      const int dd = static_cast<int>(integer(0, max_deg));
      RationalFunction f(poly(k, dn, bound), poly(k, dd, bound));
      if (!f.is_constant()) return f;
    }
  }

  RationalFunction rf_of_degree(const Field& k, int deg, long bound = 4) {
    for (;;) {
      RationalFunction f = rf(k, deg, bound);
      if (f.degree() == deg) return f;
    }
  }

  MoebiusUnit unit(const Field& k, long bound = 3) {
    for (;;) {
      auto a = element(k, bound), b = element(k, bound), c = element(k, bound), d = element(k, bound);
      if (!(a * d - b * c).is_zero()) return MoebiusUnit(a, b, c, d);
    }
  }

  // Normal form: deg num > deg den, num(0) = 0.
  RationalFunction normal_rf(const Field& k, int deg, long bound = 4) {
    for (;;) {
      Polynomial n = poly(k, deg - 1, bound) * Polynomial::x(k);
      Polynomial d = poly(k, static_cast<int>(integer(0, deg - 1)), bound);
      RationalFunction f(n, d);
      if (f.degree() == deg && is_normal_form(f)) return f;
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Groups over Q used by the property suites.
inline std::vector<FiniteUnitGroup> q_groups() {
  std::vector<FiniteUnitGroup> out;
  for (int n : {2, 3, 4, 6}) {
    out.push_back(cyclic_q(n));
    out.push_back(dihedral_q(n));
  }
  return out;
}

// conj(G, u) = { u^-1 o w o u : w in G }.
inline FiniteUnitGroup conjugate(const FiniteUnitGroup& g, const MoebiusUnit& u) {
  std::vector<MoebiusUnit> out;
  for (const auto& w : g.elements()) out.push_back(compose(compose(u.inverse(), w), u));
  return FiniteUnitGroup(g.field(), out);
}

// Random f whose fixing group contains a chosen group, or a plain random f.
inline RationalFunction random_invariant(Rng& rng, const Field& k, int max_degree) {
  const auto gs = q_groups();
  for (int tries = 0; tries < 20; ++tries) {
    if (rng.integer(0, 3) == 0) break;
    const FiniteUnitGroup& h = gs[static_cast<std::size_t>(rng.integer(0, static_cast<long>(gs.size()) - 1))];
    const int outer = max_degree / static_cast<int>(h.order());
    if (outer < 1) continue;
    RationalFunction t = fixed_field(h);
    if (!k.is_rational()) t = embed(t, k);
    return compose(rng.rf_of_degree(k, static_cast<int>(rng.integer(1, outer)), 3), t);
  }
  return rng.rf(k, max_degree, 3);
}

// ---------------------------------------------------------------- oracles

// Determinant by cofactor-free fraction Gaussian elimination on mpq values.
inline BigRational determinant(std::vector<std::vector<BigRational>> m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigRational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

// Resultant over Q as the determinant of the Sylvester matrix.
inline BigRational sylvester_resultant(const Polynomial& a, const Polynomial& b) {
  const int m = a.degree(), n = b.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return 1;
  std::vector<std::vector<BigRational>> s(size, std::vector<BigRational>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = a.coeff(m - j).rational_part();
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = b.coeff(n - j).rational_part();
  return determinant(s);
}

// Integer polynomial helpers for the brute-force factoring oracle.
using IntPoly = std::vector<BigInt>;  // lowest degree first

inline IntPoly primitive_int(const Polynomial& f) {
  BigInt l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational_part().get_den_mpz_t());
  IntPoly out;
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    BigRational v = c.rational_part() * l;
    out.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

inline BigInt ieval(const IntPoly& f, long x) {
  BigInt r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

// Exact division of integer polynomials; empty result when it does not divide.
inline std::optional<IntPoly> idiv(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  IntPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const BigInt& top = a[i + b.size() - 1];
    if (top % b.back() != 0) return std::nullopt;
    q[i] = top / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (const auto& c : a)
    if (c != 0) return std::nullopt;
  return q;
}

inline std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

// Landau-Mignotte bound on the coefficients of any degree-d factor of f.
inline BigInt mignotte_bound(const IntPoly& f, int d) {
  BigRational norm2 = 0;
  for (const auto& c : f) norm2 += BigRational(c * c);
  BigInt root;
  BigInt n2 = norm2.get_num();
  mpz_sqrt(root.get_mpz_t(), n2.get_mpz_t());
  root += 1;
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(d / 2));
  return binom * root;
}

// A nontrivial factor of degree d of f found by Kronecker interpolation over
// candidate divisor values, filtered by the Landau-Mignotte bound.
inline std::optional<IntPoly> kronecker_factor(const IntPoly& f, int d) {
  struct Point {
    long x;
    std::vector<BigInt> divisors;
  };
  std::vector<Point> pts;
  for (long x = 0; pts.size() < 24 && x <= 40; x = x > 0 ? -x : -x + 1) {
    BigInt v = ieval(f, x);
    if (v != 0) pts.push_back({x, positive_divisors(v)});
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });
  pts.resize(static_cast<std::size_t>(d + 1));
  // Lagrange basis polynomials for the chosen abscissae.
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<BigRational> b{1};
    BigRational denom = 1;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      std::vector<BigRational> nb(b.size() + 1, 0);
      for (std::size_t t = 0; t < b.size(); ++t) {
        nb[t + 1] += b[t];
        nb[t] -= b[t] * pts[j].x;
      }
      b = nb;
      denom *= BigRational(pts[i].x - pts[j].x);
    }
    for (auto& c : b) c /= denom;
    basis.push_back(b);
  }
  std::vector<std::vector<BigInt>> choices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<BigInt> c;
    for (const auto& p : pts[i].divisors) {
      c.push_back(p);
      if (i > 0) c.push_back(-p);
    }
    choices.push_back(c);
  }
  const BigInt bound = mignotte_bound(f, d);
  std::vector<std::size_t> idx(choices.size(), 0);
  std::vector<BigRational> g(static_cast<std::size_t>(d + 1));
  for (;;) {
    std::fill(g.begin(), g.end(), BigRational(0));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t t = 0; t < g.size(); ++t) g[t] += basis[i][t] * choices[i][idx[i]];
    bool ok = g.back() != 0;
    IntPoly gi;
    for (const auto& c : g) {
      if (!ok) break;
      if (c.get_den() != 1 || abs(c.get_num()) > bound) ok = false;
      else gi.push_back(c.get_num());
    }
    if (ok && idiv(f, gi)) return gi;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) return std::nullopt;
  }
}

// Irreducible factors over Z (primitive, positive leading coefficient), by
// searching for the smallest-degree divisor.
inline std::multiset<IntPoly> brute_force_factor(IntPoly f) {
  std::multiset<IntPoly> out;
  while (f.size() > 1) {
    const int n = static_cast<int>(f.size()) - 1;
    bool split = false;
    if (f[0] == 0) {
      out.insert(IntPoly{0, 1});
      f.erase(f.begin());
      continue;
    }
    for (int d = 1; d <= n / 2 && !split; ++d) {
      if (auto g = kronecker_factor(f, d)) {
        if (g->back() < 0)
          for (auto& c : *g) c = -c;
        f = *idiv(f, *g);
        out.merge(brute_force_factor(*g));
        split = true;
      }
    }
    if (!split) {
      if (f.back() < 0)
        for (auto& c : f) c = -c;
      out.insert(f);
      break;
    }
  }
  return out;
}

// The library's factorization of f over Q as primitive integer factors.
inline std::multiset<IntPoly> library_factor(const Polynomial& f) {
  std::multiset<IntPoly> out;
  for (const auto& [p, m] : factor_over_rationals(f).factors)
    for (int i = 0; i < m; ++i) out.insert(primitive_int(p));
  return out;
}

// True when evaluating the chain c[0] o c[1] o ... at rational points agrees
// with `target` at more points than the degree of the difference allows,
// independent of the homogenized composition routine.
inline bool composes_pointwise(const RationalFunction& target, const std::vector<RationalFunction>& chain) {
  const Field& k = target.field();
  int deg = 1;
  for (const auto& c : chain) deg *= c.degree();
  const int needed = target.degree() + deg + 1;
  int tested = 0;
  for (long t = -200; t <= 200 && tested < needed; ++t) {
    BigRational q(t, 7);
    q.canonicalize();
    const FieldElement x0 = k.from(q);
    if (target.den().eval(x0).is_zero()) continue;
    FieldElement x = x0;
    bool pole = false;
    for (auto it = chain.rbegin(); it != chain.rend() && !pole; ++it) {
      if (it->den().eval(x).is_zero()) pole = true;
      else x = it->eval(x);
    }
    if (pole) continue;
    if (x != target.eval(x0)) return false;
    ++tested;
  }
  return tested >= needed;
}

}  // namespace rt

#define EXPECT_RITT_ERROR(stmt, expected_code)                                   \
  do {                                                                         \
    try {                                                                      \
      (void)(stmt);                                                            \
      ADD_FAILURE() << "expected " << ::ritt::to_string(expected_code);        \
    } catch (const ::ritt::Error& e) {                                         \
      EXPECT_EQ(e.code(), expected_code) << e.what();                          \
    }                                                                          \
  } while (0)
