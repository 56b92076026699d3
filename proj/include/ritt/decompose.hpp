#pragma once

// Normal forms, single-step decomposition and complete decomposition chains.
//
// A function is in normal form when deg num > deg den and num(0) = 0. Every
// decomposition of a normal-form f is equivalent to one with both components
// in normal form, and then num(h) | num(f), den(h) | den(f). Right components
// are therefore enumerated from the divisors of num(f) and den(f), and the left
// component is recovered from a linear system.

#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ritt/factor.hpp"
#include "ritt/moebius.hpp"

namespace ritt {

struct Decomposition {
  RationalFunction left;   // g
  RationalFunction right;  // h, with f = g o h
};

struct DecompositionChain {
  std::vector<RationalFunction> components;  // f = c[0] o c[1] o ... o c[r-1]

  RationalFunction compose() const { return compose_all(components); }
  std::size_t length() const { return components.size(); }
};

struct NormalForm {
  MoebiusUnit u, v;
  RationalFunction fbar;  // u o f o v
};

// Largest degree accepted by complete_chains.
constexpr int kMaxChainDegree = 64;

inline void require_nonconstant(const RationalFunction& f) {
  if (f.is_constant()) fail(ErrorCode::ConstantInput, "expected a nonconstant rational function");
}

inline bool is_normal_form(const RationalFunction& f) {
  require_nonconstant(f);
  return f.num().degree() > f.den().degree() && f.num().coeff(0).is_zero();
}

inline NormalForm normal_form(const RationalFunction& f) {
  require_nonconstant(f);
  const Field& k = f.field();
  MoebiusUnit u = MoebiusUnit::identity(k);
  RationalFunction g = f;
  if (g.num().degree() == g.den().degree()) {
    const FieldElement a = g.num().lc() / g.den().lc();
    u = MoebiusUnit(k.zero(), k.one(), k.one(), -a);  // 1/(x - a)
    g = u.apply(g);
  } else if (g.num().degree() < g.den().degree()) {
    u = MoebiusUnit(k.zero(), k.one(), k.one(), k.zero());  // 1/x
    g = u.apply(g);
  }
  long b = 0;
  while (g.den().eval(k.from(b)).is_zero()) ++b;
  const MoebiusUnit v = MoebiusUnit::affine(k.one(), k.from(b));
  if (b != 0) g = compose(g, v);
  const FieldElement c = g.eval(k.zero());
  if (!c.is_zero()) {
    const MoebiusUnit shift = MoebiusUnit::affine(k.one(), -c);
    g = shift.apply(g);
    u = compose(shift, u);
  }
  return {u, v, g};
}

// g with f = g o h, if one exists.
inline std::optional<RationalFunction> left_solve(const RationalFunction& f, const RationalFunction& h) {
  require_nonconstant(f);
  require_nonconstant(h);
  require_same_field(f.field(), h.field());
  if (f.degree() % h.degree() != 0) fail(ErrorCode::DegreeMismatch, "deg h does not divide deg f");
  const Field& k = f.field();
  const int n = f.degree() / h.degree();
  auto ppow = detail::powers(h.num(), n);
  auto qpow = detail::powers(h.den(), n);
  // Columns 0..n: coefficients of g_N; n+1..2n+1: coefficients of g_D.
  // f_N * sum gD_i P^i Q^(n-i) - f_D * sum gN_i P^i Q^(n-i) = 0.
  std::vector<Polynomial> cols;
  for (int i = 0; i <= n; ++i) cols.push_back(-(f.den() * ppow[static_cast<std::size_t>(i)] * qpow[static_cast<std::size_t>(n - i)]));
  for (int i = 0; i <= n; ++i) cols.push_back(f.num() * ppow[static_cast<std::size_t>(i)] * qpow[static_cast<std::size_t>(n - i)]);
  int rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
  Matrix m(k, static_cast<std::size_t>(rows), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int r = 0; r <= cols[j].degree(); ++r) m(static_cast<std::size_t>(r), j) = cols[j].coeffs()[static_cast<std::size_t>(r)];
  for (const auto& v : nullspace(m)) {
    const auto mid = v.begin() + n + 1;
    Polynomial gn(k, std::vector<FieldElement>(v.begin(), mid));
    Polynomial gd(k, std::vector<FieldElement>(mid, v.end()));
    if (gd.is_zero()) continue;
    RationalFunction g(gn, gd);
    if (g.is_constant()) continue;
    if (compose(g, h) == f) return g;
  }
  return std::nullopt;
}

// u with f1 = u o f2, if K(f1) = K(f2).
inline std::optional<MoebiusUnit> same_field(const RationalFunction& f1, const RationalFunction& f2) {
  require_same_field(f1.field(), f2.field());
  require_nonconstant(f1);
  require_nonconstant(f2);
  if (f1.degree() != f2.degree()) return std::nullopt;
  const Field& k = f1.field();
  // f1_N (c f2_N + d f2_D) - f1_D (a f2_N + b f2_D) = 0, columns a, b, c, d.
  const std::vector<Polynomial> cols{-(f1.den() * f2.num()), -(f1.den() * f2.den()), f1.num() * f2.num(),
                                     f1.num() * f2.den()};
  int rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
  Matrix m(k, static_cast<std::size_t>(rows), 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (int r = 0; r <= cols[j].degree(); ++r) m(static_cast<std::size_t>(r), j) = cols[j].coeffs()[static_cast<std::size_t>(r)];
  for (const auto& v : nullspace(m)) {
    if ((v[0] * v[3] - v[1] * v[2]).is_zero()) continue;
    MoebiusUnit u(v[0], v[1], v[2], v[3]);
    if (u.apply(f2) == f1) return u;
  }
  return std::nullopt;
}

namespace detail {

// Monic divisors of a nonzero polynomial, from its factorization.
inline std::vector<Polynomial> monic_divisors(const Polynomial& p) {
  std::vector<Polynomial> out{Polynomial::constant(p.field().one())};
  if (p.degree() < 1) return out;
  for (const auto& [q, m] : factor(p).factors) {
    const std::size_t base = out.size();
    Polynomial qk = Polynomial::constant(p.field().one());
    for (int e = 1; e <= m; ++e) {
      qk *= q;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * qk);
    }
  }
  return out;
}

}  // namespace detail

// Candidate right components h of a normal-form fbar: normal form, monic
// numerator and denominator, num(h) | num(fbar), den(h) | den(fbar), and
// 1 < deg h < deg fbar with deg h | deg fbar.
inline std::vector<RationalFunction> right_candidates(const RationalFunction& fbar) {
  if (!is_normal_form(fbar)) fail(ErrorCode::NotNormalForm, "right_candidates needs a normal-form function");
  const Field& k = fbar.field();
  const int m = fbar.degree();
  const Polynomial x = Polynomial::x(k);
  std::vector<RationalFunction> out;
  const auto nums = detail::monic_divisors(fbar.num() / x);
  const auto dens = detail::monic_divisors(fbar.den());
  for (const auto& n0 : nums) {
    const int dn = n0.degree() + 1;
    if (dn <= 1 || dn >= m || m % dn != 0) continue;
    const Polynomial hn = n0 * x;
    for (const auto& hd : dens) {
      if (hd.degree() >= dn) continue;
      out.emplace_back(hn, hd);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All decompositions f = g o h with deg g, deg h >= 2, one per equivalence
// class. Empty when f is indecomposable.
inline std::vector<Decomposition> decompose_once(const RationalFunction& f) {
  require_nonconstant(f);
  std::vector<Decomposition> out;
  if (f.degree() < 4) {
    // Prime degrees 2 and 3 admit no nontrivial split.
    return out;
  }
  const NormalForm nf = normal_form(f);
  const MoebiusUnit u_inv = nf.u.inverse();
  const MoebiusUnit v_inv = nf.v.inverse();
  for (const auto& h : right_candidates(nf.fbar)) {
    auto g = left_solve(nf.fbar, h);
    if (!g) continue;
    Decomposition d{u_inv.apply(*g), compose(h, v_inv)};
    bool seen = false;
    for (const auto& e : out)
      if (same_field(e.right, d.right)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(d));
  }
  return out;
}

// u with h1 = u o h2 and g1 = g2 o u^-1, if the decompositions are equivalent.
inline std::optional<MoebiusUnit> equivalent_decompositions(const Decomposition& d1, const Decomposition& d2) {
  if (compose(d1.left, d1.right) != compose(d2.left, d2.right))
    fail(ErrorCode::NotSameTarget, "decompositions of different functions");
  auto u = same_field(d1.right, d2.right);
  if (!u) return std::nullopt;
  if (compose(d2.left, u->inverse()) != d1.left) return std::nullopt;
  return u;
}

// Two chains of f are equivalent when they have the same length and the same
// intermediate fields K(c_j o ... o c_r) for every j.
inline bool equivalent_chains(const DecompositionChain& a, const DecompositionChain& b) {
  if (a.length() != b.length() || a.length() == 0) return false;
  RationalFunction ta = a.components.back(), tb = b.components.back();
  for (std::size_t i = a.length() - 1;; --i) {
    if (!same_field(ta, tb)) return false;
    if (i <= 1) return true;
    ta = compose(a.components[i - 1], ta);
    tb = compose(b.components[i - 1], tb);
  }
}

namespace detail {

class ChainBuilder {
 public:
  std::vector<DecompositionChain> chains(const RationalFunction& f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    std::vector<DecompositionChain> out;
    const auto& ds = decompositions(f);
    if (ds.empty()) {
      out.push_back({{f}});
    } else {
      for (const auto& d : ds) {
        if (!decompositions(d.right).empty()) continue;
        for (auto c : chains(d.left)) {
          c.components.push_back(d.right);
          add_unique(out, std::move(c));
        }
      }
    }
    memo_.emplace(f, out);
    return out;
  }

 private:
  const std::vector<Decomposition>& decompositions(const RationalFunction& f) {
    auto it = once_.find(f);
    if (it == once_.end()) it = once_.emplace(f, decompose_once(f)).first;
    return it->second;
  }

  static void add_unique(std::vector<DecompositionChain>& out, DecompositionChain c) {
    for (const auto& e : out)
      if (equivalent_chains(e, c)) return;
    out.push_back(std::move(c));
  }

  std::map<RationalFunction, std::vector<Decomposition>> once_;
  std::map<RationalFunction, std::vector<DecompositionChain>> memo_;
};

}  // namespace detail

// Complete decomposition chains of f, one per equivalence class.
inline std::vector<DecompositionChain> complete_chains(const RationalFunction& f) {
  require_nonconstant(f);
  if (f.degree() > kMaxChainDegree) fail(ErrorCode::DegreeTooLarge, "complete_chains is limited to degree 64");
  detail::ChainBuilder b;
  auto out = b.chains(f);
  std::stable_sort(out.begin(), out.end(),
                   [](const DecompositionChain& a, const DecompositionChain& c) { return a.length() < c.length(); });
  return out;
}

inline bool is_bidecomposition(const RationalFunction& f1, const RationalFunction& g1, const RationalFunction& f2,
                               const RationalFunction& g2) {
  if (f1.degree() != g2.degree()) return false;
  if (std::gcd(f1.degree(), g1.degree()) != 1) return false;
  return compose(f1, g1) == compose(f2, g2);
}

// (deg num(fbar) - 1)! * (deg den(fbar))! for the normal form fbar of f.
inline BigInt extension_degree_bound(const RationalFunction& f) {
  const NormalForm nf = normal_form(f);
  BigInt a, b;
  mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(nf.fbar.num().degree() - 1));
  mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(std::max(0, nf.fbar.den().degree())));
  return a * b;
}

}  // namespace ritt
