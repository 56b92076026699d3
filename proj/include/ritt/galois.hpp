#pragma once

// Fixing groups G(f) = {u : f o u = f}, fixed fields Fix(H), subgroup
// lattices of finite unit groups, and the decompositions they induce.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ritt/decompose.hpp"

namespace ritt {

// A finite set of units, sorted and without repeats. Whether it is closed
// under composition is checked by is_group().
class FiniteUnitGroup {
 public:
  explicit FiniteUnitGroup(Field k = Field::rationals()) : field_(std::move(k)) {}

  FiniteUnitGroup(Field k, std::vector<MoebiusUnit> elements) : field_(std::move(k)), elements_(std::move(elements)) {
    for (const auto& u : elements_) require_same_field(field_, u.field());
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  const Field& field() const { return field_; }
  const std::vector<MoebiusUnit>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const MoebiusUnit& u) const { return std::binary_search(elements_.begin(), elements_.end(), u); }

  std::size_t index_of(const MoebiusUnit& u) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), u);
    if (it == elements_.end() || !(*it == u)) return elements_.size();
    return static_cast<std::size_t>(it - elements_.begin());
  }

  friend bool operator==(const FiniteUnitGroup& a, const FiniteUnitGroup& b) {
    return a.field_ == b.field_ && a.elements_ == b.elements_;
  }

  // (order, elements).
  friend bool operator<(const FiniteUnitGroup& a, const FiniteUnitGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements_ < b.elements_;
  }

 private:
  Field field_;
  std::vector<MoebiusUnit> elements_;
};

struct GroupIsoType {
  enum class Kind { Cyclic, Dihedral, A4, S4, A5 };
  Kind kind = Kind::Cyclic;
  int n = 1;  // parameter of C_n and D_n

  std::size_t order() const {
    switch (kind) {
      case Kind::Cyclic: return static_cast<std::size_t>(n);
      case Kind::Dihedral: return 2 * static_cast<std::size_t>(n);
      case Kind::A4: return 12;
      case Kind::S4: return 24;
      case Kind::A5: return 60;
    }
    return 0;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Cyclic: return "C" + std::to_string(n);
      case Kind::Dihedral: return "D" + std::to_string(n);
      case Kind::A4: return "A4";
      case Kind::S4: return "S4";
      case Kind::A5: return "A5";
    }
    return "?";
  }

  friend bool operator==(const GroupIsoType&, const GroupIsoType&) = default;
};

inline bool is_group(const std::vector<MoebiusUnit>& units) {
  if (units.empty()) return false;
  const Field& k = units.front().field();
  for (const auto& u : units)
    if (!(u.field() == k)) return false;
  FiniteUnitGroup g(k, units);
  if (!g.contains(MoebiusUnit::identity(k))) return false;
  for (const auto& a : g.elements()) {
    if (!g.contains(a.inverse())) return false;
    for (const auto& b : g.elements())
      if (!g.contains(compose(a, b))) return false;
  }
  return true;
}

inline bool is_group(const FiniteUnitGroup& g) { return is_group(g.elements()); }

namespace detail {

inline void require_group(const FiniteUnitGroup& g) {
  if (!is_group(g)) fail(ErrorCode::NotAGroup, "the unit set is not a group");
}

// Cayley table by element index.
class CayleyTable {
 public:
  explicit CayleyTable(const FiniteUnitGroup& g) : n_(g.order()), table_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = g.index_of(compose(g.elements()[i], g.elements()[j]));
    identity_ = g.index_of(MoebiusUnit::identity(g.field()));
  }

  std::size_t size() const { return n_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

  int element_order(std::size_t i) const {
    int k = 1;
    for (std::size_t p = i; p != identity_; p = mul(p, i)) ++k;
    return k;
  }

  // Closure of a set of indices under multiplication.
  std::uint64_t closure(std::uint64_t gens) const {
    std::uint64_t s = gens | (std::uint64_t{1} << identity_);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < n_; ++i) {
        if (!(s >> i & 1)) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (!(s >> j & 1)) continue;
          const std::uint64_t bit = std::uint64_t{1} << mul(i, j);
          if (!(s & bit)) {
            s |= bit;
            grew = true;
          }
        }
      }
    }
    return s;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> table_;
  std::size_t identity_;
};

constexpr std::size_t kMaxLatticeOrder = 60;

inline FiniteUnitGroup from_mask(const FiniteUnitGroup& g, std::uint64_t mask) {
  std::vector<MoebiusUnit> es;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (mask >> i & 1) es.push_back(g.elements()[i]);
  return FiniteUnitGroup(g.field(), std::move(es));
}

// Subgroups as index masks: cyclic subgroups, then joins until nothing new
// appears.
inline std::vector<std::uint64_t> subgroup_masks(const FiniteUnitGroup& g) {
  require_group(g);
  if (g.order() > kMaxLatticeOrder) fail(ErrorCode::GroupTooLarge, "subgroup lattices are limited to order 60");
  const CayleyTable t(g);
  std::vector<std::uint64_t> subs;
  auto add = [&](std::uint64_t m) {
    if (std::find(subs.begin(), subs.end(), m) == subs.end()) subs.push_back(m);
  };
  for (std::size_t i = 0; i < t.size(); ++i) add(t.closure(std::uint64_t{1} << i));
  for (std::size_t done = 0; done < subs.size();) {
    const std::size_t end = subs.size();
    for (std::size_t i = done; i < end; ++i)
      for (std::size_t j = 0; j < end; ++j) add(t.closure(subs[i] | subs[j]));
    done = end;
  }
  return subs;
}

}  // namespace detail

inline std::vector<FiniteUnitGroup> subgroups(const FiniteUnitGroup& g) {
  std::vector<FiniteUnitGroup> out;
  for (auto m : detail::subgroup_masks(g)) out.push_back(detail::from_mask(g, m));
  std::sort(out.begin(), out.end());
  return out;
}

// Chains {x} = H0 < H1 < ... < Hk = G with each H_i maximal in H_(i+1),
// listed from the trivial group upwards.
inline std::vector<std::vector<FiniteUnitGroup>> maximal_subgroup_chains(const FiniteUnitGroup& g) {
  const auto subs = subgroups(g);
  auto is_sub = [](const FiniteUnitGroup& a, const FiniteUnitGroup& b) {
    return a.order() < b.order() && std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(),
                                                  a.elements().end());
  };
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;
  // Chains ending at subs[top], as index lists.
  auto chains_to = [&](auto&& self, std::size_t top) -> std::vector<std::vector<std::size_t>> {
    if (auto it = memo.find(top); it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> out;
    if (subs[top].order() == 1) {
      out.push_back({top});
    } else {
      for (std::size_t k = 0; k < subs.size(); ++k) {
        if (!is_sub(subs[k], subs[top])) continue;
        bool maximal = true;
        for (std::size_t l = 0; l < subs.size() && maximal; ++l)
          if (is_sub(subs[k], subs[l]) && is_sub(subs[l], subs[top])) maximal = false;
        if (!maximal) continue;
        for (auto c : self(self, k)) {
          c.push_back(top);
          out.push_back(std::move(c));
        }
      }
    }
    memo.emplace(top, out);
    return out;
  };
  std::vector<std::vector<FiniteUnitGroup>> out;
  for (const auto& c : chains_to(chains_to, subs.size() - 1)) {
    std::vector<FiniteUnitGroup> chain;
    for (auto i : c) chain.push_back(subs[i]);
    out.push_back(std::move(chain));
  }
  return out;
}

inline GroupIsoType classify_group(const FiniteUnitGroup& g) {
  detail::require_group(g);
  const detail::CayleyTable t(g);
  const int n = static_cast<int>(g.order());
  std::map<int, int> orders;
  std::vector<int> ord(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) ++orders[ord[i] = t.element_order(i)];
  using K = GroupIsoType::Kind;
  if (orders.count(n)) return {K::Cyclic, n};
  if (n % 2 == 0 && n >= 4) {
    // D_k: a rotation r of order k, and every element outside <r> of order 2.
    const int k = n / 2;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (ord[r] != k) continue;
      const std::uint64_t rot = t.closure(std::uint64_t{1} << r);
      bool reflections = true;
      for (std::size_t i = 0; i < t.size() && reflections; ++i)
        if (!(rot >> i & 1) && ord[i] != 2) reflections = false;
      if (reflections) return {K::Dihedral, k};
    }
  }
  if (orders == std::map<int, int>{{1, 1}, {2, 3}, {3, 8}}) return {K::A4, 0};
  if (orders == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) return {K::S4, 0};
  if (orders == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}) return {K::A5, 0};
  fail(ErrorCode::UnclassifiableGroup, "group matches none of C_n, D_n, A4, S4, A5");
}

// True iff G is C_1, or C_n or D_n with n in {2, 3, 4, 6}. G must be over Q.
inline bool pgl2q_check(const FiniteUnitGroup& g) {
  if (!g.field().is_rational()) fail(ErrorCode::FieldMismatch, "pgl2q_check needs a group over Q");
  const GroupIsoType t = classify_group(g);
  using K = GroupIsoType::Kind;
  if (t.kind == K::Cyclic && t.n == 1) return true;
  if (t.kind != K::Cyclic && t.kind != K::Dihedral) return false;
  return t.n == 2 || t.n == 3 || t.n == 4 || t.n == 6;
}

inline FiniteUnitGroup fixing_group(const RationalFunction& f) {
  require_nonconstant(f);
  const Field& k = f.field();
  const int m = f.degree();
  // Step A
  const NormalForm nf = normal_form(f);
  const RationalFunction& fb = nf.fbar;
  // Step B
  const auto alphas = roots_of_unity(k, m);
  const auto betas = roots_in_field(fb.num(), k);
  const auto gammas = fb.den().degree() > 0 ? roots_in_field(fb.den(), k) : std::vector<FieldElement>{};
  std::vector<MoebiusUnit> found{MoebiusUnit::identity(k)};
  // Step C: alpha x + beta. With alpha = 1 only the identity survives.
  for (const auto& a : alphas) {
    if (a.is_one()) continue;
    for (const auto& b : betas) {
      const MoebiusUnit w = MoebiusUnit::affine(a, b);
      if (compose(fb, w) == fb) found.push_back(w);
    }
  }
  // Step D: w = (c gamma x + beta)/(c x + 1). With y = c x the numerator and
  // denominator of fb o w are N(y) = sum n_i (gamma y + beta)^i (y + 1)^(m-i)
  // and D(y) likewise, so the coefficient of x^j in N(cx) fb_D - D(cx) fb_N
  // is sum_k c^k (N_k fb_D[j-k] - D_k fb_N[j-k]), a polynomial in c.
  const Polynomial y1 = Polynomial(k, {k.one(), k.one()});
  const auto qpow = detail::powers(y1, m);
  for (const auto& b : betas) {
    for (const auto& g : gammas) {
      const auto ppow = detail::powers(Polynomial(k, {b, g}), m);
      const Polynomial N = detail::homogenize(fb.num(), ppow, qpow);
      const Polynomial D = detail::homogenize(fb.den(), ppow, qpow);
      const int top = std::max(N.degree() + fb.den().degree(), D.degree() + fb.num().degree());
      Polynomial acc(k);
      bool any = false;
      for (int j = 0; j <= top; ++j) {
        std::vector<FieldElement> cs;
        for (int kk = 0; kk <= j; ++kk) cs.push_back(N.coeff(kk) * fb.den().coeff(j - kk) - D.coeff(kk) * fb.num().coeff(j - kk));
        Polynomial pj(k, std::move(cs));
        if (pj.is_zero()) continue;
        acc = any ? gcd(acc, pj) : pj.monic();
        any = true;
        if (acc.degree() == 0) break;
      }
      if (!any || acc.degree() < 1) continue;
      for (const auto& c : roots_in_field(acc, k)) {
        if (c.is_zero() || (c * (g - b)).is_zero()) continue;
        const MoebiusUnit w(c * g, b, c, k.one());
        if (compose(fb, w) == fb) found.push_back(w);
      }
    }
  }
  // Step E
  const MoebiusUnit v_inv = nf.v.inverse();
  std::vector<MoebiusUnit> out;
  for (const auto& w : found) {
    MoebiusUnit s = compose(compose(nf.v, w), v_inv);
    if (compose(f, s) != f) fail(ErrorCode::Internal, "conjugated unit does not fix f");
    out.push_back(std::move(s));
  }
  return FiniteUnitGroup(k, std::move(out));
}

// First nonconstant elementary symmetric function of the elements of H,
// scaled to a monic numerator. Fix(H) = K(result) and deg result = |H|.
inline RationalFunction fixed_field(const FiniteUnitGroup& h) {
  detail::require_group(h);
  if (h.order() < 2) fail(ErrorCode::TrivialGroup, "the trivial group fixes every function");
  const Field& k = h.field();
  // prod (Q_i T - P_i) / prod Q_i, coefficients in K[x], lowest power of T first.
  std::vector<Polynomial> p{Polynomial::constant(k.one())};
  Polynomial den = Polynomial::constant(k.one());
  for (const auto& u : h.elements()) {
    const RationalFunction r = u.to_rf();
    std::vector<Polynomial> next(p.size() + 1, Polynomial(k));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i] * r.den();
      next[i] -= p[i] * r.num();
    }
    p = std::move(next);
    den *= r.den();
  }
  const std::size_t m = h.order();
  for (std::size_t i = 1; i <= m; ++i) {
    RationalFunction s(p[m - i], den);
    if (!s.is_constant()) return s.monic_numerator();
  }
  fail(ErrorCode::Internal, "all symmetric functions are constant");
}

inline void require_subgroup_of_fixing_group(const RationalFunction& f, const FiniteUnitGroup& h) {
  detail::require_group(h);
  for (const auto& u : h.elements())
    if (compose(f, u) != f) fail(ErrorCode::NotASubgroupOfFixingGroup, "a unit of H does not fix f");
}

// f = g o h with h = fixed_field(H).
inline Decomposition right_component_from_subgroup(const RationalFunction& f, const FiniteUnitGroup& h) {
  require_nonconstant(f);
  require_subgroup_of_fixing_group(f, h);
  RationalFunction r = fixed_field(h);
  auto g = left_solve(f, r);
  if (!g) fail(ErrorCode::SolveFailed, "no left component for the fixed-field generator");
  return {*g, r};
}

// Complete chains induced by the maximal subgroup chains of G(f), when
// |G(f)| = deg f.
inline std::vector<DecompositionChain> chains_to_decompositions(const RationalFunction& f) {
  require_nonconstant(f);
  const FiniteUnitGroup g = fixing_group(f);
  if (g.order() != static_cast<std::size_t>(f.degree()))
    fail(ErrorCode::NotNormalCase, "|G(f)| differs from deg f");
  std::vector<DecompositionChain> out;
  if (g.order() == 1) {
    out.push_back({{f}});
    return out;
  }
  std::map<std::vector<MoebiusUnit>, RationalFunction> gens;
  auto generator = [&](const FiniteUnitGroup& h) {
    auto it = gens.find(h.elements());
    if (it == gens.end()) it = gens.emplace(h.elements(), fixed_field(h)).first;
    return it->second;
  };
  for (const auto& chain : maximal_subgroup_chains(g)) {
    // t_0 = x, t_j generates Fix(H_j); t_j = c_j o t_(j-1).
    std::vector<RationalFunction> comps;
    RationalFunction prev = RationalFunction::x(f.field());
    for (std::size_t j = 1; j < chain.size(); ++j) {
      const RationalFunction t = generator(chain[j]);
      if (j == 1) {
        comps.push_back(t);
      } else {
        auto c = left_solve(t, prev);
        if (!c) fail(ErrorCode::Internal, "fixed fields of nested groups are not nested");
        comps.push_back(*c);
      }
      prev = t;
    }
    auto u = same_field(f, prev);
    if (!u) fail(ErrorCode::Internal, "fixed field of G(f) differs from K(f)");
    comps.back() = u->apply(comps.back());
    std::reverse(comps.begin(), comps.end());
    DecompositionChain c{std::move(comps)};
    if (c.compose() != f) fail(ErrorCode::Internal, "induced chain does not recompose to f");
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ritt
