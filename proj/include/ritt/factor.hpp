#pragma once

// Factorization and root finding over Q (rational-root search, then
// Zassenhaus) and over simple extensions Q(t) (Trager's norm method).

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ritt/detail/integer_factor.hpp"
#include "ritt/detail/zassenhaus.hpp"
#include "ritt/poly.hpp"

namespace ritt {

struct Factorization {
  FieldElement unit_constant;
  // Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
  std::vector<std::pair<Polynomial, int>> factors;

  Polynomial expand() const {
    Polynomial r = Polynomial::constant(unit_constant);
    for (const auto& [p, m] : factors) r *= p.pow(static_cast<unsigned>(m));
    return r;
  }
};

namespace detail {

inline void require_rational_field(const Polynomial& f) {
  if (!f.field().is_rational()) fail(ErrorCode::FieldMismatch, "expected a polynomial over Q");
}

// Primitive integer polynomial proportional to f (f over Q, nonzero).
inline ZPoly to_zpoly(const Polynomial& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational_part().get_den_mpz_t());
  ZPoly z(f.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const mpq_class& c = f.coeffs()[i].rational_part();
    z[i] = c.get_num() * (den / c.get_den());
  }
  return zprimitive(z);
}

inline Polynomial from_zpoly(const ZPoly& z, const Field& k) {
  std::vector<BigRational> cs(z.begin(), z.end());
  return Polynomial::from_rationals(k, cs).monic();
}

inline void sort_factors(std::vector<std::pair<Polynomial, int>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (auto c = a.first <=> b.first; c != 0) return c < 0;
    return a.second < b.second;
  });
}

// Candidates beyond this count make the rational-root search switch to the
// linear factors of the Zassenhaus factorization, which yields the same set.
constexpr std::size_t kRootCandidateLimit = 200000;

inline std::vector<BigRational> rational_roots_of_squarefree(ZPoly F) {
  std::vector<BigRational> roots;
  if (sgn(F[0]) == 0) {
    roots.emplace_back(0);
    F.erase(F.begin());
  }
  if (zdeg(F) < 1) return roots;
  const mpz_class& a0 = F.front();
  const mpz_class& an = F.back();
  auto ps = positive_divisors(a0, kRootCandidateLimit);
  auto qs = positive_divisors(an, kRootCandidateLimit);
  if (!ps || !qs || ps->size() * qs->size() > kRootCandidateLimit) {
    for (const auto& g : zassenhaus(F))
      if (zdeg(g) == 1) roots.emplace_back(mpq_class(-g[0], g[1]));
    for (auto& r : roots) r.canonicalize();
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  mpz_class f_one = 0, f_minus_one = 0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    f_one += F[i];
    f_minus_one += (i % 2 == 0) ? F[i] : mpz_class(-F[i]);
  }
  const std::size_t n = F.size() - 1;
  std::vector<mpz_class> qpows(n + 1);
  for (const auto& q : *qs) {
    qpows[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) qpows[i] = qpows[i - 1] * q;
    for (const auto& p0 : *ps) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p0.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        const mpz_class p = sign * p0;
        // A root p/q of an integer polynomial forces (q - p) | F(1) and (q + p) | F(-1).
        if (sgn(f_one) != 0) {
          mpz_class d = q - p;
          if (sgn(d) == 0 || !mpz_divisible_p(f_one.get_mpz_t(), d.get_mpz_t())) continue;
        }
        if (sgn(f_minus_one) != 0) {
          mpz_class d = q + p;
          if (sgn(d) == 0 || !mpz_divisible_p(f_minus_one.get_mpz_t(), d.get_mpz_t())) continue;
        }
        // q^n F(p/q) = sum F_i p^i q^(n-i), by Horner in p.
        mpz_class acc = F[n];
        for (std::size_t i = n; i-- > 0;) acc = acc * p + F[i] * qpows[n - i];
        if (sgn(acc) == 0) roots.emplace_back(mpq_class(p, q));
      }
    }
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// Norm over Q of g in K[x]: prod over conjugates, computed by evaluating the
// element norm at deg(g) * [K:Q] + 1 integer points and interpolating.
inline Polynomial norm_polynomial(const Polynomial& g) {
  const Field& k = g.field();
  const int n = g.degree() * k.degree();
  std::vector<mpq_class> xs, ys;
  for (int j = 0; j <= n; ++j) {
    xs.emplace_back(j);
    ys.push_back(norm(g.eval(k.from(static_cast<long>(j)))));
  }
  QPoly p = qinterpolate(xs, ys);
  return Polynomial::from_rationals(Field::rationals(), p);
}

}  // namespace detail

// Distinct rational roots of f, ascending.
inline std::vector<BigRational> rational_roots(const Polynomial& f) {
  detail::require_rational_field(f);
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "roots of the zero polynomial");
  if (f.degree() == 0) return {};
  return detail::rational_roots_of_squarefree(detail::to_zpoly(squarefree_part(f)));
}

inline Factorization factor_over_rationals(const Polynomial& f) {
  detail::require_rational_field(f);
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "factorization of the zero polynomial");
  const Field& q = f.field();
  Factorization out{f.lc(), {}};
  for (const auto& [part, mult] : squarefree(f)) {
    Polynomial rest = part;
    for (const auto& r : rational_roots(part)) {
      Polynomial lin = Polynomial::linear_root(q.from(r));
      out.factors.emplace_back(lin, mult);
      rest = rest / lin;
    }
    if (rest.degree() < 1) continue;
    for (const auto& g : detail::zassenhaus(detail::to_zpoly(rest)))
      out.factors.emplace_back(detail::from_zpoly(g, q), mult);
  }
  detail::sort_factors(out.factors);
  return out;
}

namespace detail {

// Irreducible factors over K of a monic squarefree g (Trager).
inline std::vector<Polynomial> trager(const Polynomial& g) {
  if (g.degree() <= 1) return {g.monic()};
  const Field& k = g.field();
  const FieldElement theta = k.generator();
  for (long s = 0;; ++s) {
    const FieldElement shift = theta * k.from(s);
    // G(x) = g(x - s*theta)
    const Polynomial G = g.compose(Polynomial(k, {-shift, k.one()}));
    const Polynomial N = norm_polynomial(G);
    if (gcd(N, N.derivative()).degree() != 0) continue;
    Factorization fn = factor_over_rationals(N);
    if (fn.factors.size() == 1) return {g.monic()};
    std::vector<Polynomial> out;
    const Polynomial back(k, {shift, k.one()});  // x + s*theta
    for (const auto& [q, m] : fn.factors) {
      Polynomial h = gcd(G, embed(q, k));
      out.push_back(h.compose(back).monic());
    }
    return out;
  }
}

}  // namespace detail

inline Factorization factor_over_extension(const Polynomial& f) {
  const Field& k = f.field();
  if (k.is_rational()) fail(ErrorCode::FieldMismatch, "factor_over_extension needs an extension field; use factor_over_rationals");
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "factorization of the zero polynomial");
  Factorization out{f.lc(), {}};
  for (const auto& [part, mult] : squarefree(f)) {
    std::vector<Polynomial> pieces;
    if (part.has_rational_coeffs()) {
      // Split over Q first; the norms of the pieces are much smaller.
      Polynomial over_q = Polynomial::from_rationals(Field::rationals(), [&] {
        std::vector<BigRational> cs;
        for (const auto& c : part.coeffs()) cs.push_back(c.rational_part());
        return cs;
      }());
      for (const auto& [q, m] : factor_over_rationals(over_q).factors) pieces.push_back(embed(q, k));
    } else {
      pieces.push_back(part);
    }
    for (const auto& piece : pieces)
      for (auto& irr : detail::trager(piece)) out.factors.emplace_back(std::move(irr), mult);
  }
  detail::sort_factors(out.factors);
  return out;
}

// Factorization over the polynomial's own field.
inline Factorization factor(const Polynomial& f) {
  return f.field().is_rational() ? factor_over_rationals(f) : factor_over_extension(f);
}

// Distinct roots of f in K, sorted. A polynomial over Q may be passed with an
// extension K; it is read inside K.
inline std::vector<FieldElement> roots_in_field(const Polynomial& f, const Field& k) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "roots of the zero polynomial");
  std::vector<FieldElement> roots;
  if (k.is_rational()) {
    detail::require_rational_field(f);
    for (const auto& r : rational_roots(f)) roots.push_back(k.from(r));
    return roots;
  }
  if (!(f.field() == k)) {
    if (!f.field().is_rational()) fail(ErrorCode::FieldMismatch, "polynomial is not over the requested field");
  }
  if (f.has_rational_coeffs()) {
    // A root in K of an irreducible q over Q has degree deg q dividing [K:Q].
    Polynomial over_q(Field::rationals());
    {
      std::vector<BigRational> cs;
      for (const auto& c : f.coeffs()) cs.push_back(c.rational_part());
      over_q = Polynomial::from_rationals(Field::rationals(), cs);
    }
    for (const auto& [q, m] : factor_over_rationals(over_q).factors) {
      if (k.degree() % q.degree() != 0) continue;
      for (const auto& piece : detail::trager(embed(q, k)))
        if (piece.degree() == 1) roots.push_back(-piece.coeff(0));
    }
  } else {
    for (const auto& [p, m] : factor_over_extension(f).factors)
      if (p.degree() == 1) roots.push_back(-p.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

inline std::vector<FieldElement> roots_of_unity(const Field& k, int m) {
  if (m < 1) fail(ErrorCode::ZeroInput, "roots of unity need m >= 1");
  Polynomial p = Polynomial::monomial(k.one(), m) - Polynomial::constant(k.one());
  return roots_in_field(p, k);
}

// Validated construction of Q[name]/(min_poly).
inline Field make_field(const Polynomial& min_poly, const std::string& name) {
  detail::require_rational_field(min_poly);
  if (min_poly.is_zero() || !min_poly.is_monic()) fail(ErrorCode::NotMonic, "minimal polynomial must be monic");
  if (min_poly.degree() < 2) fail(ErrorCode::ReduciblePolynomial, "minimal polynomial must have degree at least 2");
  Factorization fac = factor_over_rationals(min_poly);
  if (fac.factors.size() != 1 || fac.factors[0].second != 1)
    fail(ErrorCode::ReduciblePolynomial, "minimal polynomial factors over Q");
  std::vector<BigRational> cs;
  for (const auto& c : min_poly.coeffs()) cs.push_back(c.rational_part());
  return Field::unchecked_extension(cs, name);
}

}  // namespace ritt
