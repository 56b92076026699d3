#pragma once

// Reduced rational functions num/den over a Field, and composition.

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

#include "ritt/poly.hpp"

namespace ritt {

// num/den with gcd(num, den) = 1 and den monic. The zero function is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(Field k = Field::rationals())
      : num_(k), den_(Polynomial::constant(k.one())) {}

  // Reduces by the gcd and makes the denominator monic.
  RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num.field()), den_(den.field()) {
    require_same_field(num.field(), den.field());
    if (den.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (num.is_zero()) {
      den_ = Polynomial::constant(den.field().one());
      return;
    }
    Polynomial g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    const FieldElement inv = den_.lc().inverse();
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }

  explicit RationalFunction(const Polynomial& p)
      : num_(p), den_(Polynomial::constant(p.field().one())) {}

  static RationalFunction x(const Field& k) { return RationalFunction(Polynomial::x(k)); }
  static RationalFunction constant(const FieldElement& c) { return RationalFunction(Polynomial::constant(c)); }

  const Field& field() const { return num_.field(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  // max(deg num, deg den); constants (including 0) have degree 0.
  int degree() const { return std::max({num_.degree(), den_.degree(), 0}); }
  bool is_constant() const { return degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }

  // Value at a point where the denominator does not vanish.
  FieldElement eval(const FieldElement& a) const {
    const FieldElement d = den_.eval(a);
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "rational function evaluated at a pole");
    return num_.eval(a) / d;
  }

  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) fail(ErrorCode::ZeroDenominator, "division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  // Negative exponents invert first.
  RationalFunction pow(long k) const {
    if (k < 0) return (RationalFunction::constant(field().one()) / *this).pow(-k);
    RationalFunction r(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
    return r;
  }

  // Same function with the numerator made monic (the zero function is kept).
  RationalFunction monic_numerator() const {
    if (num_.is_zero()) return *this;
    RationalFunction r(*this);
    r.num_ = num_.monic();
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // (degree, numerator, denominator).
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

 private:
  Polynomial num_, den_;
};

inline RationalFunction rf_make(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

namespace detail {

// sum_i A_i P^i Q^(k-i), given the powers P^0..P^k and Q^0..Q^k.
inline Polynomial homogenize(const Polynomial& A, const std::vector<Polynomial>& ppow,
                             const std::vector<Polynomial>& qpow) {
  const std::size_t k = ppow.size() - 1;
  Polynomial acc(A.field());
  for (int i = 0; i <= A.degree(); ++i) {
    const FieldElement& c = A.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    acc += (ppow[static_cast<std::size_t>(i)] * qpow[k - static_cast<std::size_t>(i)]).scale(c);
  }
  return acc;
}

inline std::vector<Polynomial> powers(const Polynomial& p, int k) {
  std::vector<Polynomial> out{Polynomial::constant(p.field().one())};
  for (int i = 1; i <= k; ++i) out.push_back(out.back() * p);
  return out;
}

// f(g) for any f (constants allowed) and nonconstant g.
inline RationalFunction substitute(const RationalFunction& f, const RationalFunction& g) {
  require_same_field(f.field(), g.field());
  const int k = f.degree();
  auto ppow = powers(g.num(), k);
  auto qpow = powers(g.den(), k);
  return RationalFunction(homogenize(f.num(), ppow, qpow), homogenize(f.den(), ppow, qpow));
}

}  // namespace detail

// (f o g)(x) = f(g(x)). Both arguments must be nonconstant.
inline RationalFunction compose(const RationalFunction& f, const RationalFunction& g) {
  require_same_field(f.field(), g.field());
  if (f.is_constant() || g.is_constant()) fail(ErrorCode::ConstantInput, "composition with a constant function");
  return detail::substitute(f, g);
}

// Left-to-right composition c[0] o c[1] o ... o c[n-1].
inline RationalFunction compose_all(const std::vector<RationalFunction>& cs) {
  if (cs.empty()) fail(ErrorCode::ConstantInput, "empty composition");
  RationalFunction acc = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) acc = compose(cs[i], acc);
  return acc;
}

inline RationalFunction embed(const RationalFunction& f, const Field& k) {
  return RationalFunction(embed(f.num(), k), embed(f.den(), k));
}

}  // namespace ritt
