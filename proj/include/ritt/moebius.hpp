#pragma once

// Moebius units (ax+b)/(cx+d), the invertible elements for composition.

#include <array>
#include <compare>

#include "ritt/ratfunc.hpp"

namespace ritt {

class MoebiusUnit {
 public:
  // The identity x over Q.
  MoebiusUnit() : MoebiusUnit(identity(Field::rationals())) {}

  MoebiusUnit(FieldElement a, FieldElement b, FieldElement c, FieldElement d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (const auto& v : e_) require_same_field(e_[0].field(), v.field());
    if ((e_[0] * e_[3] - e_[1] * e_[2]).is_zero()) fail(ErrorCode::NotAUnit, "ad - bc = 0");
    // Canonical scaling: the first nonzero entry becomes 1.
    for (const auto& v : e_) {
      if (v.is_zero()) continue;
      if (!v.is_one()) {
        const FieldElement inv = v.inverse();
        for (auto& w : e_) w *= inv;
      }
      break;
    }
  }

  static MoebiusUnit identity(const Field& k) { return MoebiusUnit(k.one(), k.zero(), k.zero(), k.one()); }

  // a x + b
  static MoebiusUnit affine(const FieldElement& a, const FieldElement& b) {
    const Field& k = a.field();
    return MoebiusUnit(a, b, k.zero(), k.one());
  }

  const Field& field() const { return e_[0].field(); }
  const FieldElement& a() const { return e_[0]; }
  const FieldElement& b() const { return e_[1]; }
  const FieldElement& c() const { return e_[2]; }
  const FieldElement& d() const { return e_[3]; }

  bool is_identity() const { return *this == identity(field()); }

  // (dx - b)/(-cx + a)
  MoebiusUnit inverse() const { return MoebiusUnit(e_[3], -e_[1], -e_[2], e_[0]); }

  RationalFunction to_rf() const {
    const Field& k = field();
    return RationalFunction(Polynomial(k, {e_[1], e_[0]}), Polynomial(k, {e_[3], e_[2]}));
  }

  // Reads a degree-1 function as a unit.
  static MoebiusUnit from_rf(const RationalFunction& f) {
    if (f.degree() != 1) fail(ErrorCode::NotAUnit, "only degree-1 functions are units");
    return MoebiusUnit(f.num().coeff(1), f.num().coeff(0), f.den().coeff(1), f.den().coeff(0));
  }

  // u o f
  RationalFunction apply(const RationalFunction& f) const { return compose(to_rf(), f); }

  // Matrix product: (u o v)(x) = u(v(x)).
  friend MoebiusUnit compose(const MoebiusUnit& u, const MoebiusUnit& v) {
    return MoebiusUnit(u.a() * v.a() + u.b() * v.c(), u.a() * v.b() + u.b() * v.d(), u.c() * v.a() + u.d() * v.c(),
                       u.c() * v.b() + u.d() * v.d());
  }

  friend bool operator==(const MoebiusUnit& u, const MoebiusUnit& v) { return u.e_ == v.e_; }

  friend std::strong_ordering operator<=>(const MoebiusUnit& u, const MoebiusUnit& v) {
    for (std::size_t i = 0; i < 4; ++i)
      if (auto c = u.e_[i] <=> v.e_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::array<FieldElement, 4> e_;
};

inline RationalFunction compose(const RationalFunction& f, const MoebiusUnit& u) { return compose(f, u.to_rf()); }
inline RationalFunction compose(const MoebiusUnit& u, const RationalFunction& f) { return compose(u.to_rf(), f); }

}  // namespace ritt
