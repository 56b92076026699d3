#pragma once

// Exact arithmetic in Q and in simple algebraic extensions Q[t]/(m(t)).

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ritt/detail/qpoly.hpp"
#include "ritt/error.hpp"

namespace ritt {

using BigInt = mpz_class;
using BigRational = mpq_class;

class FieldElement;

namespace detail {
struct FieldData {
  std::string name;   // generator name, empty for Q
  QPoly min_poly;     // monic, lowest degree first; {0, 1} for Q
};
}  // namespace detail

// Handle to a coefficient field. Cheap to copy; all copies share the
// descriptor. Two handles compare equal when they describe the same
// generator name and minimal polynomial.
class Field {
 public:
  Field() : data_(rationals_data()) {}

  static Field rationals() { return Field(); }

  // No irreducibility check; make_field() in factor.hpp is the validated
  // entry point.
  static Field unchecked_extension(detail::QPoly min_poly, std::string name) {
    detail::trim(min_poly);
    if (min_poly.empty() || min_poly.back() != 1)
      fail(ErrorCode::NotMonic, "minimal polynomial must be monic");
    if (detail::qdeg(min_poly) < 2)
      fail(ErrorCode::ReduciblePolynomial, "minimal polynomial must have degree at least 2");
    auto data = std::make_shared<detail::FieldData>();
    data->name = std::move(name);
    data->min_poly = std::move(min_poly);
    return Field(std::move(data));
  }

  bool is_rational() const { return data_->name.empty(); }
  int degree() const { return is_rational() ? 1 : detail::qdeg(data_->min_poly); }
  const std::string& generator_name() const { return data_->name; }
  const detail::QPoly& min_poly() const { return data_->min_poly; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from(const BigRational& q) const;
  FieldElement from(long n) const;
  // The class of t in Q[t]/(m(t)). Throws on Q.
  FieldElement generator() const;

  friend bool operator==(const Field& a, const Field& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->name == b.data_->name && a.data_->min_poly == b.data_->min_poly;
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}

  static std::shared_ptr<const detail::FieldData> rationals_data() {
    static const auto q = [] {
      auto d = std::make_shared<detail::FieldData>();
      d->min_poly = {mpq_class(0), mpq_class(1)};
      return std::shared_ptr<const detail::FieldData>(d);
    }();
    return q;
  }

  std::shared_ptr<const detail::FieldData> data_;
};

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) fail(ErrorCode::FieldMismatch, "operands live in different fields");
}

// c0 + c1 t + ... + c_{d-1} t^{d-1}. Always exactly d coefficients.
class FieldElement {
 public:
  FieldElement() : coeffs_(1) {}

  FieldElement(Field k, std::vector<BigRational> coeffs) : field_(std::move(k)), coeffs_(std::move(coeffs)) {
    const auto d = static_cast<std::size_t>(field_.degree());
    if (coeffs_.size() > d) {
      detail::trim(coeffs_);
      coeffs_ = detail::qrem(coeffs_, field_.min_poly());
    }
    coeffs_.resize(d);
  }

  const Field& field() const { return field_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  // True when the element lies in the prime field Q.
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) return false;
    return true;
  }

  bool is_one() const { return is_rational() && coeffs_[0] == 1; }

  const BigRational& rational_part() const { return coeffs_[0]; }

  FieldElement operator-() const {
    FieldElement r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  FieldElement& operator+=(const FieldElement& o) {
    require_same_field(field_, o.field_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  FieldElement& operator-=(const FieldElement& o) {
    require_same_field(field_, o.field_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  FieldElement& operator*=(const FieldElement& o) {
    require_same_field(field_, o.field_);
    if (coeffs_.size() == 1) {
      coeffs_[0] *= o.coeffs_[0];
      return *this;
    }
    *this = FieldElement(field_, detail::qmul(coeffs_, o.coeffs_));
    return *this;
  }

  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  FieldElement inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero field element");
    if (coeffs_.size() == 1) return FieldElement(field_, {1 / coeffs_[0]});
    detail::QPoly a(coeffs_);
    detail::trim(a);
    return FieldElement(field_, detail::qinvmod(a, field_.min_poly()));
  }

  // Negative exponents go through the inverse.
  FieldElement pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    FieldElement result = field_.one(), base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  // Lexicographic on the coefficient vector. Only used to make outputs
  // deterministic; it has no algebraic meaning.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = cmp(a.coeffs_[i], b.coeffs_[i]);
      if (c < 0) return std::strong_ordering::less;
      if (c > 0) return std::strong_ordering::greater;
    }
    return a.coeffs_.size() <=> b.coeffs_.size();
  }

 private:
  Field field_;
  std::vector<BigRational> coeffs_;
};

inline FieldElement Field::zero() const { return FieldElement(*this, {}); }
inline FieldElement Field::one() const { return from(1); }
inline FieldElement Field::from(const BigRational& q) const {
  BigRational c = q;
  c.canonicalize();
  return FieldElement(*this, {c});
}
inline FieldElement Field::from(long n) const { return FieldElement(*this, {BigRational(n)}); }
inline FieldElement Field::generator() const {
  if (is_rational()) fail(ErrorCode::FieldMismatch, "Q has no generator");
  return FieldElement(*this, {BigRational(0), BigRational(1)});
}

// Norm of a over Q, i.e. Res(m, a) for the monic minimal polynomial m.
inline BigRational norm(const FieldElement& a) {
  if (a.field().is_rational()) return a.rational_part();
  detail::QPoly p(a.coeffs());
  detail::trim(p);
  return detail::qresultant(a.field().min_poly(), p);
}

// Re-reads an element of Q inside k.
inline FieldElement embed(const FieldElement& a, const Field& k) {
  if (a.field() == k) return a;
  if (!a.field().is_rational()) fail(ErrorCode::FieldMismatch, "only rational elements can be embedded");
  return k.from(a.rational_part());
}

}  // namespace ritt
