#pragma once

// Dense univariate polynomials over a Field, and the small amount of exact
// linear algebra the decomposition code needs.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "ritt/numfield.hpp"

namespace ritt {

class Polynomial {
 public:
  // Degree reported for the zero polynomial. Distinct from every real degree.
  static constexpr int kZeroDegree = -1;

  explicit Polynomial(Field k = Field::rationals()) : field_(std::move(k)) {}

  Polynomial(Field k, std::vector<FieldElement> coeffs) : field_(std::move(k)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_field(field_, c.field());
    trim();
  }

  // Rational coefficients, lowest degree first.
  static Polynomial from_rationals(const Field& k, const std::vector<BigRational>& cs) {
    std::vector<FieldElement> v;
    v.reserve(cs.size());
    for (const auto& c : cs) v.push_back(k.from(c));
    return Polynomial(k, std::move(v));
  }

  static Polynomial constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

  static Polynomial monomial(const FieldElement& c, int n) {
    std::vector<FieldElement> v(static_cast<std::size_t>(n) + 1, c.field().zero());
    v.back() = c;
    return Polynomial(c.field(), std::move(v));
  }

  static Polynomial x(const Field& k) { return monomial(k.one(), 1); }

  // x - a
  static Polynomial linear_root(const FieldElement& a) { return Polynomial(a.field(), {-a, a.field().one()}); }

  const Field& field() const { return field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  FieldElement coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
  }

  FieldElement lc() const { return is_zero() ? field_.zero() : coeffs_.back(); }

  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(lc().inverse());
  }

  Polynomial scale(const FieldElement& c) const {
    require_same_field(field_, c.field());
    if (c.is_zero()) return Polynomial(field_);
    std::vector<FieldElement> v(coeffs_);
    for (auto& e : v) e *= c;
    return Polynomial(field_, std::move(v));
  }

  // True when every coefficient is rational.
  bool has_rational_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_rational(); });
  }

  FieldElement eval(const FieldElement& a) const {
    require_same_field(field_, a.field());
    FieldElement acc = field_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * a + coeffs_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return Polynomial(field_);
    std::vector<FieldElement> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * field_.from(static_cast<long>(i)));
    return Polynomial(field_, std::move(v));
  }

  // this(g(x))
  Polynomial compose(const Polynomial& g) const {
    require_same_field(field_, g.field_);
    Polynomial acc(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * g + Polynomial::constant(coeffs_[i]);
    return acc;
  }

  Polynomial operator-() const {
    std::vector<FieldElement> v(coeffs_);
    for (auto& e : v) e = -e;
    return Polynomial(field_, std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
    const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
    std::vector<FieldElement> v(big.coeffs_);
    for (std::size_t i = 0; i < small.coeffs_.size(); ++i) v[i] += small.coeffs_[i];
    return Polynomial(a.field_, std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<FieldElement> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(a.field_, std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned n) const {
    Polynomial result = Polynomial::constant(field_.one()), base = *this;
    while (n > 0) {
      if (n & 1u) result *= base;
      n >>= 1u;
      if (n > 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  // (degree, coefficients from the constant term up).
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Field field_;
  std::vector<FieldElement> coeffs_;
};

inline std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& k = a.field();
  if (a.degree() < b.degree()) return {Polynomial(k), a};
  std::vector<FieldElement> r(a.coeffs());
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), k.zero());
  const FieldElement inv_lc = b.lc().inverse();
  const auto bs = b.coeffs().size();
  for (std::size_t i = r.size(); i-- >= bs;) {
    if (r[i].is_zero()) continue;
    FieldElement t = r[i] * inv_lc;
    std::size_t shift = i + 1 - bs;
    for (std::size_t j = 0; j < bs; ++j) r[shift + j] -= t * b.coeffs()[j];
    q[shift] = std::move(t);
  }
  return {Polynomial(k, std::move(q)), Polynomial(k, std::move(r))};
}

inline Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divrem(a, b).first; }
inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divrem(a, b).second; }

inline bool divides(const Polynomial& d, const Polynomial& a) { return (a % d).is_zero(); }

// Monic gcd. gcd(0, 0) is rejected.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::ZeroInput, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Resultant by the subresultant pseudo-remainder sequence (Collins/Brown as
// presented in Cohen's textbook). Over a field the contents are trivial.
inline FieldElement resultant(Polynomial a, Polynomial b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroInput, "resultant with a zero polynomial");
  const Field k = a.field();
  FieldElement g = k.one(), h = k.one(), s = k.one();
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    Polynomial r = a.scale(b.lc().pow(delta + 1)) % b;
    a = std::move(b);
    if (r.is_zero()) return k.zero();
    b = r.scale((g * h.pow(delta)).inverse());
    g = a.lc();
    h = h.pow(1 - delta) * g.pow(delta);
  }
  // b is a nonzero constant
  h = b.lc().pow(a.degree()) * h.pow(1 - a.degree());
  return s * h;
}

// Yun's squarefree decomposition: f = lc(f) * prod factor^multiplicity with
// monic, squarefree, pairwise coprime factors.
inline std::vector<std::pair<Polynomial, int>> squarefree(const Polynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroInput, "squarefree decomposition of zero");
  std::vector<std::pair<Polynomial, int>> out;
  if (f.degree() == 0) return out;
  Polynomial fm = f.monic();
  Polynomial d = fm.derivative();
  Polynomial a = gcd(fm, d);
  Polynomial b = fm / a;
  Polynomial c = d / a;
  Polynomial dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial ai = dd.is_zero() ? b.monic() : gcd(b, dd);
    if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
    b = b / ai;
    c = dd / ai;
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

inline Polynomial squarefree_part(const Polynomial& f) {
  Polynomial r = Polynomial::constant(f.field().one());
  for (const auto& [p, m] : squarefree(f)) r *= p;
  return r;
}

// Rewrites a polynomial with rational coefficients inside k.
inline Polynomial embed(const Polynomial& p, const Field& k) {
  if (p.field() == k) return p;
  std::vector<FieldElement> v;
  for (const auto& c : p.coeffs()) v.push_back(embed(c, k));
  return Polynomial(k, std::move(v));
}

// Rectangular matrix of field elements.
class Matrix {
 public:
  Matrix(Field k, std::size_t rows, std::size_t cols)
      : field_(k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const {
    std::vector<FieldElement> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

// Kernel basis by exact Gauss-Jordan elimination. One vector per free column,
// with a 1 in that column.
inline std::vector<std::vector<FieldElement>> nullspace(const Matrix& m) {
  Matrix a = m;
  const Field& k = m.field();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    const FieldElement inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const FieldElement factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(a.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ritt
