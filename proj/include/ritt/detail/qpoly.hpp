#pragma once

// Dense polynomials over Q stored as plain coefficient vectors (lowest degree
// first). These back the quotient-ring arithmetic of number fields and the
// norm computations of the factorizer; user-facing code works with
// ritt::Polynomial instead.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "ritt/error.hpp"

namespace ritt::detail {

using QPoly = std::vector<mpq_class>;

inline void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly qadd(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline QPoly qscale(const QPoly& a, const mpq_class& c) {
  if (sgn(c) == 0) return {};
  QPoly r(a);
  for (auto& v : r) v *= c;
  return r;
}

inline std::pair<QPoly, QPoly> qdivrem(const QPoly& a, const QPoly& b) {
  if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  QPoly r(a);
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  const mpq_class inv_lc = 1 / b.back();
  for (std::size_t i = r.size(); i-- >= b.size();) {
    if (sgn(r[i]) == 0) continue;
    mpq_class t = r[i] * inv_lc;
    std::size_t shift = i + 1 - b.size();
    q[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= t * b[j];
  }
  trim(r);
  trim(q);
  return {q, r};
}

inline QPoly qrem(const QPoly& a, const QPoly& b) { return qdivrem(a, b).second; }

inline QPoly qmonic(const QPoly& a) {
  if (a.empty()) return a;
  return qscale(a, 1 / a.back());
}

inline QPoly qgcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return qmonic(a);
}

// Inverse of a modulo m, assuming gcd(a, m) = 1.
inline QPoly qinvmod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = qrem(a, m);
  QPoly s0, s1{mpq_class(1)};
  if (r1.empty()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  while (qdeg(r1) > 0) {
    auto [q, r] = qdivrem(r0, r1);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) fail(ErrorCode::DivisionByZero, "element is not invertible modulo the minimal polynomial");
  }
  return qscale(s1, 1 / r1[0]);
}

inline mpq_class qeval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Resultant over Q through the Euclidean remainder sequence.
inline mpq_class qresultant(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  mpq_class acc = 1;
  while (true) {
    int da = qdeg(a), db = qdeg(b);
    if (db == 0) {
      for (int i = 0; i < da; ++i) acc *= b[0];
      return acc;
    }
    QPoly r = qrem(a, b);
    if (r.empty()) return 0;
    int dr = qdeg(r);
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    for (int i = 0; i < da - dr; ++i) acc *= b.back();
    a = std::move(b);
    b = std::move(r);
  }
}

inline QPoly qderivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  trim(r);
  return r;
}

// Newton interpolation through (xs[i], ys[i]).
inline QPoly qinterpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  std::size_t n = xs.size();
  std::vector<mpq_class> coef(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly result{coef[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // result = result * (x - xs[k]) + coef[k]
    QPoly shifted(result.size() + 1);
    for (std::size_t i = 0; i < result.size(); ++i) {
      shifted[i + 1] += result[i];
      shifted[i] -= result[i] * xs[k];
    }
    shifted[0] += coef[k];
    result = std::move(shifted);
  }
  trim(result);
  return result;
}

}  // namespace ritt::detail
