#pragma once

// Text output in the expression grammar read by parse.hpp, so that
// parse_expression(to_string(f)) == f.

#include <sstream>
#include <string>
#include <vector>

#include "ritt/galois.hpp"

namespace ritt {

inline std::string to_string(const BigRational& q) { return q.get_str(); }

namespace detail {

inline std::string power_term(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

inline int nonzero_terms(const FieldElement& a) {
  int n = 0;
  for (const auto& c : a.coeffs())
    if (sgn(c) != 0) ++n;
  return n;
}

// sum c_k var^k, highest power first. `coeff` renders |c_k| for the term and
// `negative` decides the sign placed in front of it.
template <class C, class Str, class Neg>
std::string sum_of_terms(const std::vector<C>& cs, const std::string& var, Str coeff, Neg negative) {
  std::string out;
  for (std::size_t i = cs.size(); i-- > 0;) {
    const int k = static_cast<int>(i);
    std::string c = coeff(cs[i]);
    if (c.empty()) continue;
    const bool neg = negative(cs[i]);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const std::string p = power_term(var, k);
    if (p.empty()) out += c;
    else if (c == "1") out += p;
    else out += c + "*" + p;
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

inline std::string to_string(const FieldElement& a) {
  const std::string& var = a.field().generator_name();
  return detail::sum_of_terms(
      a.coeffs(), var,
      [](const BigRational& c) { return sgn(c) == 0 ? std::string() : to_string(BigRational(abs(c))); },
      [](const BigRational& c) { return sgn(c) < 0; });
}

inline std::string to_string(const Polynomial& p, const std::string& var = "x") {
  return detail::sum_of_terms(
      p.coeffs(), var,
      [](const FieldElement& c) -> std::string {
        if (c.is_zero()) return "";
        if (c.is_rational()) return to_string(BigRational(abs(c.rational_part())));
        return "(" + to_string(c) + ")";
      },
      [](const FieldElement& c) { return c.is_rational() && sgn(c.rational_part()) < 0; });
}

inline std::string to_string(const RationalFunction& f) {
  const Polynomial& n = f.num();
  const Polynomial& d = f.den();
  auto terms = [](const Polynomial& p) {
    int t = 0;
    for (const auto& c : p.coeffs())
      if (!c.is_zero()) ++t;
    return t;
  };
  std::string ns = to_string(n);
  if (d.degree() <= 0) return ns;
  if (terms(n) > 1) ns = "(" + ns + ")";
  std::string ds = to_string(d);
  if (terms(d) > 1) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

inline std::string to_string(const MoebiusUnit& u) { return to_string(u.to_rf()); }

inline std::string to_string(const Field& k) {
  if (k.is_rational()) return "Q";
  const std::string& g = k.generator_name();
  return "Q[" + g + "]/(" + to_string(Polynomial::from_rationals(Field::rationals(), k.min_poly()), g) + ")";
}

inline std::vector<std::string> to_strings(const FiniteUnitGroup& g) {
  std::vector<std::string> out;
  for (const auto& u : g.elements()) out.push_back(to_string(u));
  return out;
}

inline std::string to_string(const FiniteUnitGroup& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : to_strings(g)) {
    if (!first) out += ", ";
    out += s;
    first = false;
  }
  return out + "}";
}

inline std::string to_string(const DecompositionChain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (i) out += " o ";
    out += "[" + to_string(c.components[i]) + "]";
  }
  return out;
}

}  // namespace ritt
