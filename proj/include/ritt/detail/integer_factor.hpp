#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace ritt::detail {

// Pollard-Brent; returns a nontrivial factor of composite n or 0 after the
// iteration budget runs out.
inline mpz_class pollard_brent(const mpz_class& n, unsigned long seed, unsigned long budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class y = seed % n, c = (seed * 7 + 1) % n, g = 1, q = 1, x, ys;
  unsigned long r = 1, used = 0;
  const unsigned long m = 64;
  auto step = [&](mpz_class& v) { v = (v * v + c) % n; };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        step(y);
        q = (q * abs(x - y)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      used += m;
      if (used > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step(ys);
      mpz_class d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

// Prime factorization of |n| (n != 0). Gives up (nullopt) when a cofactor
// resists Pollard-Brent within the budget.
inline std::optional<std::map<mpz_class, unsigned>> factor_integer(mpz_class n, unsigned long budget = 2000000) {
  std::map<mpz_class, unsigned> out;
  n = abs(n);
  for (unsigned long d = 2; d < 1000 && n > 1; ++d) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out[mpz_class(d)]++;
      n /= d;
    }
  }
  std::vector<mpz_class> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    mpz_class m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
      out[m]++;
      continue;
    }
    mpz_class f = 0;
    for (unsigned long seed = 2; seed < 12 && f == 0; ++seed) f = pollard_brent(m, seed, budget);
    if (f == 0) return std::nullopt;
    stack.push_back(f);
    stack.push_back(m / f);
  }
  return out;
}

// Positive divisors, or nullopt if factoring failed or there are more than
// `limit` of them.
inline std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& n, std::size_t limit) {
  auto fac = factor_integer(n);
  if (!fac) return std::nullopt;
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : *fac) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
      if (divs.size() > limit) return std::nullopt;
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace ritt::detail
