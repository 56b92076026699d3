#include "support.hpp"

using namespace rt;

namespace {

std::set<FieldElement> as_set(const std::vector<FieldElement>& v) { return {v.begin(), v.end()}; }

std::set<FieldElement> elements(const std::vector<std::string>& xs, const Field& k) {
  std::set<FieldElement> out;
  for (const auto& s : xs) out.insert(E(s, k));
  return out;
}

using Factors = std::vector<std::pair<Polynomial, int>>;

}  // namespace

TEST(RationalRoots, WorkedExampleNormalForm) {
  const auto n = rational_roots(P("-4*x^6-6*x^5+32*x^4-34*x^3+14*x^2-2*x"));
  EXPECT_EQ(std::set<BigRational>(n.begin(), n.end()), (std::set<BigRational>{0, 1, BigRational(1, 2)}));
  const auto d = rational_roots(P("27*x^5-108*x^4+141*x^3-81*x^2+21*x-2"));
  EXPECT_EQ(std::set<BigRational>(d.begin(), d.end()), (std::set<BigRational>{BigRational(1, 3), BigRational(2, 3)}));
  EXPECT_TRUE(rational_roots(P("x^2+1")).empty());
  EXPECT_RITT_ERROR(rational_roots(Polynomial(Q())), ErrorCode::ZeroInput);
}

TEST(FactorOverRationals, Examples) {
  EXPECT_EQ(factor_over_rationals(P("x^4-1")).factors, (Factors{{P("x-1"), 1}, {P("x+1"), 1}, {P("x^2+1"), 1}}));
  const Polynomial n = P("x^3*(x+6)^3*(x^2-6*x+36)^3");
  const Factorization fz = factor_over_rationals(n);
  EXPECT_EQ(fz.factors, (Factors{{P("x"), 3}, {P("x+6"), 3}, {P("x^2-6*x+36"), 3}}));
  EXPECT_EQ(fz.expand(), n);
  const Factorization c = factor_over_rationals(P("6*x^2-6"));
  EXPECT_EQ(c.unit_constant, Q().from(6));
  EXPECT_EQ(c.expand(), P("6*x^2-6"));
  EXPECT_RITT_ERROR(factor_over_rationals(Polynomial(Q())), ErrorCode::ZeroInput);
}

TEST(FactorOverRationals, DegreeTwelveInvariantNumerator) {
  // Frozen from the brute-force divisor search below.
  const Polynomial f = P("x^12-33*x^8-33*x^4+1");
  const Factors expected{{P("x^2-2*x-1"), 1}, {P("x^2+2*x-1"), 1}, {P("x^4+1"), 1}, {P("x^4+6*x^2+1"), 1}};
  auto got = factor_over_rationals(f).factors;
  std::sort(got.begin(), got.end());
  auto want = expected;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
  Polynomial prod = P("1");
  for (const auto& [p, m] : expected) {
    prod *= p;
    const auto bf = brute_force_factor(primitive_int(p));
    EXPECT_EQ(bf.size(), 1u) << to_string(p) << " is reducible by brute force";
  }
  EXPECT_EQ(prod, f);
}

TEST(FactorOverRationals, HardZassenhausInstances) {
  // Swinnerton-Dyer polynomial: irreducible, but splits into quadratics modulo
  // every prime, so recombination must try subsets.
  const Polynomial s = P("x^8-40*x^6+352*x^4-960*x^2+576");
  EXPECT_EQ(factor_over_rationals(s).factors.size(), 1u);
  const Polynomial prod = s * P("x^4-10*x^2+1");
  const Factorization fz = factor_over_rationals(prod);
  EXPECT_EQ(fz.factors.size(), 2u);
  EXPECT_EQ(fz.expand(), prod);
  const Polynomial cyc = P("x^30-1");
  const Factorization c = factor_over_rationals(cyc);
  EXPECT_EQ(c.factors.size(), 8u);  // one cyclotomic factor per divisor of 30
  EXPECT_EQ(c.expand(), cyc);
}

TEST(FactorOverExtension, Examples) {
  EXPECT_EQ(factor_over_extension(P("x^2+1", Qi())).factors.size(), 2u);
  EXPECT_EQ(factor_over_extension(P("x^2+1", Qi())).expand(), P("(x-i)*(x+i)", Qi()));
  const Polynomial q = P("x^2-6*x+36", Qa());
  const Factorization fa = factor_over_extension(q);
  ASSERT_EQ(fa.factors.size(), 2u);
  // Direct expansion of the expected linear factors.
  EXPECT_EQ(P("(x+6*a)*(x-6*a-6)", Qa()), q);
  EXPECT_EQ(as_set({fa.factors[0].first.coeff(0), fa.factors[1].first.coeff(0)}), elements({"6*a", "-6*a-6"}, Qa()));
  EXPECT_RITT_ERROR(factor_over_extension(P("x^2+1")), ErrorCode::FieldMismatch);
  EXPECT_RITT_ERROR(factor_over_extension(Polynomial(Qi())), ErrorCode::ZeroInput);
}

TEST(FactorOverExtension, CubeRootOfTwoNumeratorPairsAlongRightComponent) {
  const Polynomial n = P("2*x^4-2*x^3-8*x-1", Qw());
  const Factorization fz = factor_over_extension(n);
  EXPECT_EQ(fz.expand(), n);
  // The numerator stays irreducible over Q(w); its roots pair up as the two
  // fibres f2 = r of the roots r of num(f1), i.e. n is proportional to
  // num(f1) homogenized at (num(f2), den(f2)).
  EXPECT_EQ(fz.factors.size(), 1u);
  const CaseRecord cb6 = load_case("CB-6");
  const RationalFunction f1 = cb6.fn("f1"), f2 = cb6.fn("f2");
  const Polynomial paired =
      ritt::detail::homogenize(f1.num(), ritt::detail::powers(f2.num(), 2), ritt::detail::powers(f2.den(), 2));
  EXPECT_EQ(paired.monic(), n.monic());
  EXPECT_TRUE(roots_in_field(f1.num(), Qw()).empty());
}

TEST(RootsInField, Examples) {
  EXPECT_EQ(as_set(roots_in_field(P("x^2+1", Qi()), Qi())), elements({"i", "-i"}, Qi()));
  EXPECT_EQ(as_set(roots_in_field(P("(x-3)^3*(x^2+3*x+9)^3"), Q())), elements({"3"}, Q()));
  EXPECT_TRUE(roots_in_field(P("x^2-2"), Q()).empty());
  EXPECT_EQ(as_set(roots_in_field(P("x^2+3*x+9"), Qa())), elements({"3*a", "-3*a-3"}, Qa()));
  EXPECT_EQ(as_set(roots_in_field(P("x^3-2"), Qw())), elements({"w"}, Qw()));
  EXPECT_RITT_ERROR(roots_in_field(Polynomial(Q()), Q()), ErrorCode::ZeroInput);
}

TEST(RootsOfUnity, Examples) {
  EXPECT_EQ(as_set(roots_of_unity(Q(), 6)), elements({"1", "-1"}, Q()));
  EXPECT_EQ(as_set(roots_of_unity(Qi(), 4)), elements({"1", "-1", "i", "-i"}, Qi()));
  EXPECT_EQ(as_set(roots_of_unity(Qa(), 3)), elements({"1", "a", "-a-1"}, Qa()));
  EXPECT_EQ(as_set(roots_of_unity(Qa(), 6)).size(), 6u);
  EXPECT_EQ(as_set(roots_of_unity(Qw(), 3)), elements({"1"}, Qw()));
}

// ---------------------------------------------------------------- properties

TEST(FactorProperties, ReassemblyAndIrreducibleFactorsHaveNoRoots) {
  Rng rng(21);
  const std::vector<const Field*> fields{&Q(), &Qi(), &Qw(), &Qa()};
  for (int n = 0; n < 200; ++n) {
    const Field& k = *fields[static_cast<std::size_t>(n) % fields.size()];
    Polynomial f = Polynomial::constant(rng.nonzero(k, 3));
    const int parts = static_cast<int>(rng.integer(1, 3));
    for (int j = 0; j < parts; ++j) f *= rng.poly(k, static_cast<int>(rng.integer(1, k.is_rational() ? 3 : 2)), 3);
    const Factorization fz = factor(f);
    ASSERT_EQ(fz.expand(), f) << to_string(f);
    for (const auto& [p, m] : fz.factors) {
      ASSERT_TRUE(p.is_monic());
      ASSERT_GE(m, 1);
      if (p.degree() >= 2) ASSERT_TRUE(roots_in_field(p, k).empty()) << to_string(p);
    }
  }
}

TEST(FactorProperties, AgreesWithBruteForceUpToDegreeSix) {
  Rng rng(22);
  for (int n = 0; n < 200; ++n) {
    Polynomial f = P("1");
    while (f.degree() < 2) {
      f = P("1");
      const int parts = static_cast<int>(rng.integer(1, 3));
      for (int j = 0; j < parts && f.degree() < 6; ++j) {
        const int d = static_cast<int>(rng.integer(1, std::min(3, 6 - std::max(0, f.degree()))));
        f *= rng.int_poly(d, 3);
      }
    }
    ASSERT_EQ(library_factor(f), brute_force_factor(primitive_int(f))) << to_string(f);
  }
}

TEST(FactorProperties, RootsEvaluateToZero) {
  Rng rng(23);
  const std::vector<const Field*> fields{&Q(), &Qi(), &Qa()};
  for (int n = 0; n < 200; ++n) {
    const Field& k = *fields[static_cast<std::size_t>(n) % fields.size()];
    Polynomial f = rng.poly(k, static_cast<int>(rng.integer(0, 2)), 3);
    for (int j = 0, r = static_cast<int>(rng.integer(0, 3)); j < r; ++j) f *= Polynomial::linear_root(rng.element(k, 3));
    if (f.degree() < 1) continue;
    const auto roots = roots_in_field(f, k);
    for (const auto& a : roots) ASSERT_TRUE(f.eval(a).is_zero());
    std::size_t linear = 0;
    for (const auto& [p, m] : factor(f).factors)
      if (p.degree() == 1) ++linear;
    ASSERT_EQ(roots.size(), linear);
  }
}

TEST(FactorProperties, NormIsMultiplicative) {
  Rng rng(24);
  for (const Field* k : {&Qi(), &Qw(), &Qa()})
    for (int n = 0; n < 200; ++n) {
      const auto a = rng.element(*k), b = rng.element(*k);
      ASSERT_EQ(norm(a * b), norm(a) * norm(b));
    }
}
