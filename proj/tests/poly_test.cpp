#include "support.hpp"

using namespace rt;

TEST(PolyArith, Examples) {
  EXPECT_EQ(P("x-1") * P("x+1"), P("x^2-1"));
  EXPECT_TRUE((P("x^2") + P("-x^2")).is_zero());
  EXPECT_EQ(P("x^2+x").degree(), 2);
  EXPECT_EQ(Polynomial(Q()).degree(), Polynomial::kZeroDegree);
  EXPECT_EQ(P("x+1").scale(Q().from(2)), P("2*x+2"));
  EXPECT_RITT_ERROR(P("x") + P("x", Qi()), ErrorCode::FieldMismatch);
}

TEST(PolyDivrem, Examples) {
  auto [q1, r1] = divrem(P("x^3"), P("x^2"));
  EXPECT_EQ(q1, P("x"));
  EXPECT_TRUE(r1.is_zero());
  auto [q2, r2] = divrem(P("x^2+1"), P("x-1"));
  EXPECT_EQ(q2, P("x+1"));
  EXPECT_EQ(r2, P("2"));
  auto [q3, r3] = divrem(P("x"), P("x^2"));
  EXPECT_TRUE(q3.is_zero());
  EXPECT_EQ(r3, P("x"));
  EXPECT_RITT_ERROR(divrem(P("x"), Polynomial(Q())), ErrorCode::DivisionByZero);
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(gcd(P("x^2-1"), P("x^2-2*x+1")), P("x-1"));
  EXPECT_EQ(gcd(P("x^3"), P("x^2")), P("x^2"));
  EXPECT_EQ(gcd(P("x^2+1"), P("x-1")), P("1"));
  EXPECT_EQ(gcd(P("x^2+1", Qi()), P("x^2+2*i*x-1", Qi())), P("x+i", Qi()));
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(P("x^2+1").eval(Q().one()), Q().from(2));
  EXPECT_TRUE(P("27*x^5-108*x^4+141*x^3-81*x^2+21*x-2").eval(Q().from(BigRational(1, 3))).is_zero());
  EXPECT_TRUE(P("x^3-2", Qw()).eval(Qw().generator()).is_zero());
}

TEST(PolyResultant, Examples) {
  EXPECT_EQ(resultant(P("x^2+1"), P("x-1")), Q().from(2));
  EXPECT_EQ(resultant(P("x-3"), P("x-5")), Q().from(-2));
  EXPECT_RITT_ERROR(resultant(Polynomial(Q()), P("x")), ErrorCode::ZeroInput);
}

TEST(PolySquarefree, Examples) {
  using V = std::vector<std::pair<Polynomial, int>>;
  EXPECT_EQ(squarefree(P("x^4+2*x^2+1")), (V{{P("x^2+1"), 2}}));
  EXPECT_EQ(squarefree(P("x^3-x")), (V{{P("x^3-x"), 1}}));
  EXPECT_EQ(squarefree(P("x^2*(x-1)^3")), (V{{P("x"), 2}, {P("x-1"), 3}}));
  EXPECT_EQ(squarefree_part(P("x^2*(x-1)^3")), P("x^2-x"));
}

TEST(Nullspace, Examples) {
  Matrix m(Q(), 2, 2);
  m(0, 0) = Q().from(1);
  m(0, 1) = Q().from(1);
  m(1, 0) = Q().from(2);
  m(1, 1) = Q().from(2);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0], -ns[0][1]);
  EXPECT_FALSE(ns[0][0].is_zero());

  Matrix id(Q(), 3, 3);
  for (std::size_t j = 0; j < 3; ++j) id(j, j) = Q().one();
  EXPECT_TRUE(nullspace(id).empty());

  EXPECT_EQ(nullspace(Matrix(Q(), 2, 3)).size(), 3u);
}

TEST(PolyCompose, AgreesWithEvaluation) {
  Rng rng(7);
  for (int n = 0; n < 50; ++n) {
    const Polynomial f = rng.poly(Qi(), static_cast<int>(rng.integer(0, 4)));
    const Polynomial g = rng.poly(Qi(), static_cast<int>(rng.integer(0, 3)));
    const FieldElement a = rng.element(Qi());
    ASSERT_EQ(f.compose(g).eval(a), f.eval(g.eval(a)));
  }
}

// ---------------------------------------------------------------- properties

TEST(PolyProperties, DivremRoundTrip) {
  Rng rng(11);
  for (int n = 0; n < 500; ++n) {
    const Field& k = n % 2 ? Qi() : Q();
    const Polynomial a = rng.poly(k, static_cast<int>(rng.integer(0, 7)));
    const Polynomial b = rng.poly(k, static_cast<int>(rng.integer(0, 4)));
    auto [q, r] = divrem(a, b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(PolyProperties, GcdDividesBoth) {
  Rng rng(12);
  for (int n = 0; n < 200; ++n) {
    const Field& k = n % 2 ? Qw() : Q();
    const Polynomial c = rng.poly(k, static_cast<int>(rng.integer(0, 2)));
    const Polynomial a = rng.poly(k, static_cast<int>(rng.integer(0, 4))) * c;
    const Polynomial b = rng.poly(k, static_cast<int>(rng.integer(0, 4))) * c;
    const Polynomial g = gcd(a, b);
    ASSERT_TRUE(g.is_monic());
    ASSERT_TRUE((a % g).is_zero());
    ASSERT_TRUE((b % g).is_zero());
    ASSERT_TRUE((g % c.monic()).is_zero());
  }
}

TEST(PolyProperties, ResultantMatchesSylvesterDeterminant) {
  Rng rng(13);
  for (int n = 0; n < 200; ++n) {
    const Polynomial a = rng.poly(Q(), static_cast<int>(rng.integer(1, 5)));
    const Polynomial b = rng.poly(Q(), static_cast<int>(rng.integer(1, 5)));
    ASSERT_EQ(resultant(a, b).rational_part(), sylvester_resultant(a, b)) << to_string(a) << " , " << to_string(b);
  }
}

TEST(PolyProperties, ResultantVanishesExactlyOnCommonFactor) {
  Rng rng(14);
  for (int n = 0; n < 200; ++n) {
    const Field& k = n % 2 ? Qi() : Q();
    Polynomial a = rng.poly(k, static_cast<int>(rng.integer(1, 4)));
    Polynomial b = rng.poly(k, static_cast<int>(rng.integer(1, 4)));
    if (n % 3 == 0) {
      const Polynomial c = rng.poly(k, static_cast<int>(rng.integer(1, 2)));
      a *= c;
      b *= c;
    }
    ASSERT_EQ(resultant(a, b).is_zero(), gcd(a, b).degree() > 0);
  }
}

TEST(PolyProperties, SquarefreeReassembles) {
  Rng rng(15);
  for (int n = 0; n < 200; ++n) {
    const Field& k = n % 2 ? Qa() : Q();
    Polynomial f = Polynomial::constant(rng.nonzero(k));
    for (int j = 0; j < 3; ++j) f *= rng.poly(k, static_cast<int>(rng.integer(1, 2))).pow(static_cast<unsigned>(rng.integer(1, 3)));
    Polynomial r = Polynomial::constant(f.lc());
    for (const auto& [p, m] : squarefree(f)) {
      ASSERT_TRUE(p.is_monic());
      ASSERT_EQ(gcd(p, p.derivative()).degree(), 0);
      r *= p.pow(static_cast<unsigned>(m));
    }
    ASSERT_EQ(r, f);
  }
}

TEST(PolyProperties, NullspaceVectorsAreAnnihilated) {
  Rng rng(16);
  for (int n = 0; n < 200; ++n) {
    const Field& k = n % 2 ? Qi() : Q();
    const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 5));
    const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 6));
    Matrix m(k, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.coin() ? rng.element(k, 2) : k.zero();
    // Force dependencies: duplicate a row scaled.
    if (rows > 1)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * k.from(3);
    const auto ns = nullspace(m);
    ASSERT_GE(ns.size() + std::min(rows, cols), cols);
    for (const auto& v : ns) {
      ASSERT_EQ(v.size(), cols);
      for (const auto& x : m.apply(v)) ASSERT_TRUE(x.is_zero());
    }
  }
}
