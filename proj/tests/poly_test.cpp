#include <gtest/gtest.h>

#include "plesken/error.hpp"
#include "plesken/poly.hpp"

using namespace plesken;

namespace {

// Cubic over F_p with coefficients low degree first.
Poly f7(const Field& f) { return Poly::from_ints(f, {-1, -2, 1, 1}); }
Poly f9(const Field& f) { return Poly::from_ints(f, {-1, -3, 0, 1}); }

std::size_t brute_roots(const Poly& f) {
  std::size_t n = 0;
  for (Elem a = 0; a < f.field().order(); ++a) n += f.eval(a) == 0;
  return n;
}

}  // namespace

TEST(Poly, RootCountMatchesExamples) {
  EXPECT_EQ(root_count(f9(Field::prime(71))), 3u);
  EXPECT_EQ(root_count(f7(Field::prime(17))), 0u);
  EXPECT_EQ(root_count(Poly::from_ints(Field::prime(5), {-1, 0, 1})), 2u);
  EXPECT_THROW(root_count(Poly(Field::prime(5))), ValidationError);
}

TEST(Poly, RootCountAgreesWithEvaluation) {
  Rng rng(3);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 31u}) {
    const Field f = Field::prime(p);
    for (int it = 0; it < 40; ++it) {
      std::vector<Elem> c(1 + rng() % 7);
      for (auto& x : c) x = f.random(rng);
      Poly g(f, c);
      if (g.is_zero()) continue;
      EXPECT_EQ(root_count(g), brute_roots(g));
      const auto r = roots(g, rng);
      EXPECT_EQ(r.size(), brute_roots(g));
      for (Elem a : r) EXPECT_EQ(g.eval(a), 0u);
    }
  }
}

TEST(Poly, FindIrreducibleMatchesLexScan) {
  EXPECT_EQ(find_irreducible(Field::prime(5), 1), Poly::x(Field::prime(5)));
  for (std::uint32_t p : {5u, 17u}) {
    const Field f = Field::prime(p);
    // Oracle: a cubic is irreducible iff it has no root; scan (c2, c1, c0) lexicographically.
    Poly expect(f);
    bool found = false;
    for (Elem c2 = 0; c2 < p && !found; ++c2)
      for (Elem c1 = 0; c1 < p && !found; ++c1)
        for (Elem c0 = 0; c0 < p && !found; ++c0) {
          Poly g(f, {c0, c1, c2, 1});
          if (brute_roots(g) == 0) {
            expect = g;
            found = true;
          }
        }
    EXPECT_EQ(find_irreducible(f, 3), expect) << "p=" << p;
  }
  EXPECT_EQ(find_irreducible(Field::prime(5), 3), Poly::from_ints(Field::prime(5), {1, 1, 0, 1}));
}

TEST(Poly, DistinctDegreeExamples) {
  using M = std::map<unsigned, unsigned>;
  EXPECT_EQ(factor_distinct_degree(f7(Field::prime(71))), (M{{1, 3}}));
  EXPECT_EQ(factor_distinct_degree(f9(Field::prime(17))), (M{{1, 3}}));
  EXPECT_EQ(factor_distinct_degree(f7(Field::prime(5))), (M{{3, 1}}));
  const Field f = Field::prime(5);
  const Poly sq = Poly::from_ints(f, {1, 1}) * Poly::from_ints(f, {1, 1});
  EXPECT_THROW(factor_distinct_degree(sq), ValidationError);
}

TEST(Poly, FactorDegreesSumToDegree) {
  Rng rng(5);
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    const Field f = Field::prime(p);
    for (int it = 0; it < 60; ++it) {
      std::vector<Elem> c(2 + rng() % 6);
      for (auto& x : c) x = f.random(rng);
      c.back() = 1;
      Poly g(f, c);
      Poly prod = Poly::constant(f, 1);
      int total = 0;
      for (const auto& [h, e] : factor(g, rng)) {
        EXPECT_TRUE(is_irreducible(h));
        for (unsigned i = 0; i < e; ++i) prod = prod * h;
        total += h.degree() * static_cast<int>(e);
      }
      EXPECT_EQ(total, g.degree());
      EXPECT_EQ(prod, g);
      if (gcd(g, g.derivative()).degree() == 0) {
        int dsum = 0;
        for (const auto& [d, cnt] : factor_distinct_degree(g)) dsum += static_cast<int>(d * cnt);
        EXPECT_EQ(dsum, g.degree());
      }
    }
  }
}

TEST(Poly, FactorOverExtension) {
  Rng rng(8);
  const Field f = Field::extension(17, 3);
  // f7 splits over F_{17^3}: its roots generate the cubic extension.
  const auto fac = factor(f7(f), rng);
  ASSERT_EQ(fac.size(), 3u);
  for (const auto& [h, e] : fac) EXPECT_EQ(h.degree(), 1);
}

TEST(Poly, SquarefreeDecomposition) {
  const Field f = Field::prime(3);
  const Poly a = Poly::from_ints(f, {1, 1});     // x + 1
  const Poly b = Poly::from_ints(f, {2, 0, 1});  // x^2 + 2 = (x+1)(x+2)
  const Poly c = Poly::from_ints(f, {1, 0, 1});  // x^2 + 1, irreducible
  const Poly g = a * a * a * c * c;
  auto sf = squarefree_factorization(g);
  Poly prod = Poly::constant(f, 1);
  for (const auto& [h, e] : sf)
    for (unsigned i = 0; i < e; ++i) prod = prod * h;
  EXPECT_EQ(prod, g);
  (void)b;
}

TEST(Poly, DivisionIdentity) {
  Rng rng(1);
  const Field f = Field::extension(3, 2);
  for (int it = 0; it < 100; ++it) {
    std::vector<Elem> ca(1 + rng() % 8), cb(1 + rng() % 4);
    for (auto& x : ca) x = f.random(rng);
    for (auto& x : cb) x = f.random(rng);
    Poly a(f, ca), b(f, cb);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}
