#include <gtest/gtest.h>

#include <algorithm>

#include "plesken/groups.hpp"
#include "plesken/meataxe.hpp"

using namespace plesken;

namespace {

Module perm_module(const Group& g, const Field& f) {
  std::vector<Mat> gens;
  for (const auto& p : g.generator_perms()) {
    Mat m(f, p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(i, p[i]) = 1;
    gens.push_back(std::move(m));
  }
  return Module(f, g.degree(), std::move(gens));
}

// Oracle: irreducible iff every nonzero vector spins to the whole space.
bool brute_irreducible(const Module& m) {
  const std::uint64_t q = m.field.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m.dim; ++i) total *= q;
  Vec v(m.dim);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < m.dim; ++i) {
      v[i] = static_cast<Elem>(c % q);
      c /= q;
    }
    Mat s(m.field, 0, m.dim);
    s.append_row(v);
    if (spin(m, s).rows() < m.dim) return false;
  }
  return true;
}

bool invariant(const Module& m, const Mat& basis) {
  EchelonBasis eb(m.field, m.dim);
  for (std::size_t i = 0; i < basis.rows(); ++i) eb.add(basis.row_vec(i));
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (const auto& a : m.gens)
      if (!eb.contains(vec_mul(basis.row_vec(i), a))) return false;
  return true;
}

std::vector<std::size_t> factor_dims(const CompositionSeries& cs) {
  std::vector<std::size_t> d;
  for (const auto& f : cs.factors) d.push_back(f.dim);
  std::sort(d.begin(), d.end());
  return d;
}

Mat random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = f.random(rng);
    if (inverse(m)) return m;
  }
}

}  // namespace

TEST(MeatAxe, PermutationModuleFactors) {
  MeatAxe ma(1);
  const Group s4 = builtin_group("symmetric", 4);
  EXPECT_EQ(factor_dims(ma.composition_series(perm_module(s4, Field::prime(5)))),
            (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(factor_dims(ma.composition_series(perm_module(builtin_group("symmetric", 6, 1000), Field::prime(3)))),
            (std::vector<std::size_t>{1, 1, 4}));
  const Group l = builtin_group("psl2", 8);
  EXPECT_EQ(factor_dims(ma.composition_series(perm_module(l, Field::prime(3)))), (std::vector<std::size_t>{1, 1, 7}));
  EXPECT_EQ(factor_dims(ma.composition_series(perm_module(l, Field::prime(7)))), (std::vector<std::size_t>{1, 8}));
}

TEST(MeatAxe, AgreesWithBruteForce) {
  Rng rng(5);
  for (int it = 0; it < 40; ++it) {
    const Field f = Field::prime(it % 2 ? 3 : 5);
    const std::size_t n = 2 + rng() % 3;
    std::vector<Mat> gens;
    const std::size_t k = 1 + rng() % 2;
    for (std::size_t g = 0; g < k; ++g) {
      Mat a(f, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = f.random(rng);
      // Make some of them reducible by zeroing a corner.
      if (it % 3 == 0)
        for (std::size_t j = 1; j < n; ++j) a(0, j) = 0;
      gens.push_back(std::move(a));
    }
    const Module m(f, n, gens);
    MeatAxe ma(static_cast<std::uint64_t>(it));
    const bool irr = ma.is_irreducible(m);
    EXPECT_EQ(irr, brute_irreducible(m)) << "iteration " << it;
    const auto cs = ma.composition_series(m);
    std::size_t total = 0;
    for (std::size_t i = 0; i < cs.factors.size(); ++i) {
      total += cs.factors[i].dim;
      EXPECT_TRUE(brute_irreducible(cs.factors[i]));
      EXPECT_TRUE(invariant(m, cs.chain[i + 1]));
      EXPECT_EQ(rank(cs.chain[i + 1]), cs.chain[i + 1].rows());
      EXPECT_EQ(rank(vstack(cs.chain[i], cs.chain[i + 1])), cs.chain[i + 1].rows());
    }
    EXPECT_EQ(total, n);
  }
}

TEST(MeatAxe, EndomorphismDegree) {
  MeatAxe ma(3);
  const Field f = Field::prime(5);
  // Companion matrix of an irreducible cubic: End is F_125.
  const Poly c = find_irreducible(f, 3);
  Mat a(f, 3, 3);
  for (std::size_t i = 0; i + 1 < 3; ++i) a(i, i + 1) = 1;
  for (std::size_t j = 0; j < 3; ++j) a(2, j) = f.neg(c[j]);
  const Module m(f, 3, {a});
  EXPECT_TRUE(ma.is_irreducible(m));
  EXPECT_EQ(ma.endomorphism_degree(m), 3u);
  const auto cs = ma.composition_series(perm_module(builtin_group("symmetric", 4), Field::prime(5)));
  for (const auto& fac : cs.factors) EXPECT_EQ(ma.endomorphism_degree(fac), 1u);
}

TEST(MeatAxe, IsomorphismUnderBasisChange) {
  MeatAxe ma(4);
  Rng rng(8);
  const Field f = Field::prime(3);
  const auto cs = ma.composition_series(perm_module(builtin_group("psl2", 8), f));
  const Module& seven = *std::find_if(cs.factors.begin(), cs.factors.end(), [](const Module& m) { return m.dim == 7; });
  const Mat p = random_invertible(f, 7, rng);
  const Mat pinv = *inverse(p);
  std::vector<Mat> conj;
  for (const auto& g : seven.gens) conj.push_back(p * g * pinv);
  EXPECT_TRUE(ma.isomorphic(seven, Module(f, 7, conj)));
  EXPECT_TRUE(ma.isomorphic(seven, dual_module(seven)));
  // A twist that swaps generators is not isomorphic in general.
  const Module tw(f, 7, {seven.gens[1], seven.gens[0], seven.gens[2]});
  EXPECT_FALSE(ma.isomorphic(seven, tw));
}

TEST(MeatAxe, InvariantForms) {
  MeatAxe ma(6);
  // Natural module of SL2(5): the invariant form is the determinant pairing (alternating).
  const Field f = Field::prime(5);
  const Module nat(f, 2, {Mat::from_ints(f, {{1, 1}, {0, 1}}), Mat::from_ints(f, {{0, -1}, {1, 0}})});
  const auto form = ma.invariant_form(nat);
  ASSERT_TRUE(form.has_value());
  EXPECT_EQ(form->transpose(), f.neg(1) * *form);
  for (const auto& g : nat.gens) EXPECT_EQ(g * *form * g.transpose(), *form);

  const auto cs = ma.composition_series(perm_module(builtin_group("symmetric", 4), f));
  for (const auto& fac : cs.factors) {
    const auto b = ma.invariant_form(fac);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->transpose(), *b);
  }
  // A faithful character of C_3 over F_7 is not self-dual.
  const Module chi(Field::prime(7), 1, {Mat::from_ints(Field::prime(7), {{2}})});
  EXPECT_FALSE(ma.invariant_form(chi).has_value());
}

TEST(MeatAxe, TensorProductDimensions) {
  MeatAxe ma(2);
  const Field f = Field::prime(5);
  const Module nat(f, 2, {Mat::from_ints(f, {{1, 1}, {0, 1}}), Mat::from_ints(f, {{0, -1}, {1, 0}})});
  const Module sq = tensor_product(nat, nat);
  // V (x) V = Sym^2 V + Lambda^2 V for SL2 in characteristic 5.
  EXPECT_EQ(factor_dims(ma.composition_series(sq)), (std::vector<std::size_t>{1, 3}));
}
