#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

#include "plesken/group_algebra.hpp"

using namespace plesken;

namespace {

Vec random_element(const GroupAlgebra& kg, Rng& rng) {
  Vec v(kg.dim());
  for (auto& c : v) c = kg.field().random(rng);
  return v;
}

Vec sum_all(const GroupAlgebra& kg, const std::vector<Vec>& xs) {
  Vec s = kg.zero();
  for (const auto& x : xs) s = kg.add(s, x);
  return s;
}

void expect_block_identities(const GroupAlgebra& kg, const BlockDecomposition& bd) {
  const auto& es = bd.idempotents;
  EXPECT_EQ(sum_all(kg, es), kg.one());
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j)
      EXPECT_EQ(kg.mul(es[i], es[j]), i == j ? es[i] : kg.zero());
    for (auto s : kg.group().generators()) {
      const Vec g = kg.basis(s);
      EXPECT_EQ(kg.mul(g, es[i]), kg.mul(es[i], g));
    }
    EXPECT_EQ(bd.dual[bd.dual[i]], i);
  }
  EXPECT_EQ(std::accumulate(bd.dims.begin(), bd.dims.end(), std::size_t{0}), kg.dim());
  EXPECT_EQ(bd.principal, 0u);
}

std::size_t radical_dim(const GroupAlgebra& kg, const Vec& e, MeatAxe& ma) {
  return radical(block_algebra_matrices(kg, e), ma).rows();
}

}  // namespace

TEST(GroupAlgebra, MultiplicationIsAssociativeAndUnital) {
  const Group g = builtin_group("symmetric", 4);
  const GroupAlgebra kg(g, Field::prime(5));
  Rng rng(1);
  for (int t = 0; t < 5; ++t) {
    const Vec x = random_element(kg, rng), y = random_element(kg, rng), z = random_element(kg, rng);
    EXPECT_EQ(kg.mul(kg.mul(x, y), z), kg.mul(x, kg.mul(y, z)));
    EXPECT_EQ(kg.mul(kg.one(), x), x);
    EXPECT_EQ(kg.mul(x, kg.one()), x);
    EXPECT_EQ(kg.star(kg.mul(x, y)), kg.mul(kg.star(y), kg.star(x)));
  }
}

TEST(GroupAlgebra, BasisProductsFollowGroupLaw) {
  const Group g = builtin_group("dihedral", 5);
  const GroupAlgebra kg(g, Field::prime(7));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) EXPECT_EQ(kg.mul(kg.basis(a), kg.basis(b)), kg.basis(g.mul(a, b)));
  const std::size_t s = g.generators()[0];
  // (1 + s)(1 - s) = 1 - s^2
  const Vec lhs = kg.mul(kg.add(kg.one(), kg.basis(s)), kg.sub(kg.one(), kg.basis(s)));
  EXPECT_EQ(lhs, kg.sub(kg.one(), kg.basis(g.mul(s, s))));
  EXPECT_EQ(kg.times_element(kg.one(), s), kg.basis(s));
}

TEST(GroupAlgebra, ClassSumsAreCentralAndCountClasses) {
  const Group g = builtin_group("alternating", 5);
  const auto cd = conjugacy_classes(g);
  const GroupAlgebra kg(g, Field::prime(11));
  const auto zb = center_basis(kg, cd);
  EXPECT_EQ(zb.size(), 5u);
  for (const auto& c : zb)
    for (auto s : g.generators()) EXPECT_EQ(kg.mul(c, kg.basis(s)), kg.mul(kg.basis(s), c));
}

TEST(GroupAlgebra, ClassConstantsMatchDirectProducts) {
  const Group g = builtin_group("symmetric", 4);
  const auto cd = conjugacy_classes(g);
  const GroupAlgebra kg(g, Field::prime(101));
  const auto zb = center_basis(kg, cd);
  const auto a = class_constants(g, cd);
  const std::size_t r = cd.num_classes();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Vec prod = kg.mul(zb[i], zb[j]);
      for (std::size_t k = 0; k < r; ++k) EXPECT_EQ(prod[cd.rep(k)], a[(i * r + j) * r + k]);
    }
}

TEST(GroupAlgebra, SplittingFieldDegrees) {
  auto deg = [](const Group& g, std::uint32_t p) { return splitting_field_degree(g, conjugacy_classes(g), p); };
  EXPECT_EQ(deg(builtin_group("sl2", 5), 5), 1u);
  EXPECT_EQ(deg(builtin_group("psl2", 8), 3), 3u);
  EXPECT_EQ(deg(builtin_group("psl2", 8), 7), 3u);
  EXPECT_EQ(deg(builtin_group("symmetric", 5), 7), 1u);
  EXPECT_EQ(deg(builtin_group("quaternion"), 3), 1u);
  // Cyclic groups: the multiplicative order of p modulo n.
  EXPECT_EQ(deg(builtin_group("cyclic", 5), 3), 4u);
  EXPECT_EQ(deg(builtin_group("cyclic", 7), 3), 6u);
  EXPECT_EQ(deg(builtin_group("cyclic", 13), 3), 3u);
  // Only p-regular classes matter.
  EXPECT_EQ(deg(builtin_group("cyclic", 15), 5), 2u);
}

TEST(GroupAlgebra, RadicalOfSmallAlgebras) {
  MeatAxe ma(3);
  {
    const Group g = builtin_group("symmetric", 3);
    const GroupAlgebra kg(g, Field::prime(71));
    EXPECT_EQ(radical_dim(kg, kg.one(), ma), 0u);
  }
  {
    // For a p-group the radical is the augmentation ideal.
    const Group g = builtin_group("cyclic", 3);
    const GroupAlgebra kg(g, Field::prime(3));
    const Mat rad = radical(block_algebra_matrices(kg, kg.one()), ma);
    EXPECT_EQ(rad.rows(), 2u);
    const Group q8 = builtin_group("quaternion");
    EXPECT_EQ(radical_dim(GroupAlgebra(q8, Field::prime(3)), GroupAlgebra(q8, Field::prime(3)).one(), ma), 0u);
  }
  {
    const Group g = builtin_group("symmetric", 3);
    const GroupAlgebra kg(g, Field::prime(3));
    // rad F_3[S_3] has dimension 6 - 1 - 1 = 4.
    EXPECT_EQ(radical_dim(kg, kg.one(), ma), 4u);
  }
}

TEST(GroupAlgebra, OrdinaryCharacteristicBlocksAreClasses) {
  MeatAxe ma(5);
  for (const auto& [tag, n, p] : std::vector<std::tuple<std::string, std::size_t, std::uint32_t>>{
           {"symmetric", 4, 5}, {"dihedral", 5, 3}, {"quaternion", 0, 5}, {"alternating", 5, 7}}) {
    const Group g = builtin_group(tag, n);
    const auto cd = conjugacy_classes(g);
    const Field f = Field::extension(p, splitting_field_degree(g, cd, p));
    const GroupAlgebra kg(g, f);
    const auto bd = block_idempotents(kg, cd, ma);
    EXPECT_EQ(bd.idempotents.size(), cd.num_classes()) << tag << n;
    expect_block_identities(kg, bd);
    for (std::size_t i = 0; i < bd.dims.size(); ++i) {
      EXPECT_TRUE(bd.defect_zero[i]);
      const auto d = static_cast<std::size_t>(std::lround(std::sqrt(double(bd.dims[i]))));
      EXPECT_EQ(d * d, bd.dims[i]);
    }
    EXPECT_EQ(bd.dims[0], 1u);
  }
}

TEST(GroupAlgebra, DefectZeroAgreesWithRadical) {
  MeatAxe ma(7);
  for (const auto& [tag, n, p] : std::vector<std::tuple<std::string, std::size_t, std::uint32_t>>{
           {"symmetric", 3, 3}, {"symmetric", 4, 3}, {"alternating", 4, 3}, {"dihedral", 5, 5}, {"alternating", 5, 3}}) {
    const Group g = builtin_group(tag, n);
    const auto cd = conjugacy_classes(g);
    const GroupAlgebra kg(g, Field::extension(p, splitting_field_degree(g, cd, p)));
    const auto bd = block_idempotents(kg, cd, ma);
    expect_block_identities(kg, bd);
    for (std::size_t i = 0; i < bd.idempotents.size(); ++i)
      EXPECT_EQ(bd.defect_zero[i], radical_dim(kg, bd.idempotents[i], ma) == 0) << tag << n << " block " << i;
  }
}

TEST(GroupAlgebra, Sl2Mod5Blocks) {
  const Group g = builtin_group("sl2", 5);
  const auto cd = conjugacy_classes(g);
  const GroupAlgebra kg(g, Field::prime(5));
  MeatAxe ma(11);
  const auto bd = block_idempotents(kg, cd, ma);
  expect_block_identities(kg, bd);
  EXPECT_EQ(bd.dims, (std::vector<std::size_t>{35, 60, 25}));
  EXPECT_EQ(bd.defect_zero, (std::vector<bool>{false, false, true}));
  EXPECT_EQ(bd.dual, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(radical_dim(kg, bd.idempotents[2], ma), 0u);
}

TEST(GroupAlgebra, Psl2q8Mod3Blocks) {
  const Group g = builtin_group("psl2", 8);
  const auto cd = conjugacy_classes(g);
  const GroupAlgebra kg(g, Field::extension(3, 3));
  MeatAxe ma(13);
  const auto bd = block_idempotents(kg, cd, ma);
  expect_block_identities(kg, bd);
  EXPECT_EQ(bd.dims, (std::vector<std::size_t>{261, 81, 81, 81}));
  EXPECT_EQ(bd.defect_zero, (std::vector<bool>{false, true, true, true}));
}

TEST(GroupAlgebra, Psl2q8Mod7Blocks) {
  const Group g = builtin_group("psl2", 8);
  const auto cd = conjugacy_classes(g);
  const GroupAlgebra kg(g, Field::extension(7, 3));
  MeatAxe ma(17);
  const auto bd = block_idempotents(kg, cd, ma);
  EXPECT_EQ(bd.dims, (std::vector<std::size_t>{308, 49, 49, 49, 49}));
  EXPECT_EQ(bd.defect_zero, (std::vector<bool>{false, true, true, true, true}));
  EXPECT_EQ(sum_all(kg, bd.idempotents), kg.one());
}
