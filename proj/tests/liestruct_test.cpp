#include <gtest/gtest.h>

#include <algorithm>

#include "plesken/liestruct.hpp"
#include "plesken/plesken.hpp"

using namespace plesken;

namespace {

// sl_2 in the basis e, h, f: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlg sl2(const Field& f) {
  LieAlg l(f, 3);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, std::int64_t v) {
    l.c(i, j, k) = f.from_int(v);
    l.c(j, i, k) = f.from_int(-v);
  };
  set(0, 2, 1, 1);
  set(1, 0, 0, 2);
  set(1, 2, 2, -2);
  return l;
}

std::vector<std::pair<bool, std::size_t>> shape(const LieSeries& s) {
  std::vector<std::pair<bool, std::size_t>> out;
  for (const auto& f : s.factors) out.emplace_back(f.abelian, f.dim);
  std::sort(out.begin(), out.end());
  return out;
}

void expect_chain_of_ideals(const LieAlg& l, const LieSeries& s) {
  const Mat all = Mat::identity(l.field(), l.dim());
  for (const auto& c : s.chain) {
    const Mat br = bracket_span(l, c, all);
    EXPECT_EQ(rank(vstack(c, br)), c.rows());
  }
  std::size_t total = 0;
  for (const auto& f : s.factors) total += f.dim;
  EXPECT_EQ(total, l.dim());
}

}  // namespace

TEST(LieStruct, Sl2IsSimple) {
  const LieAlg l = sl2(Field::prime(7));
  EXPECT_TRUE(l.satisfies_jacobi());
  MeatAxe ma(0);
  EXPECT_TRUE(lie_is_simple(l, ma));
  EXPECT_EQ(minimal_ideal(l, Mat::identity(l.field(), 3), ma).rows(), 3u);
  EXPECT_FALSE(lie_is_solvable(l));
  EXPECT_FALSE(lie_is_nilpotent(l));
  EXPECT_EQ(lie_center(l).rows(), 0u);
}

TEST(LieStruct, AbelianAlgebraIsOneChunk) {
  const LieAlg l(Field::prime(5), 4);
  MeatAxe ma(0);
  const auto s = lie_composition_series(l, ma);
  ASSERT_EQ(s.factors.size(), 1u);
  EXPECT_TRUE(s.factors[0].abelian);
  EXPECT_EQ(s.factors[0].dim, 4u);
  EXPECT_TRUE(lie_is_solvable(l));
  EXPECT_TRUE(lie_is_nilpotent(l));
  EXPECT_EQ(lie_center(l).rows(), 4u);
  EXPECT_EQ(minimal_ideal(l, Mat::identity(l.field(), 4), ma).rows(), 1u);
}

TEST(LieStruct, AbelianPleskenAlgebras) {
  MeatAxe ma(3);
  for (std::size_t n : {3u, 5u, 6u}) {
    const LieAlg l = build_plesken(builtin_group("cyclic", n), Field::prime(5));
    const auto s = lie_composition_series(l, ma);
    ASSERT_EQ(s.factors.size(), 1u);
    EXPECT_TRUE(s.factors[0].abelian);
    EXPECT_EQ(s.factors[0].dim, l.dim());
  }
}

TEST(LieStruct, SolvableGroupGivesSolvableAlgebra) {
  // A solvable Plesken algebra forces a solvable group; check the direction
  // that can be tested on small solvable groups and on A5.
  const LieAlg s4 = build_plesken(builtin_group("symmetric", 4), Field::prime(5));
  EXPECT_FALSE(lie_is_solvable(s4));  // contains o_3 summands
  const LieAlg q8 = build_plesken(builtin_group("quaternion"), Field::prime(3));
  const bool nil = lie_is_nilpotent(q8);
  if (nil) EXPECT_TRUE(group_is_nilpotent(squares_subgroup(builtin_group("quaternion"))));
}

TEST(LieStruct, Sl2Mod5FactorShape) {
  const Group g = builtin_group("sl2", 5);
  const Field f = Field::prime(5);
  const GroupAlgebra kg(g, f);
  MeatAxe ma(5);
  const auto bd = block_idempotents(kg, conjugacy_classes(g), ma);
  const auto pr = project_onto_blocks(build_plesken(g, f), kg, bd);
  ASSERT_EQ(pr.summands.size(), 3u);
  std::vector<std::vector<std::pair<bool, std::size_t>>> shapes;
  for (const auto& s : pr.summands) {
    const auto ser = lie_composition_series(s.algebra, ma);
    expect_chain_of_ideals(s.algebra, ser);
    shapes.push_back(shape(ser));
  }
  using V = std::vector<std::pair<bool, std::size_t>>;
  EXPECT_EQ(shapes[0], (V{{false, 3}, {true, 3}, {true, 3}, {true, 3}}));
  EXPECT_EQ(shapes[1], (V{{false, 3}, {false, 10}, {true, 3}, {true, 3}, {true, 8}, {true, 10}}));
  EXPECT_EQ(shapes[2], (V{{false, 10}}));
}

TEST(LieStruct, FactorShapeIsSeedIndependent) {
  const LieAlg l = build_plesken(builtin_group("symmetric", 4), Field::prime(3));
  std::vector<std::vector<std::pair<bool, std::size_t>>> shapes;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    MeatAxe ma(seed);
    const auto s = lie_composition_series(l, ma);
    expect_chain_of_ideals(l, s);
    shapes.push_back(shape(s));
  }
  EXPECT_EQ(shapes[0], shapes[1]);
  EXPECT_EQ(shapes[0], shapes[2]);
}
