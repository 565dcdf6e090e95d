#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "plesken/error.hpp"
#include "plesken/groups.hpp"

using namespace plesken;

namespace {

// Involutions counted directly on the permutations.
std::size_t brute_involutions(const Group& g) {
  std::size_t t = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Perm& p = g.element(i);
    const Perm sq = compose(p, p);
    bool id = true, sq_id = true;
    for (std::size_t x = 0; x < p.size(); ++x) {
      id = id && p[x] == x;
      sq_id = sq_id && sq[x] == x;
    }
    t += sq_id && !id;
  }
  return t;
}

std::vector<std::size_t> class_sizes(const ConjugacyData& cd) {
  std::vector<std::size_t> s;
  for (std::size_t c = 0; c < cd.num_classes(); ++c) s.push_back(cd.size(c));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Groups, FromGenerators) {
  const Group s3 = Group::from_generators({parse_cycles("(1,2)"), parse_cycles("(1,2,3)")});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(Group::from_generators({parse_cycles("()")}).order(), 1u);
  EXPECT_THROW(Group::from_generators({Perm{0, 0, 1}}), ValidationError);
  EXPECT_THROW(builtin_group("symmetric", 8), LimitError);
  EXPECT_EQ(builtin_group("symmetric", 6, 1000).order(), 720u);
  EXPECT_THROW(builtin_group("symmetric", 8, 50000), LimitError);
}

TEST(Groups, BuiltinOrders) {
  EXPECT_EQ(builtin_group("psl2", 8).order(), 504u);
  EXPECT_EQ(builtin_group("sl2", 5).order(), 120u);
  EXPECT_EQ(builtin_group("dihedral", 4).order(), 8u);
  EXPECT_EQ(builtin_group("quaternion").order(), 8u);
  EXPECT_EQ(builtin_group("alternating", 4).order(), 12u);
  EXPECT_EQ(builtin_group("sl2", 3).order(), 24u);
  EXPECT_EQ(builtin_group("psl2", 7).order(), 168u);
  EXPECT_EQ(builtin_group("sl2", 9, 1000).order(), 720u);
  EXPECT_THROW(builtin_group("psl2", 6), ValidationError);
  EXPECT_THROW(builtin_group("nonsense", 3), ValidationError);
}

TEST(Groups, LargePsl2) {
  EXPECT_EQ(builtin_group("psl2", 25, 8000).order(), 7800u);
}

TEST(Groups, LatinSquareAndInverses) {
  for (const Group& g : {builtin_group("sl2", 5), builtin_group("symmetric", 4), builtin_group("quaternion")}) {
    const std::size_t n = g.order();
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<bool> row(n, false), col(n, false);
      for (std::size_t b = 0; b < n; ++b) {
        row[g.mul(a, b)] = true;
        col[g.mul(b, a)] = true;
      }
      EXPECT_TRUE(std::all_of(row.begin(), row.end(), [](bool x) { return x; }));
      EXPECT_TRUE(std::all_of(col.begin(), col.end(), [](bool x) { return x; }));
      EXPECT_EQ(g.inverse(g.inverse(a)), a);
      EXPECT_EQ(g.mul(a, g.inverse(a)), g.identity());
      EXPECT_EQ(g.mul(a, 0), a);
      EXPECT_EQ(g.mul(0, a), a);
      for (std::size_t b = 0; b < n; b += 7)
        EXPECT_EQ(g.element(g.mul(a, b)), compose(g.element(a), g.element(b)));
    }
  }
}

TEST(Groups, Conjugacy) {
  const auto s3 = conjugacy_classes(builtin_group("symmetric", 3));
  EXPECT_EQ(class_sizes(s3), (std::vector<std::size_t>{1, 2, 3}));
  const Group l = builtin_group("psl2", 8);
  const auto cl = conjugacy_classes(l);
  EXPECT_EQ(cl.num_classes(), 9u);
  const Group sl = builtin_group("sl2", 5);
  const auto cs = conjugacy_classes(sl);
  EXPECT_EQ(cs.num_classes(), 9u);
  EXPECT_EQ(cs.num_p_regular(5), 5u);
  EXPECT_EQ(cl.num_p_regular(3), 5u);
  EXPECT_EQ(cl.num_p_regular(7), 6u);
  for (const auto* cd : {&s3, &cl, &cs}) {
    std::size_t total = 0;
    for (std::size_t c = 0; c < cd->num_classes(); ++c) total += cd->size(c);
    (void)total;
  }
  std::size_t total = 0;
  for (std::size_t c = 0; c < cl.num_classes(); ++c) {
    total += cl.size(c);
    EXPECT_EQ(504 % cl.size(c), 0u);
    EXPECT_EQ(cl.power_map(l, c, 1), c);
    EXPECT_EQ(cl.class_of[l.inverse(cl.rep(c))], cl.inverse_class[c]);
  }
  EXPECT_EQ(total, 504u);
  // Abelian groups: every class is a singleton.
  EXPECT_EQ(conjugacy_classes(builtin_group("cyclic", 6)).num_classes(), 6u);
}

TEST(Groups, Involutions) {
  EXPECT_EQ(involution_count(builtin_group("symmetric", 3)), 3u);
  EXPECT_EQ(involution_count(builtin_group("symmetric", 4)), 9u);
  EXPECT_EQ(involution_count(builtin_group("psl2", 8)), 63u);
  EXPECT_EQ(involution_count(builtin_group("sl2", 5)), 1u);
  for (const Group& g : {builtin_group("psl2", 8), builtin_group("sl2", 5), builtin_group("dihedral", 6)})
    EXPECT_EQ(involution_count(g), brute_involutions(g));
}

TEST(Groups, Squares) {
  EXPECT_EQ(squares_subgroup(builtin_group("symmetric", 3)).order(), 3u);
  EXPECT_EQ(squares_subgroup(builtin_group("klein")).order(), 1u);
  EXPECT_EQ(squares_subgroup(builtin_group("quaternion")).order(), 2u);
}

TEST(Groups, NilpotentSolvable) {
  EXPECT_TRUE(group_is_nilpotent(builtin_group("quaternion")));
  EXPECT_FALSE(group_is_nilpotent(builtin_group("symmetric", 3)));
  EXPECT_TRUE(group_is_solvable(builtin_group("symmetric", 3)));
  EXPECT_TRUE(group_is_solvable(builtin_group("symmetric", 4)));
  EXPECT_FALSE(group_is_solvable(builtin_group("psl2", 8)));
  EXPECT_FALSE(group_is_solvable(builtin_group("sl2", 5)));
  EXPECT_TRUE(group_is_nilpotent(builtin_group("dihedral", 4)));
}

TEST(Groups, CycleNotation) {
  const Perm p = parse_cycles("(1,2)(3,4,5)");
  EXPECT_EQ(p, (Perm{1, 0, 3, 4, 2}));
  EXPECT_EQ(format_cycles(p), "(1,2)(3,4,5)");
  EXPECT_EQ(format_cycles(parse_cycles("()")), "()");
  EXPECT_THROW(parse_cycles("(1,2"), ValidationError);
  EXPECT_THROW(parse_cycles("(1,1)"), ValidationError);
  EXPECT_THROW(parse_cycles("(0,1)"), ValidationError);
  const Group g = group_from_text("(1,2)\n\n(1,2,3,4)\n");
  EXPECT_EQ(g.order(), 24u);
  EXPECT_THROW(group_from_text("\n\n"), ValidationError);
}

TEST(Groups, DeterministicNumbering) {
  const Group a = builtin_group("psl2", 8);
  const Group b = builtin_group("psl2", 8);
  for (std::size_t i = 0; i < a.order(); ++i) EXPECT_EQ(a.element(i), b.element(i));
}
