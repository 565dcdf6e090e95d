#include <gtest/gtest.h>

#include <algorithm>

#include "plesken/checker.hpp"
#include "plesken/error.hpp"

using namespace plesken;

namespace {

std::vector<std::string> simple_labels(const Analysis& a) {
  std::vector<std::string> out;
  for (const auto& s : a.summands)
    for (const auto& f : s.factors)
      if (f.kind != FactorDescriptor::Kind::Abelian) out.push_back(to_string(f));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t factor_dim_sum(const SummandReport& s) {
  std::size_t d = 0;
  for (const auto& f : s.factors) d += f.dim;
  return d;
}

}  // namespace

TEST(Checker, Sl2Mod5) {
  const ConjectureReport r = check_conjecture(builtin_group("sl2", 5), 5, 0);
  EXPECT_TRUE(r.part1);
  EXPECT_TRUE(r.part2);
  EXPECT_TRUE(r.part3);
  EXPECT_TRUE(r.part4);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.analysis.dim_L, 59u);
  EXPECT_EQ(r.abelian_summary, (std::map<std::size_t, std::size_t>{{3, 5}, {8, 1}, {10, 1}}));
  EXPECT_EQ(r.abelian_total, 33u);
  EXPECT_EQ(simple_labels(r.analysis), (std::vector<std::string>{"B1", "B2", "C1", "C2"}));
  ASSERT_EQ(r.part4_blocks.size(), 1u);
  EXPECT_EQ(r.part4_blocks[0].factors, "B2");
  for (const auto& s : r.analysis.summands) EXPECT_EQ(factor_dim_sum(s), s.dim);
}

TEST(Checker, SmallModularGroups) {
  for (const auto& [tag, n, p] : std::vector<std::tuple<std::string, std::size_t, std::uint32_t>>{
           {"symmetric", 4, 3}, {"alternating", 4, 3}, {"alternating", 5, 5}, {"dihedral", 5, 5}, {"sl2", 3, 3}}) {
    const auto r = check_conjecture(builtin_group(tag, n), p, 1);
    EXPECT_TRUE(r.passed()) << tag << n << " mod " << p;
    std::size_t total = 0;
    for (const auto& s : r.analysis.summands) {
      EXPECT_EQ(factor_dim_sum(s), s.dim);
      total += s.dim;
    }
    EXPECT_EQ(total, r.analysis.dim_L);
  }
}

TEST(Checker, ProjectiveShellWhenPDividesDegree) {
  // PSL2(7) mod 3 has a pair of 3-dimensional Brauer characters with
  // indicator 0, so gl_3 should contribute PA2.
  const auto r = check_conjecture(builtin_group("psl2", 7), 3, 0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.predicted.pa_adjustments, 1u);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.back().find("abelian chunks beside PA"), std::string::npos);
  const auto labels = simple_labels(r.analysis);
  EXPECT_NE(std::find(labels.begin(), labels.end(), "PA2"), labels.end());
}

TEST(Checker, OrdinaryDecompositions) {
  const auto s4 = check_ordinary(builtin_group("symmetric", 4), 5);
  EXPECT_TRUE(s4.passed);
  EXPECT_EQ(simple_labels(s4.analysis), (std::vector<std::string>{"B1", "B1"}));
  EXPECT_EQ(s4.abelian_total, 1u);
  EXPECT_EQ(s4.analysis.dim_L, 7u);

  const auto triv = check_ordinary(builtin_group("cyclic", 1), 3);
  EXPECT_TRUE(triv.passed);
  EXPECT_TRUE(triv.analysis.summands.empty());

  const auto psl = check_ordinary(builtin_group("psl2", 8), 71);
  EXPECT_TRUE(psl.passed);
  EXPECT_EQ(simple_labels(psl.analysis), (std::vector<std::string>{"B3", "B3", "B3", "B3", "B4", "B4", "B4", "D4"}));

  EXPECT_THROW(check_ordinary(builtin_group("symmetric", 3), 3), ValidationError);
  EXPECT_THROW(check_conjecture(builtin_group("symmetric", 3), 5), ValidationError);
}

TEST(Checker, Implications) {
  const auto q8 = check_implications(builtin_group("quaternion"), 3);
  EXPECT_TRUE(q8.nilpotent_holds);
  EXPECT_TRUE(q8.solvable_holds);
  const auto s3 = check_implications(builtin_group("symmetric", 3), 3);
  EXPECT_TRUE(s3.l_nilpotent);  // L is one-dimensional
  EXPECT_TRUE(s3.nilpotent_holds);
  const auto c3 = check_implications(builtin_group("cyclic", 3), 3);
  EXPECT_TRUE(c3.l_nilpotent);
  EXPECT_TRUE(c3.g2_nilpotent);
  EXPECT_TRUE(c3.nilpotent_holds);
  const auto a5 = check_implications(builtin_group("alternating", 5), 7);
  EXPECT_FALSE(a5.l_solvable);
  EXPECT_TRUE(a5.solvable_holds);
}

TEST(Checker, MatchFactors) {
  using FD = FactorDescriptor;
  std::vector<std::string> extra;
  auto m = match_factors({FD::classical("B", 1), FD::classical("C", 1)}, {FD::classical("A", 1), FD::classical("C", 1)}, &extra);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_TRUE(m[0].matched && m[1].matched);
  EXPECT_EQ(m[1].computed, "C1");
  EXPECT_TRUE(extra.empty());

  FD c3 = FD::classical("C", 3);
  c3.alternatives = {{"B", 3}};
  m = match_factors({FD::classical("B", 3)}, {c3, FD::classical("D", 4), FD::abelian(5)}, &extra);
  EXPECT_TRUE(m[0].matched);
  EXPECT_EQ(m[0].note, "matched within a candidate set");
  EXPECT_EQ(extra, (std::vector<std::string>{"D4"}));

  m = match_factors({FD::classical("B", 4, 3)}, {FD::classical("B", 4)});
  EXPECT_TRUE(m[0].matched);
  EXPECT_EQ(m[0].note, "type matches, field degree differs");

  m = match_factors({FD::classical("B", 4)}, {FD::classical("C", 4)});
  EXPECT_FALSE(m[0].matched);
}
