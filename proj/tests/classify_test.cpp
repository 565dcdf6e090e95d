#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "plesken/classify.hpp"
#include "plesken/error.hpp"
#include "plesken/liestruct.hpp"
#include "plesken/plesken.hpp"

using namespace plesken;

namespace {

// Same algebra in the basis given by the rows of an invertible t.
LieAlg change_basis(const LieAlg& l, const Mat& t) {
  const Field& f = l.field();
  const std::size_t d = l.dim();
  const Mat tinv = *inverse(t);
  LieAlg out(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec br = vec_mul(l.bracket(t.row_vec(i), t.row_vec(j)), tinv);
      for (std::size_t k = 0; k < d; ++k) out.c(i, j, k) = br[k];
    }
  return out;
}

Mat random_invertible(const Field& f, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  while (true) {
    Mat m(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = f.random(rng);
    if (rank(m) == d) return m;
  }
}

}  // namespace

TEST(Classify, MatrixBasesHaveClassicalDimensions) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const Field f = Field::prime(p);
    for (unsigned r = 1; r <= 6; ++r) {
      EXPECT_EQ(classical_matrix_basis("A", r, f).size(), classical_dim("A", r)) << p << " " << r;
      EXPECT_EQ(classical_matrix_basis("B", r, f).size(), classical_dim("B", r)) << p << " " << r;
      EXPECT_EQ(classical_matrix_basis("C", r, f).size(), classical_dim("C", r)) << p << " " << r;
      EXPECT_EQ(classical_matrix_basis("D", r, f).size(), classical_dim("D", r)) << p << " " << r;
    }
  }
  EXPECT_EQ(classical_dim("B", 4), 36u);
  EXPECT_EQ(classical_dim("D", 8), 120u);
  EXPECT_EQ(classical_dim("A", 10), 120u);
  EXPECT_EQ(classical_dim("PA", 4), 23u);
}

TEST(Classify, ReferenceAlgebrasAreSimple) {
  MeatAxe ma(1);
  const std::tuple<const char*, unsigned, std::uint32_t, std::size_t> cases[] = {
      {"B", 3, 71, 21}, {"D", 4, 7, 28}, {"PA", 4, 5, 23}, {"C", 3, 5, 21}, {"A", 2, 7, 8}, {"PA", 2, 3, 7}};
  for (const auto& [fam, r, p, d] : cases) {
    const LieAlg l = reference_classical(fam, r, Field::prime(p));
    EXPECT_EQ(l.dim(), d) << fam << r;
    EXPECT_TRUE(l.is_antisymmetric()) << fam << r;
    EXPECT_TRUE(l.satisfies_jacobi(500, 3)) << fam << r;
    EXPECT_TRUE(lie_is_simple(l, ma)) << fam << r;
  }
  EXPECT_THROW(reference_classical("A", 4, Field::prime(5)), UnsupportedError);
  EXPECT_THROW(reference_classical("PA", 3, Field::prime(5)), UnsupportedError);
}

TEST(Classify, Sl2Fingerprint) {
  const Fingerprint fp = fingerprint(reference_classical("A", 1, Field::prime(7)), 4);
  EXPECT_EQ(fp.dim, 3u);
  EXPECT_EQ(fp.derived_dim, 3u);
  EXPECT_EQ(fp.center_dim, 0u);
  EXPECT_EQ(fp.killing_rank, 3u);
  EXPECT_EQ(fp.toral_dim, 1u);
  EXPECT_EQ(fp.root_count, 2u);
  EXPECT_TRUE(fp.split);
  EXPECT_EQ(fp.root_ad_ranks, (std::vector<std::size_t>{2, 2}));
}

TEST(Classify, OrthogonalSevenFingerprint) {
  const Fingerprint fp = fingerprint(reference_classical("B", 3, Field::prime(71)), 5);
  EXPECT_EQ(fp.toral_dim, 3u);
  EXPECT_EQ(fp.root_count, 18u);
  EXPECT_EQ(fp.killing_rank, 21u);
  EXPECT_TRUE(fp.split);
}

TEST(Classify, SameDimensionTypesAreDistinguished) {
  Classifier c(6);
  for (std::uint32_t p : {5u, 7u}) {
    EXPECT_FALSE(c.reference_fingerprint("B", 3, p).matches(c.reference_fingerprint("C", 3, p))) << p;
    EXPECT_FALSE(c.reference_fingerprint("B", 4, p).matches(c.reference_fingerprint("C", 4, p))) << p;
  }
  // A1 and B1 coincide.
  const LieAlg so3 = reference_classical("B", 1, Field::prime(5));
  const auto got = c.classify_simple(so3);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(to_string(got[0]), "A1");
}

TEST(Classify, InvariantUnderBasisChange) {
  const Field f = Field::prime(7);
  const LieAlg b3 = reference_classical("B", 3, f);
  Classifier c(7);
  const Fingerprint& ref = c.reference_fingerprint("B", 3, 7);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const LieAlg l = change_basis(b3, random_invertible(f, b3.dim(), seed));
    EXPECT_TRUE(l.satisfies_jacobi(200, seed));
    EXPECT_TRUE(fingerprint(l, seed * 11).matches(ref)) << seed;
    const auto got = c.classify_simple(l);
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(to_string(got[0]), "B3") << seed;
  }
}

TEST(Classify, DiscoveryModeNamesTypes) {
  Classifier c(8);
  const std::tuple<const char*, unsigned, std::uint32_t, const char*> cases[] = {
      {"A", 2, 7, "A2"}, {"PA", 2, 3, "PA2"}, {"C", 3, 5, "C3"}, {"D", 4, 7, "D4"}, {"B", 2, 5, "B2"}};
  for (const auto& [fam, r, p, want] : cases) {
    const LieAlg l = change_basis(reference_classical(fam, r, Field::prime(p)),
                                  random_invertible(Field::prime(p), classical_dim(fam, r), r));
    const auto got = c.classify_simple(l);
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(to_string(got[0]), want);
  }
}

TEST(Classify, ConjugateSummandsOverSmallerField) {
  // Over F_17 the three 36-dimensional orthogonal summands of PSL2(8) are
  // Galois conjugate and fuse into one 108-dimensional simple summand.
  const Group g = builtin_group("psl2", 8);
  const Field f = Field::prime(17);
  const GroupAlgebra kg(g, f);
  MeatAxe ma(9);
  const auto pr = project_onto_blocks(build_plesken(g, f), kg, block_idempotents(kg, conjugacy_classes(g), ma));
  const LieAlg* big = nullptr;
  for (const auto& s : pr.summands)
    if (s.algebra.dim() == 108) big = &s.algebra;
  ASSERT_NE(big, nullptr);
  Classifier c(9);
  EXPECT_TRUE(lie_is_simple(*big, c.meataxe()));
  const auto got = c.classify_simple(*big, {FactorDescriptor::classical("B", 4)});
  ASSERT_EQ(got.size(), 3u);
  for (const auto& fd : got) EXPECT_EQ(to_string(fd), "B4^(3)");
}

TEST(Classify, Sl2Mod5FactorsWithHints) {
  const Group g = builtin_group("sl2", 5);
  const Field f = Field::prime(5);
  const GroupAlgebra kg(g, f);
  Classifier c(10);
  const auto pr = project_onto_blocks(build_plesken(g, f), kg, block_idempotents(kg, conjugacy_classes(g), c.meataxe()));
  const std::vector<FactorDescriptor> hints{FactorDescriptor::classical("B", 1), FactorDescriptor::classical("B", 2)};
  std::vector<std::string> labels;
  for (const auto& s : pr.summands)
    for (const auto& fac : lie_composition_series(s.algebra, c.meataxe()).factors)
      if (!fac.abelian)
        for (const auto& fd : c.classify_simple(*fac.algebra, hints)) labels.push_back(to_string(fd));
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<std::string>{"B1", "B1", "B2", "B2"}));
}

TEST(Classify, LowRankCoincidences) {
  EXPECT_EQ(canonical_type("B", 1), (std::pair<std::string, unsigned>{"A", 1}));
  EXPECT_EQ(canonical_type("C", 1), (std::pair<std::string, unsigned>{"A", 1}));
  EXPECT_EQ(canonical_type("C", 2), (std::pair<std::string, unsigned>{"B", 2}));
  EXPECT_EQ(canonical_type("D", 3), (std::pair<std::string, unsigned>{"A", 3}));
  EXPECT_EQ(canonical_type("D", 4), (std::pair<std::string, unsigned>{"D", 4}));
}

TEST(Classify, Formatting) {
  EXPECT_EQ(to_string(FactorDescriptor::abelian(3)), "Ab(3)");
  EXPECT_EQ(to_string(FactorDescriptor::classical("B", 4, 3)), "B4^(3)");
  EXPECT_EQ(to_string(FactorDescriptor::unidentified(63)), "?(63)");
  EXPECT_EQ(FactorDescriptor::classical("D", 4).dim, 28u);
}

TEST(Classify, ExceptionalDimensionNotes) {
  EXPECT_NE(exceptional_dimension_note(25, 5).find("W/K"), std::string::npos);
  EXPECT_NE(exceptional_dimension_note(24, 5).find("H"), std::string::npos);
  EXPECT_NE(exceptional_dimension_note(11, 5).find("S"), std::string::npos);
  EXPECT_NE(exceptional_dimension_note(125, 5).find("M"), std::string::npos);
  EXPECT_EQ(exceptional_dimension_note(21, 7), "");
}
