#include <gtest/gtest.h>

#include "plesken/error.hpp"
#include "plesken/ffield.hpp"

using namespace plesken;

namespace {

void check_axioms(const Field& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int it = 0; it < 2000; ++it) {
    const Elem a = f.random(rng), b = f.random(rng), c = f.random(rng);
    EXPECT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
    EXPECT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    EXPECT_EQ(f.add(a, b), f.add(b, a));
    EXPECT_EQ(f.mul(a, b), f.mul(b, a));
    EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    EXPECT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
    if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.pow(a, f.order()), a);
  }
}

}  // namespace

TEST(Field, PrimeAxioms) {
  check_axioms(Field::prime(5), 1);
  check_axioms(Field::prime(71), 2);
  check_axioms(Field::prime(65521), 3);
}

TEST(Field, ExtensionAxioms) {
  check_axioms(Field::extension(5, 3), 4);
  check_axioms(Field::extension(3, 3), 5);
  check_axioms(Field::extension(17, 3), 6);
  check_axioms(Field::extension(7, 2), 7);
}

TEST(Field, CharacteristicTwoRejected) {
  EXPECT_THROW(Field::prime(2), UnsupportedError);
  EXPECT_THROW(Field::extension(2, 3), UnsupportedError);
  EXPECT_THROW(Field::prime(9), ValidationError);
}

TEST(Field, TooLargeExtensionRejected) {
  EXPECT_THROW(Field::extension(101, 4), LimitError);
}

TEST(Field, CoefficientRoundTrip) {
  const Field f = Field::extension(5, 3);
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b)
      for (std::uint32_t c = 0; c < 5; ++c) {
        const std::vector<std::uint32_t> v{a, b, c};
        EXPECT_EQ(f.to_coeffs(f.from_coeffs(v)), v);
      }
}

TEST(Field, GeneratorIsRootOfModulus) {
  const Field f = Field::extension(7, 3);
  const Elem y = f.generator();
  const auto& m = f.modulus();
  Elem acc = 0;
  for (std::size_t i = m.size(); i-- > 0;) acc = f.add(f.mul(acc, y), f.from_int(m[i]));
  EXPECT_EQ(acc, 0u);
}

TEST(Field, PrimeSubfieldDetection) {
  const Field f = Field::extension(5, 2);
  for (int n = 0; n < 5; ++n) EXPECT_EQ(f.to_int(f.from_int(n)), n);
  EXPECT_EQ(f.to_int(f.generator()), -1);
  EXPECT_EQ(Field::prime(7).lift_symmetric(6), -1);
}

TEST(Field, FrobeniusIsAdditive) {
  const Field f = Field::extension(3, 3);
  Rng rng(9);
  for (int it = 0; it < 500; ++it) {
    const Elem a = f.random(rng), b = f.random(rng);
    EXPECT_EQ(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
  }
}

TEST(Field, EmbeddingIsRingHomomorphism) {
  Rng rng(11);
  const Field small = Field::extension(3, 2);
  const Field big = Field::extension(3, 6);
  const Embedding e = embed(small, big, rng);
  EXPECT_EQ(e(0), 0u);
  EXPECT_EQ(e(1), 1u);
  for (Elem a = 0; a < small.order(); ++a)
    for (Elem b = 0; b < small.order(); ++b) {
      EXPECT_EQ(e(small.add(a, b)), big.add(e(a), e(b)));
      EXPECT_EQ(e(small.mul(a, b)), big.mul(e(a), e(b)));
    }
  const Field p = Field::prime(3);
  const Embedding ep = embed(p, big, rng);
  EXPECT_EQ(ep(2), big.from_int(2));
}

TEST(Field, CacheSharesTables) {
  EXPECT_EQ(Field::extension(5, 3), Field::extension(5, 3));
  EXPECT_NE(Field::prime(5), Field::prime(7));
}
