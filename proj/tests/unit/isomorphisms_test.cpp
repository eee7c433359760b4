#include "mscodes/isomorphisms.hpp"

#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "mscodes/errors.hpp"
#include "oracles.hpp"

namespace mscodes {
namespace {

const Alphabet kS5(5);

TEST(CharacteristicVector, SubsetExample) {
  EXPECT_EQ(to_characteristic_vector(Multiset::from_elements({1, 2}, kS5)).to_string(), "11000");
  EXPECT_EQ(to_characteristic_vector(Multiset::from_elements({2, 4}, kS5)).to_string(), "01010");
  EXPECT_EQ(to_characteristic_vector(Multiset(Alphabet(3))).to_string(), "000");
}

TEST(CharacteristicVector, RejectsProperMultisets) {
  EXPECT_THROW(to_characteristic_vector(Multiset::from_elements({1, 1}, kS5)), DomainError);
}

TEST(CharacteristicVector, Inverse) {
  EXPECT_EQ(to_roster(from_characteristic_vector(BinaryVector::parse("00111"))), "{3,4,5}");
  EXPECT_EQ(from_characteristic_vector(BinaryVector::parse("000")), Multiset(Alphabet(3)));
  EXPECT_EQ(to_roster(from_characteristic_vector(BinaryVector::parse("11111"))), "{1,2,3,4,5}");
  for (const auto& x : testing::all_sets(5)) {
    ASSERT_EQ(from_characteristic_vector(to_characteristic_vector(x)), x);
  }
  EXPECT_THROW(BinaryVector::parse("0120"), ParseError);
  EXPECT_THROW(BinaryVector({0, 2}), DomainError);
}

TEST(MultiplicityVector, ReadOff) {
  const auto x = Multiset::from_elements({1, 2, 2, 2, 3}, Alphabet(4));
  EXPECT_EQ(to_multiplicity_vector(x).to_string(), "1,3,1,0");
  EXPECT_EQ(to_multiplicity_vector(Multiset(Alphabet(2))).to_string(), "0,0");
  EXPECT_EQ(to_roster(from_multiplicity_vector(IntegerVector::parse("0,2,0,1"))), "{2,2,4}");
  EXPECT_EQ(from_multiplicity_vector(to_multiplicity_vector(x)), x);
  EXPECT_THROW(from_multiplicity_vector(IntegerVector{}), DomainError);
}

TEST(HammingDistance, Values) {
  EXPECT_EQ(hamming_distance(BinaryVector::parse("11000"), BinaryVector::parse("01010")), 2u);
  EXPECT_EQ(hamming_distance(BinaryVector::parse("10110"), BinaryVector::parse("10110")), 0u);
  EXPECT_EQ(hamming_distance(BinaryVector::parse("11111"), BinaryVector::parse("00000")), 5u);
  EXPECT_THROW(hamming_distance(BinaryVector::parse("11"), BinaryVector::parse("111")), DomainError);
}

TEST(ManhattanDistance, Values) {
  // Multiplicity vectors of {1,2,2,2,3} and {1,2,2,3,3,4}; their multiset distance is 3.
  EXPECT_EQ(manhattan_distance(IntegerVector::parse("1,3,1,0"), IntegerVector::parse("1,2,2,1")), 3u);
  EXPECT_EQ(manhattan_distance(IntegerVector::parse("4,0,2"), IntegerVector::parse("4,0,2")), 0u);
  EXPECT_EQ(manhattan_distance(IntegerVector::parse("0,0"), IntegerVector::parse("2,3")), 5u);
  EXPECT_THROW(manhattan_distance(IntegerVector::parse("0"), IntegerVector::parse("0,0")),
               DomainError);
}

TEST(Isomorphism, SetDistanceEqualsHammingExhaustive) {
  for (std::uint32_t q = 1; q <= 5; ++q) {
    const auto sets = testing::all_sets(q);
    for (const auto& a : sets) {
      for (const auto& b : sets) {
        const auto ua = to_characteristic_vector(a);
        const auto ub = to_characteristic_vector(b);
        ASSERT_EQ(distance(a, b), hamming_distance(ua, ub));
        ASSERT_EQ(to_characteristic_vector(symmetric_difference(a, b)), xor_vectors(ua, ub));
        ASSERT_EQ(a.cardinality(), ua.weight());
      }
    }
  }
}

TEST(Isomorphism, SetDistanceEqualsHammingRandomized) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::uint32_t q = 6 + static_cast<std::uint32_t>(rng() % 7);
    const auto a = testing::random_set(rng, q);
    const auto b = testing::random_set(rng, q);
    ASSERT_EQ(distance(a, b),
              hamming_distance(to_characteristic_vector(a), to_characteristic_vector(b)));
  }
}

TEST(Isomorphism, MultisetDistanceEqualsManhattanExhaustive) {
  for (std::uint32_t q = 1; q <= 4; ++q) {
    const auto all = testing::all_multisets(q, 4);
    for (const auto& a : all) {
      for (const auto& b : all) {
        ASSERT_EQ(distance(a, b),
                  manhattan_distance(to_multiplicity_vector(a), to_multiplicity_vector(b)));
      }
      ASSERT_EQ(a.cardinality(), to_multiplicity_vector(a).sum());
    }
  }
}

TEST(Sphere, SmallEnumerations) {
  SphereEnumerator two(2, 2);
  std::vector<std::string> seen;
  while (auto v = two.next()) seen.push_back(v->to_string());
  EXPECT_EQ(seen, (std::vector<std::string>{"0,2", "1,1", "2,0"}));

  SphereEnumerator one(1, 5);
  EXPECT_EQ(one.next()->to_string(), "5");
  EXPECT_FALSE(one.next().has_value());

  SphereEnumerator zero(3, 0);
  EXPECT_EQ(zero.next()->to_string(), "0,0,0");
  EXPECT_FALSE(zero.next().has_value());
}

TEST(Sphere, MatchesBoxScanAndBinomial) {
  for (std::uint32_t q = 1; q <= 8; ++q) {
    for (std::uint32_t ell = 0; ell <= 6; ++ell) {
      std::vector<std::vector<std::uint32_t>> seen;
      SphereEnumerator e(q, ell);
      while (auto v = e.next()) seen.push_back(v->entries());
      ASSERT_EQ(seen.size(), oracle::pascal(q + ell - 1, ell)) << "q=" << q << " ell=" << ell;
      ASSERT_EQ(sphere_size(q, ell), seen.size());
      if (q <= 5) ASSERT_EQ(seen, oracle::sphere_by_box_scan(q, ell));
    }
  }
}

TEST(Binomial, SaturatesInsteadOfWrapping) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(62, 31), oracle::pascal(62, 31));
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

}  // namespace
}  // namespace mscodes
