#include "mscodes/channel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "generators.hpp"
#include "mscodes/errors.hpp"

namespace mscodes {
namespace {

const Alphabet kS6(6);

Multiset X() { return Multiset::from_elements({1, 2, 2, 3, 5, 5, 5}, kS6); }

TEST(Channel, IdentitySpecIsNoiseless) {
  Engine engine(1);
  for (int i = 0; i < 100; ++i) {
    const auto out = transmit_multiset(X(), ChannelSpec{}, engine);
    ASSERT_EQ(out.received, X());
    ASSERT_TRUE(out.effective.is_zero());
  }
  const auto prob = transmit_multiset(X(), ChannelSpec::probabilistic(0, 0, 0), RngSeed{4});
  EXPECT_EQ(prob.received, X());
}

TEST(Channel, ExactDeletionsOnly) {
  Engine engine(2);
  for (std::uint32_t rho = 0; rho <= 7; ++rho) {
    for (int i = 0; i < 200; ++i) {
      const auto out = transmit_multiset(X(), ChannelSpec::exact(0, rho, 0), engine);
      ASSERT_EQ(out.received.cardinality(), 7u - rho);
      ASSERT_EQ(distance(X(), out.received), rho);
      ASSERT_EQ(difference(out.received, X()), Multiset(kS6));
      ASSERT_EQ(out.effective, (ErrorPattern{0, rho, 0}));
    }
  }
}

TEST(Channel, ExactCountsAreHonoured) {
  Engine engine(3);
  for (int i = 0; i < 2000; ++i) {
    const ErrorPattern e{static_cast<std::uint32_t>(i % 3), static_cast<std::uint32_t>(i % 4),
                         static_cast<std::uint32_t>(i % 3)};
    const auto out = transmit_multiset(X(), ChannelSpec::exact(e), engine);
    ASSERT_EQ(out.effective, e);
    ASSERT_EQ(out.received.cardinality(), 7u - e.deletions + e.insertions);
    ASSERT_LE(distance(X(), out.received), e.distance_bound());
  }
}

TEST(Channel, SubstitutionAlwaysChangesTheSymbol) {
  // A single substitution moves exactly one instance: distance 2.
  Engine engine(4);
  for (int i = 0; i < 1000; ++i) {
    const auto out = transmit_multiset(X(), ChannelSpec::exact(0, 0, 1), engine);
    ASSERT_EQ(distance(X(), out.received), 2u);
  }
}

TEST(Channel, ProofIdentitiesUnderRandomSpecs) {
  std::mt19937_64 rng(5);
  for (std::uint64_t trial = 0; trial < 100000; ++trial) {
    const std::uint32_t q = 1 + static_cast<std::uint32_t>(rng() % 6);
    const auto x = testing::random_multiset(rng, q, 10);
    ChannelSpec spec;
    if (trial % 2 == 0) {
      spec = ChannelSpec::probabilistic(0.3, q > 1 ? 0.2 : 0.0, 1.5);
    } else {
      const auto rho = static_cast<std::uint32_t>(rng() % (x.cardinality() + 1));
      const auto t = q > 1 ? static_cast<std::uint32_t>(rng() % (x.cardinality() - rho + 1)) : 0u;
      spec = ChannelSpec::exact(static_cast<std::uint32_t>(rng() % 4), rho, t);
    }
    const auto out = transmit_multiset(x, spec, derive_seed(RngSeed{9}, trial));
    const auto& e = out.effective;
    ASSERT_EQ(out.received.cardinality() + e.deletions, x.cardinality() + e.insertions);
    ASSERT_LE(distance(x, out.received), e.distance_bound());
  }
}

TEST(Channel, ReplayIsDeterministic) {
  const auto spec = ChannelSpec::probabilistic(0.2, 0.1, 2.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = transmit_multiset(X(), spec, RngSeed{seed});
    const auto b = transmit_multiset(X(), spec, RngSeed{seed});
    ASSERT_EQ(a.received, b.received);
    ASSERT_EQ(a.effective, b.effective);
  }
}

TEST(Channel, SequenceOutputMatchesMultisetOutput) {
  const auto elements = X().elements();
  const auto spec = ChannelSpec::exact(2, 1, 1);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto seq = transmit_sequence(elements, kS6, spec, RngSeed{seed});
    const auto set = transmit_multiset(X(), spec, RngSeed{seed});
    ASSERT_EQ(Multiset::from_elements(seq.received, kS6), set.received);
    ASSERT_EQ(seq.effective, set.effective);
  }
}

TEST(Channel, PermutationIsUniform) {
  // All 6 orders of three distinct symbols, chi-square with 5 degrees of
  // freedom; 20.5 is the 0.999 quantile.
  const std::vector<Symbol> x{1, 2, 3};
  std::map<std::vector<Symbol>, std::uint64_t> counts;
  Engine engine(6);
  constexpr std::uint64_t n = 100000;
  for (std::uint64_t i = 0; i < n; ++i) {
    ++counts[transmit_sequence(x, Alphabet(3), ChannelSpec{}, engine).received];
  }
  ASSERT_EQ(counts.size(), 6u);
  const double expected = n / 6.0;
  double chi2 = 0.0;
  for (const auto& [order, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 20.5);
}

TEST(Channel, InsertionsFollowPoissonMean) {
  Engine engine(7);
  const auto spec = ChannelSpec::probabilistic(0, 0, 2.5);
  double total = 0;
  constexpr int n = 20000;
  for (int i = 0; i < n; ++i) total += transmit_multiset(X(), spec, engine).effective.insertions;
  // sd of the mean is sqrt(2.5 / n) ~ 0.011.
  EXPECT_NEAR(total / n, 2.5, 0.05);

  Engine big(8);
  double sum = 0;
  for (int i = 0; i < 5000; ++i) sum += static_cast<double>(poisson(big, 75.0));
  EXPECT_NEAR(sum / 5000, 75.0, 0.6);
}

TEST(Channel, ZChannelView) {
  const Alphabet s20(20);
  const auto x = Multiset::from_elements({1, 3, 4, 8, 9, 10, 15, 16, 17, 20}, s20);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto [sent, received] = z_channel_view(x, 0.4, RngSeed{seed});
    ASSERT_EQ(sent, to_characteristic_vector(x));
    for (std::size_t i = 0; i < sent.size(); ++i) ASSERT_LE(received[i], sent[i]);
  }
  EXPECT_THROW(z_channel_view(Multiset::from_elements({1, 1}, s20), 0.1, RngSeed{0}), DomainError);
}

TEST(ChannelSpec, TextRoundTrip) {
  for (const auto& spec : {ChannelSpec{}, ChannelSpec::exact(1, 2, 0), ChannelSpec::exact(0, 0, 3),
                           ChannelSpec::probabilistic(0.1, 0.01, 0.5),
                           ChannelSpec::deletion_only(0.25)}) {
    ASSERT_EQ(ChannelSpec::parse(spec.to_string()), spec) << spec.to_string();
  }
  EXPECT_EQ(ChannelSpec::exact(1, 2, 0).to_string(), "mode=exact s=1 rho=2 t=0");
  EXPECT_EQ(ChannelSpec::parse("mode=prob p_del=0.1 p_sub=0.01 ins_rate=0.5"),
            ChannelSpec::probabilistic(0.1, 0.01, 0.5));
}

TEST(ChannelSpec, Validation) {
  EXPECT_THROW(ChannelSpec::probabilistic(1.5, 0, 0), DomainError);
  EXPECT_THROW(ChannelSpec::probabilistic(0, -0.1, 0), DomainError);
  EXPECT_THROW(ChannelSpec::probabilistic(0, 0, -1), DomainError);
  EXPECT_THROW(ChannelSpec::exact(0, 4, 4).validate_for(7, 6), DomainError);
  EXPECT_NO_THROW(ChannelSpec::exact(0, 4, 3).validate_for(7, 6));
  EXPECT_THROW(ChannelSpec::exact(0, 0, 1).validate_for(3, 1), DomainError);
  EXPECT_THROW(transmit_multiset(X(), ChannelSpec::exact(0, 8, 0), RngSeed{0}), DomainError);
  EXPECT_THROW(ChannelSpec::parse("mode=fuzzy"), std::exception);
  EXPECT_THROW(ChannelSpec::parse("mode=exact s=x"), std::exception);
}

}  // namespace
}  // namespace mscodes
