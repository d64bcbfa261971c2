#include <doctest.h>

#include "featalloc/oracle.hpp"
#include "test_util.hpp"

using namespace featalloc;
using testutil::fa;

TEST_CASE("enumerate_binary_matrices counts") {
  auto count = [](int n, int k) {
    int c = 0;
    enumerate_binary_matrices(n, k, [&](const std::vector<std::uint32_t>&) { ++c; });
    return c;
  };
  CHECK(count(1, 1) == 2);
  CHECK(count(2, 2) == 16);
  CHECK(count(4, 4) == 65536);
  CHECK(count(0, 3) == 1);
  CHECK_THROWS_AS(count(5, 4), std::domain_error);
}

TEST_CASE("finite frequency oracle reproduces the pairing factor of two") {
  const Rational q(1, 3);
  AllocationDistribution dist = exact_distribution_finite_freq({q, q}, 5);
  Rational base = q * q * q * q * (1 - q) * (1 - q) * (1 - q) * (1 - q) * (1 - q) * (1 - q);
  CHECK(dist.prob(fa(5, {{2, 3}, {2, 3}})) == base);
  CHECK(dist.prob(fa(5, {{2, 3}, {2, 5}})) == 2 * base);
  CHECK(dist.total() == Rational(1));
}

TEST_CASE("finite frequency oracle point mass and normalization") {
  AllocationDistribution one = exact_distribution_finite_freq({Rational(1)}, 3);
  CHECK(one.support.size() == 1);
  CHECK(one.prob(fa(3, {{1, 2, 3}})) == Rational(1));

  AllocationDistribution dist =
      exact_distribution_finite_freq({Rational(1, 2), Rational(1, 3)}, 3);
  CHECK(dist.total() == Rational(1));
}

TEST_CASE("two-feature oracle frozen values") {
  TwoFeatureRates rates{Rational(1, 10), Rational(2, 10), Rational(3, 10), Rational(4, 10)};
  AllocationDistribution dist = exact_distribution_two_feature(rates, 2);
  CHECK(dist.total() == Rational(1));
  // {{2},{2}} arises from the single label sequence (empty, both)
  CHECK(dist.prob(fa(2, {{2}, {2}})) == Rational(3, 25));
  // {{1},{2}} arises from (1-only, 2-only) and (2-only at 1? no) --
  // exactly the two split label sequences
  CHECK(dist.prob(fa(2, {{1}, {2}})) == Rational(1, 25));

  TwoFeatureRates degenerate{0, 0, 0, 1};
  AllocationDistribution empty = exact_distribution_two_feature(degenerate, 3);
  CHECK(empty.support.size() == 1);
  CHECK(empty.prob(fa(3, {})) == Rational(1));
}

TEST_CASE("two-feature oracle marginal consistency") {
  TwoFeatureRates rates{Rational(1, 10), Rational(2, 10), Rational(3, 10), Rational(4, 10)};
  AllocationDistribution d3 = exact_distribution_two_feature(rates, 3);
  AllocationDistribution d2 = exact_distribution_two_feature(rates, 2);
  AllocationDistribution d1 = exact_distribution_two_feature(rates, 1);
  CHECK(check_consistency(d2, d3));
  CHECK(check_consistency(d1, d3));
  CHECK(check_consistency(d1, d2));
}

TEST_CASE("check_exchangeable") {
  TwoFeatureRates rates{Rational(1, 10), Rational(2, 10), Rational(3, 10), Rational(4, 10)};
  CHECK(check_exchangeable(exact_distribution_two_feature(rates, 3)));

  AllocationDistribution biased;
  biased.n = 2;
  biased.support[fa(2, {{1}})] = 1;
  CHECK_FALSE(check_exchangeable(biased));

  AllocationDistribution point;
  point.n = 2;
  point.support[fa(2, {})] = 1;
  CHECK(check_exchangeable(point));
}

TEST_CASE("check_consistency detects a broken extension sum") {
  AllocationDistribution d2 = exact_distribution_finite_freq({Rational(1, 2)}, 2);
  AllocationDistribution d1 = exact_distribution_finite_freq({Rational(1, 2)}, 1);
  CHECK(check_consistency(d1, d2));

  AllocationDistribution damaged = d2;
  damaged.support.erase(damaged.support.begin());
  CHECK_FALSE(check_consistency(d1, damaged));

  // pushforward of a restriction is consistent by construction
  AllocationDistribution pushed = restrict_distribution(d2, 1);
  CHECK(check_consistency(pushed, d2));
}

TEST_CASE("check_efpf_form finds the two-feature counterexample") {
  TwoFeatureRates rates{Rational(1, 10), Rational(2, 10), Rational(3, 10), Rational(4, 10)};
  auto result = check_efpf_form(exact_distribution_two_feature(rates, 2));
  CHECK_FALSE(result.has_efpf);
  REQUIRE(result.witness.has_value());
  auto [first, second] = *result.witness;
  // the witness pair carries ordered probabilities 0.12 vs 0.02
  std::set<FeatureAllocation> pair{first, second};
  CHECK(pair.count(fa(2, {{2}, {2}})) + pair.count(fa(2, {{1}, {1}})) == 1);
  CHECK(pair.count(fa(2, {{1}, {2}})) == 1);
}

TEST_CASE("check_efpf_form accepts frequency models") {
  // independence case of the two-feature model
  TwoFeatureRates indep{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)};
  CHECK(check_efpf_form(exact_distribution_two_feature(indep, 2)).has_efpf);

  auto result =
      check_efpf_form(exact_distribution_finite_freq({Rational(1, 2), Rational(1, 3)}, 3));
  CHECK(result.has_efpf);
  CHECK_FALSE(result.table.empty());
}

TEST_CASE("paintbox-cell oracle matches the frequency oracle") {
  std::vector<Rational> freqs{Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  auto cells = frequency_paintbox_cells(freqs);
  for (int n = 1; n <= 3; ++n) {
    AllocationDistribution from_cells = exact_distribution_from_paintbox_cells(cells, n);
    AllocationDistribution direct = exact_distribution_finite_freq(freqs, n);
    CHECK(from_cells.support == direct.support);
  }
}

TEST_CASE("freq-plus-singletons oracle stays exchangeable and consistent") {
  std::vector<Rational> freqs{Rational(1, 2)};
  std::vector<Rational> pmf{Rational(5, 8), Rational(3, 8)};
  AllocationDistribution d2 = exact_distribution_freq_plus_singletons(freqs, 2, pmf);
  CHECK(d2.total() == Rational(1));
  CHECK(check_exchangeable(d2));
  auto result = check_efpf_form(d2);
  CHECK(result.has_efpf);
}
