#include <doctest.h>

#include <cmath>

#include "featalloc/oracle.hpp"
#include "featalloc/probability.hpp"
#include "test_util.hpp"

using namespace featalloc;
using testutil::fa;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(IbpParams(0.0, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(IbpParams(1.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(IbpParams(1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(IbpParams(1.0, 1.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(TwoFeatureParams(0.5, 0.2, 0.2, 0.2), std::domain_error);
  CHECK_THROWS_AS(TwoFeatureParams(-0.1, 0.4, 0.3, 0.4), std::domain_error);
}

TEST_CASE("new-dish rate closed forms") {
  IbpParams p(2.5, 1.0, 0.0);
  for (int n = 1; n <= 6; ++n) {
    CHECK(ibp_new_dish_rate(p, n) == doctest::Approx(2.5 / n).epsilon(1e-12));
  }
  IbpParams q(1.0, 3.0, 0.0);
  for (int n = 1; n <= 6; ++n) {
    CHECK(ibp_new_dish_rate(q, n) == doctest::Approx(3.0 / (3.0 + n - 1)).epsilon(1e-12));
  }
  CHECK(ibp_new_dish_rate(IbpParams(1.7, 0.9, 0.4), 1) == doctest::Approx(1.7).epsilon(1e-12));
}

TEST_CASE("ibp_efpf frozen values") {
  IbpParams p(1.0, 1.0, 0.0);
  // one customer, one dish: Pois(1) mass at a single feature
  CHECK(ibp_efpf(p, 1, {1}).value() == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  // two customers sharing one dish: Pois(1) dish, joined w.p. 1/2, no new dishes
  CHECK(ibp_efpf(p, 2, {2}).value() ==
        doctest::Approx(0.5 * std::exp(-1.5)).epsilon(1e-12));
  // empty allocation
  CHECK(ibp_efpf(p, 2, {}).value() == doctest::Approx(std::exp(-1.5)).epsilon(1e-12));
  CHECK(ibp_efpf(p, 1, {}).value() == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("ibp_efpf domain errors") {
  IbpParams p(1.0, 1.0, 0.0);
  CHECK_THROWS_AS(ibp_efpf(p, 2, {0}), std::domain_error);
  CHECK_THROWS_AS(ibp_efpf(p, 2, {3}), std::domain_error);
  CHECK_THROWS_AS(ibp_efpf(p, 0, {}), std::domain_error);
}

TEST_CASE("ibp_efpf is symmetric in sizes") {
  IbpParams p(1.3, 0.8, 0.25);
  const int n = 4;
  std::vector<std::vector<int>> size_vectors;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int c = b; c <= n; ++c)
        for (int d = c; d <= n; ++d) size_vectors.push_back({a, b, c, d});
  for (auto sizes : size_vectors) {
    double base = ibp_efpf(p, n, sizes).log_prob;
    std::sort(sizes.begin(), sizes.end());
    do {
      CHECK(ibp_efpf(p, n, sizes).log_prob == doctest::Approx(base).epsilon(1e-12));
    } while (std::next_permutation(sizes.begin(), sizes.end()));
  }
}

TEST_CASE("ibp_unordered_prob applies the ordering factor") {
  IbpParams p(1.0, 1.0, 0.0);
  CHECK(ibp_unordered_prob(p, fa(1, {{1}})).value() ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  // duplicate features: factor 1
  CHECK(ibp_unordered_prob(p, fa(1, {{1}, {1}})).value() ==
        doctest::Approx(ibp_efpf(p, 1, {1, 1}).value()).epsilon(1e-12));
  // distinct features: two orderings
  CHECK(ibp_unordered_prob(p, fa(2, {{1}, {2}})).value() ==
        doctest::Approx(2.0 * ibp_efpf(p, 2, {1, 1}).value()).epsilon(1e-12));
}

TEST_CASE("bernoulli_two_feature_efpf") {
  // equal frequencies collapse to a single product
  CHECK(bernoulli_two_feature_efpf(0.3, 0.3, 4, 1, 3).value() ==
        doctest::Approx(std::pow(0.3, 4) * std::pow(0.7, 4)).epsilon(1e-12));
  // the running two-feature example at n=5, sizes (2,2)
  double qa = 0.35, qb = 0.6;
  CHECK(bernoulli_two_feature_efpf(qa, qb, 5, 2, 2).value() ==
        doctest::Approx(qa * qa * std::pow(1 - qa, 3) * qb * qb * std::pow(1 - qb, 3))
            .epsilon(1e-12));
  // symmetric in the sizes
  CHECK(bernoulli_two_feature_efpf(0.3, 0.7, 4, 1, 3).log_prob ==
        doctest::Approx(bernoulli_two_feature_efpf(0.3, 0.7, 4, 3, 1).log_prob)
            .epsilon(1e-12));
  // exact rational path
  auto v = bernoulli_two_feature_efpf(0.5, 0.5, 5, 2, 2);
  REQUIRE(v.exact.has_value());
  CHECK(*v.exact == Rational(1, 1024));
  CHECK_THROWS_AS(bernoulli_two_feature_efpf(0.0, 0.5, 2, 1, 1), std::domain_error);
  CHECK_THROWS_AS(bernoulli_two_feature_efpf(0.5, 0.5, 2, 3, 0), std::domain_error);
}

TEST_CASE("two_feature_ordered_prob on the counterexample pair") {
  TwoFeatureParams p(0.1, 0.2, 0.3, 0.4);
  OrderedFeatureAllocation both{2, {{2}, {2}}};
  OrderedFeatureAllocation split{2, {{1}, {2}}};
  auto v_both = two_feature_ordered_prob(p, both);
  auto v_split = two_feature_ordered_prob(p, split);
  REQUIRE(v_both.exact.has_value());
  REQUIRE(v_split.exact.has_value());
  CHECK(*v_both.exact == Rational(3, 25));   // p11 * p00 = 0.12
  CHECK(*v_split.exact == Rational(1, 50));  // p10 * p01 = 0.02
  CHECK(v_both.value() == doctest::Approx(0.12).epsilon(1e-12));
  CHECK(v_split.value() == doctest::Approx(0.02).epsilon(1e-12));

  OrderedFeatureAllocation three{2, {{1}, {2}, {1}}};
  CHECK_THROWS_AS(two_feature_ordered_prob(p, three), std::domain_error);
}

TEST_CASE("two_feature_ordered_prob is invariant under feature order") {
  TwoFeatureParams p(0.1, 0.2, 0.3, 0.4);
  OrderedFeatureAllocation ab{3, {{1, 2}, {2, 3}}};
  OrderedFeatureAllocation ba{3, {{2, 3}, {1, 2}}};
  CHECK(*two_feature_ordered_prob(p, ab).exact == *two_feature_ordered_prob(p, ba).exact);
}

TEST_CASE("two_feature_ordered_prob sums to one over ordered allocations") {
  TwoFeatureParams p(0.1, 0.2, 0.3, 0.4);
  auto rates = rationalized(p);
  REQUIRE(rates.has_value());
  for (int n = 1; n <= 3; ++n) {
    AllocationDistribution dist = exact_distribution_two_feature(*rates, n);
    Rational total = 0;
    for (const auto& [alloc, mass] : dist.support) {
      OrderedFeatureAllocation one_ordering{alloc.n(), alloc.features()};
      auto v = two_feature_ordered_prob(p, one_ordering);
      REQUIRE(v.exact.has_value());
      Rational orderings = 1 / ordering_factor(multiplicity_profile(alloc));
      // ordered value times the number of distinguishable orderings
      // recovers the unordered mass
      CHECK(*v.exact * orderings == mass);
      total += *v.exact * orderings;
    }
    CHECK(total == Rational(1));
  }
}

TEST_CASE("factorizable two-feature model reproduces the bernoulli form") {
  double q1 = 0.3, q2 = 0.7;
  TwoFeatureParams p(q1 * (1 - q2), (1 - q1) * q2, q1 * q2, (1 - q1) * (1 - q2));
  CHECK(is_frequency_factorizable(p, 1e-12));
  for (int n : {1, 2, 3}) {
    // compare on a couple of concrete ordered allocations
    std::vector<OrderedFeatureAllocation> cases;
    Feature all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    cases.push_back({n, {all, {1}}});
    cases.push_back({n, {{1}, all}});
    for (const auto& ordered : cases) {
      int m1 = static_cast<int>(ordered.features[0].size());
      int m2 = static_cast<int>(ordered.features[1].size());
      CHECK(two_feature_ordered_prob(p, ordered).value() ==
            doctest::Approx(bernoulli_two_feature_efpf(q1, q2, n, m1, m2).value())
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("is_frequency_factorizable") {
  CHECK(is_frequency_factorizable(TwoFeatureParams(0.35, 0.15, 0.15, 0.35), 1e-12));
  CHECK_FALSE(is_frequency_factorizable(TwoFeatureParams(0.1, 0.2, 0.3, 0.4), 1e-9));
  CHECK(is_frequency_factorizable(TwoFeatureParams(0.0, 0.0, 0.0, 1.0), 0.0));
  CHECK_THROWS_AS(is_frequency_factorizable(TwoFeatureParams(0.25, 0.25, 0.25, 0.25), -1.0),
                  std::domain_error);
}

TEST_CASE("finite_frequency_efpf") {
  auto v = finite_frequency_efpf({0.5, 0.5}, 5, {2, 2});
  CHECK(v.value() == doctest::Approx(std::pow(0.5, 10)).epsilon(1e-12));
  REQUIRE(v.exact.has_value());
  CHECK(*v.exact == Rational(1, 1024));

  CHECK(finite_frequency_efpf({0.3}, 4, {0}).value() ==
        doctest::Approx(std::pow(0.7, 4)).epsilon(1e-12));
  // sizes shorter than the frequency list: trailing features unobserved
  CHECK(finite_frequency_efpf({0.5, 0.3}, 2, {1}).value() ==
        doctest::Approx(0.5 * 0.5 * 0.49).epsilon(1e-12));

  // frequency boundaries with the 0^0 = 1 convention
  CHECK(finite_frequency_efpf({1.0}, 3, {3}).value() == doctest::Approx(1.0));
  CHECK(finite_frequency_efpf({1.0}, 3, {2}).value() == doctest::Approx(0.0));
  CHECK(finite_frequency_efpf({0.0}, 3, {0}).value() == doctest::Approx(1.0));

  CHECK_THROWS_AS(finite_frequency_efpf({0.5}, 3, {4}), std::domain_error);
  CHECK_THROWS_AS(finite_frequency_efpf({0.5}, 3, {1, 1}), std::domain_error);
  CHECK_THROWS_AS(finite_frequency_efpf({1.5}, 3, {1}), std::domain_error);
}

TEST_CASE("sequential enumeration matches the closed form at n = 2") {
  for (IbpParams p : {IbpParams(1.0, 1.0, 0.0), IbpParams(0.7, 2.0, 0.3)}) {
    auto seq = ibp_sequential_enumeration_n2(p, 1e-10);
    double total = 0.0;
    for (const auto& [alloc, mass] : seq) {
      CHECK(ibp_unordered_prob(p, alloc).value() == doctest::Approx(mass).epsilon(1e-9));
      total += mass;
    }
    // truncated support approaches full mass within the Poisson tail budget
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}
