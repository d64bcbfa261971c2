#include "featalloc/probability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "featalloc/math_util.hpp"

namespace featalloc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

IbpParams::IbpParams(double mass_, double concentration_, double discount_)
    : mass(mass_), concentration(concentration_), discount(discount_) {
  if (!(mass > 0.0)) throw std::domain_error("ibp params: mass must be > 0");
  if (!(concentration > 0.0))
    throw std::domain_error("ibp params: concentration must be > 0");
  if (!(discount >= 0.0 && discount < 1.0))
    throw std::domain_error("ibp params: discount must be in [0,1)");
}

TwoFeatureParams::TwoFeatureParams(double p10_, double p01_, double p11_, double p00_)
    : p10(p10_), p01(p01_), p11(p11_), p00(p00_) {
  for (double p : {p10, p01, p11, p00}) {
    if (!(p >= 0.0)) throw std::domain_error("two-feature params: negative rate");
  }
  if (std::fabs(p10 + p01 + p11 + p00 - 1.0) > 1e-12)
    throw std::domain_error("two-feature params: rates must sum to 1");
}

std::optional<TwoFeatureRates> rationalized(const TwoFeatureParams& params) {
  auto a = rationalize(params.p10);
  auto b = rationalize(params.p01);
  auto c = rationalize(params.p11);
  auto d = rationalize(params.p00);
  if (!a || !b || !c || !d) return std::nullopt;
  Rational sum = *a + *b + *c + *d;
  if (sum == 0) return std::nullopt;
  return TwoFeatureRates{*a / sum, *b / sum, *c / sum, *d / sum};
}

double EfpfValue::value() const { return std::exp(log_prob); }

double ibp_new_dish_rate(const IbpParams& params, int n) {
  if (n < 1) throw std::domain_error("ibp_new_dish_rate: n must be >= 1");
  const double t = params.concentration;
  const double a = params.discount;
  return params.mass * std::exp(std::lgamma(t + 1.0) - std::lgamma(t + n) +
                                std::lgamma(t + a - 1.0 + n) - std::lgamma(t + a));
}

double ibp_rate_sum(const IbpParams& params, int n) {
  double s = 0.0;
  for (int m = 1; m <= n; ++m) s += ibp_new_dish_rate(params, m);
  return s;
}

EfpfValue ibp_efpf(const IbpParams& params, int n, const std::vector<int>& sizes) {
  if (n < 1) throw std::domain_error("ibp_efpf: n must be >= 1");
  for (int m : sizes) {
    if (m < 1 || m > n) throw std::domain_error("ibp_efpf: size out of [1..n]");
  }
  const double t = params.concentration;
  const double a = params.discount;
  const int k = static_cast<int>(sizes.size());

  double log_prob = -std::lgamma(k + 1.0) - ibp_rate_sum(params, n);
  log_prob += k * (std::log(params.mass) + std::lgamma(t + 1.0) - std::lgamma(t + a));
  for (int m : sizes) {
    log_prob += std::lgamma(m - a) - std::lgamma(1.0 - a);
    log_prob += std::lgamma(t + n - m + a) - std::lgamma(t + n);
  }
  return EfpfValue{log_prob, std::nullopt};
}

EfpfValue ibp_unordered_prob(const IbpParams& params, const FeatureAllocation& fa) {
  std::vector<int> sizes;
  sizes.reserve(fa.features().size());
  for (const auto& f : fa.features()) sizes.push_back(static_cast<int>(f.size()));
  EfpfValue ordered = ibp_efpf(params, fa.n(), sizes);
  Rational factor = ordering_factor(multiplicity_profile(fa));
  return EfpfValue{ordered.log_prob - std::log(to_double(factor)), std::nullopt};
}

namespace {

double log_bernoulli_product(double q, int m, int n) {
  if (q <= 0.0) return m == 0 ? 0.0 : kNegInf;
  if (q >= 1.0) return m == n ? 0.0 : kNegInf;
  return m * std::log(q) + (n - m) * std::log1p(-q);
}

}  // namespace

EfpfValue bernoulli_two_feature_efpf(double qa, double qb, int n, int m1, int m2) {
  if (n < 1) throw std::domain_error("bernoulli_two_feature_efpf: n must be >= 1");
  if (m1 < 0 || m1 > n || m2 < 0 || m2 > n)
    throw std::domain_error("bernoulli_two_feature_efpf: size out of [0..n]");
  if (!(qa > 0.0 && qa < 1.0 && qb > 0.0 && qb < 1.0))
    throw std::domain_error("bernoulli_two_feature_efpf: frequencies must be in (0,1)");

  double first = log_bernoulli_product(qa, m1, n) + log_bernoulli_product(qb, m2, n);
  double second = log_bernoulli_product(qa, m2, n) + log_bernoulli_product(qb, m1, n);
  double log_prob = std::log(0.5) + log_sum_exp(first, second);

  std::optional<Rational> exact;
  auto ra = rationalize(qa);
  auto rb = rationalize(qb);
  if (ra && rb) {
    Rational va = *ra, vb = *rb;
    Rational sum = rational_pow(va, m1) * rational_pow(1 - va, n - m1) *
                       rational_pow(vb, m2) * rational_pow(1 - vb, n - m2) +
                   rational_pow(va, m2) * rational_pow(1 - va, n - m2) *
                       rational_pow(vb, m1) * rational_pow(1 - vb, n - m1);
    exact = sum / 2;
  }
  return EfpfValue{log_prob, exact};
}

EfpfValue two_feature_ordered_prob(const TwoFeatureParams& params,
                                   const OrderedFeatureAllocation& ordered) {
  const int k = static_cast<int>(ordered.features.size());
  if (k > 2) throw std::domain_error("two_feature_ordered_prob: more than two features");
  const int n = ordered.n;

  // Latent (feature-1, feature-2) outcomes mapping onto the observed
  // features; empty latent features stand in for absent labels.
  std::vector<std::pair<Feature, Feature>> outcomes;
  const Feature none;
  if (k == 0) {
    outcomes.emplace_back(none, none);
  } else if (k == 1) {
    outcomes.emplace_back(ordered.features[0], none);
    outcomes.emplace_back(none, ordered.features[0]);
  } else {
    outcomes.emplace_back(ordered.features[0], ordered.features[1]);
    if (ordered.features[0] != ordered.features[1])
      outcomes.emplace_back(ordered.features[1], ordered.features[0]);
  }

  auto rates = rationalized(params);
  Rational total = 0;
  double total_d = 0.0;
  for (const auto& [f1, f2] : outcomes) {
    int m10 = 0, m01 = 0, m11 = 0, m00 = 0;
    for (int i = 1; i <= n; ++i) {
      bool in1 = std::binary_search(f1.begin(), f1.end(), i);
      bool in2 = std::binary_search(f2.begin(), f2.end(), i);
      (in1 ? (in2 ? m11 : m10) : (in2 ? m01 : m00))++;
    }
    total_d += std::pow(params.p10, m10) * std::pow(params.p01, m01) *
               std::pow(params.p11, m11) * std::pow(params.p00, m00);
    if (rates) {
      total += rational_pow(rates->p10, m10) * rational_pow(rates->p01, m01) *
               rational_pow(rates->p11, m11) * rational_pow(rates->p00, m00);
    }
  }

  Rational factor = ordering_factor(multiplicity_profile(ordered.unordered()));
  total_d *= to_double(factor);
  std::optional<Rational> exact;
  if (rates) exact = total * factor;
  double log_prob = total_d > 0.0 ? std::log(total_d) : kNegInf;
  return EfpfValue{log_prob, exact};
}

bool is_frequency_factorizable(const TwoFeatureParams& params, double tol) {
  if (tol < 0.0) throw std::domain_error("is_frequency_factorizable: tol must be >= 0");
  return std::fabs(params.p10 * params.p01 - params.p11 * params.p00) <= tol;
}

EfpfValue finite_frequency_efpf(const std::vector<double>& freqs, int n,
                                const std::vector<int>& sizes) {
  if (n < 1) throw std::domain_error("finite_frequency_efpf: n must be >= 1");
  if (sizes.size() > freqs.size())
    throw std::domain_error("finite_frequency_efpf: more sizes than frequencies");
  for (double v : freqs) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::domain_error("finite_frequency_efpf: frequency out of [0,1]");
  }
  for (int m : sizes) {
    if (m < 0 || m > n) throw std::domain_error("finite_frequency_efpf: size out of [0..n]");
  }

  double log_prob = 0.0;
  for (std::size_t j = 0; j < freqs.size(); ++j) {
    int m = j < sizes.size() ? sizes[j] : 0;
    log_prob += log_bernoulli_product(freqs[j], m, n);
  }

  std::optional<Rational> exact;
  bool all_rational = true;
  Rational prod = 1;
  for (std::size_t j = 0; j < freqs.size() && all_rational; ++j) {
    auto v = rationalize(freqs[j]);
    if (!v) {
      all_rational = false;
      break;
    }
    int m = j < sizes.size() ? sizes[j] : 0;
    prod *= rational_pow(*v, m) * rational_pow(1 - *v, n - m);
  }
  if (all_rational) exact = prod;
  return EfpfValue{log_prob, exact};
}

}  // namespace featalloc
