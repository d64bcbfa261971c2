#include "featalloc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "featalloc/math_util.hpp"

namespace featalloc {

Rational AllocationDistribution::prob(const FeatureAllocation& fa) const {
  auto it = support.find(fa);
  return it == support.end() ? Rational(0) : it->second;
}

Rational AllocationDistribution::total() const {
  Rational t = 0;
  for (const auto& [fa, p] : support) t += p;
  return t;
}

void enumerate_binary_matrices(
    int n, int k, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (n < 0 || k < 0 || n * k > 16)
    throw std::domain_error("enumerate_binary_matrices: n*k must be at most 16");
  std::vector<std::uint32_t> rows(n, 0);
  const std::uint64_t count = std::uint64_t{1} << (n * k);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t bits = code;
    for (int i = 0; i < n; ++i) {
      rows[i] = static_cast<std::uint32_t>(bits & ((1u << k) - 1));
      bits >>= k;
    }
    fn(rows);
  }
}

namespace {

// pow tables V^j and (1-V)^j for j = 0..n
struct FreqPowers {
  std::vector<std::vector<Rational>> on, off;

  FreqPowers(const std::vector<Rational>& freqs, int n) {
    for (const auto& v : freqs) {
      std::vector<Rational> p_on{1}, p_off{1};
      for (int j = 1; j <= n; ++j) {
        p_on.push_back(p_on.back() * v);
        p_off.push_back(p_off.back() * (1 - v));
      }
      on.push_back(std::move(p_on));
      off.push_back(std::move(p_off));
    }
  }
};

FeatureAllocation allocation_from_matrix(int n, int k,
                                         const std::vector<std::uint32_t>& rows) {
  std::vector<Feature> fs;
  for (int col = 0; col < k; ++col) {
    Feature f;
    for (int i = 0; i < n; ++i) {
      if (rows[i] & (1u << col)) f.push_back(i + 1);
    }
    if (!f.empty()) fs.push_back(std::move(f));
  }
  return FeatureAllocation(n, std::move(fs));
}

}  // namespace

AllocationDistribution exact_distribution_finite_freq(const std::vector<Rational>& freqs,
                                                      int n) {
  const int k = static_cast<int>(freqs.size());
  for (const auto& v : freqs) {
    if (v < 0 || v > 1)
      throw std::domain_error("exact_distribution_finite_freq: frequency out of [0,1]");
  }
  FreqPowers pw(freqs, n);
  AllocationDistribution dist;
  dist.n = n;
  enumerate_binary_matrices(n, k, [&](const std::vector<std::uint32_t>& rows) {
    Rational p = 1;
    for (int col = 0; col < k; ++col) {
      int ones = 0;
      for (int i = 0; i < n; ++i) ones += (rows[i] >> col) & 1u;
      p *= pw.on[col][ones] * pw.off[col][n - ones];
    }
    if (p != 0) dist.support[allocation_from_matrix(n, k, rows)] += p;
  });
  return dist;
}

AllocationDistribution exact_distribution_two_feature(const TwoFeatureRates& rates, int n) {
  if (n < 1 || n > 6)
    throw std::domain_error("exact_distribution_two_feature: n must be in [1..6]");
  const Rational cell[4] = {rates.p00, rates.p10, rates.p01, rates.p11};
  AllocationDistribution dist;
  dist.n = n;
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= 4;
  for (std::uint64_t code = 0; code < count; ++code) {
    Rational p = 1;
    std::uint64_t digits = code;
    std::vector<std::vector<int>> index_labels(n);
    for (int i = 0; i < n; ++i) {
      int c = digits & 3u;
      digits >>= 2;
      p *= cell[c];
      if (c & 1) index_labels[i].push_back(1);
      if (c & 2) index_labels[i].push_back(2);
    }
    if (p != 0) dist.support[allocation_from_index_labels(n, index_labels)] += p;
  }
  return dist;
}

AllocationDistribution exact_distribution_freq_plus_singletons(
    const std::vector<Rational>& freqs, int n, const std::vector<Rational>& total_pmf) {
  AllocationDistribution base = exact_distribution_finite_freq(freqs, n);
  Rational pmf_total = 0;
  for (const auto& w : total_pmf) pmf_total += w;
  if (pmf_total != 1)
    throw std::domain_error("exact_distribution_freq_plus_singletons: pmf must sum to 1");

  AllocationDistribution dist;
  dist.n = n;
  const Rational per_index(1, n);
  for (const auto& [fa, p_base] : base.support) {
    for (std::size_t t = 0; t < total_pmf.size(); ++t) {
      if (total_pmf[t] == 0) continue;
      // assign t singletons to indices; enumerate index tuples
      std::vector<int> tuple(t, 0);
      for (;;) {
        std::vector<Feature> fs = fa.features();
        for (int idx : tuple) fs.push_back({idx + 1});
        Rational p = p_base * total_pmf[t];
        for (std::size_t j = 0; j < t; ++j) p *= per_index;
        dist.support[FeatureAllocation(n, std::move(fs))] += p;

        std::size_t pos = 0;
        while (pos < t && ++tuple[pos] == n) tuple[pos++] = 0;
        if (pos == t) break;
      }
    }
  }
  return dist;
}

AllocationDistribution exact_distribution_from_paintbox_cells(
    const std::vector<PaintboxCell>& cells, int n) {
  std::vector<Rational> lengths;
  std::vector<std::uint32_t> bits;
  for (const auto& cell : cells) {
    Rational len = cell.part.length();
    if (len != 0) {
      lengths.push_back(len);
      bits.push_back(cell.bits);
    }
  }
  const std::size_t c = lengths.size();
  double states = std::pow(static_cast<double>(c), n);
  if (states > 2e6)
    throw std::domain_error("exact_distribution_from_paintbox_cells: too many states");

  AllocationDistribution dist;
  dist.n = n;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    Rational p = 1;
    std::vector<std::vector<int>> index_labels(n);
    for (int i = 0; i < n; ++i) {
      p *= lengths[pick[i]];
      std::uint32_t b = bits[pick[i]];
      for (int k = 0; b != 0; ++k, b >>= 1) {
        if (b & 1u) index_labels[i].push_back(k + 1);
      }
    }
    dist.support[allocation_from_index_labels(n, index_labels)] += p;

    int pos = 0;
    while (pos < n && ++pick[pos] == c) pick[pos++] = 0;
    if (pos == n) break;
  }
  return dist;
}

std::map<FeatureAllocation, double> ibp_sequential_enumeration_n2(const IbpParams& params,
                                                                  double tail_tol) {
  const double c1 = ibp_new_dish_rate(params, 1);
  const double c2 = ibp_new_dish_rate(params, 2);
  const double join = (1.0 - params.discount) / (params.concentration + 1.0);

  auto truncation = [&](double rate) {
    int j = 0;
    while (poisson_tail(j, rate) >= tail_tol / 2.0) ++j;
    return j;
  };
  const int j_max = truncation(c1);
  const int l_max = truncation(c2);

  std::map<FeatureAllocation, double> dist;
  for (int j = 0; j <= j_max; ++j) {
    const double pj = poisson_pmf(j, c1);
    for (int a = 0; a <= j; ++a) {
      // a of the j first-customer dishes joined by customer 2
      const double pa = to_double(Rational(binomial(j, a), 1)) * std::pow(join, a) *
                        std::pow(1.0 - join, j - a);
      for (int l = 0; l <= l_max; ++l) {
        const double pl = poisson_pmf(l, c2);
        std::vector<Feature> fs;
        for (int i = 0; i < a; ++i) fs.push_back({1, 2});
        for (int i = 0; i < j - a; ++i) fs.push_back({1});
        for (int i = 0; i < l; ++i) fs.push_back({2});
        dist[FeatureAllocation(2, std::move(fs))] += pj * pa * pl;
      }
    }
  }
  return dist;
}

AllocationDistribution restrict_distribution(const AllocationDistribution& dist, int m) {
  AllocationDistribution out;
  out.n = m;
  for (const auto& [fa, p] : dist.support) out.support[restrict_to(fa, m)] += p;
  return out;
}

bool check_exchangeable(const AllocationDistribution& dist) {
  if (dist.n > 6) throw std::domain_error("check_exchangeable: n must be at most 6");
  std::vector<int> sigma(dist.n);
  for (int i = 0; i < dist.n; ++i) sigma[i] = i + 1;
  do {
    std::map<FeatureAllocation, Rational> pushed;
    for (const auto& [fa, p] : dist.support) pushed[apply_permutation(fa, sigma)] += p;
    if (pushed != dist.support) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

bool check_consistency(const AllocationDistribution& dist_m,
                       const AllocationDistribution& dist_n) {
  if (dist_m.n >= dist_n.n)
    throw std::domain_error("check_consistency: need dist_m.n < dist_n.n");
  AllocationDistribution pushed = restrict_distribution(dist_n, dist_m.n);
  // compare including zero-mass entries on either side
  for (const auto& [fa, p] : pushed.support) {
    if (dist_m.prob(fa) != p) return false;
  }
  for (const auto& [fa, p] : dist_m.support) {
    if (pushed.prob(fa) != p) return false;
  }
  return true;
}

EfpfFormCheck check_efpf_form(const AllocationDistribution& dist) {
  if (dist.n > 5) throw std::domain_error("check_efpf_form: n must be at most 5");
  EfpfFormCheck out;
  // ordered probability and witness allocation per size profile
  std::map<std::vector<int>, std::pair<Rational, FeatureAllocation>> groups;
  for (const auto& [fa, p] : dist.support) {
    std::vector<int> sizes;
    for (const auto& f : fa.features()) sizes.push_back(static_cast<int>(f.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    Rational ordered = p * ordering_factor(multiplicity_profile(fa));
    auto it = groups.find(sizes);
    if (it == groups.end()) {
      groups.emplace(std::move(sizes), std::make_pair(ordered, fa));
    } else if (it->second.first != ordered) {
      out.has_efpf = false;
      out.witness = {it->second.second, fa};
      return out;
    }
  }
  out.has_efpf = true;
  for (const auto& [sizes, entry] : groups) out.table.emplace_back(sizes, entry.first);
  return out;
}

}  // namespace featalloc
