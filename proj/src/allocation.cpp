#include "featalloc/allocation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace featalloc {

bool feature_less(const Feature& a, const Feature& b) {
  if (a.front() != b.front()) return a.front() < b.front();
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

FeatureAllocation::FeatureAllocation(int n, std::vector<Feature> features)
    : n_(n), features_(std::move(features)) {
  if (n_ < 0) throw std::invalid_argument("allocation: n must be >= 0");
  for (auto& f : features_) {
    if (f.empty()) throw std::invalid_argument("allocation: empty feature");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.front() < 1 || f.back() > n_)
      throw std::invalid_argument("allocation: index out of [1..n]");
  }
  std::sort(features_.begin(), features_.end(), feature_less);
}

bool FeatureAllocation::operator<(const FeatureAllocation& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return std::lexicographical_compare(features_.begin(), features_.end(),
                                      other.features_.begin(), other.features_.end());
}

FeatureAllocation OrderedFeatureAllocation::unordered() const {
  return FeatureAllocation(n, features);
}

FeatureAllocation restrict_to(const FeatureAllocation& fa, int m) {
  if (m < 1 || m > fa.n()) throw std::out_of_range("restrict_to: m out of [1..n]");
  std::vector<Feature> out;
  for (const auto& f : fa.features()) {
    Feature g;
    for (int i : f) {
      if (i <= m) g.push_back(i);
    }
    if (!g.empty()) out.push_back(std::move(g));
  }
  return FeatureAllocation(m, std::move(out));
}

bool is_extension(const FeatureAllocation& fa_n, const FeatureAllocation& fa_m) {
  if (fa_m.n() > fa_n.n()) throw std::out_of_range("is_extension: fa_m.n > fa_n.n");
  if (fa_m.n() == fa_n.n()) return fa_n == fa_m;
  return restrict_to(fa_n, fa_m.n()) == fa_m;
}

FeatureAllocation apply_permutation(const FeatureAllocation& fa,
                                    const std::vector<int>& sigma) {
  const int n = fa.n();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("apply_permutation: sigma size mismatch");
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("apply_permutation: sigma is not a bijection");
    seen[v] = true;
  }
  std::vector<Feature> out;
  out.reserve(fa.features().size());
  for (const auto& f : fa.features()) {
    Feature g;
    g.reserve(f.size());
    for (int i : f) g.push_back(sigma[i - 1]);
    out.push_back(std::move(g));
  }
  return FeatureAllocation(n, std::move(out));
}

MultiplicityProfile multiplicity_profile(const FeatureAllocation& fa) {
  MultiplicityProfile p;
  p.k_total = fa.feature_count();
  const auto& fs = fa.features();
  for (std::size_t i = 0; i < fs.size();) {
    std::size_t j = i;
    while (j < fs.size() && fs[j] == fs[i]) ++j;
    p.multiplicities.push_back(static_cast<int>(j - i));
    i = j;
  }
  std::sort(p.multiplicities.rbegin(), p.multiplicities.rend());
  p.h_distinct = static_cast<int>(p.multiplicities.size());
  return p;
}

Rational ordering_factor(const MultiplicityProfile& profile) {
  BigInt num = 1;
  for (int m : profile.multiplicities) num *= factorial(m);
  return Rational(num, factorial(profile.k_total));
}

LabelSets order_of_appearance_labels(const FeatureAllocation& fa,
                                     const std::vector<double>& tie_break) {
  const auto& fs = fa.features();
  const int k_total = fa.feature_count();
  if (static_cast<int>(tie_break.size()) < k_total)
    throw std::invalid_argument("order_of_appearance_labels: need >= K tie-break values");
  {
    std::set<double> distinct(tie_break.begin(), tie_break.begin() + k_total);
    if (static_cast<int>(distinct.size()) != k_total)
      throw std::invalid_argument("order_of_appearance_labels: tie-break values must be distinct");
  }

  std::vector<int> label(fs.size(), 0);
  int next_label = 1;
  std::size_t next_tie = 0;
  for (int idx = 1; idx <= fa.n(); ++idx) {
    // unlabeled features containing idx, in canonical order
    std::vector<std::pair<double, std::size_t>> batch;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (label[j] == 0 && std::binary_search(fs[j].begin(), fs[j].end(), idx))
        batch.emplace_back(tie_break[next_tie++], j);
    }
    std::sort(batch.begin(), batch.end());
    for (const auto& [value, j] : batch) label[j] = next_label++;
  }

  LabelSets out;
  out.n = fa.n();
  out.k_total = k_total;
  out.labels.resize(fa.n());
  for (std::size_t j = 0; j < fs.size(); ++j) {
    for (int i : fs[j]) out.labels[i - 1].push_back(label[j]);
  }
  for (auto& z : out.labels) std::sort(z.begin(), z.end());
  return out;
}

OrderedFeatureAllocation ordered_from_labels(const FeatureAllocation& fa,
                                             const std::vector<double>& labels) {
  const auto& fs = fa.features();
  if (labels.size() != fs.size())
    throw std::invalid_argument("ordered_from_labels: one label per feature required");
  std::vector<std::size_t> order(fs.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  OrderedFeatureAllocation out;
  out.n = fa.n();
  for (std::size_t j : order) out.features.push_back(fs[j]);
  return out;
}

OrderedFeatureAllocation uniform_random_ordering(const FeatureAllocation& fa,
                                                 RandomStream& rng) {
  std::vector<double> labels(fa.features().size());
  for (auto& v : labels) v = rng.uniform();
  return ordered_from_labels(fa, labels);
}

BinaryMatrix to_binary_matrix(const LabelSets& labels) {
  BinaryMatrix m;
  m.rows = labels.n;
  m.cols = labels.k_total;
  m.cells.assign(m.rows, std::vector<std::uint8_t>(m.cols, 0));
  for (int i = 0; i < m.rows; ++i) {
    for (int k : labels.labels[i]) m.cells[i][k - 1] = 1;
  }
  return m;
}

FeatureAllocation allocation_from_label_sets(const LabelSets& labels) {
  return allocation_from_index_labels(labels.n, labels.labels);
}

FeatureAllocation allocation_from_index_labels(
    int n, const std::vector<std::vector<int>>& index_labels) {
  std::map<int, Feature> by_label;
  for (int i = 0; i < static_cast<int>(index_labels.size()); ++i) {
    for (int k : index_labels[i]) by_label[k].push_back(i + 1);
  }
  std::vector<Feature> fs;
  fs.reserve(by_label.size());
  for (auto& [k, members] : by_label) fs.push_back(std::move(members));
  return FeatureAllocation(n, std::move(fs));
}

bool is_partition(const FeatureAllocation& fa) {
  std::vector<int> hits(fa.n() + 1, 0);
  for (const auto& f : fa.features()) {
    for (int i : f) ++hits[i];
  }
  for (int i = 1; i <= fa.n(); ++i) {
    if (hits[i] != 1) return false;
  }
  return true;
}

}  // namespace featalloc
