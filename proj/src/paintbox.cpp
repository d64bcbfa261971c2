#include "featalloc/paintbox.hpp"

#include <algorithm>
#include <stdexcept>

namespace featalloc {

IntervalSet::IntervalSet(std::vector<Interval> pieces) : pieces_(std::move(pieces)) {
  for (const auto& p : pieces_) {
    if (p.lo < 0 || p.hi > 1 || p.lo > p.hi)
      throw std::invalid_argument("interval set: endpoints must satisfy 0 <= lo <= hi <= 1");
  }
  std::erase_if(pieces_, [](const Interval& p) { return p.lo == p.hi; });
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& p : pieces_) {
    if (!merged.empty() && p.lo < merged.back().hi)
      throw std::invalid_argument("interval set: overlapping pieces");
    if (!merged.empty() && p.lo == merged.back().hi) {
      merged.back().hi = p.hi;
    } else {
      merged.push_back(p);
    }
  }
  pieces_ = std::move(merged);
}

Rational IntervalSet::length() const {
  Rational total = 0;
  for (const auto& p : pieces_) total += p.hi - p.lo;
  return total;
}

bool IntervalSet::contains(double x) const {
  for (const auto& p : pieces_) {
    if (x < to_double(p.lo)) return false;
    if (x < to_double(p.hi)) return true;
  }
  return false;
}

IntervalSet IntervalSet::take_left(const Rational& want) const {
  if (want < 0 || want > length())
    throw std::invalid_argument("take_left: requested length out of range");
  std::vector<Interval> out;
  Rational remaining = want;
  for (const auto& p : pieces_) {
    if (remaining == 0) break;
    Rational len = p.hi - p.lo;
    if (len <= remaining) {
      out.push_back(p);
      remaining -= len;
    } else {
      out.push_back({p.lo, p.lo + remaining});
      remaining = 0;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::minus(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const auto& p : pieces_) {
    Rational lo = p.lo;
    for (const auto& q : other.pieces_) {
      if (q.hi <= lo) continue;
      if (q.lo >= p.hi) break;
      if (q.lo > lo) out.push_back({lo, std::min(q.lo, p.hi)});
      lo = std::max(lo, q.hi);
      if (lo >= p.hi) break;
    }
    if (lo < p.hi) out.push_back({lo, p.hi});
  }
  return IntervalSet(std::move(out));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  for (const auto& p : a.pieces()) {
    for (const auto& q : b.pieces()) {
      Rational lo = std::max(p.lo, q.lo);
      Rational hi = std::min(p.hi, q.hi);
      if (lo < hi) out.push_back({lo, hi});
    }
  }
  return IntervalSet(std::move(out));
}

Rational intersection_length(const IntervalSet& a, const IntervalSet& b) {
  return intersect(a, b).length();
}

KingmanPaintbox::KingmanPaintbox(std::vector<double> atoms_) : atoms(std::move(atoms_)) {
  double sum = 0.0;
  double prev = 1.0;
  for (double p : atoms) {
    if (!(p > 0.0 && p <= prev))
      throw std::invalid_argument("kingman paintbox: atoms must be positive and non-increasing");
    prev = p;
    sum += p;
  }
  if (sum > 1.0 + 1e-12)
    throw std::invalid_argument("kingman paintbox: atoms must sum to at most 1");
}

double KingmanPaintbox::dust() const {
  double sum = 0.0;
  for (double p : atoms) sum += p;
  return std::max(0.0, 1.0 - sum);
}

FeatureAllocation kingman_sample(const KingmanPaintbox& pb, int n, RandomStream& rng) {
  if (n < 1) throw std::domain_error("kingman_sample: n must be >= 1");
  std::vector<std::vector<int>> index_labels(n);
  int next_dust_label = static_cast<int>(pb.atoms.size()) + 1;
  for (int i = 0; i < n; ++i) {
    std::size_t k = rng.categorical(pb.atoms);
    if (k < pb.atoms.size()) {
      index_labels[i] = {static_cast<int>(k + 1)};
    } else {
      index_labels[i] = {next_dust_label++};  // dust: fresh singleton block
    }
  }
  return allocation_from_index_labels(n, index_labels);
}

std::vector<PaintboxCell> frequency_paintbox_cells(const std::vector<Rational>& freqs) {
  if (freqs.size() > 20)
    throw std::domain_error("frequency paintbox: more than 20 frequencies");
  for (const auto& v : freqs) {
    if (v < 0 || v > 1)
      throw std::domain_error("frequency paintbox: frequency out of [0,1]");
  }
  std::vector<PaintboxCell> cells{{0u, IntervalSet({{Rational(0), Rational(1)}})}};
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    std::vector<PaintboxCell> next;
    next.reserve(cells.size() * 2);
    for (const auto& cell : cells) {
      IntervalSet one = cell.part.take_left(freqs[k] * cell.part.length());
      IntervalSet zero = cell.part.minus(one);
      next.push_back({cell.bits | (1u << k), std::move(one)});
      next.push_back({cell.bits, std::move(zero)});
    }
    cells = std::move(next);
  }
  return cells;
}

FeaturePaintbox build_frequency_paintbox(const std::vector<Rational>& freqs) {
  FeaturePaintbox pb;
  auto cells = frequency_paintbox_cells(freqs);
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    std::vector<Interval> pieces;
    for (const auto& cell : cells) {
      if (cell.bits & (1u << k)) {
        for (const auto& p : cell.part.pieces()) pieces.push_back(p);
      }
    }
    pb.subsets.push_back(IntervalSet(std::move(pieces)));
  }
  return pb;
}

FeaturePaintbox build_frequency_paintbox(const std::vector<double>& freqs) {
  std::vector<Rational> rs;
  rs.reserve(freqs.size());
  for (double v : freqs) {
    auto r = rationalize(v);
    if (!r) throw std::domain_error("frequency paintbox: frequency has no close rational");
    rs.push_back(*r);
  }
  return build_frequency_paintbox(rs);
}

FeatureAllocation paintbox_sample(const FeaturePaintbox& pb, int n, RandomStream& rng) {
  if (n < 1) throw std::domain_error("paintbox_sample: n must be >= 1");
  // endpoints compiled to doubles once; rational arithmetic is for measures
  std::vector<std::vector<std::pair<double, double>>> compiled(pb.subsets.size());
  for (std::size_t k = 0; k < pb.subsets.size(); ++k) {
    for (const auto& p : pb.subsets[k].pieces())
      compiled[k].emplace_back(to_double(p.lo), to_double(p.hi));
  }
  std::vector<std::vector<int>> index_labels(n);
  for (int i = 0; i < n; ++i) {
    double u = rng.uniform();
    for (std::size_t k = 0; k < compiled.size(); ++k) {
      for (const auto& [lo, hi] : compiled[k]) {
        if (u < lo) break;
        if (u < hi) {
          index_labels[i].push_back(static_cast<int>(k + 1));
          break;
        }
      }
    }
  }
  return allocation_from_index_labels(n, index_labels);
}

FeaturePaintbox two_feature_paintbox(const TwoFeatureRates& rates) {
  FeaturePaintbox pb;
  Rational c1_hi = rates.p10 + rates.p11;
  Rational c2_lo = rates.p10;
  Rational c2_hi = rates.p10 + rates.p11 + rates.p01;
  pb.subsets.push_back(c1_hi > 0 ? IntervalSet({{Rational(0), c1_hi}}) : IntervalSet());
  pb.subsets.push_back(c2_hi > c2_lo ? IntervalSet({{c2_lo, c2_hi}}) : IntervalSet());
  return pb;
}

FeaturePaintbox two_feature_paintbox(const TwoFeatureParams& params) {
  auto rates = rationalized(params);
  if (!rates)
    throw std::domain_error("two_feature_paintbox: parameters have no close rationals");
  return two_feature_paintbox(*rates);
}

}  // namespace featalloc
