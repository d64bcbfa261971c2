#include "featalloc/poisson_binomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace featalloc {

SpikeMeasure::SpikeMeasure(double lambda_, std::vector<double> atoms_, double tail_bound_)
    : lambda(lambda_), atoms(std::move(atoms_)), tail_bound(tail_bound_) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("spike measure: lambda must be >= 0");
  if (!(tail_bound >= 0.0))
    throw std::invalid_argument("spike measure: tail bound must be >= 0");
  double prev = 1.0;
  for (double p : atoms) {
    if (!(p > 0.0 && p <= prev))
      throw std::invalid_argument("spike measure: atoms must be non-increasing in (0,1]");
    prev = p;
  }
}

double SpikeMeasure::total_mass() const {
  double s = lambda + tail_bound;
  for (double p : atoms) s += p;
  return s;
}

EpbPmf epb_pmf_full(const SpikeMeasure& mu, double trunc_tol) {
  if (!(trunc_tol > 0.0)) throw std::invalid_argument("epb_pmf: trunc_tol must be > 0");
  if (mu.tail_bound > trunc_tol)
    throw std::invalid_argument("epb_pmf: atom tail exceeds the truncation budget");

  // Poisson base, truncated once the remaining mass drops below trunc_tol/2.
  std::vector<double> pmf;
  double tail;
  if (mu.lambda == 0.0) {
    pmf = {1.0};
    tail = 0.0;
  } else {
    double term = std::exp(-mu.lambda);
    double cum = term;
    pmf.push_back(term);
    for (int j = 1; 1.0 - cum >= trunc_tol / 2.0; ++j) {
      term *= mu.lambda / j;
      cum += term;
      pmf.push_back(term);
      if (j > 100000) throw std::runtime_error("epb_pmf: poisson truncation runaway");
    }
    tail = std::max(0.0, 1.0 - cum);
  }

  for (double p : mu.atoms) {
    pmf.push_back(0.0);
    for (std::size_t j = pmf.size() - 1; j > 0; --j)
      pmf[j] = pmf[j] * (1.0 - p) + pmf[j - 1] * p;
    pmf[0] *= 1.0 - p;
  }
  return EpbPmf{std::move(pmf), tail};
}

std::vector<double> epb_pmf(const SpikeMeasure& mu, int j_max, double trunc_tol) {
  if (j_max < 0) throw std::invalid_argument("epb_pmf: j_max must be >= 0");
  EpbPmf full = epb_pmf_full(mu, trunc_tol);
  full.probs.resize(j_max + 1, 0.0);
  return full.probs;
}

int epb_sample(const SpikeMeasure& mu, RandomStream& rng) {
  if (!(mu.tail_bound < 1e-9))
    throw std::invalid_argument("epb_sample: atom tail too heavy to sample from the head");
  int count = rng.poisson(mu.lambda);
  for (double p : mu.atoms) {
    if (rng.bernoulli(p)) ++count;
  }
  return count;
}

double epb_log_pgf(const SpikeMeasure& mu, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw std::domain_error("epb_log_pgf: s must be in (0,1]");
  double out = mu.lambda * (1.0 - s);
  for (double p : mu.atoms) out -= std::log1p(-(1.0 - s) * p);
  return out;
}

double epb_log_pgf_series(const SpikeMeasure& mu, double s, double tol) {
  if (!(s > 0.0 && s <= 1.0))
    throw std::domain_error("epb_log_pgf_series: s must be in (0,1]");
  if (s == 1.0) return 0.0;
  const double r = 1.0 - s;
  double atom_sum = 0.0, p_max = 0.0;
  for (double p : mu.atoms) {
    atom_sum += p;
    p_max = std::max(p_max, p);
  }

  // sum_j (1-s)^j m_{j-1} / j; remainder after J terms is bounded by
  // (sum p_k / p_max) * sum_{j>J} (r*p_max)^j / j.
  double out = r * (mu.lambda + atom_sum);  // j = 1 term, m_0
  if (p_max == 0.0) return out;
  double moment_scale = atom_sum / p_max;
  double rp = r * p_max;
  for (int j = 2; j < 100000; ++j) {
    double m = 0.0;  // m_{j-1} = sum p_k^j
    for (double p : mu.atoms) m += std::pow(p, j);
    out += std::pow(r, j) * m / j;
    double bound = moment_scale * std::pow(rp, j + 1) / ((j + 1) * (1.0 - rp));
    if (bound < tol) break;
  }
  return out;
}

std::vector<double> spike_moments(const SpikeMeasure& mu, int j_max) {
  std::vector<double> m(j_max + 1, 0.0);
  for (double p : mu.atoms) {
    double power = p;
    for (int j = 0; j <= j_max; ++j) {
      m[j] += power;
      power *= p;
    }
  }
  if (j_max >= 0) m[0] += mu.lambda;
  return m;
}

TriangularArray::TriangularArray(std::vector<std::vector<double>> rows_)
    : rows(std::move(rows_)) {
  for (const auto& row : rows) {
    double prev = 1.0;
    for (double p : row) {
      if (!(p > 0.0 && p <= prev))
        throw std::invalid_argument("triangular array: row must be non-increasing in (0,1]");
      prev = p;
    }
  }
}

TriangularArray TriangularArray::from_generator(
    int n_max, const std::function<std::vector<double>(int)>& generator) {
  std::vector<std::vector<double>> rows;
  rows.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) rows.push_back(generator(n));
  return TriangularArray(std::move(rows));
}

namespace {

double row_entry(const std::vector<double>& row, std::size_t k) {
  return k < row.size() ? row[k] : 0.0;
}

double row_sum(const std::vector<double>& row) {
  double s = 0.0;
  for (double p : row) s += p;
  return s;
}

struct Extrapolation {
  std::vector<double> p;
  double lambda;
};

// limit estimate from rows at indices half and full = 2*half, assuming
// entries approach their limits at rate 1/n
Extrapolation richardson(const std::vector<double>& half, const std::vector<double>& full) {
  Extrapolation est;
  std::size_t width = std::max(half.size(), full.size());
  est.p.resize(width);
  for (std::size_t k = 0; k < width; ++k)
    est.p[k] = std::clamp(2.0 * row_entry(full, k) - row_entry(half, k), 0.0, 1.0);
  double total = 2.0 * row_sum(full) - row_sum(half);
  double kept = 0.0;
  for (double p : est.p) kept += p;
  est.lambda = std::max(0.0, total - kept);
  return est;
}

}  // namespace

SeqBinLimit seq_bin_limit(const TriangularArray& array, int n_probe) {
  if (n_probe < 4) throw std::invalid_argument("seq_bin_limit: n_probe must be >= 4");
  if (static_cast<int>(array.rows.size()) < n_probe)
    throw std::invalid_argument("seq_bin_limit: rows missing up to n_probe");
  const auto& quarter = array.rows[n_probe / 4 - 1];
  const auto& half = array.rows[n_probe / 2 - 1];
  const auto& full = array.rows[n_probe - 1];

  Extrapolation prev = richardson(quarter, half);
  Extrapolation curr = richardson(half, full);

  double gap = std::fabs(prev.lambda - curr.lambda);
  for (std::size_t k = 0; k < std::max(prev.p.size(), curr.p.size()); ++k)
    gap = std::max(gap, std::fabs(row_entry(prev.p, k) - row_entry(curr.p, k)));

  SeqBinLimit out;
  out.converged = gap < 1e-3;
  out.lambda_hat = curr.lambda;
  // near-zero estimates are the vanishing entries whose mass moved into lambda
  const double atom_floor = 1e-3;
  for (double p : curr.p) {
    if (p > atom_floor) out.p_hat.push_back(p);
  }
  for (std::size_t k = 0; k + 1 < out.p_hat.size(); ++k) {
    if (out.p_hat[k + 1] > out.p_hat[k] + 1e-9)
      throw std::invalid_argument("seq_bin_limit: estimated limits are not monotone");
    out.p_hat[k + 1] = std::min(out.p_hat[k + 1], out.p_hat[k]);
  }
  // mass of the dropped estimates belongs to the Poisson part
  double dropped = curr.lambda;
  for (double p : curr.p) {
    if (p <= atom_floor) dropped += p;
  }
  out.lambda_hat = dropped;
  return out;
}

SpikeMeasure seq_bin_limit_law(const SeqBinLimit& limit) {
  if (!limit.converged)
    throw std::logic_error("seq_bin_limit_law: estimate did not converge");
  return SpikeMeasure(limit.lambda_hat, limit.p_hat);
}

}  // namespace featalloc
