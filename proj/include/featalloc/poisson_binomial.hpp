#pragma once

#include <functional>
#include <vector>

#include "featalloc/random.hpp"

namespace featalloc {

// Parameters of an extended Poisson-binomial law: a Pois(lambda) count plus
// independent Bernoulli(p_k) indicators. Doubles as the spike size-location
// measure, which puts mass lambda at 0 and mass p_k at location p_k.
// tail_bound certifies the atom mass beyond the stored head (0 = finite).
struct SpikeMeasure {
  double lambda = 0.0;
  std::vector<double> atoms;  // non-increasing, in (0,1]
  double tail_bound = 0.0;

  SpikeMeasure() = default;
  SpikeMeasure(double lambda, std::vector<double> atoms, double tail_bound = 0.0);

  double total_mass() const;  // lambda + sum of atoms (+ tail bound)
};

struct EpbPmf {
  std::vector<double> probs;  // full computed support starting at 0
  double tail;                // mass beyond the computed support
};

// Sequential convolution: a Poisson base truncated to analytic tail below
// trunc_tol/2, then one Bernoulli at a time. The probs vector plus tail
// accounts for all mass up to floating-point rounding.
EpbPmf epb_pmf_full(const SpikeMeasure& mu, double trunc_tol = 1e-12);

// pmf values at 0..j_max, accurate to trunc_tol in total variation.
std::vector<double> epb_pmf(const SpikeMeasure& mu, int j_max, double trunc_tol = 1e-12);

// Pois(lambda) plus the head Bernoulli indicators; requires tail_bound < 1e-9.
int epb_sample(const SpikeMeasure& mu, RandomStream& rng);

// -log E s^# = lambda(1-s) - sum_k log(1 - (1-s) p_k), for s in (0,1].
double epb_log_pgf(const SpikeMeasure& mu, double s);

// Same quantity through the moment series sum_j (1-s)^j m_{j-1} / j,
// truncated with an analytic remainder below tol.
double epb_log_pgf_series(const SpikeMeasure& mu, double s, double tol = 1e-12);

// Moments of the spike measure: m_0 = lambda + sum p_k, and for j >= 1
// m_j = sum_k p_k^(j+1) (the mass at 0 contributes only to m_0).
std::vector<double> spike_moments(const SpikeMeasure& mu, int j_max);

// Row n: non-increasing success probabilities p_{n,1} >= ... > 0.
struct TriangularArray {
  std::vector<std::vector<double>> rows;  // rows[i] is row i+1

  explicit TriangularArray(std::vector<std::vector<double>> rows);
  // rows[i] = generator(i+1) for i+1 = 1..n_max
  static TriangularArray from_generator(
      int n_max, const std::function<std::vector<double>(int)>& generator);
};

struct SeqBinLimit {
  double lambda_hat = 0.0;
  std::vector<double> p_hat;
  bool converged = false;
};

// Estimates the limiting (lambda, p_1, p_2, ...) of the row laws by
// Richardson extrapolation from rows n_probe/4, n_probe/2 and n_probe;
// converged when the two successive extrapolations agree within 1e-3.
// The estimate is a diagnostic, not a proof.
SeqBinLimit seq_bin_limit(const TriangularArray& array, int n_probe);

// Packages a converged estimate as the limiting extended Poisson-binomial law.
SpikeMeasure seq_bin_limit_law(const SeqBinLimit& limit);

}  // namespace featalloc
