#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clumpstat/model.hpp"
#include "clumpstat/ratfun.hpp"
#include "clumpstat/words.hpp"

namespace clumpstat {

// Tail function H_k(z) = [u^k] O(z,u) of the clump count:
//   pi_w z^|w| P(z)^{k-1} / ((1 - K(z))^k D(z)^{k+1}),
// P(z) = z - 1 + (1 - K(z)) D(z). Asserted against the direct Taylor
// coefficient of the clump-count function; k = 0 is the no-occurrence
// function N(z).
RationalFunction poisson_tail_gf(const TextModel& model, const std::string& w, int k);

// Smallest real root of D(z) beyond 1. The enclosure [lo, hi] carries the
// certificate: D changes sign across it (or vanishes exactly at lo = hi),
// verified in exact rational arithmetic; rho is a Newton-polished double
// inside it. Q(z) = D(z) / (1 - z/rho) by synthetic division, with the
// trailing residual reported.
struct DominantRoot {
  Rat lo, hi;
  double rho = 0;
  std::vector<double> q_coeffs;
  double q_at_rho = 0;
  double residual = 0;
};

DominantRoot dominant_root(const TextModel& model, const std::string& w,
                           double precision);

// First-order pole approximation of P(clump count = k) at text length n:
//   pi_w rho^|w| P(rho)^{k-1} / ((1-K(rho))^k Q(rho)^{k+1}) n^k/k! rho^{-n}.
// (The residue form; see the notes on the sign/factor slips in the source
// display.) The exact coefficient from the tail function rides along for
// comparison when n is within the series horizon.
struct PoissonApprox {
  double approximation = 0;
  std::optional<Rat> exact;
  double ratio = 0;  // exact / approximation when exact is present
  bool pre_asymptotic = false;  // n < |w|
  bool rare_regime = true;      // |w| > log n / log(1/p-bar)
  double rho = 0, q_at_rho = 0, p_at_rho = 0, k_at_rho = 0;
};

PoissonApprox poisson_approximation(const TextModel& model, const std::string& w,
                                    int n, int k, int exact_horizon = 2048);

// Empirical normal-law premise: linear growth of mean and variance of the
// clump count. Slopes are the last increments at n_max; residuals measure
// stabilization over the trailing 10% of the range. The exact limit slope
// comes from the generating function (pi_w (1 - K(1)) for one word).
struct GrowthRates {
  double mean_slope = 0;
  double var_slope = 0;
  double mean_residual = 0;
  double var_residual = 0;
  Rat mean_slope_exact;
};

GrowthRates growth_rates(const TextModel& model, const ReducedWordSet& set,
                         int n_max);

}  // namespace clumpstat
