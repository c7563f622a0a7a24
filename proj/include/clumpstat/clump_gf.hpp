#pragma once

#include <string>
#include <vector>

#include "clumpstat/languages.hpp"
#include "clumpstat/model.hpp"
#include "clumpstat/ratfun.hpp"

namespace clumpstat {

// Generating function of one clump of w: x marks occurrences, z counts
// letters, t shadows z inside the clump (covered positions):
//   kernel(z,x,t) = x pi_w (zt)^|w| / (1 - x K(zt)).
struct ClumpKernel {
  std::string word;
  Rat pi;
  MultiPoly K;  // prefix-code polynomial in z
  RationalFunction kernel;
};

ClumpKernel clump_kernel(const TextModel& model, const std::string& w);

// Full text statistics around clumps, single word or reduced set. The
// joint G(z, x.., t, u) marks occurrences (x or x_i), covered positions (t)
// and clumps (u); the views specialize the other marks to 1. k-clump views
// are rebuilt from the stored languages with the k-selecting kernel.
class ClumpStatisticsGF {
 public:
  const RationalFunction& joint() const { return joint_; }
  int word_count() const { return r_; }

  RationalFunction clump_count_view() const;           // (z, u)
  RationalFunction occurrence_view() const;            // (z, x)
  RationalFunction joint_occurrence_view() const;      // (z, x_1..x_r)
  RationalFunction coverage_view() const;              // (z, t)
  RationalFunction kclump_view(int k) const;           // (z, v)

 private:
  friend ClumpStatisticsGF clump_text_gf(const TextModel&, const std::string&);
  friend ClumpStatisticsGF multi_word_clump_gf(const TextModel&,
                                               const ReducedWordSet&);

  static ClumpStatisticsGF build(const TextModel& model,
                                 const std::vector<std::string>& words,
                                 const PolyMatrix& kmat);
  static ClumpStatisticsGF build_frame(const TextModel& model,
                                       const std::vector<std::string>& words,
                                       const PolyMatrix& kmat);
  void kernel_star(const PolyMatrix& kmat, bool with_marks, PolyMatrix& g_hat,
                   MultiPoly& g_den) const;

  // Everything is kept over two explicit polynomial denominators: detP (the
  // language matrix determinant, = D(z) at r = 1) for the R/M/U/N frame and
  // a kernel determinant per view. Generic rational-function matrix algebra
  // would rebuild these shared factors entry by entry and blow up.
  int r_ = 1;
  int occ_var(int i) const;  // x at r = 1, else x_1..x_r
  RationalFunction joint_;
  std::vector<MultiPoly> ww_;    // pi_i z^|w_i|
  PolyMatrix cmat_;              // correlation polynomials C_ij
  PolyMatrix kmat_;              // minimal correlation polynomials K_ij
  MultiPoly det_p_;              // det P, P_ij = pi_j z^|w_j| + (1-z) C_ij
  PolyMatrix m_hat_;             // M_ij = m_hat_ij / det_p
  std::vector<MultiPoly> rho_hat_, u_hat_;  // R_i w_i^-, U_i over det_p
  MultiPoly n_hat_;              // N over det_p
  PolyMatrix h_hat_;             // (M_ij - K_ij) w_j^- over det_p

  // N + rho (mark G) (I - H mark G)^{-1} U with G = g_hat / g_den.
  RationalFunction assemble(const PolyMatrix& g_hat, const MultiPoly& g_den,
                            const MultiPoly& mark) const;
};

// Single word; equals the matrix construction at r = 1.
ClumpStatisticsGF clump_text_gf(const TextModel& model, const std::string& w);

// Reduced set: K matrix from the minimal correlation languages,
// S = (I - K)^*, per-clump matrix G_ij = x_i pi_i (zt)^|w_i| S_ij with the
// extension steps marked x_j, assembled through the R/M/U/N frame.
ClumpStatisticsGF multi_word_clump_gf(const TextModel& model,
                                      const ReducedWordSet& set);

// O(z, u) = N + u R U / (1 - u M + (u - 1) K): the clump-count function,
// identical to the u-view of the joint (asserted).
RationalFunction clump_count_gf(const TextModel& model, const std::string& w);

// Expected clump count, extracted from pi_w z^|w| (1 - K(z)) / (1-z)^2.
Rat expected_clumps(const TextModel& model, const std::string& w, int n);
RationalFunction expected_clumps_gf(const TextModel& model, const std::string& w);

// k-clump counting: the kernel variant pi_w z^|w| (1/(1-K) + (v-1) K^{k-1})
// pushed through the same frame; [z^n v^i] = P(exactly i k-clumps).
RationalFunction kclump_gf(const TextModel& model, const std::string& w, int k);

// (E[P_n], H_n): expected covered positions and covered fraction E[P_n]/n.
struct CoverageStats {
  Rat expected_covered;
  Rat covered_fraction;
};
CoverageStats coverage_stats(const TextModel& model, const std::string& w, int n);

// Stationary clump-size law: z-coefficients of kernel(z,1,1) up to
// max_size, normalized by kernel(1) when K(1) < 1 (else flagged divergent
// and returned raw).
struct ClumpSizeDistribution {
  bool normalized = false;
  Rat normalizer;  // kernel mass at z = 1 when normalized
  std::vector<std::pair<int, Rat>> weights;
};
ClumpSizeDistribution clump_size_distribution(const TextModel& model,
                                              const std::string& w, int max_size);

}  // namespace clumpstat
