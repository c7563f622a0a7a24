#pragma once

#include <string>
#include <vector>

#include "clumpstat/correlation.hpp"
#include "clumpstat/model.hpp"
#include "clumpstat/ratfun.hpp"

namespace clumpstat {

// Weighted generating functions of the parsing languages around the
// occurrences of a single word w (Bernoulli model):
//   D = pi_w z^|w| + (1-z) C,   R = pi_w z^|w| / D,   M = 1 + (z-1)/D,
//   U = 1/D,                    N = C/D.
struct SingleWordLanguages {
  std::string word;
  Rat pi;                 // pi_w
  MultiPoly word_weight;  // pi_w z^|w|
  MultiPoly C;            // autocorrelation polynomial (epsilon -> 1)
  MultiPoly K;            // prefix-code polynomial
  MultiPoly D;
  RationalFunction R, M, U, N;
};

SingleWordLanguages single_word_languages(const TextModel& model, const std::string& w);

// F(z, x) with [z^n x^k] = P(k occurrences of w in a length-n text).
RationalFunction occurrence_gf(const TextModel& model, const std::string& w);

// The matrix analogue for a reduced set: M is solved from the correlation
// identity, then R, U, N follow; all four defining identities are
// re-verified exactly after solving.
struct MultiWordLanguages {
  std::vector<std::string> words;
  std::vector<Rat> pi;
  std::vector<MultiPoly> word_weight;      // pi_i z^|w_i|
  std::vector<std::vector<MultiPoly>> C;   // correlation polynomials
  RFMatrix M;
  std::vector<RationalFunction> R, U;
  RationalFunction N;
};

MultiWordLanguages multi_word_languages(const TextModel& model,
                                        const ReducedWordSet& set);

// F(z, x_1..x_r): the matrix occurrence-counting function.
RationalFunction multi_occurrence_gf(const TextModel& model,
                                     const ReducedWordSet& set);
RationalFunction multi_occurrence_gf(const MultiWordLanguages& langs);

}  // namespace clumpstat
