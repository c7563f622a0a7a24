#pragma once

#include <string>
#include <vector>

#include "clumpstat/model.hpp"
#include "clumpstat/ratfun.hpp"
#include "clumpstat/words.hpp"

namespace clumpstat {

// X = { u_i . e | e in {eps} union E_ij for some j }: every occurrence plus
// its overlap extensions; the prefix closure of X is the automaton's state
// space.
struct XSet {
  std::vector<std::string> base_words;
  std::vector<std::string> words;  // sorted by length then lexicographically
};

XSet build_x_set(const ReducedWordSet& set);

// Multiplicative marks attached to every transition entering a state:
// which words end there (occurrence counts), whether a new clump opens
// there, and how many fresh positions the clumps cover.
struct StateMarks {
  std::vector<int> occurrences;  // indices of set words ending the state word
  bool new_clump = false;
  int cover = 0;
};

// Complete deterministic automaton on Pref(X) with the longest-suffix
// transition function. In DOT output the figure convention is used (t for
// a new clump, u^k for coverage); generating functions use the clump-GF
// convention (u counts clumps, t covered positions) so the two engines
// share variables.
class ClumpAutomaton {
 public:
  int state_count() const { return static_cast<int>(words_.size()); }
  const std::string& state_word(int s) const { return words_[static_cast<size_t>(s)]; }
  int initial() const { return 0; }
  int next(int state, char letter) const;
  const StateMarks& marks(int s) const { return marks_[static_cast<size_t>(s)]; }
  bool is_final(int s) const { return final_[static_cast<size_t>(s)]; }
  bool in_x(int s) const { return in_x_[static_cast<size_t>(s)]; }
  const Alphabet& alphabet() const { return alphabet_; }
  int word_count() const { return r_; }

 private:
  friend ClumpAutomaton build_clump_automaton(const XSet& x, const Alphabet& alphabet);

  Alphabet alphabet_{"ab"};
  int r_ = 0;
  std::vector<std::string> words_;       // state index -> word, eps first
  std::vector<std::vector<int>> delta_;  // [state][letter index]
  std::vector<StateMarks> marks_;
  std::vector<bool> final_, in_x_;
};

ClumpAutomaton build_clump_automaton(const XSet& x, const Alphabet& alphabet);
ClumpAutomaton build_clump_automaton(const ReducedWordSet& set);

// Which mark families to keep in a generating function; dropped marks are
// specialized to 1 before any linear algebra.
struct MarkSet {
  bool occurrences = true;
  bool clumps = true;
  bool coverage = true;

  static MarkSet all() { return {}; }
  static MarkSet none() { return {false, false, false}; }
  static MarkSet only_clumps() { return {false, true, false}; }
  static MarkSet only_occurrences() { return {true, false, false}; }
  static MarkSet only_coverage() { return {false, false, true}; }
};

// Full-text statistics: e_eps (I - z T)^{-1} summed over all states, where
// T is the probability- and mark-weighted transition matrix (Bernoulli or
// Markov-1). Variables: x / x_i occurrences, u clumps, t coverage.
RationalFunction automaton_gf(const ClumpAutomaton& a, const TextModel& model,
                              const MarkSet& keep = MarkSet::all());

// First-passage form: texts whose run first enters a final state (= the
// minimal words of X) at the very last letter, i.e. texts ending at the
// first occurrence of a clump. For a single word this is R(z) of the
// language decomposition.
RationalFunction accepted_language_gf(const ClumpAutomaton& a, const TextModel& model);

// Series of automaton_gf computed by iterating the transfer matrix; avoids
// the closed-form solve for large state spaces.
SeriesTable automaton_series(const ClumpAutomaton& a, const TextModel& model,
                             int horizon, const MarkSet& keep = MarkSet::all());

// Exact E(clumps) and E(clumps (clumps-1)) for every text length up to
// n_max, by iterating the transfer system with derivative jets at u = 1;
// avoids symbolic u-polynomials at large n.
struct MomentSeries {
  std::vector<Rat> mean;
  std::vector<Rat> factorial_second;  // E(X (X-1))

  Rat second(int n) const {  // E(X^2)
    return factorial_second[static_cast<size_t>(n)] + mean[static_cast<size_t>(n)];
  }
  Rat variance(int n) const {
    return second(n) - mean[static_cast<size_t>(n)] * mean[static_cast<size_t>(n)];
  }
};
MomentSeries clump_count_moments(const ClumpAutomaton& a, const TextModel& model,
                                 int n_max);

// Tallies of one concrete run (the testing bridge to the clump oracle).
struct TransducerTally {
  std::vector<long> occurrences_per_word;
  long occurrences = 0;
  long clumps = 0;
  long coverage = 0;
};

TransducerTally run_transducer(const ClumpAutomaton& a, const std::string& text);

// Deterministic DOT rendering: '+' on states of X, double circle on final
// states, figure-style edge marks (x_i, t = new clump, u^k = coverage).
std::string export_dot(const ClumpAutomaton& a);

}  // namespace clumpstat
