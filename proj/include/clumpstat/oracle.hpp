#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "clumpstat/model.hpp"
#include "clumpstat/rational.hpp"
#include "clumpstat/words.hpp"

namespace clumpstat {

// One match of word `word` (index into the set), 1-based positions.
struct Occurrence {
  int word;
  int start;
  int end;  // start + |u| - 1
};

// Maximal chain of overlapping occurrences.
struct Clump {
  std::vector<Occurrence> occurrences;  // sorted by start
  int start;
  int end;
  int size() const { return end - start + 1; }
};

// All occurrences of all set words, naive scan, sorted by (start, word).
std::vector<Occurrence> find_occurrences(const std::string& text,
                                         const ReducedWordSet& set);

// Chains occurrences: a new one joins the open clump iff it overlaps it by
// at least one position. Ground truth for every generating-function engine.
std::vector<Clump> detect_clumps(const std::string& text, const ReducedWordSet& set);

// Independent route straight from the covering definition: mark every
// position pair (i, i+1) covered by a single occurrence, take maximal runs.
// detect_clumps must agree with this on reduced sets.
std::vector<Clump> clumps_by_definition(const std::string& text,
                                        const ReducedWordSet& set);

// Tallies of one text used by both the exhaustive oracle and the sampler.
struct TextStats {
  std::vector<long> occurrences_per_word;
  long occurrences = 0;
  long clumps = 0;
  long coverage = 0;                 // total span length over clumps
  std::vector<long> clump_sizes;     // occurrence count per clump, sorted
  long kclumps(int k) const;         // clumps with exactly k occurrences
};

TextStats text_statistics(const std::string& text, const ReducedWordSet& set);

enum class Statistic { ClumpCount, KClumpCount, Occurrences, Coverage, Joint };

// Exact map (statistic value) -> probability for texts of length n.
// Joint keys are (occ_1, .., occ_r, clumps, coverage, #1-clumps, #2-clumps);
// scalar statistics use a single-entry key.
struct DistributionTable {
  int n = 0;
  std::string statistic;
  std::vector<std::string> key_names;
  std::map<std::vector<long>, Rat> probs;

  Rat total() const;
  // Sum probabilities over all keys, keeping the named key positions.
  DistributionTable marginal(const std::vector<int>& keep_positions,
                             const std::string& new_name) const;
  bool operator==(const DistributionTable& o) const {
    return n == o.n && probs == o.probs;
  }
};

std::vector<long> stat_key(const TextStats& stats, Statistic stat, int k, int r);
std::vector<std::string> stat_key_names(Statistic stat, int k, int r);

// Enumerates all |A|^n texts, weighting each by its model probability.
// Throws BudgetError when |A|^n exceeds budget. The default entry point
// partitions the texts by fixed prefix across OpenMP threads; the serial
// variant is the reference implementation and produces the same table.
DistributionTable exhaustive_distribution(const TextModel& model,
                                          const ReducedWordSet& set, int n,
                                          Statistic stat, int k = 0,
                                          uint64_t budget = uint64_t(1) << 24);
DistributionTable exhaustive_distribution_serial(const TextModel& model,
                                                 const ReducedWordSet& set, int n,
                                                 Statistic stat, int k = 0,
                                                 uint64_t budget = uint64_t(1) << 24);

// Deterministic sampler (splitmix64 keyed by seed and sample index; results
// do not depend on the thread count). Frequencies and standard errors are
// floating point by design.
struct MonteCarloResult {
  int n = 0;
  long samples = 0;
  std::string statistic;
  std::map<std::vector<long>, double> freq;
  std::map<std::vector<long>, double> stderr_;
  double mean = 0.0;     // mean of the first key component
  double mean_se = 0.0;  // standard error of that mean
};

MonteCarloResult monte_carlo(const TextModel& model, const ReducedWordSet& set,
                             int n, long samples, uint64_t seed, Statistic stat,
                             int k = 0);

}  // namespace clumpstat
