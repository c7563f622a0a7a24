#include "clumpstat/oracle.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "clumpstat/errors.hpp"

namespace clumpstat {

std::vector<Occurrence> find_occurrences(const std::string& text,
                                         const ReducedWordSet& set) {
  std::vector<Occurrence> out;
  const int n = static_cast<int>(text.size());
  for (int start = 1; start <= n; ++start) {
    for (int w = 0; w < set.size(); ++w) {
      const std::string& u = set.word(w);
      const int len = static_cast<int>(u.size());
      if (start + len - 1 > n) continue;
      if (text.compare(static_cast<size_t>(start - 1), static_cast<size_t>(len), u) == 0)
        out.push_back({w, start, start + len - 1});
    }
  }
  return out;
}

std::vector<Clump> detect_clumps(const std::string& text, const ReducedWordSet& set) {
  std::vector<Occurrence> occs = find_occurrences(text, set);
  std::vector<Clump> clumps;
  for (const Occurrence& occ : occs) {
    if (!clumps.empty() && occ.start <= clumps.back().end) {
      clumps.back().occurrences.push_back(occ);
      clumps.back().end = std::max(clumps.back().end, occ.end);
    } else {
      clumps.push_back({{occ}, occ.start, occ.end});
    }
  }
  return clumps;
}

std::vector<Clump> clumps_by_definition(const std::string& text,
                                        const ReducedWordSet& set) {
  std::vector<Occurrence> occs = find_occurrences(text, set);
  const int n = static_cast<int>(text.size());
  // linked[i] (1-based pair (i, i+1)) <=> some single occurrence covers both.
  std::vector<char> linked(static_cast<size_t>(std::max(0, n)), 0);
  std::vector<char> in_occ(static_cast<size_t>(n + 2), 0);
  for (const Occurrence& occ : occs) {
    for (int i = occ.start; i < occ.end; ++i) linked[static_cast<size_t>(i)] = 1;
    for (int i = occ.start; i <= occ.end; ++i) in_occ[static_cast<size_t>(i)] = 1;
  }
  // Maximal runs of linked pairs are the clump spans; an isolated occurrence
  // still links its own interior pairs since every word has length >= 2.
  std::vector<Clump> clumps;
  int i = 1;
  while (i < n) {
    if (!linked[static_cast<size_t>(i)]) {
      ++i;
      continue;
    }
    int start = i;
    while (i < n && linked[static_cast<size_t>(i)]) ++i;
    int end = i;  // positions start .. end are pairwise-covered
    Clump clump{{}, start, end};
    for (const Occurrence& occ : occs)
      if (occ.start >= start && occ.end <= end) clump.occurrences.push_back(occ);
    if (clump.occurrences.empty())
      throw MathError(MathError::Kind::Internal, "covered span without occurrences");
    // Maximality per the definition: no occurrence may straddle the span.
    for (const Occurrence& occ : occs)
      if (occ.end >= start && occ.start <= end &&
          (occ.start < start || occ.end > end))
        throw MathError(MathError::Kind::Internal, "span not maximal");
    clumps.push_back(std::move(clump));
  }
  return clumps;
}

long TextStats::kclumps(int k) const {
  long count = 0;
  for (long s : clump_sizes)
    if (s == k) ++count;
  return count;
}

TextStats text_statistics(const std::string& text, const ReducedWordSet& set) {
  TextStats stats;
  stats.occurrences_per_word.assign(static_cast<size_t>(set.size()), 0);
  std::vector<Clump> clumps = detect_clumps(text, set);
  stats.clumps = static_cast<long>(clumps.size());
  for (const Clump& clump : clumps) {
    stats.coverage += clump.size();
    stats.clump_sizes.push_back(static_cast<long>(clump.occurrences.size()));
    for (const Occurrence& occ : clump.occurrences) {
      ++stats.occurrences_per_word[static_cast<size_t>(occ.word)];
      ++stats.occurrences;
    }
  }
  std::sort(stats.clump_sizes.begin(), stats.clump_sizes.end());
  return stats;
}

Rat DistributionTable::total() const {
  Rat sum = 0;
  for (const auto& [key, p] : probs) sum += p;
  return sum;
}

DistributionTable DistributionTable::marginal(const std::vector<int>& keep_positions,
                                              const std::string& new_name) const {
  DistributionTable out;
  out.n = n;
  out.statistic = new_name;
  for (int pos : keep_positions)
    out.key_names.push_back(key_names[static_cast<size_t>(pos)]);
  for (const auto& [key, p] : probs) {
    std::vector<long> reduced;
    reduced.reserve(keep_positions.size());
    for (int pos : keep_positions) reduced.push_back(key[static_cast<size_t>(pos)]);
    out.probs[reduced] += p;
  }
  return out;
}

std::vector<long> stat_key(const TextStats& stats, Statistic stat, int k, int r) {
  switch (stat) {
    case Statistic::ClumpCount: return {stats.clumps};
    case Statistic::KClumpCount: return {stats.kclumps(k)};
    case Statistic::Occurrences: return {stats.occurrences};
    case Statistic::Coverage: return {stats.coverage};
    case Statistic::Joint: {
      std::vector<long> key = stats.occurrences_per_word;
      key.resize(static_cast<size_t>(r));
      key.push_back(stats.clumps);
      key.push_back(stats.coverage);
      key.push_back(stats.kclumps(1));
      key.push_back(stats.kclumps(2));
      return key;
    }
  }
  return {};
}

std::vector<std::string> stat_key_names(Statistic stat, int k, int r) {
  switch (stat) {
    case Statistic::ClumpCount: return {"clumps"};
    case Statistic::KClumpCount: return {std::to_string(k) + "-clumps"};
    case Statistic::Occurrences: return {"occurrences"};
    case Statistic::Coverage: return {"coverage"};
    case Statistic::Joint: {
      std::vector<std::string> names;
      for (int i = 0; i < r; ++i) names.push_back("occ_" + std::to_string(i + 1));
      names.push_back("clumps");
      names.push_back("coverage");
      names.push_back("1-clumps");
      names.push_back("2-clumps");
      return names;
    }
  }
  return {};
}

namespace {

const char* statistic_name(Statistic stat) {
  switch (stat) {
    case Statistic::ClumpCount: return "clump_count";
    case Statistic::KClumpCount: return "kclump_count";
    case Statistic::Occurrences: return "occurrences";
    case Statistic::Coverage: return "coverage";
    case Statistic::Joint: return "joint";
  }
  return "?";
}

using Table = std::map<std::vector<long>, Rat>;

void tally_range(const TextModel& model, const ReducedWordSet& set, int n,
                 Statistic stat, int k, uint64_t begin, uint64_t end, Table& table) {
  const Alphabet& alphabet = model.alphabet();
  std::string text = text_at(alphabet, n, begin);
  const int a = alphabet.size();
  for (uint64_t index = begin; index < end; ++index) {
    TextStats stats = text_statistics(text, set);
    table[stat_key(stats, stat, k, set.size())] += model.word_probability(text);
    // Odometer increment keeps lexicographic order without re-deriving.
    int pos = n - 1;
    while (pos >= 0 && alphabet.index(text[static_cast<size_t>(pos)]) == a - 1) {
      text[static_cast<size_t>(pos)] = alphabet.letter(0);
      --pos;
    }
    if (pos < 0) break;
    text[static_cast<size_t>(pos)] =
        alphabet.letter(alphabet.index(text[static_cast<size_t>(pos)]) + 1);
  }
}

uint64_t checked_count(const TextModel& model, int n, uint64_t budget) {
  uint64_t count = text_count(model.alphabet(), n);
  if (count > budget)
    throw BudgetError("enumeration of " + std::to_string(count) +
                      " texts exceeds budget " + std::to_string(budget));
  return count;
}

}  // namespace

DistributionTable exhaustive_distribution_serial(const TextModel& model,
                                                 const ReducedWordSet& set, int n,
                                                 Statistic stat, int k,
                                                 uint64_t budget) {
  uint64_t count = checked_count(model, n, budget);
  DistributionTable table;
  table.n = n;
  table.statistic = statistic_name(stat);
  table.key_names = stat_key_names(stat, k, set.size());
  if (n == 0) {
    TextStats empty;
    empty.occurrences_per_word.assign(static_cast<size_t>(set.size()), 0);
    table.probs[stat_key(empty, stat, k, set.size())] = 1;
    return table;
  }
  tally_range(model, set, n, stat, k, 0, count, table.probs);
  return table;
}

DistributionTable exhaustive_distribution(const TextModel& model,
                                          const ReducedWordSet& set, int n,
                                          Statistic stat, int k, uint64_t budget) {
  uint64_t count = checked_count(model, n, budget);
  if (n == 0 || count < 1024)
    return exhaustive_distribution_serial(model, set, n, stat, k, budget);

  DistributionTable table;
  table.n = n;
  table.statistic = statistic_name(stat);
  table.key_names = stat_key_names(stat, k, set.size());

  // Prefix partition: each chunk is the set of texts sharing one length-p
  // prefix. Exact-rational merging is associative, so the fan-in order does
  // not affect the result.
  const uint64_t a = static_cast<uint64_t>(model.alphabet().size());
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  uint64_t chunks = 1;
  int prefix = 0;
  while (prefix < n && chunks < static_cast<uint64_t>(threads) * 8) {
    chunks *= a;
    ++prefix;
  }
  const uint64_t chunk_size = count / chunks;

  std::vector<Table> partial(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int64_t c = 0; c < static_cast<int64_t>(chunks); ++c) {
    tally_range(model, set, n, stat, k, static_cast<uint64_t>(c) * chunk_size,
                (static_cast<uint64_t>(c) + 1) * chunk_size,
                partial[static_cast<size_t>(c)]);
  }
  for (const Table& part : partial)
    for (const auto& [key, p] : part) table.probs[key] += p;
  return table;
}

namespace {

// splitmix64 (Vigna); one independent stream per sample index.
struct SplitMix64 {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Cumulative letter tables: row 0 for the first position, row 1 + c for a
// previous letter c (identical rows under Bernoulli).
struct SamplerTables {
  int letters;
  std::vector<double> cumulative;  // (letters + 1) rows

  explicit SamplerTables(const TextModel& model)
      : letters(model.alphabet().size()),
        cumulative(static_cast<size_t>((letters + 1) * letters)) {
    for (int row = 0; row <= letters; ++row) {
      double acc = 0;
      for (int i = 0; i < letters; ++i) {
        if (model.is_bernoulli()) {
          acc += model.letter_prob(i).get_d();
        } else if (row == 0) {
          acc += model.initial_prob(i).get_d();
        } else {
          acc += model.transition_prob(row - 1, i).get_d();
        }
        cumulative[static_cast<size_t>(row * letters + i)] = acc;
      }
    }
  }

  int pick(int row, double r) const {
    for (int i = 0; i < letters; ++i)
      if (r < cumulative[static_cast<size_t>(row * letters + i)]) return i;
    return letters - 1;
  }
};

std::string sample_text(const TextModel& model, const SamplerTables& tables,
                        int n, SplitMix64& rng) {
  const Alphabet& alphabet = model.alphabet();
  std::string text(static_cast<size_t>(n), alphabet.letter(0));
  int row = 0;
  for (int pos = 0; pos < n; ++pos) {
    int pick = tables.pick(row, rng.next_unit());
    text[static_cast<size_t>(pos)] = alphabet.letter(pick);
    row = 1 + pick;
  }
  return text;
}

}  // namespace

MonteCarloResult monte_carlo(const TextModel& model, const ReducedWordSet& set,
                             int n, long samples, uint64_t seed, Statistic stat,
                             int k) {
  MonteCarloResult result;
  result.n = n;
  result.samples = samples;
  result.statistic = statistic_name(stat);

  std::map<std::vector<long>, long> counts;
  long double sum = 0, sum_sq = 0;
  const SamplerTables tables(model);
#ifdef _OPENMP
#pragma omp parallel
#endif
  {
    std::map<std::vector<long>, long> local;
    long double local_sum = 0, local_sq = 0;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long s = 0; s < samples; ++s) {
      SplitMix64 rng{seed ^ (0xD1B54A32D192ED03ull * static_cast<uint64_t>(s + 1))};
      std::string text = sample_text(model, tables, n, rng);
      TextStats stats = text_statistics(text, set);
      std::vector<long> key = stat_key(stats, stat, k, set.size());
      ++local[key];
      double value = static_cast<double>(key[0]);
      local_sum += value;
      local_sq += value * value;
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      for (const auto& [key, c] : local) counts[key] += c;
      sum += local_sum;
      sum_sq += local_sq;
    }
  }

  const double m = static_cast<double>(samples);
  for (const auto& [key, c] : counts) {
    double p = static_cast<double>(c) / m;
    result.freq[key] = p;
    result.stderr_[key] = std::sqrt(p * (1.0 - p) / m);
  }
  result.mean = static_cast<double>(sum / m);
  double variance = static_cast<double>(sum_sq / m) - result.mean * result.mean;
  result.mean_se = std::sqrt(std::max(0.0, variance) / m);
  return result;
}

}  // namespace clumpstat
