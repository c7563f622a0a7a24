#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clumpstat/errors.hpp"
#include "clumpstat/oracle.hpp"

using namespace clumpstat;

namespace {

const Alphabet kBinary("ab");
// The running example text: clumps bbababababa / bbaba / aba.
const std::string kSectionText = "bbbabababababbbbabaababb";

ReducedWordSet make_set(std::vector<std::string> words) {
  return ReducedWordSet::validate(std::move(words), kBinary);
}

}  // namespace

TEST_CASE("find_occurrences") {
  auto set = make_set({"aba", "bba"});
  auto occs = find_occurrences("bbababababa", set);
  // bba at 1 and aba at 3, 5, 7, 9.
  REQUIRE(occs.size() == 5);
  CHECK(occs[0].word == 1);
  CHECK(occs[0].start == 1);
  CHECK(occs[1].word == 0);
  CHECK(occs[1].start == 3);
  CHECK(occs[4].start == 9);

  CHECK(find_occurrences("bbbb", set).empty());

  auto runs = find_occurrences("aaaa", make_set({"aa"}));
  REQUIRE(runs.size() == 3);
  CHECK(runs[0].start == 1);
  CHECK(runs[1].start == 2);
  CHECK(runs[2].start == 3);
}

TEST_CASE("clump segmentation of the running example") {
  auto set = make_set({"aba", "bba"});
  auto clumps = detect_clumps(kSectionText, set);
  REQUIRE(clumps.size() == 3);
  CHECK(clumps[0].size() == 11);
  CHECK(clumps[1].size() == 5);
  CHECK(clumps[2].size() == 3);
  CHECK(clumps[0].start == 2);
  // bbaba and the following aba touch but do not overlap: distinct clumps.
  CHECK(clumps[1].end + 1 == clumps[2].start);
}

TEST_CASE("overlapping pair forms one clump") {
  auto set = make_set({"aa"});
  auto clumps = detect_clumps("aaa", set);
  REQUIRE(clumps.size() == 1);
  CHECK(clumps[0].occurrences.size() == 2);
  CHECK(clumps[0].size() == 3);
}

TEST_CASE("chaining equals the covering definition, exhaustively") {
  std::vector<ReducedWordSet> sets = {make_set({"aa"}), make_set({"aba"}),
                                      make_set({"aba", "bba"}),
                                      make_set({"aabaa", "baab"})};
  for (const auto& set : sets) {
    for (int n = 0; n <= 12; ++n) {
      for_each_text(kBinary, n, [&](const std::string& text) {
        auto chained = detect_clumps(text, set);
        auto direct = clumps_by_definition(text, set);
        REQUIRE(chained.size() == direct.size());
        for (size_t i = 0; i < chained.size(); ++i) {
          CHECK(chained[i].start == direct[i].start);
          CHECK(chained[i].end == direct[i].end);
          CHECK(chained[i].occurrences.size() == direct[i].occurrences.size());
        }
      });
    }
  }
}

TEST_CASE("clump structure invariants on sampled statistics") {
  auto set = make_set({"aba", "bba"});
  for (int n = 0; n <= 11; ++n) {
    for_each_text(kBinary, n, [&](const std::string& text) {
      auto occs = find_occurrences(text, set);
      auto clumps = detect_clumps(text, set);
      size_t occ_in_clumps = 0;
      int prev_end = 0;
      for (const auto& clump : clumps) {
        occ_in_clumps += clump.occurrences.size();
        CHECK(clump.start > prev_end);  // spans disjoint, never sharing a position
        prev_end = clump.end;
      }
      CHECK(occ_in_clumps == occs.size());
      TextStats stats = text_statistics(text, set);
      CHECK(stats.coverage <= n);
      CHECK(stats.clumps <= stats.occurrences);
    });
  }
}

TEST_CASE("exhaustive distributions from the worked examples") {
  TextModel uniform = TextModel::uniform(kBinary);
  auto aa = make_set({"aa"});
  auto table = exhaustive_distribution(uniform, aa, 3, Statistic::ClumpCount);
  REQUIRE(table.probs.size() == 2);
  CHECK(table.probs.at({0}) == rat(5, 8));
  CHECK(table.probs.at({1}) == rat(3, 8));

  auto aaa = make_set({"aaa"});
  auto table3 = exhaustive_distribution(uniform, aaa, 3, Statistic::ClumpCount);
  CHECK(table3.probs.at({0}) == rat(7, 8));
  CHECK(table3.probs.at({1}) == rat(1, 8));

  auto empty = exhaustive_distribution(uniform, aa, 0, Statistic::ClumpCount);
  REQUIRE(empty.probs.size() == 1);
  CHECK(empty.probs.at({0}) == 1);
}

TEST_CASE("tables sum to one and parallel equals serial") {
  std::vector<TextModel> models = {
      TextModel::uniform(kBinary),
      TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)}),
      TextModel::markov1(kBinary, {rat(1, 2), rat(1, 2)},
                         {{rat(3, 4), rat(1, 4)}, {rat(1, 4), rat(3, 4)}}),
  };
  auto set = make_set({"aba", "bba"});
  for (const auto& model : models)
    for (int n : {0, 1, 5, 9, 11}) {
      auto parallel = exhaustive_distribution(model, set, n, Statistic::Joint);
      auto serial = exhaustive_distribution_serial(model, set, n, Statistic::Joint);
      CHECK(parallel.total() == 1);
      CHECK(parallel == serial);
    }
}

TEST_CASE("budget is enforced") {
  auto set = make_set({"aa"});
  CHECK_THROWS_AS(exhaustive_distribution(TextModel::uniform(kBinary), set, 30,
                                          Statistic::ClumpCount, 0, 1 << 20),
                  BudgetError);
}

TEST_CASE("monte carlo is deterministic and matches the exact tail") {
  TextModel uniform = TextModel::uniform(kBinary);
  auto set = make_set({"aa"});
  auto mc1 = monte_carlo(uniform, set, 3, 100000, 42, Statistic::ClumpCount);
  auto mc2 = monte_carlo(uniform, set, 3, 100000, 42, Statistic::ClumpCount);
  CHECK(mc1.freq == mc2.freq);
  CHECK(mc1.mean == mc2.mean);

  double exact = 3.0 / 8.0;
  double freq = mc1.freq.at({1});
  double se = mc1.stderr_.at({1});
  CHECK(std::abs(freq - exact) <= 4 * se);
}
