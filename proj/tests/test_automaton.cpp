#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clumpstat/automaton.hpp"
#include "clumpstat/clump_gf.hpp"
#include "clumpstat/errors.hpp"
#include "clumpstat/oracle.hpp"
#include "test_support.hpp"

using namespace clumpstat;
using namespace test_support;

namespace {

const Alphabet kBinary("ab");

ReducedWordSet make_set(std::vector<std::string> words) {
  return ReducedWordSet::validate(std::move(words), kBinary);
}

int find_state(const ClumpAutomaton& a, const std::string& word) {
  for (int s = 0; s < a.state_count(); ++s)
    if (a.state_word(s) == word) return s;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("X sets from the worked examples") {
  CHECK(build_x_set(make_set({"bababa"})).words ==
        std::vector<std::string>{"bababa", "babababa", "bababababa"});
  CHECK(build_x_set(make_set({"aabaa", "baab"})).words ==
        std::vector<std::string>{"baab", "aabaa", "aabaab", "baabaa", "baabaab",
                                 "aabaabaa", "aabaaabaa"});
  CHECK(build_x_set(make_set({"ab"})).words == std::vector<std::string>{"ab"});
}

TEST_CASE("automaton construction: state counts, marks, finals") {
  ClumpAutomaton one = build_clump_automaton(make_set({"bababa"}));
  CHECK(one.state_count() == 11);
  {
    const StateMarks& first = one.marks(find_state(one, "bababa"));
    CHECK(first.occurrences == std::vector<int>{0});
    CHECK(first.new_clump);
    CHECK(first.cover == 6);
    const StateMarks& ext = one.marks(find_state(one, "babababa"));
    CHECK(ext.occurrences == std::vector<int>{0});
    CHECK_FALSE(ext.new_clump);
    CHECK(ext.cover == 2);
    int finals = 0;
    for (int s = 0; s < one.state_count(); ++s) finals += one.is_final(s);
    CHECK(finals == 1);
  }

  ClumpAutomaton two = build_clump_automaton(make_set({"aabaa", "baab"}));
  CHECK(two.state_count() == 20);
  {
    const StateMarks& w1 = two.marks(find_state(two, "aabaa"));
    CHECK(w1.occurrences == std::vector<int>{0});
    CHECK(w1.new_clump);
    CHECK(w1.cover == 5);
    const StateMarks& w2 = two.marks(find_state(two, "baab"));
    CHECK(w2.occurrences == std::vector<int>{1});
    CHECK(w2.new_clump);
    CHECK(w2.cover == 4);
    int finals = 0;
    for (int s = 0; s < two.state_count(); ++s) finals += two.is_final(s);
    CHECK(finals == 2);
  }
}

TEST_CASE("final states are the prefix-minimal elements of X") {
  for (auto words : std::vector<std::vector<std::string>>{
           {"aa"}, {"bababa"}, {"abaabaaba"}, {"aba", "bba"}, {"aabaa", "baab"}}) {
    auto set = make_set(words);
    XSet x = build_x_set(set);
    ClumpAutomaton a = build_clump_automaton(set);
    for (int s = 0; s < a.state_count(); ++s) {
      if (!a.is_final(s)) continue;
      // Minimal in X: in X with no proper prefix in X.
      const std::string& w = a.state_word(s);
      bool minimal = std::find(x.words.begin(), x.words.end(), w) != x.words.end();
      for (const auto& other : x.words)
        if (other.size() < w.size() && w.compare(0, other.size(), other) == 0)
          minimal = false;
      CHECK(minimal);
    }
    // For reduced sets those are exactly the base words.
    int finals = 0;
    for (int s = 0; s < a.state_count(); ++s) finals += a.is_final(s);
    CHECK(finals == set.size());
  }
}

TEST_CASE("transducer reproduces the running example and the oracle") {
  auto set = make_set({"aba", "bba"});
  ClumpAutomaton a = build_clump_automaton(set);
  TransducerTally tally = run_transducer(a, "bbbabababababbbbabaababb");
  CHECK(tally.clumps == 3);
  CHECK(tally.coverage == 11 + 5 + 3);
  CHECK(tally.occurrences_per_word == std::vector<long>{6, 2});

  TransducerTally empty = run_transducer(a, "");
  CHECK(empty.clumps == 0);
  CHECK(empty.coverage == 0);
  CHECK(empty.occurrences == 0);

  for (int n = 0; n <= 10; ++n)
    for_each_text(kBinary, n, [&](const std::string& text) {
      TextStats stats = text_statistics(text, set);
      TransducerTally run = run_transducer(a, text);
      REQUIRE(run.occurrences_per_word == stats.occurrences_per_word);
      REQUIRE(run.clumps == stats.clumps);
      REQUIRE(run.coverage == stats.coverage);
    });
}

TEST_CASE("determinism and completeness of the transition function") {
  ClumpAutomaton a = build_clump_automaton(make_set({"abaabaaba"}));
  CHECK(a.state_count() == 24);
  for (int s = 0; s < a.state_count(); ++s)
    for (char c : {'a', 'b'}) {
      int q = a.next(s, c);
      CHECK(q >= 0);
      CHECK(q < a.state_count());
    }
  CHECK_THROWS_AS(a.next(0, 'z'), ValidationError);
}

TEST_CASE("automaton GF: total probability under both model kinds") {
  auto set = make_set({"aba", "bba"});
  ClumpAutomaton a = build_clump_automaton(set);
  RationalFunction geometric(MultiPoly::constant(1),
                             MultiPoly::constant(1) - MultiPoly::variable(var::z));
  CHECK(automaton_gf(a, TextModel::uniform(kBinary), MarkSet::none()) == geometric);

  TextModel chain = TextModel::markov1(
      kBinary, {rat(1, 2), rat(1, 2)},
      {{rat(3, 4), rat(1, 4)}, {rat(1, 4), rat(3, 4)}});
  CHECK(automaton_gf(a, chain, MarkSet::none()) == geometric);
}

TEST_CASE("automaton GF equals the formal-language engines") {
  std::vector<TextModel> models = {
      TextModel::uniform(kBinary),
      TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)})};
  for (const auto& model : models)
    for (const std::string w : {"aa", "aba", "bababa"}) {
      auto set = make_set({w});
      ClumpAutomaton a = build_clump_automaton(set);
      // Clump-count marginal vs the closed form of the clump-count GF.
      RationalFunction au = automaton_gf(a, model, MarkSet::only_clumps());
      CHECK(au == clump_count_gf(model, w));
      // Occurrence marginal vs the direct occurrence-counting function.
      RationalFunction ax = automaton_gf(a, model, MarkSet::only_occurrences());
      CHECK(ax == occurrence_gf(model, w));
      // Coverage marginal vs the coverage view of the joint.
      RationalFunction at = automaton_gf(a, model, MarkSet::only_coverage());
      CHECK(at == clump_text_gf(model, w).coverage_view());
      // Full joint vs the clump decomposition.
      CHECK(automaton_gf(a, model) == clump_text_gf(model, w).joint());
    }
}

TEST_CASE("automaton series equals the closed form") {
  TextModel uniform = TextModel::uniform(kBinary);
  auto set = make_set({"aba", "bba"});
  ClumpAutomaton a = build_clump_automaton(set);
  SeriesTable series = automaton_series(a, uniform, 12);
  SeriesTable closed = series_coefficients(automaton_gf(a, uniform), 12);
  for (int n = 0; n <= 12; ++n) CHECK(series[n] == closed[n]);
}

TEST_CASE("automaton joint equals the oracle, including Markov") {
  std::vector<TextModel> models = {
      TextModel::uniform(kBinary),
      TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)}),
      TextModel::markov1(kBinary, {rat(1, 2), rat(1, 2)},
                         {{rat(3, 4), rat(1, 4)}, {rat(1, 4), rat(3, 4)}})};
  for (const auto& model : models)
    for (auto words : std::vector<std::vector<std::string>>{{"aa"}, {"aabaa", "baab"}}) {
      auto set = make_set(words);
      ClumpAutomaton a = build_clump_automaton(set);
      SeriesTable series = automaton_series(a, model, 10);
      std::vector<int> vars;
      if (set.size() == 1) {
        vars = {var::x, var::u, var::t};
      } else {
        vars = {var::xi(1), var::xi(2), var::u, var::t};
      }
      std::vector<int> keep(vars.size());
      for (size_t i = 0; i < vars.size(); ++i) keep[i] = static_cast<int>(i);
      for (int n = 0; n <= 10; ++n) {
        auto oracle = exhaustive_distribution(model, set, n, Statistic::Joint)
                          .marginal(keep, "joint");
        CHECK(poly_distribution(series[n], vars) == oracle.probs);
      }
    }
}

TEST_CASE("accepted language is the first-occurrence language") {
  std::vector<TextModel> models = {
      TextModel::uniform(kBinary),
      TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)})};
  for (const auto& model : models) {
    for (const std::string w : {"ab", "aa", "bababa"}) {
      ClumpAutomaton a = build_clump_automaton(make_set({w}));
      RationalFunction acc = accepted_language_gf(a, model);
      CHECK(acc == single_word_languages(model, w).R);
      CHECK(series_coefficients(acc, 0)[0].as_constant() == 0);
    }
    // Sets: the first occurrence belongs to a unique word, so the accepted
    // function splits as the sum of the right languages.
    auto set = make_set({"aba", "bba"});
    ClumpAutomaton a = build_clump_automaton(set);
    auto langs = multi_word_languages(model, set);
    CHECK(accepted_language_gf(a, model) == langs.R[0] + langs.R[1]);
  }
  // Explicit closed form for ab: z^2/4 / (1 - z + z^2/4).
  TextModel uniform = TextModel::uniform(kBinary);
  ClumpAutomaton ab = build_clump_automaton(make_set({"ab"}));
  MultiPoly d = MultiPoly::constant(1) - MultiPoly::variable(var::z) +
                MultiPoly::monomial(rat(1, 4), var::z, 2);
  CHECK(accepted_language_gf(ab, uniform) ==
        RationalFunction(MultiPoly::monomial(rat(1, 4), var::z, 2), d));
}

TEST_CASE("DOT export: deterministic, annotated, golden") {
  ClumpAutomaton one = build_clump_automaton(make_set({"bababa"}));
  std::string dot = export_dot(one);
  CHECK(dot == export_dot(one));
  CHECK(std::count(dot.begin(), dot.end(), '\n') ==
        4 + one.state_count() + 2 * one.state_count());
  size_t doubled = 0, pos = 0;
  while ((pos = dot.find("peripheries=2", pos)) != std::string::npos) {
    ++doubled;
    pos += 1;
  }
  CHECK(doubled == 1);
  CHECK(dot.find("[label=\"a [x t u^6]\"]") != std::string::npos);

  ClumpAutomaton two = build_clump_automaton(make_set({"aabaa", "baab"}));
  std::string dot2 = export_dot(two);
  doubled = 0;
  pos = 0;
  while ((pos = dot2.find("peripheries=2", pos)) != std::string::npos) {
    ++doubled;
    pos += 1;
  }
  CHECK(doubled == 2);
  CHECK(dot2.find("[x1 t u^5]") != std::string::npos);
  CHECK(dot2.find("[x2 t u^4]") != std::string::npos);

  std::string golden =
      "digraph clump_automaton {\n"
      "  rankdir=LR;\n"
      "  node [shape=oval];\n"
      "  n0 [label=\"<eps>\"];\n"
      "  n1 [label=\"a\"];\n"
      "  n2 [label=\"ab+\", peripheries=2];\n"
      "  n0 -> n1 [label=\"a\"];\n"
      "  n0 -> n0 [label=\"b\"];\n"
      "  n1 -> n1 [label=\"a\"];\n"
      "  n1 -> n2 [label=\"b [x t u^2]\"];\n"
      "  n2 -> n1 [label=\"a\"];\n"
      "  n2 -> n0 [label=\"b\"];\n"
      "}\n";
  CHECK(export_dot(build_clump_automaton(make_set({"ab"}))) == golden);
}
