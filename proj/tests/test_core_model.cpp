#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "clumpstat/errors.hpp"
#include "clumpstat/model.hpp"
#include "clumpstat/words.hpp"

using namespace clumpstat;

namespace {
const Alphabet kBinary("ab");
}

TEST_CASE("word probability, Bernoulli") {
  TextModel uniform = TextModel::uniform(kBinary);
  CHECK(uniform.word_probability("aa") == rat(1, 4));

  TextModel skew = TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)});
  CHECK(skew.word_probability("aba") == rat(2, 27));

  CHECK_THROWS_AS(uniform.word_probability("ac"), ValidationError);
}

TEST_CASE("word probability, Markov1") {
  TextModel chain = TextModel::markov1(
      kBinary, {rat(1, 2), rat(1, 2)},
      {{rat(1), rat(0)}, {rat(1, 2), rat(1, 2)}});
  CHECK(chain.word_probability("aaa") == rat(1, 2));
  CHECK(chain.word_probability("ab") == 0);
}

TEST_CASE("Bernoulli probability is multiplicative over concatenation") {
  TextModel skew = TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)});
  std::vector<std::string> words = {"a", "ab", "bba", "abab"};
  for (const auto& w : words)
    for (const auto& v : words)
      CHECK(skew.word_probability(w + v) ==
            skew.word_probability(w) * skew.word_probability(v));
}

TEST_CASE("validate_reduced_set") {
  CHECK_NOTHROW(ReducedWordSet::validate({"aba", "bba"}, kBinary));

  CHECK_THROWS_WITH_AS(ReducedWordSet::validate({"aba", "ab"}, kBinary),
                       "NotReduced: 'ab' is a factor of 'aba'", ValidationError);
  CHECK_THROWS_AS(ReducedWordSet::validate({"aa", "a"}, kBinary), ValidationError);
  CHECK_THROWS_AS(ReducedWordSet::validate({"aa", "aa"}, kBinary), ValidationError);

  // Order-insensitive verdicts.
  std::vector<std::string> words = {"aba", "bba", "aabb"};
  std::sort(words.begin(), words.end());
  do {
    CHECK_NOTHROW(ReducedWordSet::validate(words, kBinary));
  } while (std::next_permutation(words.begin(), words.end()));
  std::vector<std::string> bad = {"aba", "ab", "bb"};
  std::sort(bad.begin(), bad.end());
  do {
    CHECK_THROWS_AS(ReducedWordSet::validate(bad, kBinary), ValidationError);
  } while (std::next_permutation(bad.begin(), bad.end()));
}

TEST_CASE("enumerate_texts order and count") {
  CHECK(enumerate_texts(kBinary, 0) == std::vector<std::string>{""});
  CHECK(enumerate_texts(kBinary, 1) == std::vector<std::string>{"a", "b"});
  CHECK(enumerate_texts(kBinary, 2) ==
        std::vector<std::string>{"aa", "ab", "ba", "bb"});

  auto texts = enumerate_texts(kBinary, 5);
  CHECK(texts.size() == 32);
  CHECK(std::is_sorted(texts.begin(), texts.end()));
  for (size_t i = 0; i < texts.size(); ++i)
    CHECK(text_at(kBinary, 5, i) == texts[i]);
}

TEST_CASE("total probability of all texts is exactly 1") {
  std::vector<TextModel> models = {
      TextModel::uniform(kBinary),
      TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)}),
      TextModel::markov1(kBinary, {rat(1, 4), rat(3, 4)},
                         {{rat(3, 4), rat(1, 4)}, {rat(1, 4), rat(3, 4)}}),
  };
  for (const auto& model : models)
    for (int n : {0, 1, 2, 5, 12}) {
      Rat sum = 0;
      for_each_text(kBinary, n,
                    [&](const std::string& t) { sum += model.word_probability(t); });
      CHECK(sum == 1);
    }
}

TEST_CASE("model file parsing") {
  std::istringstream bernoulli(
      "# test model\n"
      "alphabet: ab\n"
      "model: bernoulli\n"
      "p a = 1/3\n"
      "p b = 2/3\n");
  TextModel m = parse_model_file(bernoulli);
  CHECK(m.is_bernoulli());
  CHECK(m.letter_prob('a') == rat(1, 3));
  CHECK(m.max_letter_prob() == rat(2, 3));

  std::istringstream markov(
      "alphabet: ab\n"
      "model: markov1\n"
      "init a = 1/2\n"
      "init b = 1/2\n"
      "trans a a = 3/4\n"
      "trans a b = 1/4\n"
      "trans b a = 1/4\n"
      "trans b b = 3/4\n");
  TextModel chain = parse_model_file(markov);
  CHECK(chain.kind() == ModelKind::Markov1);
  CHECK(chain.transition_prob(0, 0) == rat(3, 4));

  std::istringstream bad_sum(
      "alphabet: ab\nmodel: bernoulli\np a = 1/3\np b = 1/3\n");
  CHECK_THROWS_AS(parse_model_file(bad_sum), ValidationError);

  std::istringstream bad_syntax("alphabet: ab\nmodel: bernoulli\np a 1/3 extra\n");
  try {
    parse_model_file(bad_syntax);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}
