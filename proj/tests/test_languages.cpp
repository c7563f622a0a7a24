#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clumpstat/languages.hpp"
#include "clumpstat/oracle.hpp"
#include "test_support.hpp"

using namespace clumpstat;
using namespace test_support;

namespace {

const Alphabet kBinary("ab");

MultiPoly z_poly(std::vector<Rat> coeffs) {
  MultiPoly p;
  for (size_t i = 0; i < coeffs.size(); ++i)
    p += MultiPoly::monomial(coeffs[i], var::z, static_cast<unsigned>(i));
  return p;
}

// Membership in the minimal language of w: w.m ends with w and w.m has no
// occurrence that is both left- and right-embedded.
bool in_minimal_language(const std::string& w, const std::string& m) {
  if (m.empty()) return false;  // the decomposition takes at least one letter
  std::string glued = w + m;
  if (glued.compare(glued.size() - w.size(), w.size(), w) != 0) return false;
  // Forbidden: occurrences with letters on both sides (|x| > 0 and |y| > 0).
  for (size_t p = 1; p + w.size() < glued.size(); ++p)
    if (glued.compare(p, w.size(), w) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("single-word language polynomials") {
  TextModel uniform = TextModel::uniform(kBinary);

  auto aa = single_word_languages(uniform, "aa");
  CHECK(aa.C == z_poly({1, rat(1, 2)}));
  CHECK(aa.D == z_poly({1, rat(-1, 2), rat(-1, 4)}));
  CHECK(aa.K == z_poly({0, rat(1, 2)}));

  auto ab = single_word_languages(uniform, "ab");
  CHECK(ab.C == z_poly({1}));
  CHECK(ab.D == z_poly({1, -1, rat(1, 4)}));

  auto abaabaaba = single_word_languages(uniform, "abaabaaba");
  CHECK(abaabaaba.C ==
        z_poly({1, 0, 0, rat(1, 8), 0, 0, rat(1, 64), 0, rat(1, 256)}));
}

TEST_CASE("closed forms satisfy the language identities") {
  std::vector<TextModel> models = {
      TextModel::uniform(kBinary),
      TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)})};
  const RationalFunction one = RationalFunction::one();
  const RationalFunction z = RationalFunction::variable(var::z);
  for (const auto& model : models)
    for (const std::string w : {"aa", "aba", "abaabaaba", "bababa"}) {
      auto langs = single_word_languages(model, w);
      RationalFunction d{langs.D};
      RationalFunction weight{langs.word_weight};
      CHECK(langs.R * d == weight);
      CHECK(langs.U * d == one);
      CHECK(langs.N * d == RationalFunction(langs.C));
      CHECK(langs.M == one + (z - one) / d);
      // Total probability: N + R M* U = 1/(1-z).
      CHECK(langs.N + langs.R * (one / (one - langs.M)) * langs.U ==
            one / (one - z));
    }
}

TEST_CASE("occurrence GF against the worked values") {
  TextModel uniform = TextModel::uniform(kBinary);
  RationalFunction f = occurrence_gf(uniform, "aa");

  CHECK(f.set_one(var::x) ==
        RationalFunction::one() /
            (RationalFunction::one() - RationalFunction::variable(var::z)));

  auto dist = gf_distribution(f, 3, {var::x});
  CHECK(dist.at({0}) == rat(5, 8));
  CHECK(dist.at({1}) == rat(1, 4));
  CHECK(dist.at({2}) == rat(1, 8));
}

TEST_CASE("occurrence GF expectation is (n-|w|+1) pi_w") {
  std::vector<TextModel> models = {
      TextModel::uniform(kBinary),
      TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)})};
  for (const auto& model : models)
    for (const std::string w : {"aa", "aba", "bababa"}) {
      RationalFunction f = occurrence_gf(model, w);
      RationalFunction mean = f.derivative(var::x).set_one(var::x);
      SeriesTable series = series_coefficients(mean, 20);
      Rat pi = model.word_probability(w);
      for (int n = 0; n <= 20; ++n) {
        Rat expected = (static_cast<size_t>(n) >= w.size())
                           ? Rat(static_cast<long>(n - w.size() + 1)) * pi
                           : Rat(0);
        CHECK(series[n].as_constant() == expected);
      }
    }
}

TEST_CASE("occurrence distribution and second moment match the oracle") {
  std::vector<TextModel> models = {
      TextModel::uniform(kBinary),
      TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)})};
  for (const auto& model : models) {
    auto set = ReducedWordSet::validate({"aba"}, kBinary);
    RationalFunction f = occurrence_gf(model, "aba");
    // E(X^2) generating function per the moment rule d/dx x d/dx at x = 1.
    RationalFunction second =
        (RationalFunction::variable(var::x) * f.derivative(var::x))
            .derivative(var::x)
            .set_one(var::x);
    SeriesTable second_series = series_coefficients(second, 10);
    for (int n = 0; n <= 10; ++n) {
      auto oracle = exhaustive_distribution(model, set, n, Statistic::Occurrences);
      CHECK(gf_distribution(f, n, {var::x}) == oracle.probs);
      Rat moment = 0;
      for (const auto& [key, p] : oracle.probs)
        moment += Rat(key[0]) * Rat(key[0]) * p;
      CHECK(second_series[n].as_constant() == moment);
    }
  }
}

TEST_CASE("minimal language: series, positivity, and the K/M lemma") {
  TextModel uniform = TextModel::uniform(kBinary);
  for (const std::string w : {"aa", "aaaaa", "ababa"}) {
    auto langs = single_word_languages(uniform, w);
    SeriesTable m_series = series_coefficients(langs.M, 12);
    PrefixCode code = prefix_code(autocorrelation_set(w));

    for (int len = 0; len <= 12; ++len) {
      Rat weight = 0;
      for_each_text(kBinary, len, [&](const std::string& m) {
        if (!in_minimal_language(w, m)) return;
        weight += uniform.word_probability(m);
        bool in_code = false;
        for (const auto& k : code.words) in_code = in_code || k == m;
        // Lemma: every minimal word outside the prefix code ends with w.
        if (!in_code) {
          REQUIRE(m.size() >= w.size());
          CHECK(m.compare(m.size() - w.size(), w.size(), w) == 0);
        }
      });
      CHECK(m_series[len].as_constant() == weight);
      CHECK(m_series[len].as_constant() >= 0);
      CHECK(m_series[len].as_constant() <= 1);
    }
    // K is contained in M.
    for (const auto& k : code.words) CHECK(in_minimal_language(w, k));
  }
}

TEST_CASE("multi-word languages collapse to the single-word ones at r=1") {
  TextModel uniform = TextModel::uniform(kBinary);
  auto set = ReducedWordSet::validate({"aba"}, kBinary);
  auto multi = multi_word_languages(uniform, set);
  auto single = single_word_languages(uniform, "aba");
  CHECK(multi.M[0][0] == single.M);
  CHECK(multi.R[0] == single.R);
  CHECK(multi.U[0] == single.U);
  CHECK(multi.N == single.N);
}

TEST_CASE("multi-word occurrence GF: total probability and oracle equality") {
  std::vector<TextModel> models = {
      TextModel::uniform(kBinary),
      TextModel::bernoulli(kBinary, {rat(1, 3), rat(2, 3)})};
  for (const auto& model : models) {
    auto set = ReducedWordSet::validate({"aba", "bba"}, kBinary);
    RationalFunction f = multi_occurrence_gf(model, set);
    CHECK(f.set_one(var::xi(1)).set_one(var::xi(2)) ==
          RationalFunction::one() /
              (RationalFunction::one() - RationalFunction::variable(var::z)));
    for (int n = 0; n <= 10; ++n) {
      auto oracle = exhaustive_distribution(model, set, n, Statistic::Joint);
      auto joint = oracle.marginal({0, 1}, "occurrence pair");
      CHECK(gf_distribution(f, n, {var::xi(1), var::xi(2)}) == joint.probs);
    }
  }
}

TEST_CASE("marginal of the pair GF equals the single-word GF") {
  TextModel uniform = TextModel::uniform(kBinary);
  auto set = ReducedWordSet::validate({"aba", "bba"}, kBinary);
  RationalFunction pair = multi_occurrence_gf(uniform, set).set_one(var::xi(2));
  RationalFunction single = occurrence_gf(uniform, "aba");
  SeriesTable ps = series_coefficients(pair, 20);
  SeriesTable ss = series_coefficients(single, 20);
  for (int n = 0; n <= 20; ++n)
    CHECK(poly_distribution(ps[n], {var::xi(1)}) ==
          poly_distribution(ss[n], {var::x}));
}
