#include "clumpstat/languages.hpp"

#include "clumpstat/errors.hpp"

namespace clumpstat {

namespace {

void require_bernoulli(const TextModel& model) {
  if (!model.is_bernoulli())
    throw MathError(MathError::Kind::Internal,
                    "language decompositions are defined for Bernoulli models; "
                    "use the automaton engine for Markov sources");
}

MultiPoly word_weight_poly(const TextModel& model, const std::string& w) {
  return MultiPoly::monomial(model.word_probability(w), var::z,
                             static_cast<unsigned>(w.size()));
}

}  // namespace

SingleWordLanguages single_word_languages(const TextModel& model,
                                          const std::string& w) {
  require_bernoulli(model);
  if (w.size() < 2)
    throw ValidationError(ValidationError::Kind::MinLength,
                          "MinLength: word '" + w + "' has length < 2");
  SingleWordLanguages langs;
  langs.word = w;
  langs.pi = model.word_probability(w);
  langs.word_weight = word_weight_poly(model, w);
  CorrelationSet autocorr = autocorrelation_set(w);
  langs.C = correlation_polynomial(model, autocorr);
  langs.K = prefix_code_polynomial(model, prefix_code(autocorr));

  const MultiPoly one = MultiPoly::constant(1);
  const MultiPoly z = MultiPoly::variable(var::z);
  langs.D = langs.word_weight + (one - z) * langs.C;
  langs.R = RationalFunction(langs.word_weight, langs.D);
  langs.M = RationalFunction(one) + RationalFunction(z - one, langs.D);
  langs.U = RationalFunction(one, langs.D);
  langs.N = RationalFunction(langs.C, langs.D);
  return langs;
}

RationalFunction occurrence_gf(const TextModel& model, const std::string& w) {
  SingleWordLanguages langs = single_word_languages(model, w);
  // 1 / (1 - z + pi_w z^|w| (1-x) / (x + (1-x) C(z)))
  const RationalFunction one = RationalFunction::one();
  const RationalFunction z = RationalFunction::variable(var::z);
  const RationalFunction x = RationalFunction::variable(var::x);
  RationalFunction cz{langs.C};
  RationalFunction denom = one - z + RationalFunction(langs.word_weight) *
                                         (one - x) / (x + (one - x) * cz);
  return one / denom;
}

MultiWordLanguages multi_word_languages(const TextModel& model,
                                        const ReducedWordSet& set) {
  require_bernoulli(model);
  const int r = set.size();
  const size_t rs = static_cast<size_t>(r);
  MultiWordLanguages langs;
  langs.words = set.words();
  langs.pi.resize(rs);
  langs.word_weight.resize(rs);
  langs.C.assign(rs, std::vector<MultiPoly>(rs));
  for (int i = 0; i < r; ++i) {
    langs.pi[static_cast<size_t>(i)] = model.word_probability(set.word(i));
    langs.word_weight[static_cast<size_t>(i)] = word_weight_poly(model, set.word(i));
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      langs.C[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          correlation_polynomial(model, correlation_set(set.word(i), set.word(j)));

  const RationalFunction one = RationalFunction::one();
  const RationalFunction z = RationalFunction::variable(var::z);
  const RationalFunction zm1 = z - one;

  // (I - M)^{-1}_{ij} = pi_j z^|w_j| / (1-z) + C_ij(z); invert to get M.
  RFMatrix w(rs, std::vector<RationalFunction>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j)
      w[i][j] = RationalFunction(langs.word_weight[j],
                                 MultiPoly::constant(1) - MultiPoly::variable(var::z)) +
                RationalFunction(langs.C[i][j]);
  // W^{-1} = (I - (I - W))^{-1}.
  RFMatrix i_minus_w(rs, std::vector<RationalFunction>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j)
      i_minus_w[i][j] = (i == j ? one : RationalFunction()) - w[i][j];
  RFMatrix w_inv = rf_matrix_solve(i_minus_w, rf_identity(r));
  langs.M.assign(rs, std::vector<RationalFunction>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j)
      langs.M[i][j] = (i == j ? one : RationalFunction()) - w_inv[i][j];

  // R_j = (sum_i pi_i z^|w_i| M_ij - pi_j z^|w_j|) / (z - 1).
  langs.R.resize(rs);
  for (size_t j = 0; j < rs; ++j) {
    RationalFunction acc;
    for (size_t i = 0; i < rs; ++i)
      acc += RationalFunction(langs.word_weight[i]) * langs.M[i][j];
    langs.R[j] = (acc - RationalFunction(langs.word_weight[j])) / zm1;
  }

  // U_i = (sum_j M_ij - 1) / (z - 1).
  langs.U.resize(rs);
  for (size_t i = 0; i < rs; ++i) {
    RationalFunction acc;
    for (size_t j = 0; j < rs; ++j) acc += langs.M[i][j];
    langs.U[i] = (acc - one) / zm1;
  }

  // N pi_j z^|w_j| = R_j + sum_i R_i (C_ij - delta_ij); solved at j = 0 and
  // re-checked for every j below.
  auto n_rhs = [&](size_t j) {
    RationalFunction acc = langs.R[j];
    for (size_t i = 0; i < rs; ++i)
      acc += langs.R[i] *
             (RationalFunction(langs.C[i][j]) - (i == j ? one : RationalFunction()));
    return acc;
  };
  langs.N = n_rhs(0) / RationalFunction(langs.word_weight[0]);

  // Exact post-solve verification of the four defining identities.
  for (size_t i = 0; i < rs; ++i) {
    RationalFunction u_lhs = z * langs.U[i];
    RationalFunction u_rhs = langs.U[i] - one;
    for (size_t j = 0; j < rs; ++j) u_rhs += langs.M[i][j];
    if (!(u_lhs == u_rhs))
      throw MathError(MathError::Kind::Internal, "ultimate-language identity failed");
  }
  for (size_t j = 0; j < rs; ++j) {
    RationalFunction r_lhs = z * langs.R[j] - langs.R[j] +
                             RationalFunction(langs.word_weight[j]);
    RationalFunction r_rhs;
    for (size_t i = 0; i < rs; ++i)
      r_rhs += RationalFunction(langs.word_weight[i]) * langs.M[i][j];
    if (!(r_lhs == r_rhs))
      throw MathError(MathError::Kind::Internal, "right-language identity failed");
    if (!(langs.N * RationalFunction(langs.word_weight[j]) == n_rhs(j)))
      throw MathError(MathError::Kind::Internal, "not-language identity failed");
  }
  return langs;
}

RationalFunction multi_occurrence_gf(const MultiWordLanguages& langs) {
  const size_t rs = langs.words.size();
  // F = N + (x_1 R_1, ..) (I - [x_j M_ij])^{-1} (U_1; ..).
  RFMatrix marked(rs, std::vector<RationalFunction>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j)
      marked[i][j] =
          RationalFunction::variable(var::xi(static_cast<int>(j) + 1)) * langs.M[i][j];
  RFMatrix rhs(rs, std::vector<RationalFunction>(1));
  for (size_t i = 0; i < rs; ++i) rhs[i][0] = langs.U[i];
  RFMatrix solved = rf_matrix_solve(marked, rhs);
  RationalFunction total = langs.N;
  for (size_t i = 0; i < rs; ++i)
    total += RationalFunction::variable(var::xi(static_cast<int>(i) + 1)) *
             langs.R[i] * solved[i][0];
  return total;
}

RationalFunction multi_occurrence_gf(const TextModel& model,
                                     const ReducedWordSet& set) {
  return multi_occurrence_gf(multi_word_languages(model, set));
}

}  // namespace clumpstat
