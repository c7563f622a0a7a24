#include "clumpstat/clump_gf.hpp"

#include "clumpstat/correlation.hpp"
#include "clumpstat/errors.hpp"

namespace clumpstat {

namespace {

// z -> z*t: the coverage shadow applied inside clump kernels.
MultiPoly shift_zt(const MultiPoly& p) {
  return p.substitute(var::z,
                      MultiPoly::variable(var::z) * MultiPoly::variable(var::t));
}

MultiPoly zt_power(const Rat& coeff, unsigned n) {
  return MultiPoly::from_term(coeff, Monomial{}) *
         MultiPoly::variable(var::z, n) * MultiPoly::variable(var::t, n);
}

const MultiPoly kOne = MultiPoly::constant(1);

}  // namespace

ClumpKernel clump_kernel(const TextModel& model, const std::string& w) {
  ClumpKernel kernel;
  kernel.word = w;
  kernel.pi = model.word_probability(w);
  kernel.K = prefix_code_polynomial(model, prefix_code(autocorrelation_set(w)));
  MultiPoly x = MultiPoly::variable(var::x);
  MultiPoly num = x * zt_power(kernel.pi, static_cast<unsigned>(w.size()));
  MultiPoly den = kOne - x * shift_zt(kernel.K);
  kernel.kernel = RationalFunction(std::move(num), std::move(den));
  return kernel;
}

int ClumpStatisticsGF::occ_var(int i) const {
  return r_ == 1 ? var::x : var::xi(i + 1);
}

RationalFunction ClumpStatisticsGF::assemble(const PolyMatrix& g_hat,
                                             const MultiPoly& g_den,
                                             const MultiPoly& mark) const {
  const size_t rs = static_cast<size_t>(r_);
  // With H = h_hat/detP and G = g_hat/g_den:
  //   (I - H mark G)^{-1} = Q (Q I - mark h_hat g_hat)^{-1},  Q = detP g_den,
  // so with y = (Q I - mark h_hat g_hat)^{-1} u_hat (common denominator
  // det A) everything stays polynomial until the final quotient:
  //   F = [n_hat det A + mark rho_hat^T g_hat y_num] / (detP det A).
  MultiPoly q = det_p_ * g_den;
  PolyMatrix a = poly_matrix_mul(h_hat_, g_hat);
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j) {
      a[i][j] = -(mark * a[i][j]);
      if (i == j) a[i][j] += q;
    }
  PolyMatrix rhs(rs, std::vector<MultiPoly>(1));
  for (size_t i = 0; i < rs; ++i) rhs[i][0] = u_hat_[i];
  PolyLinearSolution y = poly_matrix_solve_common(std::move(a), std::move(rhs));

  MultiPoly num = n_hat_ * y.den;
  for (size_t i = 0; i < rs; ++i) {
    MultiPoly inner;
    for (size_t j = 0; j < rs; ++j) inner += g_hat[i][j] * y.num[j][0];
    num += mark * rho_hat_[i] * inner;
  }
  return RationalFunction(std::move(num), det_p_ * y.den);
}

// Builds the common-denominator language frame shared by the joint and the
// k-clump views; occurrence marking and the kernel matrices are added by
// the callers.
ClumpStatisticsGF ClumpStatisticsGF::build_frame(const TextModel& model,
                                                 const std::vector<std::string>& words,
                                                 const PolyMatrix& kmat) {
  ClumpStatisticsGF gf;
  const int r = static_cast<int>(words.size());
  const size_t rs = static_cast<size_t>(r);
  gf.r_ = r;
  gf.kmat_ = kmat;
  gf.ww_.resize(rs);
  gf.cmat_.assign(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i) {
    gf.ww_[i] = MultiPoly::monomial(model.word_probability(words[i]), var::z,
                                    static_cast<unsigned>(words[i].size()));
    for (size_t j = 0; j < rs; ++j)
      gf.cmat_[i][j] =
          correlation_polynomial(model, correlation_set(words[i], words[j]));
  }

  const MultiPoly z = MultiPoly::variable(var::z);
  const MultiPoly zm1 = z - kOne;
  PolyMatrix p(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j)
      p[i][j] = gf.ww_[j] + (kOne - z) * gf.cmat_[i][j];
  gf.det_p_ = poly_determinant(p);
  PolyMatrix adj = poly_adjugate(p);

  // M_ij = delta_ij - (1-z) (P^{-1})_ij, all over det P.
  gf.m_hat_.assign(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j) {
      gf.m_hat_[i][j] = (z - kOne) * adj[i][j];
      if (i == j) gf.m_hat_[i][j] += gf.det_p_;
    }

  // R_j (z-1) = sum_i ww_i M_ij - ww_j; rho strips the trailing word.
  std::vector<MultiPoly> r_hat(rs);
  gf.rho_hat_.resize(rs);
  for (size_t j = 0; j < rs; ++j) {
    MultiPoly acc;
    for (size_t i = 0; i < rs; ++i) acc += gf.ww_[i] * gf.m_hat_[i][j];
    r_hat[j] = (acc - gf.ww_[j] * gf.det_p_).exact_div(zm1);
    gf.rho_hat_[j] = r_hat[j].exact_div(gf.ww_[j]);
  }

  // U_i (z-1) = sum_j M_ij - 1.
  gf.u_hat_.resize(rs);
  for (size_t i = 0; i < rs; ++i) {
    MultiPoly acc;
    for (size_t j = 0; j < rs; ++j) acc += gf.m_hat_[i][j];
    gf.u_hat_[i] = (acc - gf.det_p_).exact_div(zm1);
  }

  // N ww_j = R_j + sum_i R_i (C_ij - delta_ij), checked for every column.
  gf.n_hat_ = MultiPoly();
  for (size_t j = 0; j < rs; ++j) {
    MultiPoly acc = r_hat[j];
    for (size_t i = 0; i < rs; ++i) {
      acc += r_hat[i] * gf.cmat_[i][j];
      if (i == j) acc -= r_hat[i];
    }
    MultiPoly candidate = acc.exact_div(gf.ww_[j]);
    if (j == 0) {
      gf.n_hat_ = std::move(candidate);
    } else if (!(candidate == gf.n_hat_)) {
      throw MathError(MathError::Kind::Internal, "not-language columns disagree");
    }
  }

  // H_ij = (M_ij - K_ij) w_j^-: the between-clump separators.
  gf.h_hat_.assign(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j)
      gf.h_hat_[i][j] =
          (gf.m_hat_[i][j] - kmat[i][j] * gf.det_p_).exact_div(gf.ww_[j]);
  return gf;
}

// Marked kernel star over one explicit denominator: G_ij = opener_i *
// adj(I - Kz)_ij / det(I - Kz), with the extension step into w_j carrying
// occ_j and the coverage shadow z -> zt when the respective marks are on.
void ClumpStatisticsGF::kernel_star(const PolyMatrix& kmat, bool occ_marks,
                                    bool cover_marks, PolyMatrix& g_hat,
                                    MultiPoly& g_den) const {
  const ClumpStatisticsGF& gf = *this;
  const size_t rs = kmat.size();
  PolyMatrix id_minus_k(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j) {
      MultiPoly step = cover_marks ? shift_zt(kmat[i][j]) : kmat[i][j];
      if (occ_marks)
        step *= MultiPoly::variable(gf.occ_var(static_cast<int>(j)));
      id_minus_k[i][j] = -step;
      if (i == j) id_minus_k[i][j] += kOne;
    }
  g_den = poly_determinant(id_minus_k);
  PolyMatrix adj = poly_adjugate(id_minus_k);
  g_hat.assign(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i) {
    Rat pi = gf.ww_[i].terms().begin()->second;
    unsigned len = gf.ww_[i].terms().begin()->first.exp[var::z];
    MultiPoly opener = cover_marks ? zt_power(pi, len) : gf.ww_[i];
    if (occ_marks)
      opener *= MultiPoly::variable(gf.occ_var(static_cast<int>(i)));
    for (size_t j = 0; j < rs; ++j) g_hat[i][j] = opener * adj[i][j];
  }
}

ClumpStatisticsGF ClumpStatisticsGF::build(const TextModel& model,
                                           const std::vector<std::string>& words,
                                           const PolyMatrix& kmat) {
  ClumpStatisticsGF gf = build_frame(model, words, kmat);
  PolyMatrix g_hat;
  MultiPoly g_den;
  gf.kernel_star(kmat, true, true, g_hat, g_den);
  gf.joint_ = gf.assemble(g_hat, g_den, MultiPoly::variable(var::u));
  return gf;
}

RationalFunction ClumpStatisticsGF::clump_count_view() const {
  RationalFunction g = joint_.set_one(var::t);
  for (int i = 0; i < r_; ++i) g = g.set_one(occ_var(i));
  return g;
}

RationalFunction ClumpStatisticsGF::occurrence_view() const {
  RationalFunction g = joint_.set_one(var::t).set_one(var::u);
  if (r_ > 1)
    for (int i = 0; i < r_; ++i)
      g = g.substitute(occ_var(i), MultiPoly::variable(var::x));
  return g;
}

RationalFunction ClumpStatisticsGF::joint_occurrence_view() const {
  return joint_.set_one(var::t).set_one(var::u);
}

RationalFunction ClumpStatisticsGF::coverage_view() const {
  RationalFunction g = joint_.set_one(var::u);
  for (int i = 0; i < r_; ++i) g = g.set_one(occ_var(i));
  return g;
}

RationalFunction ClumpStatisticsGF::kclump_view(int k) const {
  return kclump_joint_view(k).set_one(var::u).set_one(var::t);
}

RationalFunction ClumpStatisticsGF::kclump_joint_view(int k) const {
  if (k < 1) throw MathError(MathError::Kind::Internal, "k-clumps need k >= 1");
  const size_t rs = static_cast<size_t>(r_);
  const unsigned ku = static_cast<unsigned>(k);
  // Coverage-shadowed kernel star S(zt) and the k-step power K(zt)^{k-1};
  // occurrences stay unmarked in this view.
  PolyMatrix star_hat;
  MultiPoly star_den;
  kernel_star(kmat_, false, true, star_hat, star_den);
  PolyMatrix kt(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j) kt[i][j] = shift_zt(kmat_[i][j]);
  PolyMatrix kpow(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i) kpow[i][i] = kOne;
  for (unsigned step = 1; step < ku; ++step) kpow = poly_matrix_mul(kpow, kt);
  // Selector: w_i(zt) (S_ij + (v-1) K^{k-1}_ij) with u marking every clump.
  MultiPoly vm1 = MultiPoly::variable(var::v) - kOne;
  PolyMatrix g_hat(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i) {
    Rat pi = ww_[i].terms().begin()->second;
    unsigned len = ww_[i].terms().begin()->first.exp[var::z];
    for (size_t j = 0; j < rs; ++j)
      g_hat[i][j] =
          star_hat[i][j] + zt_power(pi, len) * vm1 * kpow[i][j] * star_den;
  }
  return assemble(g_hat, star_den, MultiPoly::variable(var::u));
}

ClumpStatisticsGF clump_text_gf(const TextModel& model, const std::string& w) {
  if (!model.is_bernoulli())
    throw MathError(MathError::Kind::Internal,
                    "clump GFs are Bernoulli-only; use the automaton engine");
  if (w.size() < 2)
    throw ValidationError(ValidationError::Kind::MinLength,
                          "MinLength: word '" + w + "' has length < 2");
  MultiPoly k = prefix_code_polynomial(model, prefix_code(autocorrelation_set(w)));
  return ClumpStatisticsGF::build(model, {w}, {{k}});
}

ClumpStatisticsGF multi_word_clump_gf(const TextModel& model,
                                      const ReducedWordSet& set) {
  if (!model.is_bernoulli())
    throw MathError(MathError::Kind::Internal,
                    "clump GFs are Bernoulli-only; use the automaton engine");
  const int r = set.size();
  if (r > 8)
    throw MathError(MathError::Kind::Internal,
                    "at most 8 marking variables are available");
  const size_t rs = static_cast<size_t>(r);
  auto codes = prefix_code_matrix(set);
  PolyMatrix kmat(rs, std::vector<MultiPoly>(rs));
  for (size_t i = 0; i < rs; ++i)
    for (size_t j = 0; j < rs; ++j)
      kmat[i][j] = prefix_code_polynomial(model, codes[i][j]);
  return ClumpStatisticsGF::build(model, set.words(), kmat);
}

RationalFunction clump_count_gf(const TextModel& model, const std::string& w) {
  SingleWordLanguages langs = single_word_languages(model, w);
  RationalFunction u{MultiPoly::variable(var::u)};
  RationalFunction one = RationalFunction::one();
  RationalFunction k{langs.K};
  return langs.N + u * langs.R * langs.U / (one - u * langs.M + (u - one) * k);
}

RationalFunction expected_clumps_gf(const TextModel& model, const std::string& w) {
  SingleWordLanguages langs = single_word_languages(model, w);
  MultiPoly omz = kOne - MultiPoly::variable(var::z);
  return RationalFunction(langs.word_weight * (kOne - langs.K), omz * omz);
}

Rat expected_clumps(const TextModel& model, const std::string& w, int n) {
  if (n < static_cast<int>(w.size())) return Rat(0);
  SeriesTable series = series_coefficients(expected_clumps_gf(model, w), n);
  return series[n].as_constant();
}

RationalFunction kclump_gf(const TextModel& model, const std::string& w, int k) {
  if (k < 1)
    throw MathError(MathError::Kind::Internal, "k-clump GF needs k >= 1");
  return clump_text_gf(model, w).kclump_view(k);
}

CoverageStats coverage_stats(const TextModel& model, const std::string& w, int n) {
  if (n < 1) return {Rat(0), Rat(0)};
  RationalFunction coverage = clump_text_gf(model, w).coverage_view();
  RationalFunction mean = coverage.derivative(var::t).set_one(var::t);
  Rat expected = series_coefficients(mean, n)[n].as_constant();
  return {expected, expected / Rat(n)};
}

ClumpSizeDistribution clump_size_distribution(const TextModel& model,
                                              const std::string& w, int max_size) {
  if (max_size < static_cast<int>(w.size()))
    throw MathError(MathError::Kind::Internal, "max_size below the word length");
  ClumpKernel kernel = clump_kernel(model, w);
  RationalFunction plain = kernel.kernel.set_one(var::x).set_one(var::t);
  SeriesTable series = series_coefficients(plain, max_size);

  ClumpSizeDistribution dist;
  std::array<Rat, var::kCount> at_one;
  at_one.fill(Rat(1));
  Rat k_at_one = kernel.K.eval(at_one);
  if (k_at_one < 1) {
    dist.normalized = true;
    dist.normalizer = kernel.pi / (1 - k_at_one);
  } else {
    dist.normalized = false;
    dist.normalizer = 0;
  }
  for (int s = 0; s <= max_size; ++s) {
    Rat weight = series[s].as_constant();
    if (weight == 0) continue;
    dist.weights.emplace_back(s, dist.normalized ? weight / dist.normalizer
                                                 : weight);
  }
  return dist;
}

}  // namespace clumpstat
