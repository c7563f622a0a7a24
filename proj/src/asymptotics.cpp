#include "clumpstat/asymptotics.hpp"

#include <cmath>

#include "clumpstat/automaton.hpp"
#include "clumpstat/clump_gf.hpp"
#include "clumpstat/errors.hpp"
#include "clumpstat/languages.hpp"

namespace clumpstat {

namespace {

Rat eval_univariate(const MultiPoly& p, const Rat& z_value) {
  Rat total = 0;
  Rat power = 1;
  unsigned next_exp = 0;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exp[var::z];
    while (next_exp < e) {
      power *= z_value;
      ++next_exp;
    }
    total += c * power;
  }
  return total;
}

double eval_univariate_d(const MultiPoly& p, double z_value) {
  double total = 0;
  for (const auto& [m, c] : p.terms())
    total += c.get_d() * std::pow(z_value, m.exp[var::z]);
  return total;
}

}  // namespace

RationalFunction poisson_tail_gf(const TextModel& model, const std::string& w,
                                 int k) {
  if (k < 1)
    throw MathError(MathError::Kind::Internal,
                    "tail index k >= 1 (k = 0 is the no-occurrence function N)");
  SingleWordLanguages langs = single_word_languages(model, w);
  const MultiPoly one = MultiPoly::constant(1);
  MultiPoly p = MultiPoly::variable(var::z) - one + (one - langs.K) * langs.D;
  MultiPoly omk = one - langs.K;
  RationalFunction tail(
      langs.word_weight * p.pow(static_cast<unsigned>(k - 1)),
      omk.pow(static_cast<unsigned>(k)) * langs.D.pow(static_cast<unsigned>(k + 1)));
  // The geometric expansion of the clump-count function forces this
  // identity; keep it as a live assertion.
  RationalFunction direct =
      taylor_coefficient(clump_count_gf(model, w), var::u, k);
  if (!(tail == direct))
    throw MathError(MathError::Kind::Internal,
                    "tail function disagrees with the Taylor coefficient");
  return tail;
}

DominantRoot dominant_root(const TextModel& model, const std::string& w,
                           double precision) {
  if (precision <= 0)
    throw MathError(MathError::Kind::Internal, "precision must be positive");
  SingleWordLanguages langs = single_word_languages(model, w);
  const MultiPoly& d = langs.D;
  auto d_at = [&](const Rat& z_value) { return eval_univariate(d, z_value); };

  if (d_at(1) <= 0)
    throw MathError(MathError::Kind::Internal, "D(1) = pi_w should be positive");

  const Rat upper = 1 / model.max_letter_prob();
  const Rat step = rat(1, 1000);
  Rat lo = 1, hi;
  bool bracketed = false;
  for (Rat z = 1 + step; z <= upper; z += step) {
    Rat value = d_at(z);
    if (value == 0) {
      lo = hi = z;
      bracketed = true;
      break;
    }
    if (value < 0) {
      hi = z;
      bracketed = true;
      break;
    }
    lo = z;
  }
  if (!bracketed) {
    // Tangent root at the scan boundary (e.g. D = (1 - z/2)^2 for w = ab).
    if (d_at(upper) == 0) {
      lo = hi = upper;
      bracketed = true;
    } else {
      throw MathError(MathError::Kind::NoRealRoot,
                      "no sign change of D on (1, 1/p-bar]");
    }
  }

  Rat width_target(precision);
  while (hi - lo > width_target && lo != hi) {
    Rat mid = (lo + hi) / 2;
    Rat value = d_at(mid);
    if (value == 0) {
      lo = hi = mid;
    } else if (value < 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  DominantRoot root;
  root.lo = lo;
  root.hi = hi;
  // Newton polish for the reported double (the rational enclosure already
  // certifies the root).
  MultiPoly dprime = d.derivative(var::z);
  double x = (lo.get_d() + hi.get_d()) / 2;
  for (int iter = 0; iter < 8; ++iter) {
    double fp = eval_univariate_d(dprime, x);
    if (fp == 0) break;
    x -= eval_univariate_d(d, x) / fp;
  }
  if (x < lo.get_d() || x > hi.get_d()) x = (lo.get_d() + hi.get_d()) / 2;
  root.rho = x;

  // Synthetic division D = Q (1 - z/rho): q_i = d_i + q_{i-1}/rho; the
  // leftover -q_{m-1}/rho - d_m is the reported residual.
  std::vector<double> dc(d.degree(var::z) + 1, 0.0);
  for (const auto& [m, c] : d.terms()) dc[m.exp[var::z]] = c.get_d();
  root.q_coeffs.assign(dc.size() - 1, 0.0);
  for (size_t i = 0; i < root.q_coeffs.size(); ++i)
    root.q_coeffs[i] = dc[i] + (i == 0 ? 0.0 : root.q_coeffs[i - 1] / root.rho);
  root.residual = std::abs(dc.back() + root.q_coeffs.back() / root.rho);
  double q = 0;
  for (size_t i = root.q_coeffs.size(); i-- > 0;)
    q = q * root.rho + root.q_coeffs[i];
  root.q_at_rho = q;
  return root;
}

namespace {

Rat rat_pow(Rat base, int exponent) {
  Rat out = 1;
  bool invert = exponent < 0;
  unsigned e = static_cast<unsigned>(invert ? -exponent : exponent);
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return invert ? Rat(1) / out : out;
}

}  // namespace

PoissonApprox poisson_approximation(const TextModel& model, const std::string& w,
                                    int n, int k, int exact_horizon) {
  if (k < 0) throw MathError(MathError::Kind::Internal, "k must be >= 0");
  // The approximation is evaluated in exact rational arithmetic at the
  // enclosure midpoint. With the root pinned far below the subdominant
  // contributions, the exact/approximation ratio tracks the genuine
  // convergence instead of evaluation noise.
  DominantRoot root = dominant_root(model, w, 1e-60);
  SingleWordLanguages langs = single_word_languages(model, w);

  PoissonApprox out;
  out.rho = root.rho;
  out.q_at_rho = root.q_at_rho;
  Rat rho_hat = (root.lo + root.hi) / 2;
  Rat k_hat = eval_univariate(langs.K, rho_hat);
  Rat d_hat = eval_univariate(langs.D, rho_hat);
  Rat p_hat = rho_hat - 1 + (1 - k_hat) * d_hat;
  // Q(rho) = -rho D'(rho) from the factorization D = Q (1 - z/rho).
  Rat q_hat = -rho_hat * eval_univariate(langs.D.derivative(var::z), rho_hat);
  out.k_at_rho = k_hat.get_d();
  out.p_at_rho = p_hat.get_d();
  out.pre_asymptotic = n < static_cast<int>(w.size());
  double pbar = model.max_letter_prob().get_d();
  out.rare_regime =
      n < 2 || static_cast<double>(w.size()) > std::log(n) / std::log(1.0 / pbar);

  Rat factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  Rat approx = langs.pi * rat_pow(rho_hat, static_cast<int>(w.size())) *
               rat_pow(p_hat, k - 1) /
               (rat_pow(1 - k_hat, k) * rat_pow(q_hat, k + 1)) *
               rat_pow(Rat(n), k) / factorial * rat_pow(rho_hat, -n);
  out.approximation = approx.get_d();

  if (n <= exact_horizon) {
    RationalFunction tail =
        k == 0 ? langs.N : poisson_tail_gf(model, w, k);
    out.exact = series_coefficients(tail, n)[n].as_constant();
    Rat ratio = *out.exact / approx;
    out.ratio = ratio.get_d();
  }
  return out;
}

GrowthRates growth_rates(const TextModel& model, const ReducedWordSet& set,
                         int n_max) {
  if (n_max < 100)
    throw MathError(MathError::Kind::Internal, "n_max must be at least 100");

  std::vector<Rat> mean(static_cast<size_t>(n_max) + 1);
  std::vector<Rat> variance(static_cast<size_t>(n_max) + 1);
  RationalFunction count_gf;  // univariate u-marginal for the exact slope
  if (model.is_bernoulli() && set.size() == 1) {
    count_gf = clump_count_gf(model, set.word(0));
    RationalFunction a = count_gf.derivative(var::u).set_one(var::u);
    RationalFunction b = (RationalFunction(MultiPoly::variable(var::u)) *
                          count_gf.derivative(var::u))
                             .derivative(var::u)
                             .set_one(var::u);
    SeriesTable means = series_coefficients(a, n_max);
    SeriesTable seconds = series_coefficients(b, n_max);
    for (int n = 0; n <= n_max; ++n) {
      mean[static_cast<size_t>(n)] = means[n].as_constant();
      variance[static_cast<size_t>(n)] =
          seconds[n].as_constant() -
          means[n].as_constant() * means[n].as_constant();
    }
  } else {
    ClumpAutomaton a = build_clump_automaton(set);
    MomentSeries moments = clump_count_moments(a, model, n_max);
    for (int n = 0; n <= n_max; ++n) {
      mean[static_cast<size_t>(n)] = moments.mean[static_cast<size_t>(n)];
      variance[static_cast<size_t>(n)] = moments.variance(n);
    }
    count_gf = automaton_gf(a, model, MarkSet::only_clumps());
  }

  GrowthRates out;
  auto slope = [](const std::vector<Rat>& series, int n) {
    Rat diff = series[static_cast<size_t>(n)] - series[static_cast<size_t>(n) - 1];
    return diff.get_d();
  };
  out.mean_slope = slope(mean, n_max);
  out.var_slope = slope(variance, n_max);
  int window = std::max(1, n_max / 10);
  for (int n = n_max - window; n < n_max; ++n) {
    out.mean_residual =
        std::max(out.mean_residual,
                 std::abs(slope(mean, n) - out.mean_slope) /
                     std::max(1e-300, std::abs(out.mean_slope)));
    out.var_residual =
        std::max(out.var_residual, std::abs(slope(variance, n) - out.var_slope) /
                                       std::max(1e-300, std::abs(out.var_slope)));
  }

  // Exact limit slope: the double pole of dO/du|_{u=1} at z = 1, i.e.
  // ((1-z)^2 dO/du)|_{z=1}; for one word this is pi_w (1 - K(1)).
  RationalFunction mean_gf = count_gf.derivative(var::u).set_one(var::u);
  MultiPoly omz = MultiPoly::constant(1) - MultiPoly::variable(var::z);
  RationalFunction rescaled = mean_gf * RationalFunction(omz * omz);
  out.mean_slope_exact = rescaled.eval_z(Rat(1));
  return out;
}

}  // namespace clumpstat
