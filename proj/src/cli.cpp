#include "clumpstat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <optional>
#include <algorithm>
#include <sstream>

#include "clumpstat/asymptotics.hpp"
#include "clumpstat/automaton.hpp"
#include "clumpstat/clump_gf.hpp"
#include "clumpstat/errors.hpp"
#include "clumpstat/languages.hpp"
#include "clumpstat/oracle.hpp"

namespace clumpstat {

namespace {

using nlohmann::json;

// ---- output plumbing -------------------------------------------------

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Table& table, const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j;
    j["table"] = table.name;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    out << j.dump(2) << "\n";
    return;
  }
  out << "# " << table.name << "\n";
  for (size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "\t" : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
    out << "\n";
  }
}

std::string show(const Rat& q) { return rat_string(q); }
std::string show_decimal(const Rat& q) { return rat_decimal(q, 15); }
std::string show_word(const std::string& w) { return w.empty() ? "<eps>" : w; }

// ---- run configuration ------------------------------------------------

struct RunConfig {
  std::string model_path;
  std::string alphabet;
  std::vector<std::string> words;
  std::string format = "tsv";
  int n = -1;
  std::string n_range;
  int k = 1;
  int horizon = 20;
  long samples = 100000;
  uint64_t seed = 1;
  uint64_t budget = uint64_t(1) << 24;
  std::string dot_path;
  bool with_gf = false;
  std::string what = "languages";
};

TextModel resolve_model(const RunConfig& config) {
  if (!config.model_path.empty()) return load_model_file(config.model_path);
  if (!config.alphabet.empty())
    return TextModel::uniform(Alphabet(config.alphabet));
  // Default: uniform over the letters of the words, padded to two letters
  // so e.g. --words aa means the binary model, not the trivial one.
  std::string letters = alphabet_from_words(config.words).letters();
  for (char c = 'a'; c <= 'z' && letters.size() < 2; ++c)
    if (letters.find(c) == std::string::npos) letters += c;
  std::sort(letters.begin(), letters.end());
  return TextModel::uniform(Alphabet(letters));
}

ReducedWordSet resolve_set(const RunConfig& config, const TextModel& model) {
  if (config.words.empty())
    throw ValidationError(ValidationError::Kind::MinLength, "no words given");
  return ReducedWordSet::validate(config.words, model.alphabet());
}

std::pair<int, int> resolve_range(const RunConfig& config, int fallback) {
  if (!config.n_range.empty()) {
    auto dots = config.n_range.find("..");
    if (dots == std::string::npos)
      throw ValidationError(ValidationError::Kind::BadProbability,
                            "expected --n-range A..B");
    int a = std::stoi(config.n_range.substr(0, dots));
    int b = std::stoi(config.n_range.substr(dots + 2));
    if (a < 0 || b < a)
      throw ValidationError(ValidationError::Kind::BadProbability,
                            "bad range " + config.n_range);
    return {a, b};
  }
  if (config.n >= 0) return {config.n, config.n};
  return {fallback, fallback};
}

// ---- generating-function dispatch --------------------------------------

// One statistic view: a rational function plus the variables carrying the
// distribution key, or a direct oracle fallback where no GF exists
// (k-clumps under Markov).
std::map<std::vector<long>, Rat> view_distribution(const MultiPoly& coeff,
                                                   const std::vector<int>& vars) {
  std::map<std::vector<long>, Rat> out;
  for (const auto& [m, c] : coeff.terms()) {
    std::vector<long> key;
    for (int v : vars) key.push_back(m.exp[static_cast<size_t>(v)]);
    out[key] += c;
    if (out[key] == 0) out.erase(key);
  }
  return out;
}

struct StatEngine {
  TextModel model;
  ReducedWordSet set;
  std::optional<ClumpStatisticsGF> gf;  // Bernoulli only
  std::optional<ClumpAutomaton> automaton;

  static StatEngine make(const TextModel& model, const ReducedWordSet& set) {
    StatEngine engine{model, set, std::nullopt, std::nullopt};
    if (model.is_bernoulli()) {
      engine.gf = set.size() == 1 ? clump_text_gf(model, set.word(0))
                                  : multi_word_clump_gf(model, set);
    } else {
      engine.automaton = build_clump_automaton(set);
    }
    return engine;
  }

  // Distribution of one scalar statistic at length n.
  std::map<std::vector<long>, Rat> distribution(Statistic stat, int k, int n) {
    if (model.is_bernoulli()) {
      RationalFunction f;
      int v = 0;
      switch (stat) {
        case Statistic::ClumpCount: f = gf->clump_count_view(); v = var::u; break;
        case Statistic::Occurrences: f = gf->occurrence_view(); v = var::x; break;
        case Statistic::Coverage: f = gf->coverage_view(); v = var::t; break;
        case Statistic::KClumpCount: f = gf->kclump_view(k); v = var::v; break;
        case Statistic::Joint:
          throw MathError(MathError::Kind::Internal, "joint handled separately");
      }
      return view_distribution(series_coefficients(f, n)[n], {v});
    }
    if (stat == Statistic::KClumpCount)  // no automaton marking for k-clumps
      return exhaustive_distribution(model, set, n, stat, k, budget).probs;
    MarkSet keep = MarkSet::none();
    int v = 0;
    switch (stat) {
      case Statistic::ClumpCount: keep = MarkSet::only_clumps(); v = var::u; break;
      case Statistic::Occurrences:
        keep = MarkSet::only_occurrences();
        v = var::x;
        break;
      case Statistic::Coverage: keep = MarkSet::only_coverage(); v = var::t; break;
      default: break;
    }
    if (stat == Statistic::Occurrences && set.size() > 1) {
      // Fold the per-word marks into a single count.
      SeriesTable series = automaton_series(*automaton, model, n, keep);
      MultiPoly folded = series[n];
      for (int i = 1; i <= set.size(); ++i)
        folded = folded.substitute(var::xi(i), MultiPoly::variable(var::x));
      return view_distribution(folded, {v});
    }
    SeriesTable series = automaton_series(*automaton, model, n, keep);
    return view_distribution(series[n], {v});
  }

  uint64_t budget = uint64_t(1) << 24;
};

// Mean and variance of a marked view at every n <= horizon.
struct MomentColumns {
  std::vector<Rat> mean, variance;
};

MomentColumns moments_of_view(const RationalFunction& f, int mark, int horizon) {
  RationalFunction d1 = f.derivative(mark).set_one(mark);
  RationalFunction d2 = (RationalFunction(MultiPoly::variable(mark)) *
                         f.derivative(mark))
                            .derivative(mark)
                            .set_one(mark);
  SeriesTable first = series_coefficients(d1, horizon);
  SeriesTable second = series_coefficients(d2, horizon);
  MomentColumns out;
  for (int n = 0; n <= horizon; ++n) {
    Rat mean = first[n].as_constant();
    out.mean.push_back(mean);
    out.variance.push_back(second[n].as_constant() - mean * mean);
  }
  return out;
}

MomentColumns moments_of_series(const SeriesTable& series, int mark, int horizon) {
  MomentColumns out;
  for (int n = 0; n <= horizon; ++n) {
    Rat mean = 0, second = 0;
    for (const auto& [m, c] : series[n].terms()) {
      long value = m.exp[static_cast<size_t>(mark)];
      mean += Rat(value) * c;
      second += Rat(value) * Rat(value) * c;
    }
    out.mean.push_back(mean);
    out.variance.push_back(second - mean * mean);
  }
  return out;
}

// ---- subcommands --------------------------------------------------------

int cmd_correlate(const RunConfig& config, std::ostream& out) {
  TextModel model = resolve_model(config);
  ReducedWordSet set = resolve_set(config, model);
  Table table{"correlate", {"set", "source", "target", "word"}, {}};
  auto add = [&](const std::string& kind, const std::string& s,
                 const std::string& t, const std::vector<std::string>& words,
                 bool eps) {
    if (eps) table.rows.push_back({kind, s, t, show_word("")});
    for (const auto& w : words) table.rows.push_back({kind, s, t, show_word(w)});
  };
  auto codes = prefix_code_matrix(set);
  for (int i = 0; i < set.size(); ++i)
    for (int j = 0; j < set.size(); ++j) {
      CorrelationSet c = correlation_set(set.word(i), set.word(j));
      ExtensionSet e = right_extension_set(set.word(i), set.word(j));
      add("C", set.word(i), set.word(j), c.words, c.has_epsilon);
      add("E", set.word(i), set.word(j), e.words, false);
      add("K", set.word(i), set.word(j),
          codes[static_cast<size_t>(i)][static_cast<size_t>(j)].words, false);
    }
  emit(table, config.format, out);
  return 0;
}

int cmd_gf(const RunConfig& config, std::ostream& out) {
  TextModel model = resolve_model(config);
  ReducedWordSet set = resolve_set(config, model);
  Table table{"gf", {"name", "function"}, {}};
  auto add = [&](const std::string& name, const RationalFunction& f) {
    table.rows.push_back({name, f.to_string()});
  };
  if (!model.is_bernoulli())
    throw ValidationError(ValidationError::Kind::BadProbability,
                          "gf requires a Bernoulli model; automata cover Markov");
  if (config.what == "languages") {
    if (set.size() == 1) {
      auto langs = single_word_languages(model, set.word(0));
      table.rows.push_back({"C", MultiPoly(langs.C).to_string()});
      table.rows.push_back({"K", MultiPoly(langs.K).to_string()});
      table.rows.push_back({"D", MultiPoly(langs.D).to_string()});
      add("R", langs.R);
      add("M", langs.M);
      add("U", langs.U);
      add("N", langs.N);
    } else {
      auto langs = multi_word_languages(model, set);
      for (int i = 0; i < set.size(); ++i)
        for (int j = 0; j < set.size(); ++j)
          add("M_" + std::to_string(i + 1) + std::to_string(j + 1),
              langs.M[static_cast<size_t>(i)][static_cast<size_t>(j)]);
      for (int i = 0; i < set.size(); ++i)
        add("R_" + std::to_string(i + 1), langs.R[static_cast<size_t>(i)]);
      for (int i = 0; i < set.size(); ++i)
        add("U_" + std::to_string(i + 1), langs.U[static_cast<size_t>(i)]);
      add("N", langs.N);
    }
  } else {
    ClumpStatisticsGF gf = set.size() == 1 ? clump_text_gf(model, set.word(0))
                                           : multi_word_clump_gf(model, set);
    if (config.what == "occurrence") {
      add("F", gf.occurrence_view());
    } else if (config.what == "clump-count") {
      add("O", gf.clump_count_view());
    } else if (config.what == "coverage") {
      add("Cov", gf.coverage_view());
    } else if (config.what == "kernel") {
      if (set.size() != 1)
        throw ValidationError(ValidationError::Kind::BadProbability,
                              "kernel is a single-word view");
      add("kernel", clump_kernel(model, set.word(0)).kernel);
    } else if (config.what == "kclump") {
      add("O_k", gf.kclump_view(config.k));
    } else if (config.what == "joint") {
      add("G", gf.joint());
    } else {
      throw ValidationError(ValidationError::Kind::BadProbability,
                            "unknown --what '" + config.what + "'");
    }
  }
  emit(table, config.format, out);
  return 0;
}

int cmd_distribution(const RunConfig& config, std::ostream& out, Statistic stat) {
  TextModel model = resolve_model(config);
  ReducedWordSet set = resolve_set(config, model);
  auto [lo, hi] = resolve_range(config, config.horizon);
  StatEngine engine = StatEngine::make(model, set);
  engine.budget = config.budget;
  const char* what = stat == Statistic::ClumpCount ? "clumps"
                     : stat == Statistic::KClumpCount ? "kclumps"
                                                      : "coverage";
  Table table{what, {"n", "value", "probability", "decimal"}, {}};
  for (int n = lo; n <= hi; ++n)
    for (const auto& [key, p] : engine.distribution(stat, config.k, n))
      table.rows.push_back({std::to_string(n), std::to_string(key[0]), show(p),
                            show_decimal(p)});
  emit(table, config.format, out);
  if (stat == Statistic::Coverage) {
    Table extra{"coverage-summary", {"n", "expected", "fraction"}, {}};
    for (int n = std::max(1, lo); n <= hi; ++n) {
      if (model.is_bernoulli() && set.size() == 1) {
        CoverageStats stats = coverage_stats(model, set.word(0), n);
        extra.rows.push_back({std::to_string(n), show(stats.expected_covered),
                              show(stats.covered_fraction)});
      } else {
        Rat mean = 0;
        for (const auto& [key, p] : engine.distribution(stat, 0, n))
          mean += Rat(key[0]) * p;
        extra.rows.push_back(
            {std::to_string(n), show(mean), show(mean / Rat(n))});
      }
    }
    emit(extra, config.format, out);
  }
  return 0;
}

int cmd_moments(const RunConfig& config, std::ostream& out) {
  TextModel model = resolve_model(config);
  ReducedWordSet set = resolve_set(config, model);
  auto [lo, hi] = resolve_range(config, config.horizon);
  MomentColumns clumps, occurrences, coverage;
  if (model.is_bernoulli()) {
    ClumpStatisticsGF gf = set.size() == 1 ? clump_text_gf(model, set.word(0))
                                           : multi_word_clump_gf(model, set);
    clumps = moments_of_view(gf.clump_count_view(), var::u, hi);
    occurrences = moments_of_view(gf.occurrence_view(), var::x, hi);
    coverage = moments_of_view(gf.coverage_view(), var::t, hi);
  } else {
    ClumpAutomaton a = build_clump_automaton(set);
    MomentSeries m = clump_count_moments(a, model, hi);
    for (int n = 0; n <= hi; ++n) {
      clumps.mean.push_back(m.mean[static_cast<size_t>(n)]);
      clumps.variance.push_back(m.variance(n));
    }
    SeriesTable occ = automaton_series(a, model, hi, MarkSet::only_occurrences());
    if (set.size() > 1)
      for (int i = 1; i <= set.size(); ++i)
        for (auto& coeff : occ.coeff)
          coeff = coeff.substitute(var::xi(i), MultiPoly::variable(var::x));
    occurrences = moments_of_series(occ, var::x, hi);
    coverage = moments_of_series(
        automaton_series(a, model, hi, MarkSet::only_coverage()), var::t, hi);
  }
  Table table{"moments",
              {"n", "clumps_mean", "clumps_var", "occ_mean", "occ_var",
               "cov_mean", "cov_var"},
              {}};
  for (int n = lo; n <= hi; ++n) {
    size_t i = static_cast<size_t>(n);
    table.rows.push_back({std::to_string(n), show(clumps.mean[i]),
                          show(clumps.variance[i]), show(occurrences.mean[i]),
                          show(occurrences.variance[i]), show(coverage.mean[i]),
                          show(coverage.variance[i])});
  }
  emit(table, config.format, out);
  return 0;
}

int cmd_automaton(const RunConfig& config, std::ostream& out) {
  TextModel model = resolve_model(config);
  ReducedWordSet set = resolve_set(config, model);
  ClumpAutomaton a = build_clump_automaton(set);
  Table table{"automaton", {"property", "value"}, {}};
  table.rows.push_back({"states", std::to_string(a.state_count())});
  int finals = 0;
  for (int s = 0; s < a.state_count(); ++s) finals += a.is_final(s);
  table.rows.push_back({"final_states", std::to_string(finals)});
  emit(table, config.format, out);
  if (!config.dot_path.empty()) {
    if (config.dot_path == "-") {
      out << export_dot(a);
    } else {
      std::ofstream dot(config.dot_path);
      if (!dot)
        throw ValidationError(ValidationError::Kind::BadProbability,
                              "cannot write '" + config.dot_path + "'");
      dot << export_dot(a);
    }
  }
  if (config.with_gf) {
    Table gf{"automaton-gf", {"name", "function"}, {}};
    gf.rows.push_back({"F", automaton_gf(a, model).to_string()});
    gf.rows.push_back({"accepted", accepted_language_gf(a, model).to_string()});
    emit(gf, config.format, out);
  }
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  TextModel model = resolve_model(config);
  ReducedWordSet set = resolve_set(config, model);
  int horizon = config.n >= 0 ? config.n : 12;
  const int r = set.size();

  // Oracle joint tables, one per length.
  std::vector<DistributionTable> joint;
  for (int n = 0; n <= horizon; ++n)
    joint.push_back(exhaustive_distribution(model, set, n, Statistic::Joint, 0,
                                            config.budget));

  struct View {
    std::string name;
    std::vector<int> gf_vars;        // key variables in the series coefficient
    std::vector<int> oracle_keep;    // joint key positions
    std::optional<SeriesTable> series;
  };
  std::vector<View> views;
  auto keyed = [&](std::vector<int> v) { return v; };

  ClumpAutomaton automaton = build_clump_automaton(set);
  {
    std::vector<int> occ_vars, occ_keys;
    for (int i = 0; i < r; ++i) {
      occ_vars.push_back(r == 1 ? var::x : var::xi(i + 1));
      occ_keys.push_back(i);
    }
    std::vector<int> joint_vars = occ_vars, joint_keys = occ_keys;
    joint_vars.push_back(var::u);
    joint_vars.push_back(var::t);
    joint_keys.push_back(r);
    joint_keys.push_back(r + 1);
    View automaton_view{"automaton-joint", joint_vars, joint_keys,
                        automaton_series(automaton, model, horizon)};
    views.push_back(std::move(automaton_view));

    if (model.is_bernoulli()) {
      ClumpStatisticsGF gf = r == 1 ? clump_text_gf(model, set.word(0))
                                    : multi_word_clump_gf(model, set);
      views.push_back({"clump-joint", joint_vars, joint_keys,
                       series_coefficients(gf.joint(), horizon)});
      views.push_back({"clump-count", keyed({var::u}), keyed({r}),
                       series_coefficients(gf.clump_count_view(), horizon)});
      views.push_back({"coverage", keyed({var::t}), keyed({r + 1}),
                       series_coefficients(gf.coverage_view(), horizon)});
      views.push_back({"1-clumps", keyed({var::v}), keyed({r + 2}),
                       series_coefficients(gf.kclump_view(1), horizon)});
      views.push_back({"2-clumps", keyed({var::v}), keyed({r + 3}),
                       series_coefficients(gf.kclump_view(2), horizon)});
      views.push_back({"occurrences", occ_vars, occ_keys,
                       series_coefficients(gf.joint_occurrence_view(), horizon)});
    }
  }

  bool all_ok = true;
  for (const auto& view : views) {
    bool ok = true;
    for (int n = 0; n <= horizon && ok; ++n) {
      auto mine = view_distribution((*view.series)[n], view.gf_vars);
      auto expected = joint[static_cast<size_t>(n)]
                          .marginal(view.oracle_keep, view.name)
                          .probs;
      if (mine != expected) {
        ok = false;
        all_ok = false;
        // Report the first differing entry.
        for (const auto& [key, p] : expected) {
          auto it = mine.find(key);
          if (it == mine.end() || !(it->second == p)) {
            out << "MISMATCH " << view.name << " n=" << n << " value=(";
            for (size_t i = 0; i < key.size(); ++i)
              out << (i ? "," : "") << key[i];
            out << ") oracle=" << show(p) << " gf="
                << (it == mine.end() ? std::string("0") : show(it->second))
                << "\n";
            break;
          }
        }
        for (const auto& [key, p] : mine) {
          if (expected.count(key)) continue;
          out << "MISMATCH " << view.name << " n=" << n << " value=(";
          for (size_t i = 0; i < key.size(); ++i) out << (i ? "," : "") << key[i];
          out << ") oracle=0 gf=" << show(p) << "\n";
          break;
        }
      }
    }
    out << (ok ? "PASS " : "FAIL ") << view.name << " n<=" << horizon << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  TextModel model = resolve_model(config);
  ReducedWordSet set = resolve_set(config, model);
  int n = config.n >= 0 ? config.n : config.horizon;
  MonteCarloResult mc = monte_carlo(model, set, n, config.samples, config.seed,
                                    Statistic::ClumpCount);
  Table table{"simulate", {"value", "frequency", "stderr"}, {}};
  for (const auto& [key, freq] : mc.freq) {
    std::ostringstream f, s;
    f.precision(15);
    s.precision(6);
    f << freq;
    s << mc.stderr_.at(key);
    table.rows.push_back({std::to_string(key[0]), f.str(), s.str()});
  }
  emit(table, config.format, out);
  Table stats{"simulate-summary", {"statistic", "value"}, {}};
  std::ostringstream m, se;
  m.precision(15);
  se.precision(6);
  m << mc.mean;
  se << mc.mean_se;
  stats.rows.push_back({"samples", std::to_string(mc.samples)});
  stats.rows.push_back({"mean", m.str()});
  stats.rows.push_back({"mean_stderr", se.str()});
  emit(stats, config.format, out);
  return 0;
}

int cmd_asymptotics(const RunConfig& config, std::ostream& out) {
  TextModel model = resolve_model(config);
  ReducedWordSet set = resolve_set(config, model);
  if (set.size() != 1)
    throw ValidationError(ValidationError::Kind::BadProbability,
                          "asymptotics works on a single word");
  int n = config.n >= 0 ? config.n : 200;
  PoissonApprox approx =
      poisson_approximation(model, set.word(0), n, config.k);
  Table table{"asymptotics", {"quantity", "value"}, {}};
  auto add_d = [&](const std::string& name, double v) {
    std::ostringstream s;
    s.precision(15);
    s << v;
    table.rows.push_back({name, s.str()});
  };
  if (approx.exact) {
    table.rows.push_back({"exact", show(*approx.exact)});
    table.rows.push_back({"exact_decimal", show_decimal(*approx.exact)});
  }
  add_d("approximation", approx.approximation);
  if (approx.exact) add_d("ratio", approx.ratio);
  add_d("rho", approx.rho);
  add_d("Q(rho)", approx.q_at_rho);
  add_d("P(rho)", approx.p_at_rho);
  add_d("K(rho)", approx.k_at_rho);
  if (approx.pre_asymptotic)
    table.rows.push_back({"note", "pre-asymptotic: n < |w|"});
  if (!approx.rare_regime)
    table.rows.push_back(
        {"note", "below the rare-word regime (|w| <= log n / log(1/p)); "
                 "the approximation may be loose, prefer the exact engine"});
  emit(table, config.format, out);

  GrowthRates rates = growth_rates(model, set, std::max(100, config.horizon));
  Table growth{"growth", {"quantity", "value"}, {}};
  std::ostringstream ms, vs;
  ms.precision(15);
  vs.precision(15);
  ms << rates.mean_slope;
  vs << rates.var_slope;
  growth.rows.push_back({"mean_slope", ms.str()});
  growth.rows.push_back({"mean_slope_exact", show(rates.mean_slope_exact)});
  growth.rows.push_back({"var_slope", vs.str()});
  emit(growth, config.format, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"clumpstat: exact clump statistics of words in random texts"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--model", config.model_path, "model file");
    cmd->add_option("--alphabet", config.alphabet,
                    "uniform model over these letters (default: word letters, "
                    "padded to two)");
    cmd->add_option("--words", config.words, "comma-separated words")
        ->delimiter(',');
    cmd->add_option("--word", config.words, "one word (repeatable)");
    cmd->add_option("--format", config.format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));
    cmd->add_option("--n", config.n, "text length");
    cmd->add_option("--n-range", config.n_range, "length range A..B");
    cmd->add_option("--k", config.k, "k-clump size / tail index");
    cmd->add_option("--horizon", config.horizon, "series horizon");
    cmd->add_option("--seed", config.seed, "sampler seed");
    cmd->add_option("--samples", config.samples, "sample count");
    cmd->add_option("--budget", config.budget, "enumeration budget");
    return cmd;
  };

  CLI::App* correlate = add_common(app.add_subcommand(
      "correlate", "correlation, extension and prefix-code sets"));
  CLI::App* gf = add_common(
      app.add_subcommand("gf", "print generating functions"));
  gf->add_option("--what", config.what,
                 "languages|occurrence|clump-count|coverage|kernel|kclump|joint");
  CLI::App* moments =
      add_common(app.add_subcommand("moments", "mean and variance tables"));
  CLI::App* distribution = add_common(
      app.add_subcommand("distribution", "exact clump-count distribution"));
  CLI::App* kclumps =
      add_common(app.add_subcommand("kclumps", "exact k-clump distribution"));
  CLI::App* coverage =
      add_common(app.add_subcommand("coverage", "covered-positions statistics"));
  CLI::App* automaton =
      add_common(app.add_subcommand("automaton", "clump automaton + DOT"));
  automaton->add_option("--dot", config.dot_path, "DOT output path ('-' = stdout)");
  automaton->add_flag("--gf", config.with_gf, "print the transfer GF");
  CLI::App* verify = add_common(app.add_subcommand(
      "verify", "compare every engine against the exhaustive oracle"));
  CLI::App* simulate =
      add_common(app.add_subcommand("simulate", "seeded Monte Carlo sampler"));
  CLI::App* asymptotics = add_common(app.add_subcommand(
      "asymptotics", "dominant root, tail approximation, growth"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "argument error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (correlate->parsed()) return cmd_correlate(config, out);
    if (gf->parsed()) return cmd_gf(config, out);
    if (moments->parsed()) return cmd_moments(config, out);
    if (distribution->parsed())
      return cmd_distribution(config, out, Statistic::ClumpCount);
    if (kclumps->parsed())
      return cmd_distribution(config, out, Statistic::KClumpCount);
    if (coverage->parsed())
      return cmd_distribution(config, out, Statistic::Coverage);
    if (automaton->parsed()) return cmd_automaton(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    if (simulate->parsed()) return cmd_simulate(config, out);
    if (asymptotics->parsed()) return cmd_asymptotics(config, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace clumpstat
