#include "clumpstat/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "clumpstat/correlation.hpp"
#include "clumpstat/errors.hpp"

namespace clumpstat {

namespace {

bool length_lex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

XSet build_x_set(const ReducedWordSet& set) {
  std::set<std::string> words;
  for (int i = 0; i < set.size(); ++i) {
    words.insert(set.word(i));
    for (int j = 0; j < set.size(); ++j)
      for (const auto& e : right_extension_set(set.word(i), set.word(j)).words)
        words.insert(set.word(i) + e);
  }
  XSet x;
  x.base_words = set.words();
  x.words.assign(words.begin(), words.end());
  std::sort(x.words.begin(), x.words.end(), length_lex_less);
  return x;
}

ClumpAutomaton build_clump_automaton(const XSet& x, const Alphabet& alphabet) {
  ClumpAutomaton a;
  a.alphabet_ = alphabet;
  a.r_ = static_cast<int>(x.base_words.size());

  std::set<std::string> prefixes;
  for (const auto& w : x.words)
    for (size_t len = 0; len <= w.size(); ++len) prefixes.insert(w.substr(0, len));
  a.words_.assign(prefixes.begin(), prefixes.end());
  std::sort(a.words_.begin(), a.words_.end(), length_lex_less);

  std::map<std::string, int> index;
  for (size_t s = 0; s < a.words_.size(); ++s)
    index[a.words_[s]] = static_cast<int>(s);

  const int letters = alphabet.size();
  a.delta_.assign(a.words_.size(), std::vector<int>(static_cast<size_t>(letters), 0));
  for (size_t s = 0; s < a.words_.size(); ++s) {
    for (int l = 0; l < letters; ++l) {
      std::string extended = a.words_[s] + alphabet.letter(l);
      // Longest suffix of p.x that is a prefix of X.
      int target = 0;
      for (size_t drop = 0; drop < extended.size(); ++drop) {
        auto it = index.find(extended.substr(drop));
        if (it != index.end()) {
          target = it->second;
          break;
        }
      }
      a.delta_[s][static_cast<size_t>(l)] = target;
    }
  }

  std::set<std::string> xset(x.words.begin(), x.words.end());
  a.in_x_.assign(a.words_.size(), false);
  a.final_.assign(a.words_.size(), false);
  for (size_t s = 0; s < a.words_.size(); ++s) {
    const std::string& w = a.words_[s];
    a.in_x_[s] = xset.count(w) > 0;
    if (!a.in_x_[s]) continue;
    // T = X minus X A+: the words of X with no proper prefix in X.
    bool has_proper_prefix = false;
    for (size_t len = 1; len < w.size(); ++len)
      if (xset.count(w.substr(0, len))) has_proper_prefix = true;
    a.final_[s] = !has_proper_prefix;
  }

  a.marks_.assign(a.words_.size(), StateMarks{});
  for (size_t s = 0; s < a.words_.size(); ++s) {
    const std::string& w = a.words_[s];
    StateMarks& marks = a.marks_[s];
    for (int i = 0; i < a.r_; ++i)
      if (ends_with(w, x.base_words[static_cast<size_t>(i)]))
        marks.occurrences.push_back(i);
    marks.new_clump = a.final_[s];
    if (!marks.occurrences.empty()) {
      // l(p): longest proper prefix ending with a word of the set.
      size_t l_len = 0;
      for (size_t len = w.size(); len-- > 1;) {
        bool hit = false;
        for (const auto& u : x.base_words)
          if (len >= u.size() && w.compare(len - u.size(), u.size(), u) == 0)
            hit = true;
        if (hit) {
          l_len = len;
          break;
        }
      }
      marks.cover = static_cast<int>(w.size() - l_len);
    }
  }
  return a;
}

ClumpAutomaton build_clump_automaton(const ReducedWordSet& set) {
  return build_clump_automaton(build_x_set(set), set.alphabet());
}

int ClumpAutomaton::next(int state, char letter) const {
  int l = alphabet_.index(letter);
  if (l < 0)
    throw ValidationError(ValidationError::Kind::BadSymbol,
                          std::string("symbol '") + letter + "' not in alphabet");
  return delta_[static_cast<size_t>(state)][static_cast<size_t>(l)];
}

namespace {

MultiPoly state_mark_poly(const ClumpAutomaton& a, int state, const MarkSet& keep) {
  Monomial m;
  const StateMarks& marks = a.marks(state);
  if (keep.occurrences)
    for (int i : marks.occurrences) {
      int v = a.word_count() == 1 ? var::x : var::xi(i + 1);
      m.exp[static_cast<size_t>(v)] =
          static_cast<uint16_t>(m.exp[static_cast<size_t>(v)] + 1);
    }
  if (keep.clumps && marks.new_clump) m.exp[var::u] = 1;
  if (keep.coverage) m.exp[var::t] = static_cast<uint16_t>(marks.cover);
  return MultiPoly::from_term(Rat(1), m);
}

// Mark-and-probability weighted transfer system (no z factor). Bernoulli
// runs on Pref(X) directly. Markov-1 conditions each step on the previous
// letter, which the empty state forgets whenever Pref(X) misses a single
// letter; the empty state is therefore refined into one copy per letter,
// with the true start keeping the initial distribution.
struct TransferSystem {
  PolyMatrix matrix;
  int start = 0;
  std::vector<int> automaton_state;  // row -> Pref(X) state (marks, finals)
};

TransferSystem transfer_system(const ClumpAutomaton& a, const TextModel& model,
                               const MarkSet& keep) {
  TransferSystem sys;
  const int letters = a.alphabet().size();
  if (model.is_bernoulli()) {
    const size_t n = static_cast<size_t>(a.state_count());
    sys.matrix.assign(n, std::vector<MultiPoly>(n));
    sys.automaton_state.resize(n);
    for (int s = 0; s < a.state_count(); ++s) sys.automaton_state[static_cast<size_t>(s)] = s;
    for (int p = 0; p < a.state_count(); ++p)
      for (int l = 0; l < letters; ++l) {
        int q = a.next(p, a.alphabet().letter(l));
        sys.matrix[static_cast<size_t>(p)][static_cast<size_t>(q)] +=
            state_mark_poly(a, q, keep) * model.letter_prob(l);
      }
    return sys;
  }
  // Rows: 0 = start (eps, no history), 1..letters = (eps, last letter c),
  // letters+s = nonempty state s (its own last letter).
  const size_t n = static_cast<size_t>(letters + a.state_count());
  auto row_of = [&](int state, int arriving_letter) {
    return state == 0 ? 1 + arriving_letter : letters + state;
  };
  sys.matrix.assign(n, std::vector<MultiPoly>(n));
  sys.automaton_state.resize(n);
  sys.automaton_state[0] = 0;
  for (int c = 0; c < letters; ++c) sys.automaton_state[static_cast<size_t>(1 + c)] = 0;
  for (int s = 1; s < a.state_count(); ++s)
    sys.automaton_state[static_cast<size_t>(letters + s)] = s;
  for (size_t row = 0; row < n; ++row) {
    int p = sys.automaton_state[row];
    for (int l = 0; l < letters; ++l) {
      Rat prob;
      if (row == 0) {
        prob = model.initial_prob(l);
      } else if (row <= static_cast<size_t>(letters)) {
        prob = model.transition_prob(static_cast<int>(row) - 1, l);
      } else {
        const std::string& w = a.state_word(p);
        prob = model.transition_prob(model.alphabet().index(w.back()), l);
      }
      int q = a.next(p, a.alphabet().letter(l));
      sys.matrix[row][static_cast<size_t>(row_of(q, l))] +=
          state_mark_poly(a, q, keep) * prob;
    }
  }
  return sys;
}

}  // namespace

RationalFunction automaton_gf(const ClumpAutomaton& a, const TextModel& model,
                              const MarkSet& keep) {
  TransferSystem sys = transfer_system(a, model, keep);
  const size_t n = sys.matrix.size();
  const MultiPoly z = MultiPoly::variable(var::z);
  PolyMatrix system(n, std::vector<MultiPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      system[i][j] = -(z * sys.matrix[i][j]);
      if (i == j) system[i][j] += MultiPoly::constant(1);
    }
  PolyMatrix ones(n, std::vector<MultiPoly>(1, MultiPoly::constant(1)));
  PolyLinearSolution sol = poly_matrix_solve_common(std::move(system), std::move(ones));
  return RationalFunction(sol.num[static_cast<size_t>(sys.start)][0], sol.den);
}

RationalFunction accepted_language_gf(const ClumpAutomaton& a,
                                      const TextModel& model) {
  // First passage into T: intermediate steps may not enter a final state;
  // the last letter must.
  TransferSystem sys = transfer_system(a, model, MarkSet::none());
  const size_t n = sys.matrix.size();
  const MultiPoly z = MultiPoly::variable(var::z);
  PolyMatrix system(n, std::vector<MultiPoly>(n));
  PolyMatrix into_final(n, std::vector<MultiPoly>(1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      MultiPoly step = z * sys.matrix[i][j];
      if (a.is_final(sys.automaton_state[j]))
        into_final[i][0] += step;
      else
        system[i][j] = -step;
      if (i == j) system[i][j] += MultiPoly::constant(1);
    }
  PolyLinearSolution sol =
      poly_matrix_solve_common(std::move(system), std::move(into_final));
  return RationalFunction(sol.num[static_cast<size_t>(sys.start)][0], sol.den);
}

SeriesTable automaton_series(const ClumpAutomaton& a, const TextModel& model,
                             int horizon, const MarkSet& keep) {
  TransferSystem sys = transfer_system(a, model, keep);
  const size_t n = sys.matrix.size();
  SeriesTable table;
  table.horizon = horizon;
  table.coeff.resize(static_cast<size_t>(horizon) + 1);
  std::vector<MultiPoly> occupancy(n);
  occupancy[static_cast<size_t>(sys.start)] = MultiPoly::constant(1);
  for (int step = 0; step <= horizon; ++step) {
    MultiPoly total;
    for (const auto& entry : occupancy) total += entry;
    table.coeff[static_cast<size_t>(step)] = std::move(total);
    if (step == horizon) break;
    std::vector<MultiPoly> next(n);
    for (size_t p = 0; p < n; ++p) {
      if (occupancy[p].is_zero()) continue;
      for (size_t q = 0; q < n; ++q)
        if (!sys.matrix[p][q].is_zero()) next[q] += occupancy[p] * sys.matrix[p][q];
    }
    occupancy = std::move(next);
  }
  return table;
}

MomentSeries clump_count_moments(const ClumpAutomaton& a, const TextModel& model,
                                 int n_max) {
  TransferSystem sys = transfer_system(a, model, MarkSet::none());
  const size_t n = sys.matrix.size();
  // Per refined state, jets (g, g', g'') at u = 1 of the path polynomial in
  // u; the transfer weight u^c multiplies as (g, cg + g', c(c-1)g + 2cg' + g'').
  struct Jet {
    Rat value, d1, d2;
  };
  std::vector<Rat> weight(n * n, Rat(0));
  std::vector<int> cexp(n * n, 0);
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q) {
      const MultiPoly& entry = sys.matrix[p][q];
      if (entry.is_zero()) continue;
      weight[p * n + q] = entry.constant_term();
      cexp[p * n + q] = a.marks(sys.automaton_state[q]).new_clump ? 1 : 0;
    }

  MomentSeries out;
  out.mean.resize(static_cast<size_t>(n_max) + 1, Rat(0));
  out.factorial_second.resize(static_cast<size_t>(n_max) + 1, Rat(0));
  std::vector<Jet> occupancy(n, Jet{Rat(0), Rat(0), Rat(0)});
  occupancy[static_cast<size_t>(sys.start)].value = 1;
  for (int step = 0; step <= n_max; ++step) {
    Rat mean = 0, second = 0;
    for (const Jet& jet : occupancy) {
      mean += jet.d1;
      second += jet.d2;
    }
    out.mean[static_cast<size_t>(step)] = mean;
    out.factorial_second[static_cast<size_t>(step)] = second;
    if (step == n_max) break;
    std::vector<Jet> next(n, Jet{Rat(0), Rat(0), Rat(0)});
    for (size_t p = 0; p < n; ++p) {
      const Jet& jet = occupancy[p];
      if (jet.value == 0 && jet.d1 == 0 && jet.d2 == 0) continue;
      for (size_t q = 0; q < n; ++q) {
        const Rat& w = weight[p * n + q];
        if (w == 0) continue;
        Jet& target = next[q];
        if (cexp[p * n + q] == 0) {
          target.value += w * jet.value;
          target.d1 += w * jet.d1;
          target.d2 += w * jet.d2;
        } else {
          target.value += w * jet.value;
          target.d1 += w * (jet.d1 + jet.value);
          target.d2 += w * (jet.d2 + 2 * jet.d1);
        }
      }
    }
    occupancy = std::move(next);
  }
  return out;
}

TransducerTally run_transducer(const ClumpAutomaton& a, const std::string& text) {
  TransducerTally tally;
  tally.occurrences_per_word.assign(static_cast<size_t>(a.word_count()), 0);
  int state = a.initial();
  for (char c : text) {
    state = a.next(state, c);
    const StateMarks& marks = a.marks(state);
    for (int i : marks.occurrences) {
      ++tally.occurrences_per_word[static_cast<size_t>(i)];
      ++tally.occurrences;
    }
    if (marks.new_clump) ++tally.clumps;
    if (!marks.occurrences.empty()) tally.coverage += marks.cover;
  }
  return tally;
}

std::string export_dot(const ClumpAutomaton& a) {
  std::ostringstream out;
  out << "digraph clump_automaton {\n  rankdir=LR;\n  node [shape=oval];\n";
  for (int s = 0; s < a.state_count(); ++s) {
    std::string label = a.state_word(s).empty() ? "<eps>" : a.state_word(s);
    if (a.in_x(s)) label += "+";
    out << "  n" << s << " [label=\"" << label << "\"";
    if (a.is_final(s)) out << ", peripheries=2";
    out << "];\n";
  }
  for (int s = 0; s < a.state_count(); ++s)
    for (int l = 0; l < a.alphabet().size(); ++l) {
      char letter = a.alphabet().letter(l);
      int q = a.next(s, letter);
      const StateMarks& marks = a.marks(q);
      std::string annot;
      for (int i : marks.occurrences) {
        if (!annot.empty()) annot += " ";
        annot += a.word_count() == 1 ? "x" : "x" + std::to_string(i + 1);
      }
      if (marks.new_clump) annot += annot.empty() ? "t" : " t";
      if (!marks.occurrences.empty() && marks.cover > 0) {
        annot += annot.empty() ? "u" : " u";
        if (marks.cover > 1) annot += "^" + std::to_string(marks.cover);
      }
      out << "  n" << s << " -> n" << q << " [label=\"" << letter;
      if (!annot.empty()) out << " [" << annot << "]";
      out << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace clumpstat
