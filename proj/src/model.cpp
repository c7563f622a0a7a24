#include "clumpstat/model.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "clumpstat/errors.hpp"

namespace clumpstat {

namespace {

void check_distribution(const std::vector<Rat>& probs, const std::string& what) {
  Rat sum = 0;
  for (const Rat& p : probs) {
    if (p < 0 || p > 1)
      throw ValidationError(ValidationError::Kind::BadProbability,
                            what + ": probability outside [0,1]");
    sum += p;
  }
  if (sum != 1)
    throw ValidationError(ValidationError::Kind::BadProbability,
                          what + ": probabilities sum to " + rat_string(sum) +
                              ", expected 1");
}

}  // namespace

TextModel TextModel::bernoulli(Alphabet alphabet, std::vector<Rat> letter_probs) {
  if (static_cast<int>(letter_probs.size()) != alphabet.size())
    throw ValidationError(ValidationError::Kind::BadProbability,
                          "one probability per alphabet letter required");
  check_distribution(letter_probs, "letter distribution");
  TextModel m(ModelKind::Bernoulli, std::move(alphabet));
  m.letter_probs_ = std::move(letter_probs);
  return m;
}

TextModel TextModel::uniform(Alphabet alphabet) {
  std::vector<Rat> probs(static_cast<size_t>(alphabet.size()),
                         rat(1, alphabet.size()));
  return bernoulli(std::move(alphabet), std::move(probs));
}

TextModel TextModel::markov1(Alphabet alphabet, std::vector<Rat> initial,
                             std::vector<std::vector<Rat>> transition) {
  const size_t k = static_cast<size_t>(alphabet.size());
  if (initial.size() != k || transition.size() != k)
    throw ValidationError(ValidationError::Kind::BadProbability,
                          "initial/transition dimensions must match the alphabet");
  check_distribution(initial, "initial distribution");
  for (size_t i = 0; i < k; ++i) {
    if (transition[i].size() != k)
      throw ValidationError(ValidationError::Kind::BadProbability,
                            "transition row has wrong size");
    check_distribution(transition[i],
                       std::string("transition row '") + alphabet.letter(static_cast<int>(i)) + "'");
  }
  TextModel m(ModelKind::Markov1, std::move(alphabet));
  m.initial_ = std::move(initial);
  m.transition_ = std::move(transition);
  return m;
}

Rat TextModel::letter_prob(char c) const {
  alphabet_.check_word(std::string(1, c));
  return letter_probs_[static_cast<size_t>(alphabet_.index(c))];
}

Rat TextModel::word_probability(const std::string& w) const {
  alphabet_.check_word(w);
  Rat p = 1;
  if (kind_ == ModelKind::Bernoulli) {
    for (char c : w) p *= letter_probs_[static_cast<size_t>(alphabet_.index(c))];
    return p;
  }
  if (w.empty()) return p;
  p = initial_[static_cast<size_t>(alphabet_.index(w[0]))];
  for (size_t i = 0; i + 1 < w.size(); ++i)
    p *= transition_[static_cast<size_t>(alphabet_.index(w[i]))]
                    [static_cast<size_t>(alphabet_.index(w[i + 1]))];
  return p;
}

Rat TextModel::max_letter_prob() const {
  Rat best = 0;
  for (const Rat& p : letter_probs_) best = std::max(best, p);
  return best;
}

Rat TextModel::min_letter_prob() const {
  Rat best = 1;
  for (const Rat& p : letter_probs_) best = std::min(best, p);
  return best;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::vector<int> columns;  // 1-based start column per token
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    Line line{number, {}, {}};
    std::string tok;
    int col = 0, tok_col = 0;
    auto flush = [&]() {
      if (!tok.empty()) {
        line.tokens.push_back(tok);
        line.columns.push_back(tok_col);
        tok.clear();
      }
    };
    for (char c : raw) {
      ++col;
      if (std::isspace(static_cast<unsigned char>(c)) || c == '=') {
        flush();
      } else {
        if (tok.empty()) tok_col = col;
        tok += c;
      }
    }
    flush();
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Rat parse_prob(const Line& line, size_t tok_index) {
  try {
    return parse_rational(line.tokens[tok_index]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line.number, line.columns[tok_index], e.what());
  }
}

}  // namespace

TextModel parse_model_file(std::istream& in) {
  std::string alphabet_letters;
  std::string model_kind;
  std::vector<std::pair<char, Rat>> p_rows, init_rows;
  std::vector<std::tuple<char, char, Rat>> trans_rows;

  for (const Line& line : tokenize(in)) {
    const auto& t = line.tokens;
    if (t[0] == "alphabet:" || t[0] == "alphabet") {
      if (t.size() != 2) throw ParseError(line.number, 1, "expected: alphabet: <letters>");
      alphabet_letters = t[1];
    } else if (t[0] == "model:" || t[0] == "model") {
      if (t.size() != 2) throw ParseError(line.number, 1, "expected: model: bernoulli|markov1");
      model_kind = t[1];
      if (model_kind != "bernoulli" && model_kind != "markov1")
        throw ParseError(line.number, line.columns[1], "unknown model '" + model_kind + "'");
    } else if (t[0] == "p") {
      if (t.size() != 3 || t[1].size() != 1)
        throw ParseError(line.number, 1, "expected: p <letter> = <rational>");
      p_rows.emplace_back(t[1][0], parse_prob(line, 2));
    } else if (t[0] == "init") {
      if (t.size() != 3 || t[1].size() != 1)
        throw ParseError(line.number, 1, "expected: init <letter> = <rational>");
      init_rows.emplace_back(t[1][0], parse_prob(line, 2));
    } else if (t[0] == "trans") {
      if (t.size() != 4 || t[1].size() != 1 || t[2].size() != 1)
        throw ParseError(line.number, 1, "expected: trans <letter> <letter> = <rational>");
      trans_rows.emplace_back(t[1][0], t[2][0], parse_prob(line, 3));
    } else {
      throw ParseError(line.number, line.columns[0], "unknown directive '" + t[0] + "'");
    }
  }

  if (alphabet_letters.empty()) throw ParseError(0, 0, "missing 'alphabet:' line");
  if (model_kind.empty()) throw ParseError(0, 0, "missing 'model:' line");
  Alphabet alphabet(alphabet_letters);
  const size_t k = static_cast<size_t>(alphabet.size());

  auto fill = [&](const std::vector<std::pair<char, Rat>>& rows, const char* what) {
    std::vector<Rat> probs(k, Rat(0));
    std::vector<bool> seen(k, false);
    for (const auto& [c, p] : rows) {
      alphabet.check_word(std::string(1, c));
      size_t i = static_cast<size_t>(alphabet.index(c));
      if (seen[i])
        throw ValidationError(ValidationError::Kind::Duplicate,
                              std::string(what) + " repeated for letter '" + c + "'");
      seen[i] = true;
      probs[i] = p;
    }
    return probs;
  };

  if (model_kind == "bernoulli") {
    if (!init_rows.empty() || !trans_rows.empty())
      throw ValidationError(ValidationError::Kind::BadProbability,
                            "init/trans lines not allowed in a bernoulli model");
    return TextModel::bernoulli(alphabet, fill(p_rows, "p"));
  }
  if (!p_rows.empty())
    throw ValidationError(ValidationError::Kind::BadProbability,
                          "p lines not allowed in a markov1 model");
  std::vector<std::vector<Rat>> trans(k, std::vector<Rat>(k, Rat(0)));
  for (const auto& [from, to, p] : trans_rows) {
    alphabet.check_word(std::string(1, from));
    alphabet.check_word(std::string(1, to));
    trans[static_cast<size_t>(alphabet.index(from))]
         [static_cast<size_t>(alphabet.index(to))] = p;
  }
  return TextModel::markov1(alphabet, fill(init_rows, "init"), std::move(trans));
}

TextModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, 0, "cannot open model file '" + path + "'");
  return parse_model_file(in);
}

}  // namespace clumpstat
