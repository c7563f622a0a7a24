#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "clumpstat/rational.hpp"
#include "clumpstat/words.hpp"

namespace clumpstat {

enum class ModelKind { Bernoulli, Markov1 };

// Random-text source: memoryless letters (Bernoulli) or a first-order
// Markov chain with an explicit initial distribution. Probabilities are
// exact rationals; each distribution must sum to exactly 1.
class TextModel {
 public:
  static TextModel bernoulli(Alphabet alphabet, std::vector<Rat> letter_probs);
  static TextModel uniform(Alphabet alphabet);
  static TextModel markov1(Alphabet alphabet, std::vector<Rat> initial,
                           std::vector<std::vector<Rat>> transition);

  ModelKind kind() const { return kind_; }
  bool is_bernoulli() const { return kind_ == ModelKind::Bernoulli; }
  const Alphabet& alphabet() const { return alphabet_; }

  // Bernoulli letter probability (by alphabet index or symbol).
  const Rat& letter_prob(int i) const { return letter_probs_[static_cast<size_t>(i)]; }
  Rat letter_prob(char c) const;

  const Rat& initial_prob(int i) const { return initial_[static_cast<size_t>(i)]; }
  const Rat& transition_prob(int from, int to) const {
    return transition_[static_cast<size_t>(from)][static_cast<size_t>(to)];
  }

  // pi_w: Bernoulli product of letter probabilities, or
  // initial(w_1) * prod transition(w_i, w_{i+1}) under Markov1.
  // Throws ValidationError(BadSymbol) on foreign symbols.
  Rat word_probability(const std::string& w) const;

  Rat max_letter_prob() const;  // p-bar (Bernoulli)
  Rat min_letter_prob() const;  // p-floor (Bernoulli)

 private:
  TextModel(ModelKind kind, Alphabet alphabet)
      : kind_(kind), alphabet_(std::move(alphabet)) {}

  ModelKind kind_;
  Alphabet alphabet_;
  std::vector<Rat> letter_probs_;
  std::vector<Rat> initial_;
  std::vector<std::vector<Rat>> transition_;
};

// Line-oriented model file:
//   alphabet: ab
//   model: bernoulli         (or markov1)
//   p a = 1/3                (Bernoulli rows)
//   init a = 1/2             (Markov rows)
//   trans a b = 1/4
// Rationals are "num/den" or integers; '#' starts a comment.
// Throws ParseError (syntax) or ValidationError (bad sums / ranges).
TextModel parse_model_file(std::istream& in);
TextModel load_model_file(const std::string& path);

}  // namespace clumpstat
