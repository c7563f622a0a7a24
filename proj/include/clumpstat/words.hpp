#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace clumpstat {

// Ordered alphabet of distinct single-character symbols. The construction
// order is fixed and drives deterministic text enumeration.
class Alphabet {
 public:
  explicit Alphabet(std::string letters);

  int size() const { return static_cast<int>(letters_.size()); }
  char letter(int i) const { return letters_[static_cast<size_t>(i)]; }
  const std::string& letters() const { return letters_; }

  // -1 when the symbol does not belong to the alphabet.
  int index(char c) const { return index_[static_cast<unsigned char>(c)]; }
  bool contains(char c) const { return index(c) >= 0; }
  // Throws ValidationError(BadSymbol) if some symbol of w is foreign.
  void check_word(const std::string& w) const;

  bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }

 private:
  std::string letters_;
  int index_[256];
};

// Letters of `words` in first-appearance-sorted order; convenience for the
// CLI's default model.
Alphabet alphabet_from_words(const std::vector<std::string>& words);

// A set of words u_1..u_r, each of length >= 2, no word a factor of another.
class ReducedWordSet {
 public:
  // Throws ValidationError: MinLength, Duplicate, or NotReduced (naming the
  // offending pair). Word order is preserved.
  static ReducedWordSet validate(std::vector<std::string> words, const Alphabet& alphabet);

  const std::vector<std::string>& words() const { return words_; }
  const std::string& word(int i) const { return words_[static_cast<size_t>(i)]; }
  int size() const { return static_cast<int>(words_.size()); }
  const Alphabet& alphabet() const { return alphabet_; }

 private:
  ReducedWordSet(std::vector<std::string> words, Alphabet alphabet)
      : words_(std::move(words)), alphabet_(std::move(alphabet)) {}

  std::vector<std::string> words_;
  Alphabet alphabet_;
};

// Calls fn once per text of length n, in lexicographic order of the
// alphabet. n = 0 yields the empty text.
void for_each_text(const Alphabet& alphabet, int n,
                   const std::function<void(const std::string&)>& fn);

// All |A|^n texts, materialized; intended for small n (tests, examples).
std::vector<std::string> enumerate_texts(const Alphabet& alphabet, int n);

// The index-th text of length n in lexicographic order (row-major odometer).
// Supports prefix-partitioned parallel enumeration: indices
// [p*|A|^(n-k), (p+1)*|A|^(n-k)) share the length-k prefix number p.
std::string text_at(const Alphabet& alphabet, int n, uint64_t index);

// |A|^n with overflow saturation to UINT64_MAX.
uint64_t text_count(const Alphabet& alphabet, int n);

}  // namespace clumpstat
