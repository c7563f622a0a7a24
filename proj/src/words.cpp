#include "clumpstat/words.hpp"

#include <algorithm>
#include <set>

#include "clumpstat/errors.hpp"

namespace clumpstat {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty())
    throw ValidationError(ValidationError::Kind::BadSymbol, "empty alphabet");
  std::fill(std::begin(index_), std::end(index_), -1);
  for (size_t i = 0; i < letters_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(letters_[i]);
    if (index_[c] >= 0)
      throw ValidationError(ValidationError::Kind::Duplicate,
                            std::string("duplicate alphabet symbol '") + letters_[i] + "'");
    index_[c] = static_cast<int>(i);
  }
}

void Alphabet::check_word(const std::string& w) const {
  for (char c : w)
    if (!contains(c))
      throw ValidationError(ValidationError::Kind::BadSymbol,
                            std::string("symbol '") + c + "' not in alphabet " + letters_);
}

Alphabet alphabet_from_words(const std::vector<std::string>& words) {
  std::set<char> seen;
  std::string letters;
  for (const auto& w : words)
    for (char c : w)
      if (seen.insert(c).second) letters += c;
  std::sort(letters.begin(), letters.end());
  return Alphabet(letters);
}

ReducedWordSet ReducedWordSet::validate(std::vector<std::string> words,
                                        const Alphabet& alphabet) {
  if (words.empty())
    throw ValidationError(ValidationError::Kind::MinLength, "empty word set");
  for (const auto& w : words) {
    if (w.size() < 2)
      throw ValidationError(ValidationError::Kind::MinLength,
                            "MinLength: word '" + w + "' has length < 2");
    alphabet.check_word(w);
  }
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j)
      if (words[i] == words[j])
        throw ValidationError(ValidationError::Kind::Duplicate,
                              "Duplicate: word '" + words[i] + "'");
  // Naive substring scan over ordered pairs; sets stay tiny (r <= ~8).
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      if (words[j].find(words[i]) != std::string::npos)
        throw ValidationError(ValidationError::Kind::NotReduced,
                              "NotReduced: '" + words[i] + "' is a factor of '" +
                                  words[j] + "'");
    }
  return ReducedWordSet(std::move(words), alphabet);
}

void for_each_text(const Alphabet& alphabet, int n,
                   const std::function<void(const std::string&)>& fn) {
  if (n == 0) {
    fn(std::string());
    return;
  }
  std::string text(static_cast<size_t>(n), alphabet.letter(0));
  const int k = alphabet.size();
  while (true) {
    fn(text);
    int pos = n - 1;
    while (pos >= 0 && alphabet.index(text[static_cast<size_t>(pos)]) == k - 1) {
      text[static_cast<size_t>(pos)] = alphabet.letter(0);
      --pos;
    }
    if (pos < 0) break;
    text[static_cast<size_t>(pos)] =
        alphabet.letter(alphabet.index(text[static_cast<size_t>(pos)]) + 1);
  }
}

std::vector<std::string> enumerate_texts(const Alphabet& alphabet, int n) {
  std::vector<std::string> out;
  for_each_text(alphabet, n, [&](const std::string& t) { out.push_back(t); });
  return out;
}

std::string text_at(const Alphabet& alphabet, int n, uint64_t index) {
  std::string text(static_cast<size_t>(n), alphabet.letter(0));
  const uint64_t k = static_cast<uint64_t>(alphabet.size());
  for (int pos = n - 1; pos >= 0; --pos) {
    text[static_cast<size_t>(pos)] = alphabet.letter(static_cast<int>(index % k));
    index /= k;
  }
  return text;
}

uint64_t text_count(const Alphabet& alphabet, int n) {
  uint64_t count = 1;
  const uint64_t k = static_cast<uint64_t>(alphabet.size());
  for (int i = 0; i < n; ++i) {
    if (count > UINT64_MAX / k) return UINT64_MAX;
    count *= k;
  }
  return count;
}

}  // namespace clumpstat
