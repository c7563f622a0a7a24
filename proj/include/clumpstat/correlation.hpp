#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clumpstat/model.hpp"
#include "clumpstat/rational.hpp"
#include "clumpstat/words.hpp"

namespace clumpstat {

// Correlation set of a word pair (h1, h2): all trailing extensions e with
// h1*e = e'*h2 and 0 < |e| < |h2|. For h1 == h2 the empty word is a member
// (autocorrelation); has_epsilon records it since words_ keeps only the
// nonempty elements, sorted by length then lexicographically.
struct CorrelationSet {
  std::string source, target;
  std::vector<std::string> words;
  bool has_epsilon = false;

  // C-circle = C minus epsilon.
  const std::vector<std::string>& nonempty() const { return words; }
};

// Right extension set: same equation with e' constrained to be nonempty.
struct ExtensionSet {
  std::string source, target;
  std::vector<std::string> words;
};

// Prefix-free generator of C-circle-star: C-circle minus C-circle*A+.
struct PrefixCode {
  std::vector<std::string> words;  // sorted by length then lexicographically
};

CorrelationSet autocorrelation_set(const std::string& w);
CorrelationSet correlation_set(const std::string& h1, const std::string& h2);
ExtensionSet right_extension_set(const std::string& h1, const std::string& h2);

// Set-filter definition: elements of C-circle with no proper prefix in
// C-circle. Normative.
PrefixCode prefix_code(const CorrelationSet& c);

// Trie-based construction: suffixes inserted in increasing length order; a
// suffix whose insertion path runs through an existing leaf is dropped, one
// that stops short of stored words replaces them. Must agree with
// prefix_code; kept as the independent second route.
PrefixCode prefix_code_by_trie(const CorrelationSet& c);

// r x r matrix of minimal correlation languages. Entry (i,j) keeps the
// elements of C_ij having no proper prefix anywhere in the row union of
// C_i1..C_ir (epsilon stripped): a prefix in C_ik marks an intermediate
// occurrence of w_k, i.e. a chained extension. For r = 1 this is exactly
// prefix_code of the autocorrelation set.
std::vector<std::vector<PrefixCode>> prefix_code_matrix(const ReducedWordSet& set);

// For a single-word code sorted by length, each element is a proper suffix
// of the next; the factorization K = {q1, q2 q1, ..., qk q_{k-1} ... q1}
// recovers the q_i. Empty when the suffix-chain property fails (possible
// for cross-correlation codes).
std::optional<std::vector<std::string>> suffix_chain_factors(const PrefixCode& code);

// Probability-weighted polynomial helpers (coefficients of z^{|e|}).
// The epsilon element contributes the constant 1.
class MultiPoly;
MultiPoly correlation_polynomial(const TextModel& model, const CorrelationSet& c);
MultiPoly prefix_code_polynomial(const TextModel& model, const PrefixCode& k);

}  // namespace clumpstat
