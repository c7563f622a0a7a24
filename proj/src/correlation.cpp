#include "clumpstat/correlation.hpp"

#include <algorithm>
#include <map>

#include "clumpstat/multipoly.hpp"

namespace clumpstat {

namespace {

bool length_lex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Overlap scan shared by the three set constructors. For overlap length o,
// a suffix of h1 of length o equal to a prefix of h2 yields e = h2[o..].
std::vector<std::string> overlap_extensions(const std::string& h1,
                                            const std::string& h2,
                                            bool require_nonempty_e_prime) {
  std::vector<std::string> out;
  size_t max_o = std::min(h1.size(), h2.size() - 1);
  if (require_nonempty_e_prime && h1.size() >= 1)
    max_o = std::min(max_o, h1.size() - 1);
  for (size_t o = 1; o <= max_o; ++o) {
    if (h1.compare(h1.size() - o, o, h2, 0, o) == 0)
      out.push_back(h2.substr(o));
  }
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

}  // namespace

CorrelationSet autocorrelation_set(const std::string& w) {
  CorrelationSet c{w, w, overlap_extensions(w, w, false), true};
  return c;
}

CorrelationSet correlation_set(const std::string& h1, const std::string& h2) {
  CorrelationSet c{h1, h2, overlap_extensions(h1, h2, false), h1 == h2};
  return c;
}

ExtensionSet right_extension_set(const std::string& h1, const std::string& h2) {
  return ExtensionSet{h1, h2, overlap_extensions(h1, h2, true)};
}

PrefixCode prefix_code(const CorrelationSet& c) {
  PrefixCode code;
  for (const auto& e : c.words) {
    bool has_proper_prefix = false;
    for (const auto& f : c.words) {
      if (f.size() < e.size() && e.compare(0, f.size(), f) == 0) {
        has_proper_prefix = true;
        break;
      }
    }
    if (!has_proper_prefix) code.words.push_back(e);
  }
  std::sort(code.words.begin(), code.words.end(), length_lex_less);
  return code;
}

namespace {

struct TrieNode {
  std::map<char, int> child;
  bool leaf = false;
};

}  // namespace

PrefixCode prefix_code_by_trie(const CorrelationSet& c) {
  // c.words is sorted by increasing length, matching the shift order of the
  // construction (longer shift -> longer trailing suffix).
  std::vector<TrieNode> trie(1);
  for (const auto& suffix : c.words) {
    int node = 0;
    bool dropped = false;
    for (size_t i = 0; i < suffix.size(); ++i) {
      if (trie[static_cast<size_t>(node)].leaf) {
        dropped = true;  // reached an existing leaf: a stored word is a prefix
        break;
      }
      auto it = trie[static_cast<size_t>(node)].child.find(suffix[i]);
      if (it == trie[static_cast<size_t>(node)].child.end()) {
        trie.emplace_back();
        int fresh = static_cast<int>(trie.size()) - 1;
        trie[static_cast<size_t>(node)].child[suffix[i]] = fresh;
        node = fresh;
      } else {
        node = it->second;
      }
    }
    if (dropped || trie[static_cast<size_t>(node)].leaf) continue;
    // Landing on an interior node: the new suffix is a proper prefix of
    // stored words; it supersedes them.
    trie[static_cast<size_t>(node)].leaf = true;
    trie[static_cast<size_t>(node)].child.clear();
  }
  PrefixCode code;
  std::string path;
  // Depth-first harvest of leaves.
  struct Frame {
    int node;
    std::map<char, int>::const_iterator next;
  };
  std::vector<Frame> stack{{0, trie[0].child.begin()}};
  if (trie[0].leaf) code.words.push_back("");
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == trie[static_cast<size_t>(top.node)].child.end()) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    auto [c2, child] = *top.next;
    ++top.next;
    path += c2;
    if (trie[static_cast<size_t>(child)].leaf) {
      code.words.push_back(path);
      path.pop_back();
    } else {
      stack.push_back({child, trie[static_cast<size_t>(child)].child.begin()});
    }
  }
  std::sort(code.words.begin(), code.words.end(), length_lex_less);
  return code;
}

std::vector<std::vector<PrefixCode>> prefix_code_matrix(const ReducedWordSet& set) {
  const int r = set.size();
  std::vector<std::vector<PrefixCode>> mat(static_cast<size_t>(r),
                                           std::vector<PrefixCode>(static_cast<size_t>(r)));
  for (int i = 0; i < r; ++i) {
    // Minimality is a property of the whole row: a proper prefix of e in any
    // C_ik marks an intermediate occurrence of w_k inside w_i e, so e is a
    // chained extension, not a minimal one. Filtering within C_ij alone
    // would keep composites like baa in E_11 of {aabaa, baab} (= b . aa via
    // baab) and the kernel star would count those clumps twice.
    std::vector<std::string> row_union;
    std::vector<CorrelationSet> row(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) {
      row[static_cast<size_t>(j)] = correlation_set(set.word(i), set.word(j));
      for (const auto& e : row[static_cast<size_t>(j)].words) row_union.push_back(e);
    }
    for (int j = 0; j < r; ++j) {
      PrefixCode code;
      for (const auto& e : row[static_cast<size_t>(j)].words) {
        bool has_proper_prefix = false;
        for (const auto& f : row_union)
          if (f.size() < e.size() && e.compare(0, f.size(), f) == 0) {
            has_proper_prefix = true;
            break;
          }
        if (!has_proper_prefix) code.words.push_back(e);
      }
      std::sort(code.words.begin(), code.words.end(), length_lex_less);
      mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(code);
    }
  }
  return mat;
}

std::optional<std::vector<std::string>> suffix_chain_factors(const PrefixCode& code) {
  std::vector<std::string> sorted = code.words;
  std::sort(sorted.begin(), sorted.end(), length_lex_less);
  std::vector<std::string> factors;
  std::string previous;
  for (const auto& k : sorted) {
    if (k.size() <= previous.size()) return std::nullopt;
    if (!previous.empty() &&
        k.compare(k.size() - previous.size(), previous.size(), previous) != 0)
      return std::nullopt;
    factors.push_back(k.substr(0, k.size() - previous.size()));
    previous = k;
  }
  return factors;
}

MultiPoly correlation_polynomial(const TextModel& model, const CorrelationSet& c) {
  MultiPoly poly = c.has_epsilon ? MultiPoly::constant(1) : MultiPoly();
  for (const auto& e : c.words)
    poly += MultiPoly::monomial(model.word_probability(e), var::z,
                                static_cast<unsigned>(e.size()));
  return poly;
}

MultiPoly prefix_code_polynomial(const TextModel& model, const PrefixCode& k) {
  MultiPoly poly;
  for (const auto& e : k.words)
    poly += MultiPoly::monomial(model.word_probability(e), var::z,
                                static_cast<unsigned>(e.size()));
  return poly;
}

}  // namespace clumpstat
