#pragma once

// Cacti as words: the outside-circle traversal of a b/w tree, operadic
// insertion on words (the overlapping-splitting rule), formal sums of
// cells, and the two Dyer-Lashof iterates.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "permop/seqcomb.hpp"
#include "permop/trees.hpp"

namespace permop {

/// A cactus word: letters may repeat, but never twice in a row.
class CactSequence {
 public:
  CactSequence() = default;
  explicit CactSequence(std::vector<Letter> word) : word_(std::move(word)) {
    if (word_.empty()) throw std::invalid_argument("CactSequence: empty word");
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (word_[i] <= 0) throw std::invalid_argument("CactSequence: letters must be positive");
      if (i && word_[i] == word_[i - 1]) throw std::invalid_argument("CactSequence: repeated consecutive letter");
    }
  }

  /// "12321" (single digits) or "1,2,10,2,1".
  static CactSequence parse(std::string_view text) {
    std::vector<Letter> w;
    if (text.find(',') != std::string_view::npos) {
      std::string tok;
      std::istringstream in{std::string(text)};
      while (std::getline(in, tok, ',')) {
        try {
          w.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw std::invalid_argument("CactSequence::parse: bad letter '" + tok + "'");
        }
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw std::invalid_argument("CactSequence::parse: bad character in '" + std::string(text) + "'");
        w.push_back(c - '0');
      }
    }
    return CactSequence(std::move(w));
  }

  const std::vector<Letter>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }

  std::vector<Letter> label_set() const {
    std::vector<Letter> s = word_;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  int arity() const { return static_cast<int>(label_set().size()); }
  int degree() const { return static_cast<int>(word_.size()) - arity(); }

  std::string to_string() const {
    const bool small = std::all_of(word_.begin(), word_.end(), [](Letter x) { return x < 10; });
    std::string s;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (!small && i) s += ',';
      s += std::to_string(word_[i]);
    }
    return s;
  }

  CactSequence relabeled(const std::function<Letter(Letter)>& f) const {
    std::vector<Letter> w;
    for (Letter x : word_) w.push_back(f(x));
    return CactSequence(std::move(w));
  }

  friend bool operator==(const CactSequence&, const CactSequence&) = default;
  friend auto operator<=>(const CactSequence&, const CactSequence&) = default;

 private:
  std::vector<Letter> word_;
};

// ---------------------------------------------------------------------------
// Trees <-> words

namespace detail {

inline void word_of_black(const BlackNode& b, std::vector<Letter>& out);

inline void word_of_white(const WhiteNode& w, std::vector<Letter>& out) {
  out.push_back(w.label);
  for (const auto& c : w.blacks) {
    word_of_black(c, out);
    out.push_back(w.label);
  }
}

inline void word_of_black(const BlackNode& b, std::vector<Letter>& out) {
  for (const auto& w : b.whites) word_of_white(w, out);
}

/// Inverse traversal on w[i, j); a white lobe runs from its first to its last occurrence.
inline BlackNode black_of_word(const std::vector<Letter>& w, std::size_t i, std::size_t j) {
  BlackNode b;
  while (i < j) {
    const Letter v = w[i];
    std::vector<std::size_t> occ;
    for (std::size_t p = i; p < j; ++p)
      if (w[p] == v) occ.push_back(p);
    WhiteNode node{v, {}};
    for (std::size_t t = 0; t + 1 < occ.size(); ++t) {
      if (occ[t] + 1 == occ[t + 1]) throw std::invalid_argument("empty arc");
      node.blacks.push_back(black_of_word(w, occ[t] + 1, occ[t + 1]));
    }
    b.whites.push_back(std::move(node));
    i = occ.back() + 1;
  }
  return b;
}

}  // namespace detail

/// Walks around the outside circle recording the lobe label on each arc.
inline CactSequence tree_to_sequence(const BWTree& tau) {
  std::vector<Letter> w;
  detail::word_of_black(tau.root(), w);
  return CactSequence(std::move(w));
}

/// Rebuilds the tree; rejects words that are not traversals.
inline BWTree sequence_to_tree(const CactSequence& s) {
  BWTree t;
  try {
    t = BWTree(detail::black_of_word(s.word(), 0, s.length()));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("sequence_to_tree: " + s.to_string() + " is not a cactus word");
  }
  if (tree_to_sequence(t) != s)
    throw std::invalid_argument("sequence_to_tree: " + s.to_string() + " is not a cactus word");
  return t;
}

/// True if the word contains i..j..i..j as a subsequence for some i != j.
inline bool has_interleaving(const CactSequence& s) {
  const auto labels = s.label_set();
  const auto& w = s.word();
  for (Letter a : labels)
    for (Letter b : labels) {
      if (a == b) continue;
      const Letter pat[4] = {a, b, a, b};
      int k = 0;
      for (Letter x : w)
        if (k < 4 && x == pat[k]) ++k;
      if (k == 4) return true;
    }
  return false;
}

// ---------------------------------------------------------------------------
// Formal sums

template <class Key>
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(const Key& k, std::int64_t m = 1) { add(k, m); }

  void add(const Key& k, std::int64_t m = 1) {
    if (m == 0) return;
    auto& v = terms_[k];
    v += m;
    if (v == 0) terms_.erase(k);
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, m] : o.terms_) add(k, m);
    return *this;
  }

  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::int64_t multiplicity(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }
  std::vector<Key> support() const {
    std::vector<Key> s;
    for (const auto& [k, m] : terms_) s.push_back(k);
    return s;
  }
  bool all_multiplicities(std::int64_t m) const {
    return std::all_of(terms_.begin(), terms_.end(), [m](const auto& t) { return t.second == m; });
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<Key, std::int64_t> terms_;
};

using SequenceSum = FormalSum<CactSequence>;
using TreeSum = FormalSum<BWTree>;

inline std::string key_string(const CactSequence& s) { return s.to_string(); }
inline std::string key_string(const BWTree& t) { return t.encoding(); }

/// "m x key" lines in key order.
template <class Key>
std::string to_lines(const FormalSum<Key>& f) {
  std::string out;
  for (const auto& [k, m] : f.terms()) out += std::to_string(m) + " x " + key_string(k) + "\n";
  return out;
}

template <class Key>
nlohmann::json to_json(const FormalSum<Key>& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, m] : f.terms()) terms.push_back({{"term", key_string(k)}, {"multiplicity", m}});
  return terms;
}

inline TreeSum to_trees(const SequenceSum& s) {
  TreeSum t;
  for (const auto& [k, m] : s.terms()) t.add(sequence_to_tree(k), m);
  return t;
}

// ---------------------------------------------------------------------------
// Composition

enum class Splitting {
  overlapping,  // consecutive pieces share the letter at each cut
  disjoint,     // pieces partition the word
};

/// The convention used throughout; it is the one under which the
/// insertion lemma and both Dyer-Lashof statements hold.
inline constexpr Splitting kSplitting = Splitting::overlapping;

/// Substitutes pieces of v for the occurrences of i in u.  Labels of v must
/// be disjoint from those of u other than i.  Words with a repeated
/// consecutive letter are dropped.
inline SequenceSum insert(const CactSequence& u, Letter i, const CactSequence& v,
                          Splitting conv = kSplitting) {
  std::vector<std::size_t> occ;
  for (std::size_t p = 0; p < u.length(); ++p)
    if (u.word()[p] == i) occ.push_back(p);
  if (occ.empty()) throw std::invalid_argument("compose: letter " + std::to_string(i) + " absent from " + u.to_string());
  {
    auto a = u.label_set();
    a.erase(std::find(a.begin(), a.end(), i));
    auto b = v.label_set();
    std::vector<Letter> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) throw std::invalid_argument("compose: label collision");
  }
  const std::size_t k = occ.size();
  const std::size_t len = v.length();
  const auto& vw = v.word();
  SequenceSum out;
  // cuts c_1 <= ... <= c_{k-1}; bounds depend on the convention
  std::vector<std::size_t> cuts(k + 1);
  auto emit = [&] {
    std::vector<Letter> w;
    std::size_t t = 0;
    for (std::size_t p = 0; p < u.length(); ++p) {
      if (u.word()[p] != i) {
        w.push_back(u.word()[p]);
        continue;
      }
      std::size_t a = cuts[t], b = cuts[t + 1];
      if (conv == Splitting::overlapping) ++b;  // inclusive end
      w.insert(w.end(), vw.begin() + static_cast<std::ptrdiff_t>(a), vw.begin() + static_cast<std::ptrdiff_t>(b));
      ++t;
    }
    for (std::size_t p = 1; p < w.size(); ++p)
      if (w[p] == w[p - 1]) return;
    out.add(CactSequence(std::move(w)));
  };
  cuts[0] = 0;
  if (conv == Splitting::overlapping) {
    cuts[k] = len - 1;
    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == k) return emit();
      for (std::size_t c = cuts[j - 1]; c <= len - 1; ++c) {
        cuts[j] = c;
        self(self, j + 1);
      }
    };
    rec(rec, 1);
  } else {
    cuts[k] = len;
    auto rec = [&](auto&& self, std::size_t j) -> void {
      if (j == k) return emit();
      for (std::size_t c = cuts[j - 1] + 1; c + (k - j) <= len; ++c) {
        cuts[j] = c;
        self(self, j + 1);
      }
    };
    if (k <= len) rec(rec, 1);
  }
  return out;
}

/// u o_i v with the standard relabeling: v's letters shift by i-1 and u's
/// letters above i shift by arity(v)-1.
inline SequenceSum compose(const CactSequence& u, Letter i, const CactSequence& v,
                           Splitting conv = kSplitting) {
  const auto ul = u.label_set();
  if (!std::binary_search(ul.begin(), ul.end(), i))
    throw std::invalid_argument("compose: letter " + std::to_string(i) + " absent from " + u.to_string());
  const int q = v.arity();
  const auto uu = u.relabeled([&](Letter x) { return x > i ? x + q - 1 : x; });
  const auto vv = v.relabeled([&](Letter x) { return x + i - 1; });
  return insert(uu, i, vv, conv);
}

inline SequenceSum compose(const SequenceSum& u, Letter i, const SequenceSum& v, Splitting conv = kSplitting) {
  SequenceSum out;
  for (const auto& [a, ma] : u.terms())
    for (const auto& [b, mb] : v.terms()) {
      const auto part = compose(a, i, b, conv);
      for (const auto& [c, mc] : part.terms()) out.add(c, ma * mb * mc);
    }
  return out;
}

/// The cactus 121 = B+_1(scc(2)).
inline CactSequence dl_generator() { return CactSequence({1, 2, 1}); }

/// tau o_1 (tau o_1 (... o_1 tau)), n-1 copies of tau = 121.
inline SequenceSum dyer_lashof_right(int n, Splitting conv = kSplitting) {
  if (n < 2) throw std::invalid_argument("dyer_lashof_right: need n >= 2");
  SequenceSum x(dl_generator());
  for (int m = 2; m < n; ++m) x = compose(SequenceSum(dl_generator()), 1, x, conv);
  return x;
}

/// tau o_2 (tau o_2 (... o_2 tau)), n-1 copies of tau = 121.
inline SequenceSum dyer_lashof_left(int n, Splitting conv = kSplitting) {
  if (n < 2) throw std::invalid_argument("dyer_lashof_left: need n >= 2");
  SequenceSum x(dl_generator());
  for (int m = 2; m < n; ++m) x = compose(SequenceSum(dl_generator()), 2, x, conv);
  return x;
}

struct DyerLashofReport {
  int n = 0;
  std::size_t support = 0;
  std::size_t expected = 0;
  bool support_ok = false;
  bool multiplicities_one = false;
  bool ok() const { return support_ok && multiplicities_one; }
};

/// Right iterate: support T^{n-1}_{12..n}, every multiplicity 1.
inline DyerLashofReport check_dyer_lashof_right(int n, Splitting conv = kSplitting) {
  const auto sum = dyer_lashof_right(n, conv);
  DyerLashofReport r{n, sum.size(), 0, false, sum.all_multiplicities(1)};
  const auto top = T_sigma_top(NrSequence::identity(n));
  r.expected = top.size();
  std::set<BWTree> got;
  try {
    for (const auto& s : sum.support()) got.insert(sequence_to_tree(s));
  } catch (const std::invalid_argument&) {
    return r;
  }
  r.support_ok = got == std::set<BWTree>(top.begin(), top.end());
  return r;
}

/// Left iterate: the single caterpillar of the identity, multiplicity 1.
inline DyerLashofReport check_dyer_lashof_left(int n, Splitting conv = kSplitting) {
  const auto sum = dyer_lashof_left(n, conv);
  DyerLashofReport r{n, sum.size(), 1, false, sum.all_multiplicities(1)};
  const auto cat = tree_to_sequence(BWTree::caterpillar(NrSequence::identity(n)));
  r.support_ok = sum.size() == 1 && sum.multiplicity(cat) != 0;
  return r;
}

/// Union over tau' in T^{i-1}_{12..i} of the support of 121 o_1 tau', as trees,
/// against T^i_{12..(i+1)}.
inline bool insertion_lemma_holds(int i, Splitting conv = kSplitting) {
  if (i < 1) throw std::invalid_argument("insertion_lemma_holds: need i >= 1");
  std::set<BWTree> got;
  for (const auto& t : T_sigma_top(NrSequence::identity(i))) {
    const auto sum = compose(dl_generator(), 1, tree_to_sequence(t), conv);
    for (const auto& s : sum.support()) {
      try {
        got.insert(sequence_to_tree(s));
      } catch (const std::invalid_argument&) {
        return false;
      }
    }
  }
  const auto want = T_sigma_top(NrSequence::identity(i + 1));
  return got == std::set<BWTree>(want.begin(), want.end());
}

/// Picks the first convention under which the insertion lemma holds for i <= max_i.
inline std::optional<Splitting> pin_splitting(int max_i = 4) {
  for (Splitting c : {Splitting::overlapping, Splitting::disjoint}) {
    bool ok = true;
    for (int i = 1; i <= max_i && ok; ++i) ok = insertion_lemma_holds(i, c);
    if (ok) return c;
  }
  return std::nullopt;
}

/// Random relabelings pi of all letters: insert(pi u, pi i, pi v) = pi insert(u, i, v).
/// Returns the number of failing trials.
inline int equivariance_spot_check(const std::vector<CactSequence>& pool, int trials, std::uint64_t seed) {
  if (pool.empty()) return 0;
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const auto& u0 = pool[rng() % pool.size()];
    const auto& v0 = pool[rng() % pool.size()];
    const auto ul = u0.label_set();
    const Letter i = ul[rng() % ul.size()];
    auto sum = compose(u0, i, v0);
    // recover the raw insertion the composition performed
    const int q = v0.arity();
    const auto u = u0.relabeled([&](Letter x) { return x > i ? x + q - 1 : x; });
    const auto v = v0.relabeled([&](Letter x) { return x + i - 1; });
    std::vector<Letter> letters = u.label_set();
    for (Letter x : v.label_set()) letters.push_back(x);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    auto image = letters;
    std::shuffle(image.begin(), image.end(), rng);
    for (auto& x : image) x += 10;  // disjoint from the originals
    std::map<Letter, Letter> pi;
    for (std::size_t a = 0; a < letters.size(); ++a) pi[letters[a]] = image[a];
    auto f = [&](Letter x) { return pi.at(x); };
    SequenceSum lhs = insert(u.relabeled(f), pi.at(i), v.relabeled(f));
    SequenceSum rhs;
    for (const auto& [s, m] : sum.terms()) rhs.add(s.relabeled(f), m);
    if (!(lhs == rhs)) ++failures;
  }
  return failures;
}

}  // namespace permop
