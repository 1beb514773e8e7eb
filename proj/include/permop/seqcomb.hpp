#pragma once

// Non-repeating sequences, unshuffles (ordered lists of disjoint
// subsequences) and the face posets of permutahedra built from them.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "permop/poset.hpp"

namespace permop {

using Letter = int;

/// A list of distinct positive integers.
class NrSequence {
 public:
  NrSequence() = default;
  NrSequence(std::initializer_list<Letter> letters)
      : NrSequence(std::vector<Letter>(letters)) {}
  explicit NrSequence(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("NrSequence: empty");
    std::vector<Letter> s = letters_;
    std::sort(s.begin(), s.end());
    if (s.front() <= 0) throw std::invalid_argument("NrSequence: letters must be positive");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("NrSequence: repeated letter");
  }

  /// Parses "3214" (single digits) or "10,2,7" (comma separated).
  static NrSequence parse(std::string_view text) {
    std::vector<Letter> out;
    if (text.find(',') != std::string_view::npos) {
      std::string s(text);
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("NrSequence: empty item");
        out.push_back(std::stoi(item));
      }
    } else {
      for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("NrSequence: bad character");
        out.push_back(c - '0');
      }
    }
    return NrSequence(std::move(out));
  }

  /// The permutation 12...n.
  static NrSequence identity(int n) {
    std::vector<Letter> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return NrSequence(std::move(v));
  }

  int size() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](int i) const { return letters_.at(static_cast<std::size_t>(i)); }
  Letter front() const { return letters_.front(); }

  std::vector<Letter> sorted_letters() const {
    std::vector<Letter> s = letters_;
    std::sort(s.begin(), s.end());
    return s;
  }

  /// Position of letter `x` (0-based), or -1.
  int position(Letter x) const {
    auto it = std::find(letters_.begin(), letters_.end(), x);
    return it == letters_.end() ? -1 : static_cast<int>(it - letters_.begin());
  }

  bool is_subsequence_of(const NrSequence& phi) const {
    int last = -1;
    for (Letter x : letters_) {
      int p = phi.position(x);
      if (p <= last) return false;
      last = p;
    }
    return true;
  }

  /// True when the letters are exactly 1..n.
  bool is_permutation() const {
    auto s = sorted_letters();
    for (int i = 0; i < size(); ++i)
      if (s[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
  }

  std::string to_string() const {
    bool compact = std::all_of(letters_.begin(), letters_.end(), [](Letter x) { return x < 10; });
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(letters_[i]);
    }
    return out;
  }

  friend bool operator==(const NrSequence&, const NrSequence&) = default;
  friend auto operator<=>(const NrSequence&, const NrSequence&) = default;

 private:
  std::vector<Letter> letters_;
};

/// sigma with its first letter removed.
inline NrSequence remove_first(const NrSequence& sigma) {
  if (sigma.size() < 2) throw std::invalid_argument("remove_first: sequence of length 1");
  return NrSequence(std::vector<Letter>(sigma.letters().begin() + 1, sigma.letters().end()));
}

/// Ordered list of pairwise disjoint nonempty sequences, written l1|l2|...|lk.
class Unshuffle {
 public:
  Unshuffle() = default;
  explicit Unshuffle(std::vector<NrSequence> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("Unshuffle: no blocks");
    std::vector<Letter> all;
    for (const auto& b : blocks_) all.insert(all.end(), b.letters().begin(), b.letters().end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw std::invalid_argument("Unshuffle: blocks are not disjoint");
  }

  /// Parses "321|4" or "10,3|2".
  static Unshuffle parse(std::string_view text) {
    std::vector<NrSequence> blocks;
    std::size_t start = 0;
    while (true) {
      std::size_t bar = text.find('|', start);
      blocks.push_back(NrSequence::parse(text.substr(start, bar - start)));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    return Unshuffle(std::move(blocks));
  }

  /// The degree-0 element phi_1|phi_2|...|phi_n.
  static Unshuffle singletons(const NrSequence& phi) {
    std::vector<NrSequence> blocks;
    for (Letter x : phi.letters()) blocks.push_back(NrSequence{x});
    return Unshuffle(std::move(blocks));
  }

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<NrSequence>& blocks() const { return blocks_; }
  const NrSequence& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }

  int letter_count() const {
    int n = 0;
    for (const auto& b : blocks_) n += b.size();
    return n;
  }
  int degree() const { return letter_count() - block_count(); }

  std::vector<Letter> letter_set() const {
    std::vector<Letter> all;
    for (const auto& b : blocks_) all.insert(all.end(), b.letters().begin(), b.letters().end());
    std::sort(all.begin(), all.end());
    return all;
  }

  /// Juxtaposition of the blocks.
  NrSequence concatenation() const {
    std::vector<Letter> all;
    for (const auto& b : blocks_) all.insert(all.end(), b.letters().begin(), b.letters().end());
    return NrSequence(std::move(all));
  }

  std::vector<int> block_sizes() const {
    std::vector<int> m;
    for (const auto& b : blocks_) m.push_back(b.size());
    return m;
  }

  bool is_unshuffle_of(const NrSequence& phi) const {
    if (letter_set() != phi.sorted_letters()) return false;
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [&](const NrSequence& b) { return b.is_subsequence_of(phi); });
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i > 0) out += '|';
      out += blocks_[i].to_string();
    }
    return out;
  }

  friend bool operator==(const Unshuffle&, const Unshuffle&) = default;
  friend auto operator<=>(const Unshuffle&, const Unshuffle&) = default;

 private:
  std::vector<NrSequence> blocks_;
};

namespace detail {

inline void choose_positions(const std::vector<int>& avail, int m, std::size_t from,
                             std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < avail.size(); ++i) {
    if (static_cast<int>(avail.size() - i) < m - static_cast<int>(cur.size())) break;
    cur.push_back(avail[i]);
    choose_positions(avail, m, i + 1, cur, out);
    cur.pop_back();
  }
}

inline void unshuffle_rec(const NrSequence& phi, const std::vector<int>& parts, std::size_t part,
                          std::vector<int>& avail, std::vector<NrSequence>& blocks,
                          std::vector<Unshuffle>& out) {
  if (part == parts.size()) {
    out.emplace_back(blocks);
    return;
  }
  std::vector<std::vector<int>> choices;
  std::vector<int> cur;
  choose_positions(avail, parts[part], 0, cur, choices);
  for (const auto& pos : choices) {
    std::vector<Letter> letters;
    for (int p : pos) letters.push_back(phi[p]);
    std::vector<int> rest;
    std::set_difference(avail.begin(), avail.end(), pos.begin(), pos.end(),
                        std::back_inserter(rest));
    std::swap(avail, rest);
    blocks.emplace_back(std::move(letters));
    unshuffle_rec(phi, parts, part + 1, avail, blocks, out);
    blocks.pop_back();
    std::swap(avail, rest);
  }
}

/// All compositions of n into positive parts, in lexicographic order.
inline void compositions_rec(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    cur.push_back(first);
    compositions_rec(n - first, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  detail::compositions_rec(n, cur, out);
  return out;
}

inline std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  for (auto& c : compositions(n))
    if (static_cast<int>(c.size()) == k) out.push_back(std::move(c));
  return out;
}

/// dSh_phi[m_1,...,m_k]: every unshuffle of phi with block lengths `parts`,
/// sorted lexicographically by block contents.
inline std::vector<Unshuffle> unshuffles(const NrSequence& phi, const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("unshuffles: no parts");
  if (std::any_of(parts.begin(), parts.end(), [](int m) { return m <= 0; }))
    throw std::invalid_argument("unshuffles: parts must be positive");
  if (std::accumulate(parts.begin(), parts.end(), 0) != phi.size())
    throw std::invalid_argument("unshuffles: parts do not sum to the sequence length");
  std::vector<int> avail(static_cast<std::size_t>(phi.size()));
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<NrSequence> blocks;
  std::vector<Unshuffle> out;
  detail::unshuffle_rec(phi, parts, 0, avail, blocks, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// dSh_phi(k): all unshuffles of phi into k blocks.
inline std::vector<Unshuffle> unshuffles_into(const NrSequence& phi, int k) {
  std::vector<Unshuffle> out;
  for (const auto& parts : compositions(phi.size(), k)) {
    auto part = unshuffles(phi, parts);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// dSh_phi: all unshuffles of phi.
inline std::vector<Unshuffle> all_unshuffles(const NrSequence& phi) {
  std::vector<Unshuffle> out;
  for (const auto& parts : compositions(phi.size())) {
    auto part = unshuffles(phi, parts);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// True when `h` is a shuffle of `lists` (each list appears in h in order).
inline bool is_shuffle_of(const NrSequence& h, const std::vector<NrSequence>& lists) {
  std::size_t total = 0;
  for (const auto& l : lists) {
    total += static_cast<std::size_t>(l.size());
    if (!l.is_subsequence_of(h)) return false;
  }
  return total == static_cast<std::size_t>(h.size());
}

/// Order on unshuffles generated by merging adjacent blocks into a shuffle.
///
/// a <= b iff a's blocks split into consecutive runs, one per block of b,
/// with each block of b a shuffle of its run.
inline bool poset_leq(const Unshuffle& a, const Unshuffle& b) {
  if (a.letter_set() != b.letter_set())
    throw std::invalid_argument("poset_leq: unshuffles of different letter sets");
  int next = 0;
  for (const auto& target : b.blocks()) {
    std::vector<Letter> tset = target.sorted_letters();
    std::vector<NrSequence> run;
    std::size_t covered = 0;
    while (covered < tset.size()) {
      if (next >= a.block_count()) return false;
      const auto& blk = a.block(next++);
      for (Letter x : blk.letters())
        if (!std::binary_search(tset.begin(), tset.end(), x)) return false;
      covered += static_cast<std::size_t>(blk.size());
      run.push_back(blk);
    }
    if (!is_shuffle_of(target, run)) return false;
  }
  return next == a.block_count();
}

/// All shuffles of two disjoint sequences, in lexicographic order.
inline std::vector<NrSequence> shuffles(const NrSequence& x, const NrSequence& y) {
  std::vector<NrSequence> out;
  const int n = x.size() + y.size();
  std::vector<int> avail(static_cast<std::size_t>(n));
  std::iota(avail.begin(), avail.end(), 0);
  std::vector<std::vector<int>> choices;
  std::vector<int> cur;
  detail::choose_positions(avail, x.size(), 0, cur, choices);
  for (const auto& pos : choices) {
    std::vector<Letter> h(static_cast<std::size_t>(n));
    std::size_t xi = 0, yi = 0, pi = 0;
    for (int p = 0; p < n; ++p) {
      if (pi < pos.size() && pos[pi] == p) {
        h[static_cast<std::size_t>(p)] = x.letters()[xi++];
        ++pi;
      } else {
        h[static_cast<std::size_t>(p)] = y.letters()[yi++];
      }
    }
    out.emplace_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Restriction of phi to the letters in `keep` (order of phi kept).
inline NrSequence restrict_to(const NrSequence& phi, const std::vector<Letter>& keep_sorted) {
  std::vector<Letter> out;
  for (Letter x : phi.letters())
    if (std::binary_search(keep_sorted.begin(), keep_sorted.end(), x)) out.push_back(x);
  return NrSequence(std::move(out));
}

using UnshufflePoset = FinitePoset<Unshuffle>;

/// The face poset J_sigma: unshuffles of sigma graded by degree.
inline UnshufflePoset build_J_sigma(const NrSequence& sigma) {
  std::vector<Unshuffle> elems = all_unshuffles(sigma);
  std::stable_sort(elems.begin(), elems.end(), [](const Unshuffle& a, const Unshuffle& b) {
    return a.degree() < b.degree();
  });
  std::map<Unshuffle, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index.emplace(elems[i], i);
  std::vector<int> grades;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
    const auto& a = elems[i];
    grades.push_back(a.degree());
    for (int j = 0; j + 1 < a.block_count(); ++j) {
      std::vector<Letter> merged_set = a.block(j).sorted_letters();
      auto rhs = a.block(j + 1).sorted_letters();
      merged_set.insert(merged_set.end(), rhs.begin(), rhs.end());
      std::sort(merged_set.begin(), merged_set.end());
      std::vector<NrSequence> blocks = a.blocks();
      blocks[j] = restrict_to(sigma, merged_set);
      blocks.erase(blocks.begin() + j + 1);
      covers.emplace_back(i, index.at(Unshuffle(std::move(blocks))));
    }
  }
  return UnshufflePoset(std::move(elems), std::move(grades), std::move(covers));
}

/// All permutations of 1..n in lexicographic order.
inline std::vector<NrSequence> permutations(int n) {
  std::vector<Letter> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<NrSequence> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// J(n): the union of all J_sigma, sigma in S_n, ordered by merging adjacent
/// blocks into arbitrary shuffles.
inline UnshufflePoset build_J_n(int n) {
  if (n < 1) throw std::invalid_argument("build_J_n: n must be positive");
  std::vector<Unshuffle> elems;
  for (const auto& perm : permutations(n)) {
    for (std::uint32_t cuts = 0; cuts < (std::uint32_t{1} << (n - 1)); ++cuts) {
      std::vector<NrSequence> blocks;
      std::vector<Letter> cur;
      for (int i = 0; i < n; ++i) {
        cur.push_back(perm[i]);
        if (i == n - 1 || (cuts >> i) & 1u) {
          blocks.emplace_back(cur);
          cur.clear();
        }
      }
      elems.emplace_back(std::move(blocks));
    }
  }
  std::sort(elems.begin(), elems.end());
  std::stable_sort(elems.begin(), elems.end(), [](const Unshuffle& a, const Unshuffle& b) {
    return a.degree() < b.degree();
  });
  std::map<Unshuffle, int> index;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) index.emplace(elems[i], i);
  std::vector<int> grades;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
    const auto& a = elems[i];
    grades.push_back(a.degree());
    for (int j = 0; j + 1 < a.block_count(); ++j) {
      for (const auto& h : shuffles(a.block(j), a.block(j + 1))) {
        std::vector<NrSequence> blocks = a.blocks();
        blocks[j] = h;
        blocks.erase(blocks.begin() + j + 1);
        covers.emplace_back(i, index.at(Unshuffle(std::move(blocks))));
      }
    }
  }
  return UnshufflePoset(std::move(elems), std::move(grades), std::move(covers));
}

/// Cells covered by `a` in J(n): split one block into two nonempty blocks
/// (every 2-block unshuffle of that block).  Listed with multiplicity.
inline std::vector<Unshuffle> refinements(const Unshuffle& a) {
  std::vector<Unshuffle> out;
  for (int i = 0; i < a.block_count(); ++i) {
    const auto& blk = a.block(i);
    for (int k = 1; k < blk.size(); ++k) {
      for (const auto& split : unshuffles(blk, {k, blk.size() - k})) {
        std::vector<NrSequence> blocks = a.blocks();
        blocks[i] = split.block(0);
        blocks.insert(blocks.begin() + i + 1, split.block(1));
        out.emplace_back(std::move(blocks));
      }
    }
  }
  return out;
}

inline nlohmann::json to_json(const Unshuffle& u) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : u.blocks()) blocks.push_back(b.letters());
  return blocks;
}

/// {"elements":[{"id","blocks","grade"}],"covers":[[lo,hi]]}
inline nlohmann::json poset_to_json(const UnshufflePoset& p) {
  nlohmann::json elems = nlohmann::json::array();
  for (int i = 0; i < p.size(); ++i)
    elems.push_back({{"id", i}, {"blocks", to_json(p.element(i))}, {"grade", p.grade(i)}});
  nlohmann::json covers = nlohmann::json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
  return {{"elements", elems}, {"covers", covers}};
}

}  // namespace permop
