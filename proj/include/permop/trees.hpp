#pragma once

// Planted planar black/white trees: the cells of the normalized
// spineless cacti complex.
//
// Encoding.  A black node is written as a bracket group "[...]" holding its
// white children separated by commas; a white node is its label followed by
// the bracket groups of its black children.  Examples:
//   scc(12)            [1,2]
//   1 with child 2     [1[2]]
//   1 with 3 then 2    [1[3][2]]
//   caterpillar 123    [1[2[3]]]

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "permop/seqcomb.hpp"

namespace permop {

struct WhiteNode;

struct BlackNode {
  std::vector<WhiteNode> whites;
};

struct WhiteNode {
  Letter label = 0;
  std::vector<BlackNode> blacks;  // incoming edges, in planar order
};

namespace detail {

inline int compare_black(const BlackNode& a, const BlackNode& b);

inline int compare_white(const WhiteNode& a, const WhiteNode& b) {
  if (a.label != b.label) return a.label < b.label ? -1 : 1;
  const std::size_t n = std::min(a.blacks.size(), b.blacks.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare_black(a.blacks[i], b.blacks[i])) return c;
  if (a.blacks.size() != b.blacks.size()) return a.blacks.size() < b.blacks.size() ? -1 : 1;
  return 0;
}

inline int compare_black(const BlackNode& a, const BlackNode& b) {
  const std::size_t n = std::min(a.whites.size(), b.whites.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare_white(a.whites[i], b.whites[i])) return c;
  if (a.whites.size() != b.whites.size()) return a.whites.size() < b.whites.size() ? -1 : 1;
  return 0;
}

inline void encode_black(const BlackNode& b, std::string& out);

inline void encode_white(const WhiteNode& w, std::string& out) {
  out += std::to_string(w.label);
  for (const auto& b : w.blacks) encode_black(b, out);
}

inline void encode_black(const BlackNode& b, std::string& out) {
  out += '[';
  for (std::size_t i = 0; i < b.whites.size(); ++i) {
    if (i > 0) out += ',';
    encode_white(b.whites[i], out);
  }
  out += ']';
}

inline void collect_labels(const BlackNode& b, std::vector<Letter>& out) {
  for (const auto& w : b.whites) {
    out.push_back(w.label);
    for (const auto& c : w.blacks) collect_labels(c, out);
  }
}

inline int count_blacks(const BlackNode& b) {
  int n = 1;
  for (const auto& w : b.whites)
    for (const auto& c : w.blacks) n += count_blacks(c);
  return n;
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  BlackNode parse_root() {
    BlackNode b = parse_black();
    if (pos_ != s_.size()) fail("trailing characters");
    return b;
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("BWTree::parse: ") + what + " at offset " +
                                std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  BlackNode parse_black() {
    if (pos_ >= s_.size() || s_[pos_] != '[') fail("expected '['");
    ++pos_;
    BlackNode b;
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return b;
    }
    while (true) {
      b.whites.push_back(parse_white());
      if (pos_ >= s_.size()) fail("unterminated group");
      if (s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return b;
      }
      fail("expected ',' or ']'");
    }
  }

  WhiteNode parse_white() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected label");
    WhiteNode w;
    w.label = std::stoi(std::string(s_.substr(start, pos_ - start)));
    while (pos_ < s_.size() && s_[pos_] == '[') w.blacks.push_back(parse_black());
    return w;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// A planted planar bipartite tree with a black root and labelled white
/// vertices; every non-root black vertex has at least one white child.
class BWTree {
 public:
  BWTree() = default;
  explicit BWTree(BlackNode root) : root_(std::move(root)) { validate(); }

  static BWTree parse(std::string_view text) {
    return BWTree(detail::TreeParser(text).parse_root());
  }

  /// The corolla: all labels attached directly to the root, in order.
  static BWTree scc(const NrSequence& sigma) {
    BlackNode r;
    for (Letter x : sigma.letters()) r.whites.push_back(WhiteNode{x, {}});
    return BWTree(std::move(r));
  }

  /// The chain tree whose label order is the total order of sigma.
  static BWTree caterpillar(const NrSequence& sigma) {
    WhiteNode w{sigma.letters().back(), {}};
    for (int i = sigma.size() - 2; i >= 0; --i) {
      BlackNode b;
      b.whites.push_back(std::move(w));
      w = WhiteNode{sigma[i], {}};
      w.blacks.push_back(std::move(b));
    }
    BlackNode r;
    r.whites.push_back(std::move(w));
    return BWTree(std::move(r));
  }

  const BlackNode& root() const { return root_; }

  /// Labels in planar depth-first order.
  std::vector<Letter> labels_dfs() const {
    std::vector<Letter> out;
    detail::collect_labels(root_, out);
    return out;
  }

  std::vector<Letter> label_set() const {
    auto out = labels_dfs();
    std::sort(out.begin(), out.end());
    return out;
  }

  int white_count() const { return static_cast<int>(labels_dfs().size()); }
  int black_count() const { return detail::count_blacks(root_); }
  int degree() const { return black_count() - 1; }

  bool is_white_rooted() const { return root_.whites.size() == 1; }

  Letter root_label() const {
    if (!is_white_rooted()) throw std::invalid_argument("root_label: tree is black rooted");
    return root_.whites.front().label;
  }

  /// Number of incoming edges at the white root.
  int initial_branching() const {
    if (!is_white_rooted())
      throw std::invalid_argument("initial_branching: undefined for black rooted trees");
    return static_cast<int>(root_.whites.front().blacks.size());
  }

  std::string encoding() const {
    std::string out;
    detail::encode_black(root_, out);
    return out;
  }

  /// Applies `relabel` to every white label.
  BWTree relabeled(const std::function<Letter(Letter)>& relabel) const {
    std::function<void(BlackNode&)> go = [&](BlackNode& b) {
      for (auto& w : b.whites) {
        w.label = relabel(w.label);
        for (auto& c : w.blacks) go(c);
      }
    };
    BlackNode r = root_;
    go(r);
    return BWTree(std::move(r));
  }

  friend bool operator==(const BWTree& a, const BWTree& b) {
    return detail::compare_black(a.root_, b.root_) == 0;
  }
  friend bool operator<(const BWTree& a, const BWTree& b) {
    return detail::compare_black(a.root_, b.root_) < 0;
  }

 private:
  void validate() const {
    std::function<void(const BlackNode&, bool)> check = [&](const BlackNode& b, bool is_root) {
      if (!is_root && b.whites.empty())
        throw std::invalid_argument("BWTree: non-root black vertex without white children");
      for (const auto& w : b.whites) {
        if (w.label <= 0) throw std::invalid_argument("BWTree: labels must be positive");
        for (const auto& c : w.blacks) check(c, false);
      }
    };
    check(root_, true);
    auto labels = label_set();
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw std::invalid_argument("BWTree: repeated white label");
  }

  BlackNode root_;
};

/// Induced order on labels: (a, b) means b lies strictly above a.
struct LabelOrder {
  std::set<std::pair<Letter, Letter>> relation;

  bool less(Letter a, Letter b) const { return relation.count({a, b}) > 0; }

  /// True when every relation here also holds in `finer`.
  bool coarser_or_equal(const LabelOrder& finer) const {
    return std::includes(finer.relation.begin(), finer.relation.end(), relation.begin(),
                         relation.end());
  }

  friend bool operator==(const LabelOrder&, const LabelOrder&) = default;
};

inline LabelOrder partial_order(const BWTree& tau) {
  LabelOrder order;
  std::vector<Letter> ancestors;
  std::function<void(const BlackNode&)> go = [&](const BlackNode& b) {
    for (const auto& w : b.whites) {
      for (Letter a : ancestors) order.relation.emplace(a, w.label);
      ancestors.push_back(w.label);
      for (const auto& c : w.blacks) go(c);
      ancestors.pop_back();
    }
  };
  go(tau.root());
  return order;
}

/// True when the label order of tau is compatible with the total order phi,
/// i.e. labels along every root-to-leaf path form a subsequence of phi.
inline bool compatible(const BWTree& tau, const NrSequence& phi) {
  if (tau.label_set() != phi.sorted_letters())
    throw std::invalid_argument("compatible: label set differs from the sequence");
  for (auto [a, b] : partial_order(tau).relation)
    if (phi.position(a) > phi.position(b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Angle collapses

namespace detail {

inline bool collapse_in(BlackNode& b, Letter label, int angle) {
  for (std::size_t i = 0; i < b.whites.size(); ++i) {
    WhiteNode& w = b.whites[i];
    if (w.label == label) {
      const int arity = static_cast<int>(w.blacks.size());
      if (arity == 0 || angle < 0 || angle > arity)
        throw std::invalid_argument("collapse: no such angle");
      if (angle == 0) {
        std::vector<WhiteNode> moved = std::move(w.blacks.front().whites);
        w.blacks.erase(w.blacks.begin());
        b.whites.insert(b.whites.begin() + static_cast<std::ptrdiff_t>(i),
                        std::make_move_iterator(moved.begin()),
                        std::make_move_iterator(moved.end()));
      } else if (angle == arity) {
        std::vector<WhiteNode> moved = std::move(w.blacks.back().whites);
        w.blacks.pop_back();
        b.whites.insert(b.whites.begin() + static_cast<std::ptrdiff_t>(i + 1),
                        std::make_move_iterator(moved.begin()),
                        std::make_move_iterator(moved.end()));
      } else {
        auto& left = w.blacks[static_cast<std::size_t>(angle - 1)].whites;
        auto& right = w.blacks[static_cast<std::size_t>(angle)].whites;
        left.insert(left.end(), std::make_move_iterator(right.begin()),
                    std::make_move_iterator(right.end()));
        w.blacks.erase(w.blacks.begin() + angle);
      }
      return true;
    }
    for (auto& c : w.blacks)
      if (collapse_in(c, label, angle)) return true;
  }
  return false;
}

inline void white_arities(const BlackNode& b, std::vector<std::pair<Letter, int>>& out) {
  for (const auto& w : b.whites) {
    out.emplace_back(w.label, static_cast<int>(w.blacks.size()));
    for (const auto& c : w.blacks) white_arities(c, out);
  }
}

}  // namespace detail

/// (label, number of incoming edges) for every white vertex, planar DFS order.
inline std::vector<std::pair<Letter, int>> white_arities(const BWTree& tau) {
  std::vector<std::pair<Letter, int>> out;
  detail::white_arities(tau.root(), out);
  return out;
}

/// Collapses angle `angle` (0..w) at the white vertex `label`, where angles
/// 0 and w are the ones adjacent to the outgoing edge.
inline BWTree collapse(const BWTree& tau, Letter label, int angle) {
  BlackNode r = tau.root();
  if (!detail::collapse_in(r, label, angle))
    throw std::invalid_argument("collapse: label not present");
  return BWTree(std::move(r));
}

/// One result per angle of every white vertex with incoming edges, in
/// planar DFS order of the vertices and increasing angle.  Targets may repeat.
inline std::vector<BWTree> collapses(const BWTree& tau) {
  std::vector<BWTree> out;
  for (auto [label, arity] : white_arities(tau)) {
    if (arity == 0) continue;
    for (int a = 0; a <= arity; ++a) out.push_back(collapse(tau, label, a));
  }
  return out;
}

/// All trees obtained from `tops` by repeated collapses (tops included), sorted.
inline std::vector<BWTree> collapse_closure(const std::vector<BWTree>& tops) {
  std::set<BWTree> seen(tops.begin(), tops.end());
  std::vector<BWTree> stack(seen.begin(), seen.end());
  while (!stack.empty()) {
    BWTree t = std::move(stack.back());
    stack.pop_back();
    for (auto& c : collapses(t))
      if (seen.insert(c).second) stack.push_back(std::move(c));
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// B+/- operators

/// Identifies the black roots of an ordered forest (bar notation t1|...|tk).
inline BWTree b_plus_black(const std::vector<BWTree>& forest) {
  BlackNode r;
  std::vector<Letter> seen;
  for (const auto& t : forest) {
    for (Letter x : t.labels_dfs()) seen.push_back(x);
    r.whites.insert(r.whites.end(), t.root().whites.begin(), t.root().whites.end());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("b_plus_black: overlapping label sets");
  return BWTree(std::move(r));
}

/// Cuts every edge at the root: one white-rooted tree per root branch.
inline std::vector<BWTree> b_minus_black(const BWTree& tau) {
  std::vector<BWTree> out;
  for (const auto& w : tau.root().whites) out.emplace_back(BlackNode{{w}});
  return out;
}

struct WhiteCut {
  Letter label = 0;
  std::vector<BWTree> forest;
};

/// Cuts the edges above the white root; each branch gets its own black root.
inline WhiteCut b_minus_white(const BWTree& tau) {
  if (!tau.is_white_rooted())
    throw std::invalid_argument("b_minus_white: tree is black rooted");
  const WhiteNode& w = tau.root().whites.front();
  WhiteCut cut{w.label, {}};
  for (const auto& b : w.blacks) cut.forest.emplace_back(b);
  return cut;
}

/// Grafts the forest onto the corolla of `s`, in order.
inline BWTree b_plus_s(Letter s, const std::vector<BWTree>& forest) {
  std::vector<Letter> seen{s};
  WhiteNode w{s, {}};
  for (const auto& t : forest) {
    if (t.root().whites.empty())
      throw std::invalid_argument("b_plus_s: empty tree in forest");
    for (Letter x : t.labels_dfs()) seen.push_back(x);
    w.blacks.push_back(t.root());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("b_plus_s: label clash");
  return BWTree(BlackNode{{std::move(w)}});
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// Ordered set partitions of `set` into nonempty blocks (any number of blocks).
inline std::vector<std::vector<std::vector<Letter>>> ordered_set_partitions(
    const std::vector<Letter>& set) {
  std::vector<std::vector<std::vector<Letter>>> out;
  const int n = static_cast<int>(set.size());
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // assign each element a block index; keep surjective assignments
  for (int k = 1; k <= n; ++k) {
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<std::vector<Letter>> blocks(static_cast<std::size_t>(k));
      for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(assign[i])].push_back(set[i]);
      if (std::none_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); }))
        out.push_back(std::move(blocks));
      int i = 0;
      while (i < n && ++assign[static_cast<std::size_t>(i)] == k) assign[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  }
  return out;
}

template <class F>
void for_each_product(const std::vector<const std::vector<BWTree>*>& factors, F&& f) {
  std::vector<std::size_t> idx(factors.size(), 0);
  for (const auto* fac : factors)
    if (fac->empty()) return;
  std::vector<BWTree> cur(factors.size());
  while (true) {
    for (std::size_t i = 0; i < factors.size(); ++i) cur[i] = (*factors[i])[idx[i]];
    f(cur);
    std::size_t i = 0;
    while (i < factors.size() && ++idx[i] == factors[i]->size()) idx[i++] = 0;
    if (i == factors.size()) break;
  }
}

/// Recursive tree generator over label sets.  With an order `phi`, only trees
/// whose label order is compatible with phi are produced: the white root of
/// every branch is then forced to be the phi-first label of that branch.
class TreeGenerator {
 public:
  explicit TreeGenerator(std::optional<NrSequence> phi = std::nullopt) : phi_(std::move(phi)) {}

  const std::vector<BWTree>& all(const std::vector<Letter>& sorted_set) {
    if (auto it = all_.find(sorted_set); it != all_.end()) return it->second;
    std::vector<BWTree> out;
    for (const auto& parts : ordered_set_partitions(sorted_set)) {
      std::vector<const std::vector<BWTree>*> factors;
      for (const auto& p : parts) factors.push_back(&white_rooted(p));
      for_each_product(factors, [&](const std::vector<BWTree>& ts) {
        out.push_back(b_plus_black(ts));
      });
    }
    std::sort(out.begin(), out.end());
    return all_.emplace(sorted_set, std::move(out)).first->second;
  }

  const std::vector<BWTree>& white_rooted(const std::vector<Letter>& sorted_set) {
    if (auto it = white_.find(sorted_set); it != white_.end()) return it->second;
    std::vector<BWTree> out;
    std::vector<Letter> roots;
    if (phi_) {
      Letter first = sorted_set.front();
      for (Letter x : sorted_set)
        if (phi_->position(x) < phi_->position(first)) first = x;
      roots.push_back(first);
    } else {
      roots = sorted_set;
    }
    for (Letter s : roots) {
      std::vector<Letter> rest;
      for (Letter x : sorted_set)
        if (x != s) rest.push_back(x);
      for (const auto& parts : ordered_set_partitions(rest)) {
        std::vector<const std::vector<BWTree>*> factors;
        for (const auto& p : parts) factors.push_back(&all(p));
        if (factors.empty()) {
          out.push_back(b_plus_s(s, {}));
          continue;
        }
        for_each_product(factors, [&](const std::vector<BWTree>& ts) {
          out.push_back(b_plus_s(s, ts));
        });
      }
    }
    std::sort(out.begin(), out.end());
    return white_.emplace(sorted_set, std::move(out)).first->second;
  }

 private:
  std::optional<NrSequence> phi_;
  std::map<std::vector<Letter>, std::vector<BWTree>> all_;
  std::map<std::vector<Letter>, std::vector<BWTree>> white_;
};

}  // namespace detail

/// Every tree on the given labels (T_S), sorted structurally.
inline std::vector<BWTree> enumerate_trees(std::vector<Letter> labels) {
  if (labels.empty()) throw std::invalid_argument("enumerate_trees: no labels");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("enumerate_trees: duplicate labels");
  detail::TreeGenerator gen;
  return gen.all(labels);
}

/// Trees of the given degree only.
inline std::vector<BWTree> of_degree(const std::vector<BWTree>& trees, int degree) {
  std::vector<BWTree> out;
  for (const auto& t : trees)
    if (t.degree() == degree) out.push_back(t);
  return out;
}

/// T_phi: trees on the letters of phi whose order is compatible with phi.
/// Generated directly (the generator forces phi-minimal branch roots).
inline std::vector<BWTree> T_sigma(const NrSequence& phi,
                                   std::optional<int> degree = std::nullopt) {
  detail::TreeGenerator gen(phi);
  const auto& all = gen.all(phi.sorted_letters());
  return degree ? of_degree(all, *degree) : all;
}

/// Top-degree part T^{|phi|-1}_phi.
inline std::vector<BWTree> T_sigma_top(const NrSequence& phi) {
  return T_sigma(phi, phi.size() - 1);
}

inline nlohmann::json to_json(const BWTree& t) {
  return {{"label_set", t.label_set()}, {"encoding", t.encoding()}, {"degree", t.degree()}};
}

}  // namespace permop
