#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permop {

/// Finite graded poset stored by its covering relation.
///
/// Elements are kept in the order given at construction; `index_of` looks
/// them up structurally, so `T` needs a strict weak ordering.  The order
/// relation is the reflexive-transitive closure of `covers`.
template <class T>
class FinitePoset {
 public:
  using Cover = std::pair<int, int>;  // (lower, upper)

  FinitePoset() = default;

  FinitePoset(std::vector<T> elements, std::vector<int> grades,
              std::vector<Cover> covers)
      : elements_(std::move(elements)),
        grades_(std::move(grades)),
        covers_(std::move(covers)) {
    if (grades_.size() != elements_.size())
      throw std::invalid_argument("FinitePoset: grade count mismatch");
    for (int i = 0; i < size(); ++i) {
      if (!index_.emplace(elements_[i], i).second)
        throw std::invalid_argument("FinitePoset: duplicate element");
    }
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    up_.assign(size(), {});
    down_.assign(size(), {});
    for (auto [lo, hi] : covers_) {
      if (lo < 0 || hi < 0 || lo >= size() || hi >= size())
        throw std::out_of_range("FinitePoset: cover index out of range");
      if (grades_[hi] <= grades_[lo])
        throw std::invalid_argument("FinitePoset: grade must increase along covers");
      up_[lo].push_back(hi);
      down_[hi].push_back(lo);
    }
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<T>& elements() const { return elements_; }
  const T& element(int i) const { return elements_.at(i); }
  int grade(int i) const { return grades_.at(i); }
  const std::vector<int>& grades() const { return grades_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_.at(i); }
  const std::vector<int>& lower_covers(int i) const { return down_.at(i); }

  std::optional<int> index_of(const T& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int max_grade() const {
    int g = -1;
    for (int x : grades_) g = std::max(g, x);
    return g;
  }

  std::vector<int> of_grade(int g) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (grades_[i] == g) out.push_back(i);
    return out;
  }

  std::vector<int> minimal() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (down_[i].empty()) out.push_back(i);
    return out;
  }

  std::vector<int> maximal() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (up_[i].empty()) out.push_back(i);
    return out;
  }

  /// a <= b, by upward search from a along covers.
  bool leq(int a, int b) const {
    if (a == b) return true;
    if (grades_[a] >= grades_[b]) return false;
    std::vector<int> stack{a};
    std::vector<char> seen(size(), 0);
    seen[a] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : up_[x]) {
        if (y == b) return true;
        if (!seen[y] && grades_[y] < grades_[b]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return false;
  }

  /// Strict up-sets of every element as packed bitsets (row i = {j : i < j}).
  std::vector<std::vector<std::uint64_t>> strict_upsets() const {
    const int n = size();
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> up(n, std::vector<std::uint64_t>(words, 0));
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return grades_[a] > grades_[b]; });
    for (int x : order) {
      for (int y : up_[x]) {
        up[x][y / 64] |= std::uint64_t{1} << (y % 64);
        for (int w = 0; w < words; ++w) up[x][w] |= up[y][w];
      }
    }
    return up;
  }

  /// Elements below or equal to any of `tops`, sorted by index.
  std::vector<int> down_closure(const std::vector<int>& tops) const {
    std::vector<char> seen(size(), 0);
    std::vector<int> stack;
    for (int t : tops)
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : down_[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (seen[i]) out.push_back(i);
    return out;
  }

  /// Checks acyclicity and that no cover is implied by a longer chain.
  /// Returns an empty string on success, otherwise a description.
  std::string validate() const {
    for (auto [lo, hi] : covers_) {
      // a cover lo<hi is redundant if hi is reachable from some other upper cover of lo
      for (int mid : up_[lo]) {
        if (mid != hi && leq(mid, hi))
          return "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                 ") implied by a longer chain";
      }
    }
    return {};
  }

  /// Counts of elements per grade, index = grade.
  std::vector<std::int64_t> grade_counts() const {
    std::vector<std::int64_t> f(static_cast<std::size_t>(max_grade() + 1), 0);
    for (int g : grades_) ++f[g];
    return f;
  }

 private:
  std::vector<T> elements_;
  std::vector<int> grades_;
  std::vector<Cover> covers_;
  std::map<T, int> index_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
};

}  // namespace permop
