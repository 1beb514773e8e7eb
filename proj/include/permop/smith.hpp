#pragma once

// Exact integer matrices and their Smith normal form.
//
// Elimination runs in two phases: a sparse phase pivoting on entries of
// absolute value one (each contributes an invariant factor 1 and removes a
// row and a column), then a dense arbitrary-precision phase on whatever is
// left, pivoting on the smallest nonzero entry.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permop {

using BigInt = boost::multiprecision::cpp_int;

struct Triplet {
  int row;
  int col;
  std::int64_t value;
};

/// Sparse exact integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}
  IntMatrix(int rows, int cols, std::vector<Triplet> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    normalize();
  }

  static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& m) {
    const int r = static_cast<int>(m.size());
    const int c = r ? static_cast<int>(m.front().size()) : 0;
    std::vector<Triplet> t;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (m[i][j] != 0) t.push_back({i, j, m[i][j]});
    return IntMatrix(r, c, std::move(t));
  }

  static IntMatrix identity(int n) {
    std::vector<Triplet> t;
    for (int i = 0; i < n; ++i) t.push_back({i, i, 1});
    return IntMatrix(n, n, std::move(t));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Triplet>& entries() const { return entries_; }

  /// Entries sorted by (col,row), duplicates summed, zeros dropped.
  void normalize() {
    for (const auto& e : entries_)
      if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_)
        throw std::out_of_range("IntMatrix: entry out of range");
    std::sort(entries_.begin(), entries_.end(), [](const Triplet& a, const Triplet& b) {
      return std::tie(a.col, a.row) < std::tie(b.col, b.row);
    });
    std::vector<Triplet> merged;
    for (const auto& e : entries_) {
      if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col)
        merged.back().value += e.value;
      else
        merged.push_back(e);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Triplet& e) { return e.value == 0; }),
                 merged.end());
    entries_ = std::move(merged);
  }

  bool is_zero() const { return entries_.empty(); }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
    std::vector<std::vector<std::pair<int, std::int64_t>>> a_cols(static_cast<std::size_t>(a.cols_));
    for (const auto& e : a.entries_) a_cols[static_cast<std::size_t>(e.col)].emplace_back(e.row, e.value);
    std::vector<Triplet> out;
    for (const auto& e : b.entries_)
      for (auto [r, v] : a_cols[static_cast<std::size_t>(e.row)]) out.push_back({r, e.col, v * e.value});
    return IntMatrix(a.rows_, b.cols_, std::move(out));
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Triplet> entries_;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("smith: 64-bit overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("smith: 64-bit overflow");
  return r;
}

using SparseCol = std::vector<std::pair<int, std::int64_t>>;  // sorted by row

/// dst -= f * src
inline SparseCol axpy(const SparseCol& dst, std::int64_t f, const SparseCol& src) {
  SparseCol out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, checked_mul(-f, src[j].second));
      ++j;
    } else {
      std::int64_t v = checked_sub(dst[i].second, checked_mul(f, src[j].second));
      if (v != 0) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

/// Dense SNF of a small residual matrix; returns nonzero |d_i|.
inline std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const std::size_t m = a.size();
  const std::size_t n = m ? a.front().size() : 0;
  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest nonzero entry of the trailing block
    std::size_t pr = m, pc = n;
    BigInt best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < best)) {
          best = abs(a[i][j]);
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a[i][t] == 0) continue;
      BigInt q = a[i][t] / a[t][t];
      for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a[t][j] == 0) continue;
      BigInt q = a[t][j] / a[t][t];
      for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pick it next round
    // divisibility: fold a non-divisible row into the pivot row and retry
    bool divisible = true;
    for (std::size_t i = t + 1; i < m && divisible; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t jj = t; jj < n; ++jj) a[t][jj] += a[i][jj];
          divisible = false;
          break;
        }
    if (!divisible) continue;
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace detail

/// Nonzero invariant factors d_1 | d_2 | ... of m.
inline std::vector<BigInt> smith_normal_form(const IntMatrix& m) {
  using detail::SparseCol;
  std::vector<SparseCol> cols(static_cast<std::size_t>(m.cols()));
  for (const auto& e : m.entries()) cols[static_cast<std::size_t>(e.col)].emplace_back(e.row, e.value);
  for (auto& c : cols) std::sort(c.begin(), c.end());
  std::vector<std::set<int>> row_cols(static_cast<std::size_t>(m.rows()));
  for (int c = 0; c < m.cols(); ++c)
    for (auto [r, v] : cols[static_cast<std::size_t>(c)]) row_cols[static_cast<std::size_t>(r)].insert(c);

  std::size_t unit_pivots = 0;
  std::vector<char> alive(static_cast<std::size_t>(m.cols()), 1);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int j = 0; j < m.cols(); ++j) {
      auto& cj = cols[static_cast<std::size_t>(j)];
      if (!alive[static_cast<std::size_t>(j)] || cj.empty()) continue;
      int pr = -1;
      std::int64_t pv = 0;
      std::size_t best = 0;
      for (auto [r, v] : cj) {
        if (v != 1 && v != -1) continue;
        std::size_t load = row_cols[static_cast<std::size_t>(r)].size();
        if (pr < 0 || load < best) {
          pr = r;
          pv = v;
          best = load;
        }
      }
      if (pr < 0) continue;
      const SparseCol pivot = cj;
      std::vector<int> others(row_cols[static_cast<std::size_t>(pr)].begin(),
                              row_cols[static_cast<std::size_t>(pr)].end());
      for (int b : others) {
        if (b == j) continue;
        auto& cb = cols[static_cast<std::size_t>(b)];
        auto it = std::lower_bound(cb.begin(), cb.end(), std::make_pair(pr, std::int64_t{INT64_MIN}));
        const std::int64_t f = detail::checked_mul(it->second, pv);  // pv = +-1 is its own inverse
        for (auto [r, v] : cb) row_cols[static_cast<std::size_t>(r)].erase(b);
        cb = detail::axpy(cb, f, pivot);
        for (auto [r, v] : cb) row_cols[static_cast<std::size_t>(r)].insert(b);
      }
      for (auto [r, v] : cj) row_cols[static_cast<std::size_t>(r)].erase(j);
      cj.clear();
      alive[static_cast<std::size_t>(j)] = 0;
      ++unit_pivots;
      progress = true;
    }
  }

  // residual block
  std::vector<int> live_rows;
  for (int r = 0; r < m.rows(); ++r)
    if (!row_cols[static_cast<std::size_t>(r)].empty()) live_rows.push_back(r);
  std::vector<int> live_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!cols[static_cast<std::size_t>(c)].empty()) live_cols.push_back(c);
  std::vector<BigInt> factors(unit_pivots, BigInt(1));
  if (!live_cols.empty()) {
    std::map<int, std::size_t> row_pos;
    for (std::size_t i = 0; i < live_rows.size(); ++i) row_pos[live_rows[i]] = i;
    std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
    for (std::size_t j = 0; j < live_cols.size(); ++j)
      for (auto [r, v] : cols[static_cast<std::size_t>(live_cols[j])]) dense[row_pos.at(r)][j] = v;
    auto rest = detail::dense_smith(std::move(dense));
    factors.insert(factors.end(), rest.begin(), rest.end());
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

/// Rank over Q.
inline std::size_t integer_rank(const IntMatrix& m) { return smith_normal_form(m).size(); }

}  // namespace permop
