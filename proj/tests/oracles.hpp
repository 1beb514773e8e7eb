#pragma once

// Slow, direct reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "permop/permop.hpp"

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

inline std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t stirling2(int n, int k) {
  std::vector<std::vector<std::int64_t>> s(n + 1, std::vector<std::int64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return k <= n ? s[n][k] : 0;
}

// faces of P_m of dimension d <-> ordered partitions of [m] into m-d blocks
inline std::vector<std::int64_t> permutahedron_f(int m) {
  std::vector<std::int64_t> f;
  for (int d = 0; d < m; ++d) f.push_back(factorial(m - d) * stirling2(m, m - d));
  return f;
}

inline std::vector<std::int64_t> simplex_f(int k) {
  std::vector<std::int64_t> f;
  for (int d = 0; d <= k; ++d) f.push_back(binomial(k + 1, d + 1));
  return f;
}

inline std::vector<std::int64_t> product_f(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// coefficients of (1+t)(1+2t)...(1+(n-1)t)
inline std::vector<std::int64_t> braid_poincare(int n) {
  std::vector<std::int64_t> p{1};
  for (int i = 1; i < n; ++i) p = product_f(p, {1, i});
  return p;
}

inline std::int64_t double_factorial(int m) { return m <= 1 ? 1 : m * double_factorial(m - 2); }

// ---------------------------------------------------------------------------
// unshuffles of [n] as raw block lists

inline std::string key(const Blocks& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += '|';
    for (int x : b[i]) s += std::to_string(x) + ",";
  }
  return s;
}

inline permop::Unshuffle to_unshuffle(const Blocks& b) {
  std::vector<permop::NrSequence> seqs;
  for (const auto& x : b) seqs.emplace_back(x);
  return permop::Unshuffle(seqs);
}

// every ordered list of disjoint nonempty sequences covering [n]: cut each permutation anywhere
inline std::vector<Blocks> all_unshuffles_of_n(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::set<Blocks> out;
  do {
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      Blocks b{{p[0]}};
      for (int i = 1; i < n; ++i) {
        if (mask & (1 << (i - 1))) b.emplace_back();
        b.back().push_back(p[static_cast<std::size_t>(i)]);
      }
      out.insert(b);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return {out.begin(), out.end()};
}

inline void shuffles_rec(const std::vector<int>& x, const std::vector<int>& y, std::size_t i, std::size_t j,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (i == x.size() && j == y.size()) {
    out.push_back(cur);
    return;
  }
  if (i < x.size()) {
    cur.push_back(x[i]);
    shuffles_rec(x, y, i + 1, j, cur, out);
    cur.pop_back();
  }
  if (j < y.size()) {
    cur.push_back(y[j]);
    shuffles_rec(x, y, i, j + 1, cur, out);
    cur.pop_back();
  }
}

// one step of the relation: merge blocks i, i+1 into one of their shuffles
inline std::vector<Blocks> merges(const Blocks& a) {
  std::vector<Blocks> out;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    std::vector<std::vector<int>> hs;
    std::vector<int> cur;
    shuffles_rec(a[i], a[i + 1], 0, 0, cur, hs);
    for (auto& h : hs) {
      Blocks b(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
      b.push_back(h);
      b.insert(b.end(), a.begin() + static_cast<std::ptrdiff_t>(i + 2), a.end());
      out.push_back(std::move(b));
    }
  }
  return out;
}

// reflexive transitive closure of the merge relation: a -> all b >= a
inline std::map<std::string, std::set<std::string>> closure(int n) {
  std::map<std::string, std::set<std::string>> up;
  for (const auto& a : all_unshuffles_of_n(n)) {
    auto& seen = up[key(a)];
    std::queue<Blocks> q;
    q.push(a);
    seen.insert(key(a));
    while (!q.empty()) {
      auto b = q.front();
      q.pop();
      for (auto& c : merges(b))
        if (seen.insert(key(c)).second) q.push(std::move(c));
    }
  }
  return up;
}

// ---------------------------------------------------------------------------
// cactus words

// every word obtained by deleting one occurrence of a repeated letter
inline std::vector<std::vector<int>> word_deletions(const std::vector<int>& w) {
  std::map<int, int> count;
  for (int x : w) ++count[x];
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (count[w[i]] < 2) continue;
    auto v = w;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Smith form by determinantal divisors

inline std::int64_t det(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  std::int64_t s = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (!m[0][c]) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return s;
}

inline void subsets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// nonzero invariant factors d_k / d_{k-1}
inline std::vector<std::int64_t> invariant_factors(const std::vector<std::vector<std::int64_t>>& a) {
  const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    std::int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<std::int64_t>> m;
        for (int i : r) {
          std::vector<std::int64_t> row;
          for (int j : c) row.push_back(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          m.push_back(row);
        }
        g = std::gcd(g, det(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace oracle
