#pragma once

// Regular CW data for Milgram's complex F(n) (cells = unshuffles) and the
// cacti complex C(n) (cells = b/w trees): graded cells, mod-2 boundaries,
// face posets, order complexes, the permutahedral cover of C(n) and the
// cellular chain map I : F(n) -> C(n).

#include <algorithm>
#include <cstdint>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permop/decomposition.hpp"
#include "permop/gf2.hpp"
#include "permop/homology.hpp"
#include "permop/parallel.hpp"
#include "permop/poset.hpp"
#include "permop/seqcomb.hpp"
#include "permop/smith.hpp"
#include "permop/trees.hpp"

namespace permop {

inline std::string cell_label(const Unshuffle& u) { return u.to_string(); }
inline std::string cell_label(const BWTree& t) { return t.encoding(); }
inline int cell_dim(const Unshuffle& u) { return u.degree(); }
inline int cell_dim(const BWTree& t) { return t.degree(); }

/// A repeated codimension-one face in some boundary.
struct RegularityDefect {
  int cell = 0;
  int face = 0;
  int multiplicity = 0;
};

template <class Cell>
class CellComplex {
 public:
  CellComplex() = default;

  /// `boundary(c)` lists the codimension-one faces of c with multiplicity.
  template <class BoundaryFn>
  CellComplex(std::vector<Cell> cells, BoundaryFn&& boundary) {
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
      const int da = cell_dim(a), db = cell_dim(b);
      return da != db ? da < db : a < b;
    });
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
      throw std::invalid_argument("CellComplex: duplicate cell");
    cells_ = std::move(cells);
    for (int i = 0; i < size(); ++i) {
      index_.emplace(cells_[static_cast<std::size_t>(i)], i);
      const int d = cell_dim(cells_[static_cast<std::size_t>(i)]);
      if (d < 0) throw std::invalid_argument("CellComplex: negative dimension");
      if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(static_cast<std::size_t>(d) + 1);
      local_.push_back(static_cast<int>(by_dim_[static_cast<std::size_t>(d)].size()));
      by_dim_[static_cast<std::size_t>(d)].push_back(i);
    }

    faces_.assign(cells_.size(), {});
    parallel_for(cells_.size(), [&](std::size_t i) {
      for (const auto& f : boundary(cells_[i])) {
        auto it = index_.find(f);
        if (it == index_.end())
          throw std::invalid_argument("CellComplex: face " + cell_label(f) + " of " + cell_label(cells_[i]) +
                                      " is not a cell");
        if (cell_dim(f) + 1 != cell_dim(cells_[i]))
          throw std::invalid_argument("CellComplex: face " + cell_label(f) + " has wrong dimension");
        faces_[i].push_back(it->second);
      }
      std::sort(faces_[i].begin(), faces_[i].end());
    });

    std::vector<typename FinitePoset<Cell>::Cover> covers;
    boundary2_.resize(by_dim_.size());
    for (int d = 1; d < static_cast<int>(by_dim_.size()); ++d)
      boundary2_[static_cast<std::size_t>(d)] = Gf2Matrix(count(d - 1), count(d));
    for (int i = 0; i < size(); ++i) {
      const auto& fs = faces_[static_cast<std::size_t>(i)];
      for (std::size_t a = 0; a < fs.size();) {
        std::size_t b = a;
        while (b < fs.size() && fs[b] == fs[a]) ++b;
        const int mult = static_cast<int>(b - a);
        if (mult > 1) defects_.push_back({i, fs[a], mult});
        if (mult % 2) boundary2_[static_cast<std::size_t>(dim(i))].set(local(fs[a]), local(i));
        covers.emplace_back(fs[a], i);
        a = b;
      }
    }
    std::vector<int> grades;
    for (const auto& c : cells_) grades.push_back(cell_dim(c));
    poset_ = FinitePoset<Cell>(cells_, std::move(grades), std::move(covers));
  }

  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(int i) const { return cells_.at(static_cast<std::size_t>(i)); }
  int dim(int i) const { return cell_dim(cell(i)); }
  int top_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  int count(int d) const {
    return d >= 0 && d < static_cast<int>(by_dim_.size()) ? static_cast<int>(by_dim_[static_cast<std::size_t>(d)].size())
                                                            : 0;
  }
  /// Global ids of the d-cells, in matrix order.
  const std::vector<int>& cells_of_dim(int d) const { return by_dim_.at(static_cast<std::size_t>(d)); }
  /// Position of a cell among the cells of its dimension.
  int local(int i) const { return local_.at(static_cast<std::size_t>(i)); }
  std::optional<int> index_of(const Cell& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Codimension-one faces of cell i with multiplicity, sorted.
  const std::vector<int>& boundary_multiset(int i) const { return faces_.at(static_cast<std::size_t>(i)); }
  /// Mod-2 boundary C_d -> C_{d-1}; index 0 is an empty placeholder.
  const Gf2Matrix& boundary2(int d) const { return boundary2_.at(static_cast<std::size_t>(d)); }
  const std::vector<Gf2Matrix>& boundaries2() const { return boundary2_; }
  const FinitePoset<Cell>& face_poset() const { return poset_; }

  std::vector<std::int64_t> f_vector() const {
    std::vector<std::int64_t> f;
    for (const auto& v : by_dim_) f.push_back(static_cast<std::int64_t>(v.size()));
    return f;
  }
  std::int64_t euler_characteristic() const { return permop::euler_characteristic(f_vector()); }

  /// Cells whose boundary repeats a face; empty for a regular complex.
  const std::vector<RegularityDefect>& regularity_defects() const { return defects_; }
  bool regular() const { return defects_.empty(); }

  /// Degrees d >= 2 where d_{d-1} d_d != 0 over GF(2).
  std::vector<int> boundary_square_defects() const {
    std::vector<int> bad;
    for (int d = 2; d <= top_dim(); ++d)
      if (!(boundary2(d - 1) * boundary2(d)).is_zero()) bad.push_back(d);
    return bad;
  }

  /// Cells whose mod-2 boundary column differs from the indicator of the
  /// cells they cover in `p`.
  std::vector<int> columns_differing_from(const FinitePoset<Cell>& p) const {
    std::vector<int> bad;
    for (int i = 0; i < size(); ++i) {
      const int d = dim(i);
      auto pi = p.index_of(cell(i));
      if (!pi) {
        bad.push_back(i);
        continue;
      }
      std::set<int> expect;
      for (int lo : p.lower_covers(*pi)) {
        auto ci = index_of(p.element(lo));
        if (!ci) {
          expect.insert(-1);
          continue;
        }
        expect.insert(*ci);
      }
      std::set<int> got;
      if (d > 0)
        for (int r : boundary2(d).column(local(i)).ones()) got.insert(cells_of_dim(d - 1)[static_cast<std::size_t>(r)]);
      if (got != expect) bad.push_back(i);
    }
    return bad;
  }

  std::vector<std::int64_t> betti_gf2() const { return homology_gf2(f_vector(), boundary2_); }

 private:
  std::vector<Cell> cells_;
  std::map<Cell, int> index_;
  std::vector<std::vector<int>> by_dim_;
  std::vector<int> local_;
  std::vector<std::vector<int>> faces_;
  std::vector<Gf2Matrix> boundary2_;
  std::vector<RegularityDefect> defects_;
  FinitePoset<Cell> poset_;
};

using MilgramComplex = CellComplex<Unshuffle>;
using CactComplex = CellComplex<BWTree>;

inline std::vector<Letter> label_range(int n) {
  std::vector<Letter> l;
  for (int i = 1; i <= n; ++i) l.push_back(i);
  return l;
}

/// F(n): cells are the unshuffles of J(n), faces split one block in two.
inline MilgramComplex build_milgram(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("build_milgram: need 1 <= n <= 5");
  return MilgramComplex(build_J_n(n).elements(), [](const Unshuffle& u) { return refinements(u); });
}

/// C(n): cells are the trees of T_n, faces are angle collapses.
inline CactComplex build_cact(int n, bool allow_large = false) {
  if (n < 1 || n > 5) throw std::invalid_argument("build_cact: need 1 <= n <= 5");
  if (n == 5 && !allow_large) throw std::invalid_argument("build_cact: n = 5 needs allow_large");
  return CactComplex(enumerate_trees(label_range(n)), [](const BWTree& t) { return collapses(t); });
}

// ---------------------------------------------------------------------------
// Order complexes

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int vertices, std::vector<std::vector<std::vector<int>>> simplices)
      : vertices_(vertices), simplices_(std::move(simplices)) {
    for (auto& layer : simplices_) {
      for (auto& s : layer) std::sort(s.begin(), s.end());
      std::sort(layer.begin(), layer.end());
      if (std::adjacent_find(layer.begin(), layer.end()) != layer.end())
        throw std::invalid_argument("SimplicialComplex: duplicate simplex");
    }
    for (std::size_t d = 0; d < simplices_.size(); ++d)
      for (const auto& s : simplices_[d])
        if (s.size() != d + 1) throw std::invalid_argument("SimplicialComplex: simplex in wrong layer");
  }

  int vertex_count() const { return vertices_; }
  int top_dim() const { return static_cast<int>(simplices_.size()) - 1; }
  const std::vector<std::vector<int>>& simplices(int d) const { return simplices_.at(static_cast<std::size_t>(d)); }

  std::vector<std::int64_t> f_vector() const {
    std::vector<std::int64_t> f;
    for (const auto& l : simplices_) f.push_back(static_cast<std::int64_t>(l.size()));
    return f;
  }

  int index_of(int d, const std::vector<int>& s) const {
    const auto& layer = simplices(d);
    auto it = std::lower_bound(layer.begin(), layer.end(), s);
    if (it == layer.end() || *it != s) return -1;
    return static_cast<int>(it - layer.begin());
  }

  /// True if every facet of every simplex is present.
  bool closed_under_faces() const {
    for (int d = 1; d <= top_dim(); ++d)
      for (const auto& s : simplices(d))
        for (std::size_t i = 0; i < s.size(); ++i) {
          auto f = s;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          if (index_of(d - 1, f) < 0) return false;
        }
    return true;
  }

  /// Integral boundaries with the alternating sign (-1)^i on deleting vertex i.
  std::vector<IntMatrix> integral_boundaries() const {
    std::vector<IntMatrix> out(simplices_.size());
    for (int d = 1; d <= top_dim(); ++d) {
      const auto& layer = simplices(d);
      std::vector<std::vector<Triplet>> parts(layer.size());
      parallel_for(layer.size(), [&](std::size_t c) {
        const auto& s = layer[c];
        for (std::size_t i = 0; i < s.size(); ++i) {
          auto f = s;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          const int r = index_of(d - 1, f);
          if (r < 0) throw std::logic_error("SimplicialComplex: missing face");
          parts[c].push_back({r, static_cast<int>(c), i % 2 ? -1 : 1});
        }
      });
      std::vector<Triplet> t;
      for (auto& p : parts) t.insert(t.end(), p.begin(), p.end());
      out[static_cast<std::size_t>(d)] =
          IntMatrix(static_cast<int>(simplices(d - 1).size()), static_cast<int>(layer.size()), std::move(t));
    }
    return out;
  }

  HomologySummary integral_homology() const { return homology(f_vector(), integral_boundaries()); }

 private:
  int vertices_ = 0;
  std::vector<std::vector<std::vector<int>>> simplices_;
};

/// Strict chains of p as simplices on the element indices.
template <class T>
SimplicialComplex order_complex(const FinitePoset<T>& p) {
  const auto up = p.strict_upsets();
  std::vector<std::vector<std::vector<int>>> layers;
  std::vector<int> chain;
  auto emit = [&](auto&& self, int last) -> void {
    const std::size_t d = chain.size() - 1;
    if (layers.size() <= d) layers.resize(d + 1);
    layers[d].push_back(chain);
    const auto& bits = up[static_cast<std::size_t>(last)];
    for (std::size_t w = 0; w < bits.size(); ++w)
      for (std::uint64_t x = bits[w]; x; x &= x - 1) {
        const int nxt = static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        chain.push_back(nxt);
        self(self, nxt);
        chain.pop_back();
      }
  };
  for (int v = 0; v < p.size(); ++v) {
    chain = {v};
    emit(emit, v);
  }
  return SimplicialComplex(p.size(), std::move(layers));
}

// ---------------------------------------------------------------------------
// Permutahedral cover of C(n)

struct PermutahedralCover {
  int n = 0;
  std::vector<NrSequence> sigmas;
  std::vector<std::vector<int>> cells_of;   // sigma index -> cact cell ids in T_sigma
  std::vector<std::vector<int>> sigmas_of;  // cact cell id -> sigma indices

  std::vector<int> uncovered() const {
    std::vector<int> out;
    for (std::size_t c = 0; c < sigmas_of.size(); ++c)
      if (sigmas_of[c].empty()) out.push_back(static_cast<int>(c));
    return out;
  }

  /// Cells lying in exactly one copy of P_n.
  std::vector<int> unglued() const {
    std::vector<int> out;
    for (std::size_t c = 0; c < sigmas_of.size(); ++c)
      if (sigmas_of[c].size() == 1) out.push_back(static_cast<int>(c));
    return out;
  }
};

/// Sequences on the labels of tau respecting its order relation.
inline std::vector<NrSequence> linear_extensions(const BWTree& tau, const std::vector<NrSequence>& candidates) {
  const auto ord = partial_order(tau);
  std::vector<NrSequence> out;
  for (const auto& s : candidates) {
    bool ok = true;
    for (auto [a, b] : ord.relation)
      if (s.position(a) > s.position(b)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

inline PermutahedralCover permutahedral_cover(const CactComplex& c, int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("permutahedral_cover: need 1 <= n <= 5");
  PermutahedralCover cov;
  cov.n = n;
  cov.sigmas = permutations(n);
  cov.sigmas_of.assign(static_cast<std::size_t>(c.size()), {});
  for (std::size_t s = 0; s < cov.sigmas.size(); ++s) {
    std::vector<int> ids;
    for (const auto& t : T_sigma(cov.sigmas[s])) {
      auto i = c.index_of(t);
      if (!i) throw std::logic_error("permutahedral_cover: " + t.encoding() + " is not a cell");
      ids.push_back(*i);
      cov.sigmas_of[static_cast<std::size_t>(*i)].push_back(static_cast<int>(s));
    }
    std::sort(ids.begin(), ids.end());
    cov.cells_of.push_back(std::move(ids));
  }
  return cov;
}

// ---------------------------------------------------------------------------
// The chain map I : CC_*(F(n)) -> CC_*(C(n)) over GF(2)

/// I(l1|...|lk) = sum of tau1|...|tauk over top cells tau_i of T_{l_i}.
inline std::vector<BWTree> chain_map_terms(const Unshuffle& l) {
  std::vector<std::vector<BWTree>> factors;
  for (const auto& b : l.blocks()) factors.push_back(T_sigma_top(b));
  std::vector<const std::vector<BWTree>*> ptrs;
  for (const auto& f : factors) ptrs.push_back(&f);
  std::vector<BWTree> out;
  detail::for_each_product(ptrs, [&](const std::vector<BWTree>& ts) { out.push_back(b_plus_black(ts)); });
  std::sort(out.begin(), out.end());
  return out;
}

/// One matrix per degree: rows are d-cells of C(n), columns d-cells of F(n).
inline std::vector<Gf2Matrix> chain_map_I(const MilgramComplex& f, const CactComplex& c) {
  if (f.top_dim() != c.top_dim()) throw std::invalid_argument("chain_map_I: dimension mismatch");
  std::vector<Gf2Matrix> out;
  for (int d = 0; d <= f.top_dim(); ++d) {
    Gf2Matrix m(c.count(d), f.count(d));
    const auto& cols = f.cells_of_dim(d);
    parallel_for(cols.size(), [&](std::size_t j) {
      for (const auto& t : chain_map_terms(f.cell(cols[j]))) {
        auto i = c.index_of(t);
        if (!i || c.dim(*i) != d) throw std::logic_error("chain_map_I: image " + t.encoding() + " misplaced");
        m.flip(c.local(*i), static_cast<int>(j));
      }
    });
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace permop
