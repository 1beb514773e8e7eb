#pragma once

// Exact rational realization of the permutahedron P_n, its faces F(a), and
// the cactus cells C_tau subdividing it.  Convex hulls are handled by brute
// force in the intrinsic affine frame, which is plenty for n <= 4.
//
// Volumes are measured after forgetting the last coordinate, a linear
// bijection from the hyperplane sum(x) = n(n+1)/2 onto Q^{n-1}; the true
// (n-1)-volume is sqrt(n) times this.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permop/decomposition.hpp"
#include "permop/seqcomb.hpp"
#include "permop/trees.hpp"

namespace permop {

using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

/// v_phi: coordinate i is the position of the i-th smallest letter of phi.
inline Point vertex(const NrSequence& phi) {
  Point p;
  for (Letter x : phi.sorted_letters()) p.emplace_back(phi.position(x) + 1);
  return p;
}

inline Rational coordinate_sum(const Point& p) {
  Rational s = 0;
  for (const auto& x : p) s += x;
  return s;
}

inline Rational squared_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("squared_distance: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

namespace detail {

using Row = std::vector<Rational>;

/// Row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> echelon(std::vector<Row>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline Rational determinant(std::vector<Row> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

/// Nonzero vector orthogonal to the rows of m (rank d-1 rows in Q^d).
inline Row normal_of(std::vector<Row> m, std::size_t d) {
  auto piv = echelon(m);
  if (piv.size() + 1 != d) return {};
  std::size_t free_col = 0;
  while (std::find(piv.begin(), piv.end(), free_col) != piv.end()) ++free_col;
  Row n(d, 0);
  n[free_col] = 1;
  for (std::size_t i = 0; i < piv.size(); ++i) n[piv[i]] = -m[i][free_col];
  return n;
}

inline Rational dot(const Row& a, const Row& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace detail

/// Affine hull of a point set, with coordinates in a basis of its direction space.
class AffineFrame {
 public:
  explicit AffineFrame(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("AffineFrame: no points");
    origin_ = pts.front();
    std::vector<detail::Row> diffs;
    for (const auto& p : pts) {
      if (p.size() != origin_.size()) throw std::invalid_argument("AffineFrame: mixed dimensions");
      detail::Row r;
      for (std::size_t i = 0; i < p.size(); ++i) r.push_back(p[i] - origin_[i]);
      diffs.push_back(std::move(r));
    }
    echelon_ = diffs;
    pivots_ = detail::echelon(echelon_);
  }

  int dimension() const { return static_cast<int>(pivots_.size()); }

  /// Coordinates of a point of the affine hull.  The reduced echelon basis
  /// has identity pivot columns, so they are read off directly.
  detail::Row coordinates(const Point& p) const {
    detail::Row c;
    for (std::size_t k : pivots_) c.push_back(p[k] - origin_[k]);
    return c;
  }

  bool contains(const Point& p) const {
    auto c = coordinates(p);
    for (std::size_t j = 0; j < p.size(); ++j) {
      Rational v = origin_[j];
      for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * echelon_[i][j];
      if (v != p[j]) return false;
    }
    return true;
  }

 private:
  Point origin_;
  std::vector<detail::Row> echelon_;
  std::vector<std::size_t> pivots_;
};

inline int affine_dimension(const std::vector<Point>& pts) { return AffineFrame(pts).dimension(); }

/// A face of a convex hull as the set of input indices lying on it.
struct HullFace {
  std::vector<int> vertices;
  int dim = 0;
  friend bool operator<(const HullFace& a, const HullFace& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  }
  friend bool operator==(const HullFace&, const HullFace&) = default;
};

/// Facets of conv(pts[idx]) as subsets of idx.  Points must be in convex
/// position for the index sets to be vertex sets.
inline std::vector<std::vector<int>> hull_facets(const std::vector<Point>& pts, const std::vector<int>& idx) {
  std::vector<Point> sub;
  for (int i : idx) sub.push_back(pts[static_cast<std::size_t>(i)]);
  const AffineFrame frame(sub);
  const auto d = static_cast<std::size_t>(frame.dimension());
  if (d == 0) return {};
  std::vector<detail::Row> q;
  for (const auto& p : sub) q.push_back(frame.coordinates(p));
  std::set<std::vector<int>> found;
  const std::size_t m = q.size();
  if (d == 1) {
    Rational lo = q[0][0], hi = q[0][0];
    for (const auto& c : q) {
      lo = std::min(lo, c[0]);
      hi = std::max(hi, c[0]);
    }
    std::vector<int> a, b;
    for (std::size_t i = 0; i < m; ++i) {
      if (q[i][0] == lo) a.push_back(idx[i]);
      if (q[i][0] == hi) b.push_back(idx[i]);
    }
    found.insert(a);
    found.insert(b);
    return {found.begin(), found.end()};
  }
  // hyperplanes through d points, anchored at the first one chosen
  std::vector<std::size_t> pick(d);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
    if (pos == d) {
      std::vector<detail::Row> rows;
      for (std::size_t j = 1; j < d; ++j) {
        detail::Row r(d);
        for (std::size_t t = 0; t < d; ++t) r[t] = q[pick[j]][t] - q[pick[0]][t];
        rows.push_back(std::move(r));
      }
      auto nrm = detail::normal_of(rows, d);
      if (nrm.empty()) return;
      const Rational base = detail::dot(nrm, q[pick[0]]);
      int sign = 0;
      std::vector<int> on;
      for (std::size_t i = 0; i < m; ++i) {
        const Rational v = detail::dot(nrm, q[i]) - base;
        if (v == 0) {
          on.push_back(idx[i]);
          continue;
        }
        const int s = v > 0 ? 1 : -1;
        if (sign == 0)
          sign = s;
        else if (sign != s)
          return;
      }
      found.insert(on);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      pick[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return {found.begin(), found.end()};
}

/// Every nonempty face of conv(pts), including the polytope itself.
inline std::vector<HullFace> face_lattice(const std::vector<Point>& pts) {
  std::vector<int> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
  std::set<std::vector<int>> faces{all};
  const auto facets = hull_facets(pts, all);
  std::vector<std::vector<int>> frontier(facets.begin(), facets.end());
  for (const auto& f : facets) faces.insert(f);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier)
      for (const auto& f : facets) {
        std::vector<int> x;
        std::set_intersection(a.begin(), a.end(), f.begin(), f.end(), std::back_inserter(x));
        if (!x.empty() && faces.insert(x).second) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  std::vector<HullFace> out;
  for (const auto& f : faces) {
    std::vector<Point> sub;
    for (int i : f) sub.push_back(pts[static_cast<std::size_t>(i)]);
    out.push_back({f, affine_dimension(sub)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::int64_t> hull_f_vector(const std::vector<HullFace>& faces) {
  std::vector<std::int64_t> f;
  for (const auto& x : faces) {
    if (x.dim >= static_cast<int>(f.size())) f.resize(static_cast<std::size_t>(x.dim) + 1, 0);
    ++f[static_cast<std::size_t>(x.dim)];
  }
  return f;
}

/// Simplices (as index lists) triangulating conv(pts[idx]) by coning from
/// the smallest index over the facets missing it.
inline std::vector<std::vector<int>> triangulate(const std::vector<Point>& pts, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  std::vector<Point> sub;
  for (int i : idx) sub.push_back(pts[static_cast<std::size_t>(i)]);
  if (affine_dimension(sub) == 0) return {{idx.front()}};
  std::vector<std::vector<int>> out;
  const int apex = idx.front();
  for (const auto& f : hull_facets(pts, idx)) {
    if (std::binary_search(f.begin(), f.end(), apex)) continue;
    for (auto s : triangulate(pts, f)) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// Volume of a full-dimensional convex polytope in Q^d (d = coordinate count).
inline Rational polytope_volume(const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("polytope_volume: no points");
  const std::size_t d = pts.front().size();
  std::vector<int> idx(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) idx[i] = static_cast<int>(i);
  if (affine_dimension(pts) != static_cast<int>(d)) return 0;
  Rational fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= i;
  Rational vol = 0;
  for (const auto& s : triangulate(pts, idx)) {
    std::vector<detail::Row> m;
    for (std::size_t j = 1; j < s.size(); ++j) {
      detail::Row r(d);
      for (std::size_t t = 0; t < d; ++t)
        r[t] = pts[static_cast<std::size_t>(s[j])][t] - pts[static_cast<std::size_t>(s[0])][t];
      m.push_back(std::move(r));
    }
    vol += abs(detail::determinant(std::move(m)));
  }
  return vol / fact;
}

/// Drops the last coordinate.
inline std::vector<Point> project_hyperplane(const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (auto p : pts) {
    if (p.empty()) throw std::invalid_argument("project_hyperplane: empty point");
    p.pop_back();
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// F and C on cells

struct RealizedCell {
  std::vector<NrSequence> labels;  // the degree-0 cells spanning it
  std::vector<Point> vertices;
  int affine_dim = 0;
};

inline RealizedCell realized(std::vector<NrSequence> labels) {
  std::sort(labels.begin(), labels.end());
  RealizedCell c{std::move(labels), {}, 0};
  for (const auto& s : c.labels) c.vertices.push_back(vertex(s));
  c.affine_dim = affine_dimension(c.vertices);
  return c;
}

/// F(a) = conv{v_phi : phi of degree 0 below a}: concatenations of
/// arbitrary orderings of the blocks of a.
inline RealizedCell realize_face(const Unshuffle& a) {
  std::vector<std::vector<Letter>> seqs{{}};
  for (const auto& b : a.blocks()) {
    auto letters = b.sorted_letters();
    std::vector<std::vector<Letter>> next;
    for (const auto& s : seqs) {
      auto perm = letters;
      do {
        auto t = s;
        t.insert(t.end(), perm.begin(), perm.end());
        next.push_back(std::move(t));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    seqs = std::move(next);
  }
  std::vector<NrSequence> labels;
  for (auto& s : seqs) labels.emplace_back(std::move(s));
  return realized(std::move(labels));
}

/// C_tau = conv{v_nu : scc(nu) below tau}, for tau in T_sigma.
inline RealizedCell realize_cact_cell(const BWTree& tau, const NrSequence& sigma) {
  if (!compatible(tau, sigma))
    throw std::invalid_argument("realize_cact_cell: " + tau.encoding() + " is not in T_" + sigma.to_string());
  return realized(corolla_vertices(tau));
}

/// f-vector of a product of simplices of the given dimensions.
inline std::vector<std::int64_t> simplex_product_f_vector(const std::vector<int>& dims) {
  std::vector<std::int64_t> f{1};
  for (int k : dims) {
    std::vector<std::int64_t> s;
    for (int j = 0; j <= k; ++j) {
      std::int64_t c = 1;
      for (int i = 1; i <= j + 1; ++i) c = c * (k + 2 - i) / i;
      s.push_back(c);
    }
    std::vector<std::int64_t> r(f.size() + s.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) r[i + j] += f[i] * s[j];
    f = std::move(r);
  }
  return f;
}

/// f-vector of P_m: j-faces are ordered set partitions into m-j blocks.
inline std::vector<std::int64_t> permutahedron_f_vector(int m) {
  // surj[k] = number of surjections [m] -> [k]
  std::vector<std::int64_t> f;
  for (int j = 0; j < m; ++j) {
    const int k = m - j;
    std::int64_t surj = 0;
    for (int i = 0; i <= k; ++i) {
      std::int64_t c = 1;
      for (int t = 1; t <= i; ++t) c = c * (k - t + 1) / t;
      std::int64_t p = 1;
      for (int t = 0; t < m; ++t) p *= (k - i);
      surj += (i % 2 ? -1 : 1) * c * p;
    }
    f.push_back(surj);
  }
  return f;
}

inline std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

/// f-vector of P_{m1} x ... x P_{mk} x Delta^k.
inline std::vector<std::int64_t> piece_product_f_vector(const Unshuffle& l) {
  std::vector<std::int64_t> f{1};
  for (int m : l.block_sizes()) f = convolve(f, permutahedron_f_vector(m));
  return convolve(f, simplex_product_f_vector({l.block_count()}));
}

// ---------------------------------------------------------------------------
// Interior disjointness

namespace detail {

/// Edge directions of a full-dimensional hull in its projected coordinates.
inline std::vector<Row> edge_directions(const std::vector<Point>& pts) {
  std::vector<Row> out;
  for (const auto& f : face_lattice(pts)) {
    if (f.dim != 1) continue;
    const auto& a = pts[static_cast<std::size_t>(f.vertices.front())];
    const auto& b = pts[static_cast<std::size_t>(f.vertices.back())];
    Row r;
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(b[i] - a[i]);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Row> facet_normals(const std::vector<Point>& pts) {
  std::vector<int> idx(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) idx[i] = static_cast<int>(i);
  const std::size_t d = pts.front().size();
  std::vector<Row> out;
  for (const auto& f : hull_facets(pts, idx)) {
    std::vector<Row> rows;
    for (std::size_t j = 1; j < f.size(); ++j) {
      Row r(d);
      for (std::size_t t = 0; t < d; ++t)
        r[t] = pts[static_cast<std::size_t>(f[j])][t] - pts[static_cast<std::size_t>(f[0])][t];
      rows.push_back(std::move(r));
    }
    auto n = normal_of(rows, d);
    if (!n.empty()) out.push_back(std::move(n));
  }
  return out;
}

inline bool separates(const Row& u, const std::vector<Point>& a, const std::vector<Point>& b) {
  bool first = true;
  Rational amax, amin, bmax, bmin;
  for (const auto& p : a) {
    const Rational v = dot(u, p);
    if (first || v > amax) amax = v;
    if (first || v < amin) amin = v;
    first = false;
  }
  first = true;
  for (const auto& p : b) {
    const Rational v = dot(u, p);
    if (first || v > bmax) bmax = v;
    if (first || v < bmin) bmin = v;
    first = false;
  }
  return amax <= bmin || bmax <= amin;
}

}  // namespace detail

/// Full-dimensional convex polytopes in Q^d (d <= 3) with disjoint interiors,
/// decided by separating axes: facet normals and, for d = 3, edge cross products.
inline bool interiors_disjoint(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.empty() || b.empty()) return true;
  const std::size_t d = a.front().size();
  if (d > 3) throw std::invalid_argument("interiors_disjoint: dimension above 3");
  if (affine_dimension(a) < static_cast<int>(d) || affine_dimension(b) < static_cast<int>(d)) return true;
  std::vector<detail::Row> axes = detail::facet_normals(a);
  for (auto& n : detail::facet_normals(b)) axes.push_back(std::move(n));
  if (d == 3) {
    const auto ea = detail::edge_directions(a);
    const auto eb = detail::edge_directions(b);
    for (const auto& x : ea)
      for (const auto& y : eb) {
        detail::Row c{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
        if (c[0] != 0 || c[1] != 0 || c[2] != 0) axes.push_back(std::move(c));
      }
  }
  for (const auto& u : axes)
    if (detail::separates(u, a, b)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Reports

struct SubdivisionReport {
  NrSequence sigma;
  std::vector<BWTree> cells;
  std::vector<Rational> volumes;
  Rational total = 0;
  Rational polytope = 0;
  std::vector<std::pair<int, int>> overlapping;  // pairs with a common interior point
  std::vector<int> degenerate;                   // cells of the wrong dimension
  std::vector<int> shape_mismatch;               // hull f-vector not a product of simplices

  bool ok() const {
    return total == polytope && overlapping.empty() && degenerate.empty() && shape_mismatch.empty();
  }
};

/// Top cells C_tau of T_sigma: volumes sum to vol(P_n), interiors pairwise disjoint.
inline SubdivisionReport subdivision_volume_check(const NrSequence& sigma) {
  const int n = sigma.size();
  if (n < 2 || n > 4) throw std::invalid_argument("subdivision_volume_check: need 2 <= n <= 4");
  SubdivisionReport rep{sigma, T_sigma_top(sigma), {}, 0, 0, {}, {}, {}};
  rep.polytope = polytope_volume(project_hyperplane(realize_face(Unshuffle({sigma})).vertices));
  std::vector<std::vector<Point>> proj;
  for (std::size_t i = 0; i < rep.cells.size(); ++i) {
    const auto cell = realize_cact_cell(rep.cells[i], sigma);
    if (cell.affine_dim != n - 1) rep.degenerate.push_back(static_cast<int>(i));
    std::vector<int> arities;
    for (auto [label, w] : white_arities(rep.cells[i]))
      if (w > 0) arities.push_back(w);
    if (hull_f_vector(face_lattice(cell.vertices)) != simplex_product_f_vector(arities))
      rep.shape_mismatch.push_back(static_cast<int>(i));
    proj.push_back(project_hyperplane(cell.vertices));
    rep.volumes.push_back(polytope_volume(proj.back()));
    rep.total += rep.volumes.back();
  }
  for (std::size_t i = 0; i < proj.size(); ++i)
    for (std::size_t j = i + 1; j < proj.size(); ++j)
      if (!interiors_disjoint(proj[i], proj[j])) rep.overlapping.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return rep;
}

/// The union of the top cells of T_sigma[l] is a convex polytope whose
/// face lattice has the f-vector of P_{m1} x ... x P_{mk} x Delta^k.
struct PieceGeometry {
  Unshuffle piece;
  Rational cells_volume = 0;
  Rational hull_volume = 0;
  std::vector<std::int64_t> hull_f;
  std::vector<std::int64_t> expected_f;
  bool ok() const { return cells_volume == hull_volume && hull_f == expected_f; }
};

inline PieceGeometry piece_geometry(const NrSequence& sigma, const Unshuffle& l) {
  const int n = sigma.size();
  if (n < 2 || n > 4) throw std::invalid_argument("piece_geometry: need 2 <= n <= 4");
  PieceGeometry g{l, 0, 0, {}, piece_product_f_vector(l)};
  std::set<NrSequence> verts;
  for (const auto& tau : graft_piece(sigma.front(), l)) {
    const auto cell = realize_cact_cell(tau, sigma);
    verts.insert(cell.labels.begin(), cell.labels.end());
    g.cells_volume += polytope_volume(project_hyperplane(cell.vertices));
  }
  std::vector<Point> pts;
  for (const auto& s : verts) pts.push_back(vertex(s));
  // keep only hull vertices so the face lattice is that of the hull
  std::vector<Point> hull_pts;
  for (const auto& f : face_lattice(pts))
    if (f.dim == 0) hull_pts.push_back(pts[static_cast<std::size_t>(f.vertices.front())]);
  g.hull_volume = polytope_volume(project_hyperplane(hull_pts));
  g.hull_f = hull_f_vector(face_lattice(hull_pts));
  return g;
}

/// Face lattice of conv{v_nu} versus J_sigma: the map a -> vertex set of F(a)
/// must be a bijection onto the faces that preserves and reflects order.
struct FaceLatticeReport {
  std::size_t poset_size = 0;
  std::size_t face_count = 0;
  bool bijective = false;
  bool order_iso = false;
  bool dims_match = false;
  std::vector<std::int64_t> f_vector;
  bool ok() const { return bijective && order_iso && dims_match; }
};

inline FaceLatticeReport face_lattice_vs_J(const NrSequence& sigma) {
  const auto J = build_J_sigma(sigma);
  const auto& top = realize_face(Unshuffle({sigma}));
  std::map<NrSequence, int> where;
  for (std::size_t i = 0; i < top.labels.size(); ++i) where[top.labels[i]] = static_cast<int>(i);
  const auto faces = face_lattice(top.vertices);
  FaceLatticeReport r;
  r.poset_size = static_cast<std::size_t>(J.size());
  r.face_count = faces.size();
  r.f_vector = hull_f_vector(faces);
  std::map<std::vector<int>, int> face_dim;
  for (const auto& f : faces) face_dim[f.vertices] = f.dim;
  std::vector<std::vector<int>> image;
  r.dims_match = true;
  for (const auto& a : J.elements()) {
    std::vector<int> vs;
    for (const auto& s : realize_face(a).labels) vs.push_back(where.at(s));
    std::sort(vs.begin(), vs.end());
    auto it = face_dim.find(vs);
    if (it == face_dim.end() || it->second != a.degree()) r.dims_match = false;
    image.push_back(std::move(vs));
  }
  std::set<std::vector<int>> distinct(image.begin(), image.end());
  std::set<std::vector<int>> all_faces;
  for (const auto& f : faces) all_faces.insert(f.vertices);
  r.bijective = distinct.size() == image.size() && distinct == all_faces;
  r.order_iso = true;
  for (int i = 0; i < J.size() && r.order_iso; ++i)
    for (int j = 0; j < J.size(); ++j) {
      const bool sub = std::includes(image[static_cast<std::size_t>(j)].begin(), image[static_cast<std::size_t>(j)].end(),
                                     image[static_cast<std::size_t>(i)].begin(), image[static_cast<std::size_t>(i)].end());
      if (sub != J.leq(i, j)) {
        r.order_iso = false;
        break;
      }
    }
  return r;
}

/// Edges of P_n (from its hull) paired with their squared lengths.
inline std::vector<Rational> edge_squared_lengths(int n) {
  const auto top = realize_face(Unshuffle({NrSequence::identity(n)}));
  std::vector<Rational> out;
  for (const auto& f : face_lattice(top.vertices))
    if (f.dim == 1)
      out.push_back(squared_distance(top.vertices[static_cast<std::size_t>(f.vertices.front())],
                                     top.vertices[static_cast<std::size_t>(f.vertices.back())]));
  return out;
}

}  // namespace permop
