#pragma once

// JSON / CSV / OFF writers.  Everything is emitted in canonical order so
// repeated runs are byte-identical.

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permop/cellcx.hpp"
#include "permop/geometry.hpp"

namespace permop {

/// {"f_vector":[..],"cells":[{"id","dim","encoding"}],"boundary":[[face,cell,1],..]}
template <class Cell>
nlohmann::json complex_to_json(const CellComplex<Cell>& c) {
  nlohmann::json cells = nlohmann::json::array();
  nlohmann::json bd = nlohmann::json::array();
  for (int i = 0; i < c.size(); ++i) {
    cells.push_back({{"id", i}, {"dim", c.dim(i)}, {"encoding", cell_label(c.cell(i))}});
    if (c.dim(i) == 0) continue;
    const auto& lower = c.cells_of_dim(c.dim(i) - 1);
    for (int r : c.boundary2(c.dim(i)).column(c.local(i)).ones())
      bd.push_back({lower[static_cast<std::size_t>(r)], i, 1});
  }
  return {{"f_vector", c.f_vector()}, {"cells", cells}, {"boundary", bd}};
}

/// id,dim,encoding,faces (faces separated by ';')
template <class Cell>
std::string complex_to_csv(const CellComplex<Cell>& c) {
  std::ostringstream os;
  os << "id,dim,encoding,faces\n";
  for (int i = 0; i < c.size(); ++i) {
    os << i << ',' << c.dim(i) << ",\"" << cell_label(c.cell(i)) << "\",";
    const auto& fs = c.boundary_multiset(i);
    for (std::size_t k = 0; k < fs.size(); ++k) os << (k ? ";" : "") << fs[k];
    os << '\n';
  }
  return os.str();
}

inline std::string rational_string(const Rational& q) { return q.str(); }

/// Coordinates for OFF: n = 2 padded with a zero, n = 3 as is, n = 4 with
/// the last coordinate dropped (an affine bijection of the hyperplane).
inline std::vector<Rational> off_coordinates(const Point& p) {
  switch (p.size()) {
    case 2: return {p[0], p[1], Rational(0)};
    case 3: return p;
    case 4: return {p[0], p[1], p[2]};
    default: throw std::invalid_argument("OFF export supports n = 2, 3, 4 only");
  }
}

namespace detail {

/// Orders the vertices of a convex polygon (global ids) along its boundary.
inline std::vector<int> polygon_cycle(const std::vector<int>& verts, const std::vector<std::pair<int, int>>& edges) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
  std::vector<int> cyc{*std::min_element(verts.begin(), verts.end())};
  int prev = -1;
  while (cyc.size() < verts.size()) {
    const auto& ns = adj.at(cyc.back());
    int next = ns.front() != prev ? ns.front() : ns.back();
    if (next == prev || std::find(cyc.begin(), cyc.end(), next) != cyc.end())
      throw std::logic_error("polygon_cycle: face boundary is not a cycle");
    prev = cyc.back();
    cyc.push_back(next);
  }
  return cyc;
}

/// 2-faces of conv(pts[ids]) as boundary-ordered global id lists.
inline std::vector<std::vector<int>> two_faces(const std::vector<Point>& pts, const std::vector<int>& ids) {
  std::vector<Point> sub;
  for (int i : ids) sub.push_back(pts[static_cast<std::size_t>(i)]);
  const auto lattice = face_lattice(sub);
  std::vector<std::pair<int, int>> edges;
  for (const auto& f : lattice)
    if (f.dim == 1) edges.emplace_back(ids[static_cast<std::size_t>(f.vertices.front())], ids[static_cast<std::size_t>(f.vertices.back())]);
  std::vector<std::vector<int>> out;
  for (const auto& f : lattice) {
    if (f.dim != 2) continue;
    std::vector<int> g;
    for (int v : f.vertices) g.push_back(ids[static_cast<std::size_t>(v)]);
    std::sort(g.begin(), g.end());
    std::vector<std::pair<int, int>> own;
    for (auto [a, b] : edges)
      if (std::binary_search(g.begin(), g.end(), a) && std::binary_search(g.begin(), g.end(), b)) own.emplace_back(a, b);
    out.push_back(polygon_cycle(g, own));
  }
  return out;
}

inline std::string write_off(const std::vector<Point>& pts, const std::vector<std::vector<int>>& faces) {
  std::ostringstream os;
  os << "OFF\n" << pts.size() << ' ' << faces.size() << " 0\n";
  for (const auto& p : pts) {
    const auto c = off_coordinates(p);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << rational_string(c[i]);
    os << '\n';
  }
  for (const auto& f : faces) {
    os << f.size();
    for (int v : f) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

inline std::vector<NrSequence> sorted_vertex_labels(int n) {
  auto perms = permutations(n);
  std::sort(perms.begin(), perms.end());
  return perms;
}

}  // namespace detail

/// P_n as OFF: its 2-dimensional faces as polygons.
inline std::string polytope_off(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("polytope_off: need 2 <= n <= 4");
  const auto labels = detail::sorted_vertex_labels(n);
  std::vector<Point> pts;
  std::vector<int> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    pts.push_back(vertex(labels[i]));
    ids.push_back(static_cast<int>(i));
  }
  auto faces = detail::two_faces(pts, ids);
  std::sort(faces.begin(), faces.end());
  return detail::write_off(pts, faces);
}

/// P_n with every face of J_{12..n} and its vertex ids.
inline nlohmann::json polytope_json(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("polytope_json: need 1 <= n <= 4");
  const auto labels = detail::sorted_vertex_labels(n);
  std::map<NrSequence, int> id;
  nlohmann::json verts = nlohmann::json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    id[labels[i]] = static_cast<int>(i);
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& x : vertex(labels[i])) coords.push_back(rational_string(x));
    verts.push_back({{"id", i}, {"label", labels[i].to_string()}, {"coords", coords}});
  }
  const auto J = build_J_sigma(NrSequence::identity(n));
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& a : J.elements()) {
    std::vector<int> vs;
    for (const auto& s : realize_face(a).labels) vs.push_back(id.at(s));
    std::sort(vs.begin(), vs.end());
    faces.push_back({{"unshuffle", a.to_string()}, {"dim", a.degree()}, {"vertices", vs}});
  }
  return {{"n", n}, {"vertices", verts}, {"faces", faces}};
}

struct SubdivisionData {
  NrSequence sigma;
  std::vector<NrSequence> labels;  // vertex labels, sorted
  std::vector<Point> points;
  std::vector<BWTree> cells;
  std::vector<std::vector<int>> cell_vertices;
  std::vector<Rational> volumes;
};

inline SubdivisionData subdivision_data(const NrSequence& sigma) {
  const int n = sigma.size();
  if (n < 2 || n > 4) throw std::invalid_argument("subdivision export: need 2 <= n <= 4");
  if (!sigma.is_permutation()) throw std::invalid_argument("subdivision export: sigma must be a permutation");
  SubdivisionData d{sigma, detail::sorted_vertex_labels(n), {}, T_sigma_top(sigma), {}, {}};
  std::map<NrSequence, int> id;
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    id[d.labels[i]] = static_cast<int>(i);
    d.points.push_back(vertex(d.labels[i]));
  }
  for (const auto& tau : d.cells) {
    const auto cell = realize_cact_cell(tau, sigma);
    std::vector<int> vs;
    for (const auto& s : cell.labels) vs.push_back(id.at(s));
    d.cell_vertices.push_back(std::move(vs));
    d.volumes.push_back(polytope_volume(project_hyperplane(cell.vertices)));
  }
  return d;
}

/// The cells C_tau, tau in T^{n-1}_sigma, with vertex ids and volumes.
inline nlohmann::json subdivision_json(const NrSequence& sigma) {
  const auto d = subdivision_data(sigma);
  nlohmann::json verts = nlohmann::json::array();
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& x : d.points[i]) coords.push_back(rational_string(x));
    verts.push_back({{"id", i}, {"label", d.labels[i].to_string()}, {"coords", coords}});
  }
  nlohmann::json cells = nlohmann::json::array();
  Rational total = 0;
  for (std::size_t i = 0; i < d.cells.size(); ++i) {
    cells.push_back({{"encoding", d.cells[i].encoding()},
                     {"dim", d.cells[i].degree()},
                     {"vertices", d.cell_vertices[i]},
                     {"volume", rational_string(d.volumes[i])}});
    total += d.volumes[i];
  }
  const Rational whole = polytope_volume(project_hyperplane(d.points));
  return {{"sigma", d.sigma.to_string()},
          {"n", d.sigma.size()},
          {"volume_convention", "last coordinate dropped"},
          {"vertices", verts},
          {"cells", cells},
          {"total_volume", rational_string(total)},
          {"polytope_volume", rational_string(whole)}};
}

/// OFF of the subdivision: the distinct 2-dimensional faces of its cells.
inline std::string subdivision_off(const NrSequence& sigma) {
  const auto d = subdivision_data(sigma);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> faces;
  for (const auto& vs : d.cell_vertices) {
    for (auto& f : detail::two_faces(d.points, vs)) {
      auto key = f;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) faces.push_back(std::move(f));
    }
  }
  std::sort(faces.begin(), faces.end());
  return detail::write_off(d.points, faces);
}

}  // namespace permop
