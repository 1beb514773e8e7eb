#pragma once

// Betti numbers and torsion of finite chain complexes over Z and GF(2), and
// the induced map of a GF(2) chain map on homology.
//
// A chain complex is given by cell counts dims[0..top] and boundaries
// d[k] : C_k -> C_{k-1} for k = 1..top (d[0] is unused and may be empty).

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permop/gf2.hpp"
#include "permop/smith.hpp"

namespace permop {

struct HomologySummary {
  std::vector<std::int64_t> betti;
  std::vector<std::vector<BigInt>> torsion;  // per degree, factors > 1

  bool torsion_free() const {
    for (const auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }

  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < betti.size(); ++d) chi += (d % 2 ? -1 : 1) * betti[d];
    return chi;
  }
};

inline std::int64_t euler_characteristic(const std::vector<std::int64_t>& f) {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 ? -1 : 1) * f[d];
  return chi;
}

namespace detail {

template <class M>
void check_shapes(const std::vector<std::int64_t>& dims, const std::vector<M>& d) {
  if (d.size() != dims.size() && !(dims.empty() && d.empty()))
    throw std::invalid_argument("homology: need one boundary slot per degree");
  for (std::size_t k = 1; k < dims.size(); ++k)
    if (d[k].rows() != dims[k - 1] || d[k].cols() != dims[k])
      throw std::invalid_argument("homology: boundary " + std::to_string(k) + " has wrong shape");
}

}  // namespace detail

/// Integral homology; throws if some d[k-1] d[k] is nonzero.
inline HomologySummary homology(const std::vector<std::int64_t>& dims, const std::vector<IntMatrix>& d) {
  detail::check_shapes(dims, d);
  for (std::size_t k = 2; k < dims.size(); ++k)
    if (!(d[k - 1] * d[k]).is_zero())
      throw std::invalid_argument("homology: not a chain complex in degree " + std::to_string(k));
  const std::size_t top = dims.size();
  std::vector<std::vector<BigInt>> snf(top + 1);
  std::vector<std::int64_t> rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    snf[k] = smith_normal_form(d[k]);
    rank[k] = static_cast<std::int64_t>(snf[k].size());
  }
  HomologySummary h;
  for (std::size_t k = 0; k < top; ++k) {
    h.betti.push_back(dims[k] - rank[k] - rank[k + 1]);
    std::vector<BigInt> tors;
    for (const auto& f : snf[k + 1])
      if (f > 1) tors.push_back(f);
    h.torsion.push_back(std::move(tors));
  }
  return h;
}

/// GF(2) Betti numbers; throws if some d[k-1] d[k] is nonzero.
inline std::vector<std::int64_t> homology_gf2(const std::vector<std::int64_t>& dims,
                                              const std::vector<Gf2Matrix>& d) {
  detail::check_shapes(dims, d);
  for (std::size_t k = 2; k < dims.size(); ++k)
    if (!(d[k - 1] * d[k]).is_zero())
      throw std::invalid_argument("homology_gf2: not a chain complex in degree " + std::to_string(k));
  const std::size_t top = dims.size();
  std::vector<std::int64_t> rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) rank[k] = d[k].rank();
  std::vector<std::int64_t> betti;
  for (std::size_t k = 0; k < top; ++k) betti.push_back(dims[k] - rank[k] - rank[k + 1]);
  return betti;
}

struct DegreeVerdict {
  int degree = 0;
  std::int64_t source_betti = 0;
  std::int64_t target_betti = 0;
  std::int64_t induced_rank = 0;
  bool iso() const { return source_betti == target_betti && induced_rank == source_betti; }
};

struct InducedMapReport {
  std::vector<DegreeVerdict> degrees;
  std::vector<int> chain_map_failures;  // degrees where dT f != f dS
  bool cone_acyclic = false;

  bool is_chain_map() const { return chain_map_failures.empty(); }
  bool iso() const {
    if (!is_chain_map()) return false;
    for (const auto& v : degrees)
      if (!v.iso()) return false;
    return true;
  }
};

/// Degrees k >= 1 where target_d[k] f[k] != f[k-1] source_d[k].
inline std::vector<int> chain_map_defects(const std::vector<Gf2Matrix>& f,
                                          const std::vector<Gf2Matrix>& source_d,
                                          const std::vector<Gf2Matrix>& target_d) {
  std::vector<int> bad;
  for (std::size_t k = 1; k < f.size(); ++k)
    if (!(target_d[k] * f[k] == f[k - 1] * source_d[k])) bad.push_back(static_cast<int>(k));
  return bad;
}

/// The mapping cone of f : S -> T over GF(2): Cone_k = S_{k-1} + T_k,
/// d(a, b) = (dS a, f a + dT b).
inline std::pair<std::vector<std::int64_t>, std::vector<Gf2Matrix>> mapping_cone(
    const std::vector<std::int64_t>& sdims, const std::vector<Gf2Matrix>& sd,
    const std::vector<std::int64_t>& tdims, const std::vector<Gf2Matrix>& td,
    const std::vector<Gf2Matrix>& f) {
  const std::size_t top = std::max(sdims.size() + 1, tdims.size());
  auto sdim = [&](std::size_t k) -> int { return k < sdims.size() ? static_cast<int>(sdims[k]) : 0; };
  auto tdim = [&](std::size_t k) -> int { return k < tdims.size() ? static_cast<int>(tdims[k]) : 0; };
  std::vector<std::int64_t> dims(top);
  for (std::size_t k = 0; k < top; ++k) dims[k] = (k ? sdim(k - 1) : 0) + tdim(k);
  std::vector<Gf2Matrix> d(top);
  for (std::size_t k = 1; k < top; ++k) {
    Gf2Matrix m(static_cast<int>(dims[k - 1]), static_cast<int>(dims[k]));
    const int s_off = k >= 2 ? sdim(k - 2) : 0;  // rows: S_{k-2} then T_{k-1}
    // columns from S_{k-1}
    for (int c = 0; c < sdim(k - 1); ++c) {
      if (k >= 2 && k - 1 < sd.size() && k - 1 >= 1)
        for (int r : sd[k - 1].column(c).ones()) m.set(r, c);
      if (k - 1 < f.size())
        for (int r : f[k - 1].column(c).ones()) m.set(s_off + r, c);
    }
    // columns from T_k
    if (k < td.size())
      for (int c = 0; c < tdim(k); ++c)
        for (int r : td[k].column(c).ones()) m.set(s_off + r, sdim(k - 1) + c);
    d[k] = std::move(m);
  }
  return {dims, d};
}

/// Induced map on GF(2) homology of a chain map f[k] : S_k -> T_k.
/// Rank in degree k is rank([f Z_k | B_k]) - rank(B_k) with Z_k the cycles
/// of S and B_k the boundaries of T.
inline InducedMapReport induced_iso_check(const std::vector<Gf2Matrix>& f,
                                          const std::vector<std::int64_t>& sdims,
                                          const std::vector<Gf2Matrix>& sd,
                                          const std::vector<std::int64_t>& tdims,
                                          const std::vector<Gf2Matrix>& td) {
  if (f.size() != sdims.size() || sdims.size() != tdims.size())
    throw std::invalid_argument("induced_iso_check: degree ranges differ");
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k].rows() != tdims[k] || f[k].cols() != sdims[k])
      throw std::invalid_argument("induced_iso_check: map has wrong shape in degree " + std::to_string(k));
  InducedMapReport rep;
  rep.chain_map_failures = chain_map_defects(f, sd, td);
  if (!rep.is_chain_map()) return rep;
  const auto sb = homology_gf2(sdims, sd);
  const auto tb = homology_gf2(tdims, td);
  const std::size_t top = f.size();
  for (std::size_t k = 0; k < top; ++k) {
    std::vector<BitVec> cycles;
    if (k == 0) {
      for (int c = 0; c < sdims[0]; ++c) {
        BitVec e(static_cast<int>(sdims[0]));
        e.set(c);
        cycles.push_back(std::move(e));
      }
    } else {
      cycles = sd[k].kernel_basis();
    }
    Gf2Matrix bounds(static_cast<int>(tdims[k]), 0);
    if (k + 1 < top)
      for (const auto& col : td[k + 1].columns()) bounds.append_column(col);
    const int rb = bounds.rank();
    for (const auto& z : cycles) bounds.append_column(f[k].apply(z));
    rep.degrees.push_back({static_cast<int>(k), sb[k], tb[k], bounds.rank() - rb});
  }
  auto [cdims, cd] = mapping_cone(sdims, sd, tdims, td, f);
  const auto cb = homology_gf2(cdims, cd);
  rep.cone_acyclic = std::all_of(cb.begin(), cb.end(), [](std::int64_t b) { return b == 0; });
  return rep;
}

inline std::string betti_string(const std::vector<std::int64_t>& b) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ')';
  return os.str();
}

/// Coefficients of prod_{i=1}^{n-1} (1 + i t).
inline std::vector<std::int64_t> pure_braid_poincare(int n) {
  std::vector<std::int64_t> p{1};
  for (int i = 1; i < n; ++i) {
    std::vector<std::int64_t> q(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j] += p[j];
      q[j + 1] += i * p[j];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace permop
