#pragma once

// Shell decomposition of the top cells of T_sigma by initial branching
// number, the unshuffle pieces T_sigma[l], and the bijection between the
// cells subdividing the faces of P_{n-1} and the top cells of P_n.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "permop/seqcomb.hpp"
#include "permop/trees.hpp"

namespace permop {

/// The unshuffle l of sigma\sigma_1 read off the branches of a white-rooted tree.
inline Unshuffle branch_unshuffle(const BWTree& tau, const NrSequence& sigma) {
  std::vector<NrSequence> blocks;
  for (const auto& branch : b_minus_white(tau).forest)
    blocks.push_back(restrict_to(sigma, branch.label_set()));
  return Unshuffle(std::move(blocks));
}

struct TopDecomposition {
  NrSequence sigma;
  /// initial branching number k -> unshuffle l of sigma\sigma_1 -> T^{n-1}_sigma[l]
  std::map<int, std::map<Unshuffle, std::vector<BWTree>>> pieces;

  std::size_t size_of(int k) const {
    std::size_t n = 0;
    if (auto it = pieces.find(k); it != pieces.end())
      for (const auto& [l, ts] : it->second) n += ts.size();
    return n;
  }

  std::size_t total() const {
    std::size_t n = 0;
    for (const auto& [k, by_l] : pieces) n += size_of(k);
    return n;
  }
};

/// Splits T^{n-1}_sigma by initial branching number and by branch unshuffle.
inline TopDecomposition decomposition(const NrSequence& sigma) {
  if (sigma.size() < 2) throw std::invalid_argument("decomposition: need |sigma| >= 2");
  TopDecomposition d{sigma, {}};
  for (const auto& tau : T_sigma_top(sigma)) {
    if (!tau.is_white_rooted() || tau.root_label() != sigma.front())
      throw std::logic_error("decomposition: top cell " + tau.encoding() +
                             " is not rooted at sigma_1");
    d.pieces[tau.initial_branching()][branch_unshuffle(tau, sigma)].push_back(tau);
  }
  return d;
}

/// T^{n-1}_sigma[l] built forward: sigma_1 grafted onto every tuple of
/// top-degree trees tau_i compatible with l_i.
inline std::vector<BWTree> graft_piece(Letter root, const Unshuffle& l) {
  std::vector<std::vector<BWTree>> factors;
  for (const auto& blk : l.blocks()) factors.push_back(T_sigma_top(blk));
  std::vector<const std::vector<BWTree>*> ptrs;
  for (const auto& f : factors) ptrs.push_back(&f);
  std::vector<BWTree> out;
  detail::for_each_product(ptrs, [&](const std::vector<BWTree>& ts) { out.push_back(b_plus_s(root, ts)); });
  std::sort(out.begin(), out.end());
  return out;
}

/// T_sigma[l]: every tree below some top cell of the piece.
inline std::vector<BWTree> piece_closure(const NrSequence& sigma, const Unshuffle& l) {
  return collapse_closure(graft_piece(sigma.front(), l));
}

/// T_{sigma,k}: the closure of the shells with initial branching number <= k.
inline std::vector<BWTree> filtration(const NrSequence& sigma, int k) {
  auto d = decomposition(sigma);
  std::vector<BWTree> tops;
  for (const auto& [q, by_l] : d.pieces) {
    if (q > k) continue;
    for (const auto& [l, ts] : by_l) tops.insert(tops.end(), ts.begin(), ts.end());
  }
  return collapse_closure(tops);
}

/// T^face_phi(k): black-rooted trees tau_1|...|tau_k with tau_i a top cell
/// of T_{l_i}, over all unshuffles l of phi into k blocks.
inline std::vector<BWTree> face_trees(const NrSequence& phi, int k) {
  std::vector<BWTree> out;
  for (const auto& l : unshuffles_into(phi, k)) {
    std::vector<std::vector<BWTree>> factors;
    for (const auto& blk : l.blocks()) factors.push_back(T_sigma_top(blk));
    std::vector<const std::vector<BWTree>*> ptrs;
    for (const auto& f : factors) ptrs.push_back(&f);
    detail::for_each_product(ptrs, [&](const std::vector<BWTree>& ts) { out.push_back(b_plus_black(ts)); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct FaceTopBijection {
  NrSequence sigma;
  std::map<int, std::size_t> domain_size;    // k -> |T^face_{sigma\sigma_1}(k)|
  std::map<int, std::size_t> codomain_size;  // k -> |T^{n-1}_sigma(k)|
  std::size_t image_size = 0;                // distinct images over all k
  std::size_t top_count = 0;                 // |T^{n-1}_sigma|
  bool injective = false;
  bool surjective = false;
  bool respects_k = false;                   // image of piece k has branching k
  bool inverse_ok = false;                   // B+_b B-_w recovers the source

  bool bijective() const { return injective && surjective && respects_k && inverse_ok; }
};

/// Checks that B+_{sigma_1} o B-_b maps T^face_{sigma\sigma_1} onto T^{n-1}_sigma
/// bijectively, piece by piece in k.
inline FaceTopBijection face_top_bijection(const NrSequence& sigma) {
  if (sigma.size() < 2) throw std::invalid_argument("face_top_bijection: need |sigma| >= 2");
  FaceTopBijection r{sigma, {}, {}, 0, 0, false, false, true, true};
  const NrSequence rest = remove_first(sigma);
  const Letter s = sigma.front();
  auto tops = T_sigma_top(sigma);
  r.top_count = tops.size();
  auto d = decomposition(sigma);
  std::set<BWTree> image;
  std::size_t domain_total = 0;
  for (int k = 1; k <= sigma.size() - 1; ++k) {
    auto dom = face_trees(rest, k);
    r.domain_size[k] = dom.size();
    r.codomain_size[k] = d.size_of(k);
    domain_total += dom.size();
    for (const auto& f : dom) {
      BWTree t = b_plus_s(s, b_minus_black(f));
      if (t.initial_branching() != k) r.respects_k = false;
      if (b_plus_black(b_minus_white(t).forest) != f) r.inverse_ok = false;
      image.insert(std::move(t));
    }
  }
  r.image_size = image.size();
  r.injective = image.size() == domain_total;
  std::set<BWTree> top_set(tops.begin(), tops.end());
  r.surjective = image == top_set;
  return r;
}

/// Corollas below tau, as the sequences they are the corolla of.
inline std::vector<NrSequence> corolla_vertices(const BWTree& tau) {
  std::vector<NrSequence> out;
  for (const auto& t : collapse_closure({tau}))
    if (t.degree() == 0) out.emplace_back(t.labels_dfs());
  std::sort(out.begin(), out.end());
  return out;
}

/// The decomposition of P_n associated to sigma, as the set of vertex sets
/// of its top cells.  Two sigmas induce the same subdivision iff equal.
inline std::set<std::vector<NrSequence>> subdivision_signature(const NrSequence& sigma) {
  std::set<std::vector<NrSequence>> sig;
  for (const auto& tau : T_sigma_top(sigma)) sig.insert(corolla_vertices(tau));
  return sig;
}

}  // namespace permop
