#pragma once

// Named invariant suites.  Each returns a list of checks with pass/fail and
// a witness on failure; `findings` collects observations that are reported
// but never fail a suite.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permop/cellcx.hpp"
#include "permop/decomposition.hpp"
#include "permop/geometry.hpp"
#include "permop/homology.hpp"
#include "permop/operad.hpp"
#include "permop/seqcomb.hpp"
#include "permop/trees.hpp"

namespace permop {

inline constexpr std::uint64_t kDefaultSeed = 20240531;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::vector<Check> checks;
  std::vector<std::string> findings;
  double seconds = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"suite", suite}, {"n", n}, {"passed", passed()}, {"checks", cs}, {"findings", findings}};
  }
};

struct VerifyOptions {
  int n = 3;
  std::uint64_t seed = kDefaultSeed;
  bool allow_large = false;
};

inline std::int64_t double_factorial(int m) {
  std::int64_t r = 1;
  for (int k = m; k > 1; k -= 2) r *= k;
  return r;
}

inline std::int64_t factorial(int m) {
  std::int64_t r = 1;
  for (int k = 2; k <= m; ++k) r *= k;
  return r;
}

template <class V>
std::string join(const V& v, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : v) {
    os << (first ? "" : sep) << x;
    first = false;
  }
  return os.str();
}

namespace detail {

inline void require_range(const char* suite, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string("suite ") + suite + ": n must be in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline void suite_poset(SuiteReport& r, const VerifyOptions& o) {
  const int n = o.n;
  detail::require_range("poset", n, 1, 5);
  const auto J = build_J_n(n);
  r.add("|J(n)| = n! 2^(n-1)", J.size() == factorial(n) * (std::int64_t{1} << (n - 1)), std::to_string(J.size()));
  r.add("J(n) covers are minimal", J.validate().empty(), J.validate());

  bool graded = true, minimal_deg0 = true, unique_max = true, chains = true;
  std::string witness;
  for (const auto& sigma : permutations(n)) {
    const auto P = build_J_sigma(sigma);
    for (auto [lo, hi] : P.covers())
      if (P.grade(hi) != P.grade(lo) + 1) {
        graded = false;
        witness = P.element(lo).to_string() + " < " + P.element(hi).to_string();
      }
    for (int m : P.minimal())
      if (P.grade(m) != 0) minimal_deg0 = false;
    const auto mx = P.maximal();
    if (mx.size() != 1 || P.element(mx.front()) != Unshuffle({sigma})) unique_max = false;
    // every maximal chain has n-1 covers: graded, one max of grade n-1, minima of grade 0
    if (P.max_grade() != n - 1) chains = false;
  }
  r.add("J_sigma: covers raise degree by 1", graded, witness);
  r.add("J_sigma: minimal elements have degree 0", minimal_deg0);
  r.add("J_sigma: unique maximal element sigma", unique_max);
  r.add("J_sigma: maximal chains have length n-1", chains && graded && minimal_deg0 && unique_max);

  // run characterization vs reachability in the cover graph of J(n)
  if (n <= 4) {
    std::size_t bad = 0;
    std::string w;
    for (int a = 0; a < J.size(); ++a)
      for (int b = 0; b < J.size(); ++b)
        if (poset_leq(J.element(a), J.element(b)) != J.leq(a, b)) {
          if (!bad++) w = J.element(a).to_string() + " vs " + J.element(b).to_string();
        }
    r.add("poset_leq agrees with cover reachability", bad == 0, w);
  }
  const auto F = build_milgram(n);
  r.add("F(n) boundary columns = covered cells", F.columns_differing_from(J).empty());
}

inline void suite_trees(SuiteReport& r, const VerifyOptions& o) {
  const int n = o.n;
  detail::require_range("trees", n, 1, 5);
  const auto all = enumerate_trees(label_range(n));
  std::vector<std::int64_t> f(static_cast<std::size_t>(n), 0);
  for (const auto& t : all) ++f[static_cast<std::size_t>(t.degree())];
  r.add("degree-0 trees = n!", f[0] == factorial(n), join(f));

  std::size_t bad_deg = 0, bad_black = 0, bad_order = 0, repeats = 0;
  std::string w;
  for (const auto& t : all) {
    const auto cs = collapses(t);
    const auto ord = partial_order(t);
    std::set<BWTree> seen;
    for (const auto& c : cs) {
      if (c.degree() != t.degree() - 1) {
        ++bad_deg;
        w = t.encoding();
      }
      if (c.black_count() != t.black_count() - 1) ++bad_black;
      if (!partial_order(c).coarser_or_equal(ord)) ++bad_order;
      if (!seen.insert(c).second) ++repeats;
    }
  }
  r.add("every collapse lowers degree by 1", bad_deg == 0, w);
  r.add("every collapse removes one black vertex", bad_black == 0);
  r.add("collapses coarsen the label order", bad_order == 0);
  r.add("no tree has two collapses with the same target", repeats == 0, std::to_string(repeats));

  std::size_t not_closed = 0, gen_mismatch = 0, bad_count = 0;
  std::string w2;
  for (const auto& sigma : permutations(n)) {
    const auto ts = T_sigma(sigma);
    std::vector<BWTree> filtered;
    for (const auto& t : all)
      if (compatible(t, sigma)) filtered.push_back(t);
    if (filtered != ts) ++gen_mismatch;
    std::set<BWTree> in(ts.begin(), ts.end());
    for (const auto& t : ts)
      for (const auto& c : collapses(t))
        if (!in.count(c)) {
          ++not_closed;
          w2 = sigma.to_string() + ": " + t.encoding() + " -> " + c.encoding();
        }
    if (static_cast<std::int64_t>(T_sigma_top(sigma).size()) != double_factorial(2 * n - 3)) ++bad_count;
  }
  r.add("T_sigma closed under collapses", not_closed == 0, w2);
  r.add("T_sigma generator = filter by compatibility", gen_mismatch == 0);
  r.add("|T^{n-1}_sigma| = (2n-3)!!", bad_count == 0, std::to_string(double_factorial(2 * n - 3)));

  std::size_t rt = 0;
  for (const auto& t : all) {
    if (b_plus_black(b_minus_black(t)) != t) ++rt;
    if (t.is_white_rooted()) {
      auto cut = b_minus_white(t);
      if (b_plus_s(cut.label, cut.forest) != t) ++rt;
    }
  }
  r.add("B+ and B- are mutually inverse", rt == 0);

  if (n >= 2) {
    bool part = true, bij = true;
    for (const auto& sigma : permutations(n)) {
      const auto d = decomposition(sigma);
      std::set<BWTree> seen;
      std::size_t total = 0;
      for (const auto& [k, by_l] : d.pieces)
        for (const auto& [l, ts] : by_l) {
          if (graft_piece(sigma.front(), l) != ts) part = false;
          total += ts.size();
          seen.insert(ts.begin(), ts.end());
        }
      if (total != T_sigma_top(sigma).size() || seen.size() != total) part = false;
      if (n <= 4 || sigma == permutations(n).back()) bij = bij && face_top_bijection(sigma).bijective();
    }
    r.add("pieces T_sigma[l] partition T^{n-1}_sigma", part);
    r.add("face/top bijection B+_{s1} B-_b", bij);
  }
}

inline void suite_cover(SuiteReport& r, const VerifyOptions& o) {
  const int n = o.n;
  detail::require_range("cover", n, 1, o.allow_large ? 5 : 4);
  const auto C = build_cact(n, o.allow_large);
  const auto cov = permutahedral_cover(C, n);
  r.add("every cell lies in some T_sigma", cov.uncovered().empty(), std::to_string(cov.uncovered().size()));

  std::set<int> cats;
  for (const auto& s : permutations(n)) cats.insert(*C.index_of(BWTree::caterpillar(s)));
  const auto ung = cov.unglued();
  r.add("cells in a single copy of P_n are the caterpillars", std::set<int>(ung.begin(), ung.end()) == cats,
        std::to_string(ung.size()) + " unglued");

  const auto perms = permutations(n);
  std::size_t bad = 0;
  std::string w;
  for (int c = 0; c < C.size(); ++c) {
    std::vector<NrSequence> got;
    for (int s : cov.sigmas_of[static_cast<std::size_t>(c)]) got.push_back(cov.sigmas[static_cast<std::size_t>(s)]);
    if (got != linear_extensions(C.cell(c), perms)) {
      ++bad;
      w = C.cell(c).encoding();
    }
  }
  r.add("copies containing tau = linear extensions of its order", bad == 0, w);

  std::size_t not_sub = 0;
  for (const auto& ids : cov.cells_of) {
    std::set<int> in(ids.begin(), ids.end());
    for (int c : ids)
      for (int f : C.boundary_multiset(c))
        if (!in.count(f)) ++not_sub;
  }
  r.add("each T_sigma is a subcomplex", not_sub == 0);

  if (n >= 2 && n <= 4) {
    std::size_t mismatch = 0;
    std::string w2;
    for (const auto& sigma : perms)
      for (const auto& l : all_unshuffles(remove_first(sigma))) {
        std::vector<std::int64_t> got(static_cast<std::size_t>(n), 0), want{1};
        for (const auto& t : piece_closure(sigma, l)) ++got[static_cast<std::size_t>(t.degree())];
        for (const auto& b : l.blocks()) {
          std::vector<std::int64_t> fb(b.size(), 0);
          for (const auto& t : T_sigma(b)) ++fb[static_cast<std::size_t>(t.degree())];
          want = convolve(want, fb);
        }
        want = convolve(want, simplex_product_f_vector({l.block_count()}));
        if (got != want) {
          ++mismatch;
          w2 = sigma.to_string() + " " + l.to_string();
        }
      }
    r.add("closure of T_sigma[l] = T_{l1} x ... x T_{lk} x Delta^k cellularly", mismatch == 0, w2);
  }

  if (n >= 2) {
    std::set<std::set<std::vector<NrSequence>>> decomps;
    for (const auto& sigma : perms) decomps.insert(subdivision_signature(sigma));
    r.add("n!/2 distinct decompositions of P_n", static_cast<std::int64_t>(decomps.size()) == std::max<std::int64_t>(1, factorial(n) / 2),
          std::to_string(decomps.size()));
  }
}

inline void suite_chainmap(SuiteReport& r, const VerifyOptions& o) {
  const int n = o.n;
  detail::require_range("chainmap", n, 1, o.allow_large ? 5 : 4);
  const auto F = build_milgram(n);
  const auto C = build_cact(n, o.allow_large);
  const auto I = chain_map_I(F, C);
  const auto rep = induced_iso_check(I, F.f_vector(), F.boundaries2(), C.f_vector(), C.boundaries2());
  r.add("d_C I = I d_F in every degree", rep.is_chain_map(), "failing degrees: " + join(rep.chain_map_failures));
  for (const auto& v : rep.degrees)
    r.add("I_* iso in degree " + std::to_string(v.degree), v.iso(),
          "betti " + std::to_string(v.source_betti) + "/" + std::to_string(v.target_betti) + ", rank " +
              std::to_string(v.induced_rank));
  r.add("mapping cone acyclic", rep.is_chain_map() && rep.cone_acyclic);
  if (n >= 2) {
    std::size_t top_terms = chain_map_terms(Unshuffle({NrSequence::identity(n)})).size();
    r.add("I(top cell) has (2n-3)!! terms", static_cast<std::int64_t>(top_terms) == double_factorial(2 * n - 3),
          std::to_string(top_terms));
  }
}

inline void suite_homology(SuiteReport& r, const VerifyOptions& o) {
  const int n = o.n;
  detail::require_range("homology", n, 1, o.allow_large ? 5 : 4);
  const auto want = pure_braid_poincare(n);
  const auto F = build_milgram(n);
  const auto C = build_cact(n, o.allow_large);
  const auto bF = F.betti_gf2();
  const auto bC = C.betti_gf2();
  r.add("F(n) GF(2) Betti = prod(1+it)", bF == want, betti_string(bF));
  r.add("C(n) GF(2) Betti = prod(1+it)", bC == want, betti_string(bC));
  if (n >= 2) {
    r.add("chi(F(n)) = 0", F.euler_characteristic() == 0);
    r.add("chi(C(n)) = 0", C.euler_characteristic() == 0);
  }
  if (n <= 4) {
    const auto hF = order_complex(F.face_poset()).integral_homology();
    const auto hC = order_complex(C.face_poset()).integral_homology();
    r.add("order complex of J(n): integral Betti = prod(1+it)", hF.betti == want, betti_string(hF.betti));
    r.add("order complex of T_n: integral Betti = prod(1+it)", hC.betti == want, betti_string(hC.betti));
    r.add("no torsion", hF.torsion_free() && hC.torsion_free());
  }
  if (n == 4) {
    const auto F5 = build_milgram(5);
    r.add("chi(F(5)) = 0", F5.euler_characteristic() == 0, betti_string(F5.f_vector()));
  }
}

inline void suite_operad(SuiteReport& r, const VerifyOptions& o) {
  const int n = o.n;
  detail::require_range("operad", n, 2, 6);
  const auto pinned = pin_splitting(std::min(n, 4));
  r.add("splitting convention pinned to overlapping", pinned && *pinned == kSplitting);
  for (int m = 2; m <= n; ++m) {
    const auto rr = check_dyer_lashof_right(m);
    r.add("Dyer-Lashof right n=" + std::to_string(m), rr.ok(),
          "support " + std::to_string(rr.support) + "/" + std::to_string(rr.expected));
    const auto ll = check_dyer_lashof_left(m);
    r.add("Dyer-Lashof left n=" + std::to_string(m), ll.ok(), "support " + std::to_string(ll.support));
  }
  std::size_t rt = 0, interleaved = 0;
  for (int m = 1; m <= std::min(n, 4); ++m)
    for (const auto& t : enumerate_trees(label_range(m))) {
      const auto s = tree_to_sequence(t);
      if (static_cast<int>(s.length()) != t.degree() + m || sequence_to_tree(s) != t) ++rt;
      if (has_interleaving(s)) ++interleaved;
    }
  r.add("tree <-> sequence round trip", rt == 0);
  r.findings.push_back("words with an i..j..i..j pattern: " + std::to_string(interleaved));

  std::vector<CactSequence> pool;
  for (int m = 2; m <= 3; ++m)
    for (const auto& t : enumerate_trees(label_range(m))) pool.push_back(tree_to_sequence(t));
  std::size_t bad_deg = 0;
  for (const auto& u : pool)
    for (const auto& v : pool)
      for (Letter i : u.label_set()) {
        const auto sum = compose(u, i, v);
        for (const auto& [s, m] : sum.terms())
          if (s.degree() != u.degree() + v.degree()) ++bad_deg;
      }
  r.add("composition adds degrees", bad_deg == 0);

  std::size_t transport = 0;
  for (int i = 1; i <= std::min(n, 4); ++i)
    for (const auto& sigma : permutations(i)) {
      std::vector<Letter> ext = sigma.letters();
      ext.push_back(i + 1);
      const NrSequence target(ext);
      for (const auto& t : T_sigma(sigma)) {
        const auto sum = compose(dl_generator(), 1, tree_to_sequence(t));
        for (const auto& [s, m] : sum.terms())
          if (!compatible(sequence_to_tree(s), target)) ++transport;
      }
    }
  r.add("121 o_1 T_sigma lands in T_{sigma (i+1)}", transport == 0);
  const int eq = equivariance_spot_check(pool, 200, o.seed);
  r.add("relabeling commutes with composition", eq == 0, "seed " + std::to_string(o.seed));
}

inline void suite_geometry(SuiteReport& r, const VerifyOptions& o) {
  const int n = o.n;
  detail::require_range("geometry", n, 2, 4);
  const Rational s = Rational(n * (n + 1)) / 2;
  bool sums = true;
  for (const auto& sigma : permutations(n))
    if (coordinate_sum(vertex(sigma)) != s) sums = false;
  r.add("vertices lie on sum = n(n+1)/2", sums);
  const auto e = edge_squared_lengths(n);
  r.add("edges of P_n have squared length 2", std::all_of(e.begin(), e.end(), [](const Rational& x) { return x == 2; }),
        std::to_string(e.size()) + " edges");
  bool fl = true;
  std::string w;
  for (const auto& sigma : permutations(n)) {
    const auto rep = face_lattice_vs_J(sigma);
    if (!rep.ok()) {
      fl = false;
      w = sigma.to_string();
    }
  }
  r.add("face lattice of P_n = J_sigma", fl, w);
  if (n >= 3) {
    bool vol = true, disjoint = true, shape = true;
    std::string w2;
    for (const auto& sigma : permutations(n)) {
      const auto rep = subdivision_volume_check(sigma);
      if (rep.total != rep.polytope) {
        vol = false;
        w2 = sigma.to_string() + ": " + rep.total.str() + " vs " + rep.polytope.str();
      }
      if (!rep.overlapping.empty()) disjoint = false;
      if (!rep.shape_mismatch.empty() || !rep.degenerate.empty()) shape = false;
    }
    r.add("cactus cell volumes sum to vol(P_n)", vol, w2);
    r.add("cactus cells have disjoint interiors", disjoint);
    r.add("C_tau is a product of simplices by white arities", shape);
    bool pieces = true;
    std::string w3;
    for (const auto& sigma : permutations(n))
      for (const auto& l : all_unshuffles(remove_first(sigma))) {
        const auto g = piece_geometry(sigma, l);
        if (!g.ok()) {
          pieces = false;
          w3 = sigma.to_string() + " " + l.to_string();
        }
      }
    r.add("union of T_sigma[l] is convex with the f-vector of P_m1 x ... x Delta^k", pieces, w3);
  }
}

// ---------------------------------------------------------------------------

inline const std::map<std::string, std::function<void(SuiteReport&, const VerifyOptions&)>>& suites() {
  static const std::map<std::string, std::function<void(SuiteReport&, const VerifyOptions&)>> m{
      {"poset", suite_poset},       {"trees", suite_trees},       {"cover", suite_cover},
      {"chainmap", suite_chainmap}, {"homology", suite_homology}, {"operad", suite_operad},
      {"geometry", suite_geometry},
  };
  return m;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> v{"poset", "trees", "cover", "chainmap", "homology", "operad", "geometry", "all"};
  return v;
}

/// Runs one suite, or every suite applicable at n for "all".
inline std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& o) {
  std::vector<std::string> todo;
  if (name == "all") {
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      if (s == "operad" && o.n < 2) continue;
      if (s == "geometry" && (o.n < 2 || o.n > 4)) continue;
      if ((s == "cover" || s == "chainmap" || s == "homology") && o.n == 5 && !o.allow_large) continue;
      todo.push_back(s);
    }
  } else if (suites().count(name)) {
    todo.push_back(name);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  std::vector<SuiteReport> out;
  for (const auto& s : todo) {
    SuiteReport r{s, o.n, {}, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    suites().at(s)(r, o);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace permop
