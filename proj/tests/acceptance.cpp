// Acceptance gate: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "permop/permop.hpp"

using namespace permop;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string vec(const std::vector<std::int64_t>& v) { return "(" + join(v) + ")"; }

std::vector<std::int64_t> degree_counts(const std::vector<BWTree>& ts, int n) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(std::max(n, 1)), 0);
  for (const auto& t : ts) ++f[static_cast<std::size_t>(t.degree())];
  return f;
}

// 1. counting
Outcome counting() {
  Outcome o;
  o.expect(T_sigma_top(NrSequence::parse("4321")).size() == 15, "|T3_4321| != 15");
  const auto sigma = NrSequence::parse("54321");
  const auto bij = face_top_bijection(sigma);
  const std::vector<std::size_t> want{15, 30, 36, 24};
  for (int k = 1; k <= 4; ++k)
    o.expect(bij.domain_size.at(k) == want[static_cast<std::size_t>(k - 1)] &&
                 bij.codomain_size.at(k) == want[static_cast<std::size_t>(k - 1)],
             "face count at k=" + std::to_string(k));
  o.expect(T_sigma_top(sigma).size() == 105, "|T4_54321| != 105");
  o.expect(bij.top_count == 105 && bij.image_size == 105, "image size");
  for (int n = 3; n <= 5; ++n) {
    std::size_t tested = 0, bad = 0;
    for (const auto& s : permutations(n)) {
      ++tested;
      if (!face_top_bijection(s).bijective()) ++bad;
    }
    o.expect(bad == 0, "bijection fails for " + std::to_string(bad) + "/" + std::to_string(tested) + " at n=" +
                           std::to_string(n));
  }
  return o;
}

// 2. (2n-3)!!
Outcome double_factorial_check() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    const auto want = static_cast<std::size_t>(oracle::double_factorial(2 * n - 3));
    std::set<std::size_t> seen;
    for (const auto& s : permutations(n)) seen.insert(T_sigma_top(s).size());
    o.expect(seen == std::set<std::size_t>{want}, "n=" + std::to_string(n));
  }
  return o;
}

// 3. decomposition
Outcome decomposition_check() {
  Outcome o;
  std::size_t pairs = 0;
  for (int n = 2; n <= 4; ++n) {
    for (const auto& sigma : permutations(n)) {
      const auto d = decomposition(sigma);
      std::set<BWTree> seen;
      std::size_t total = 0;
      for (const auto& l : all_unshuffles(remove_first(sigma))) {
        ++pairs;
        const std::string at = sigma.to_string() + " " + l.to_string();
        // product of the pieces' own f-vectors with the simplex, cell by cell
        std::vector<std::int64_t> want = oracle::simplex_f(l.block_count());
        std::vector<std::int64_t> geo = oracle::simplex_f(l.block_count());
        for (const auto& b : l.blocks()) {
          want = oracle::product_f(want, degree_counts(T_sigma(b), b.size()));
          geo = oracle::product_f(geo, oracle::permutahedron_f(b.size()));
        }
        o.expect(degree_counts(piece_closure(sigma, l), n) == want, "cellular f-vector at " + at);
        const auto g = piece_geometry(sigma, l);
        o.expect(g.cells_volume == g.hull_volume, "piece not convex at " + at);
        o.expect(g.hull_f == geo, "hull f-vector " + vec(g.hull_f) + " vs " + vec(geo) + " at " + at);
        const auto piece = graft_piece(sigma.front(), l);
        o.expect(d.pieces.at(l.block_count()).at(l) == piece, "piece mismatch at " + at);
        total += piece.size();
        seen.insert(piece.begin(), piece.end());
      }
      const auto top = T_sigma_top(sigma);
      o.expect(total == top.size() && seen == std::set<BWTree>(top.begin(), top.end()),
               "pieces do not partition T_" + sigma.to_string());
    }
  }
  for (int n = 3; n <= 4; ++n) {
    std::set<std::set<std::vector<NrSequence>>> decomps;
    for (const auto& sigma : permutations(n)) decomps.insert(subdivision_signature(sigma));
    o.expect(static_cast<std::int64_t>(decomps.size()) == oracle::factorial(n) / 2,
             std::to_string(decomps.size()) + " decompositions at n=" + std::to_string(n));
  }
  o.detail = std::to_string(pairs) + " (sigma, l) pairs" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// 4. homology
Outcome homology_check() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const auto want = oracle::braid_poincare(n);
    const auto F = build_milgram(n);
    const auto C = build_cact(n);
    const auto hF = order_complex(F.face_poset()).integral_homology();
    const auto hC = order_complex(C.face_poset()).integral_homology();
    o.expect(hF.betti == want, "J(" + std::to_string(n) + ") betti " + vec(hF.betti));
    o.expect(hC.betti == want, "T_" + std::to_string(n) + " betti " + vec(hC.betti));
    o.expect(hF.torsion_free() && hC.torsion_free(), "torsion at n=" + std::to_string(n));
    o.expect(F.euler_characteristic() == 0 && C.euler_characteristic() == 0, "chi at n=" + std::to_string(n));
  }
  const auto F5 = build_milgram(5);
  o.expect(F5.euler_characteristic() == 0 && oracle::factorial(5) * 16 == static_cast<std::int64_t>(F5.size()),
           "F(5) " + vec(F5.f_vector()));
  return o;
}

// 5. chain map
Outcome chain_map_check() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const auto F = build_milgram(n);
    const auto C = build_cact(n);
    const auto I = chain_map_I(F, C);
    const auto rep = induced_iso_check(I, F.f_vector(), F.boundaries2(), C.f_vector(), C.boundaries2());
    o.expect(rep.is_chain_map(), "not a chain map at n=" + std::to_string(n));
    o.expect(rep.iso() && rep.cone_acyclic, "I_* not iso at n=" + std::to_string(n));
    o.expect(static_cast<int>(rep.degrees.size()) == n, "degrees at n=" + std::to_string(n));
  }
  return o;
}

// 6. operad
Outcome operad_check() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) {
    const auto right = to_trees(dyer_lashof_right(n));
    const auto supp = right.support();
    const auto top = T_sigma_top(NrSequence::identity(n));
    o.expect(std::set<BWTree>(supp.begin(), supp.end()) == std::set<BWTree>(top.begin(), top.end()),
             "right support at n=" + std::to_string(n));
    o.expect(right.all_multiplicities(1), "right multiplicities at n=" + std::to_string(n));
    const auto left = to_trees(dyer_lashof_left(n));
    o.expect(left.support() == std::vector<BWTree>{BWTree::caterpillar(NrSequence::identity(n))},
             "left support at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(label_range(n)))
      o.expect(sequence_to_tree(tree_to_sequence(t)) == t, "round trip " + t.encoding());
  return o;
}

// 7. geometry
Outcome geometry_check() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const Rational s = Rational(n * (n + 1), 2);
    for (const auto& sigma : permutations(n)) o.expect(coordinate_sum(vertex(sigma)) == s, "off hyperplane");
    std::size_t edges = 0;
    for (const auto& e : edge_squared_lengths(n)) {
      ++edges;
      o.expect(e == 2, "edge length " + e.str());
    }
    o.expect(static_cast<std::int64_t>(edges) == oracle::permutahedron_f(n).at(1), "edge count at n=" + std::to_string(n));
    for (const auto& sigma : permutations(n)) {
      const auto fl = face_lattice_vs_J(sigma);
      o.expect(fl.ok() && fl.f_vector == oracle::permutahedron_f(n), "face lattice at " + sigma.to_string());
    }
  }
  for (int n = 3; n <= 4; ++n) {
    // vol of P_n in the hyperplane is n^(n-2) sqrt(n); dropping a coordinate divides by sqrt(n)
    const Rational vol = boost::multiprecision::pow(boost::multiprecision::cpp_int(n), static_cast<unsigned>(n - 2));
    for (const auto& sigma : permutations(n)) {
      const auto rep = subdivision_volume_check(sigma);
      o.expect(rep.polytope == vol, "vol(P_" + std::to_string(n) + ") = " + rep.polytope.str());
      o.expect(rep.total == vol, "cells of " + sigma.to_string() + " sum to " + rep.total.str());
      o.expect(rep.overlapping.empty() && rep.degenerate.empty(), "overlap in " + sigma.to_string());
    }
  }
  return o;
}

// 8. regularity and poset
Outcome regularity_check() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const auto F = build_milgram(n);
    const auto C = build_cact(n);
    o.expect(F.boundary_square_defects().empty() && C.boundary_square_defects().empty(),
             "d^2 != 0 at n=" + std::to_string(n));

    // F: faces of a are the b < a one degree down, from the brute-force closure
    const auto up = oracle::closure(n);
    const auto raw = oracle::all_unshuffles_of_n(n);
    o.expect(static_cast<int>(raw.size()) == F.size(), "|J(n)| at n=" + std::to_string(n));
    std::size_t leq_bad = 0, col_bad = 0;
    for (const auto& a : raw) {
      const auto ua = oracle::to_unshuffle(a);
      std::set<int> want;
      for (const auto& b : raw) {
        const auto ub = oracle::to_unshuffle(b);
        const bool brute = up.at(oracle::key(a)).count(oracle::key(b)) > 0;
        if (poset_leq(ua, ub) != brute) ++leq_bad;
        if (ub.degree() == ua.degree() - 1 && up.at(oracle::key(b)).count(oracle::key(a))) want.insert(*F.index_of(ub));
      }
      const auto& got = F.boundary_multiset(*F.index_of(ua));
      if (std::set<int>(got.begin(), got.end()) != want || got.size() != want.size()) ++col_bad;
    }
    o.expect(leq_bad == 0, std::to_string(leq_bad) + " poset_leq disagreements at n=" + std::to_string(n));
    o.expect(col_bad == 0, std::to_string(col_bad) + " F boundary columns wrong at n=" + std::to_string(n));

    // C: faces of tau are the words with one repeated letter occurrence deleted
    std::size_t cbad = 0, dbad = 0;
    for (int i = 0; i < C.size(); ++i) {
      const auto& tau = C.cell(i);
      std::set<int> want;
      for (const auto& w : oracle::word_deletions(tree_to_sequence(tau).word()))
        want.insert(*C.index_of(sequence_to_tree(CactSequence(w))));
      const auto& got = C.boundary_multiset(i);
      if (std::set<int>(got.begin(), got.end()) != want || got.size() != want.size()) ++cbad;
      for (const auto& c : collapses(tau))
        if (c.degree() != tau.degree() - 1) ++dbad;
    }
    o.expect(cbad == 0, std::to_string(cbad) + " C boundary columns wrong at n=" + std::to_string(n));
    o.expect(dbad == 0, "collapse keeps degree at n=" + std::to_string(n));

    std::size_t open = 0;
    for (const auto& sigma : permutations(n)) {
      const auto ts = T_sigma(sigma);
      const std::set<BWTree> in(ts.begin(), ts.end());
      for (const auto& t : ts)
        for (const auto& c : collapses(t))
          if (!in.count(c)) ++open;
    }
    o.expect(open == 0, "T_sigma not closed at n=" + std::to_string(n));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {"1 counting", 60, counting},
      {"2 double factorial", 60, double_factorial_check},
      {"3 decomposition", 120, decomposition_check},
      {"4 homology", 600, homology_check},
      {"5 chain map", 600, chain_map_check},
      {"6 operad", 60, operad_check},
      {"7 geometry", 300, geometry_check},
      {"8 regularity/poset", 300, regularity_check},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) o.expect(false, "over time budget");
    if (!o.ok) ++failed;
    std::printf("[%s] criterion %s (%.2fs / %.0fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, s, c.budget_s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
