#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "permop/decomposition.hpp"
#include "permop/operad.hpp"

using namespace permop;

namespace {

std::vector<std::int64_t> by_degree(const std::vector<BWTree>& ts, int n) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(n), 0);
  for (const auto& t : ts) ++f[static_cast<std::size_t>(t.degree())];
  return f;
}

std::vector<Letter> range(int n) {
  std::vector<Letter> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST(Tree, Encoding) {
  EXPECT_EQ(BWTree::scc(NrSequence::parse("12")).encoding(), "[1,2]");
  EXPECT_EQ(BWTree::caterpillar(NrSequence::parse("123")).encoding(), "[1[2[3]]]");
  const auto t = BWTree::parse("[1[3][2]]");
  EXPECT_EQ(t.encoding(), "[1[3][2]]");
  EXPECT_EQ(t.degree(), 2);
  EXPECT_TRUE(t.is_white_rooted());
  EXPECT_EQ(t.initial_branching(), 2);
  EXPECT_THROW(BWTree::parse("[1[1]]"), std::invalid_argument);
  EXPECT_THROW(BWTree::parse("[1,2"), std::invalid_argument);
  EXPECT_THROW(BWTree::scc(NrSequence::parse("12")).initial_branching(), std::invalid_argument);
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_trees(range(1)).size(), 1u);
  EXPECT_EQ(by_degree(enumerate_trees(range(2)), 2), (std::vector<std::int64_t>{2, 2}));
  const auto f3 = by_degree(enumerate_trees(range(3)), 3);
  EXPECT_EQ(f3[0], 6);
  EXPECT_EQ(f3[2], 12);
  EXPECT_EQ(f3[0] - f3[1] + f3[2], 0);
  std::vector<std::size_t> totals;
  for (int n = 1; n <= 4; ++n) totals.push_back(enumerate_trees(range(n)).size());
  EXPECT_EQ(totals, (std::vector<std::size_t>{1, 4, 36, 528}));
}

TEST(Enumerate, SortedDistinctAndValid) {
  const auto ts = enumerate_trees(range(4));
  EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
  EXPECT_EQ(std::set<BWTree>(ts.begin(), ts.end()).size(), ts.size());
  for (const auto& t : ts) EXPECT_EQ(BWTree::parse(t.encoding()), t);
}

TEST(Collapse, Examples) {
  EXPECT_TRUE(collapses(BWTree::scc(NrSequence::parse("312"))).empty());
  const auto cs = collapses(BWTree::parse("[1[2]]"));
  EXPECT_EQ(std::set<BWTree>(cs.begin(), cs.end()),
            (std::set<BWTree>{BWTree::scc(NrSequence::parse("12")), BWTree::scc(NrSequence::parse("21"))}));
}

TEST(Collapse, MatchesWordDeletion) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(range(n))) {
      std::multiset<std::string> want, got;
      for (const auto& w : oracle::word_deletions(tree_to_sequence(t).word()))
        want.insert(sequence_to_tree(CactSequence(w)).encoding());
      for (const auto& c : collapses(t)) got.insert(c.encoding());
      ASSERT_EQ(got, want) << t.encoding();
    }
}

TEST(Collapse, DropsDegreeAndCoarsensOrder) {
  for (const auto& t : enumerate_trees(range(4)))
    for (const auto& c : collapses(t)) {
      EXPECT_EQ(c.degree(), t.degree() - 1);
      EXPECT_EQ(c.black_count(), t.black_count() - 1);
      EXPECT_TRUE(partial_order(c).coarser_or_equal(partial_order(t)));
    }
}

TEST(Collapse, NoRepeatedTargets) {
  for (const auto& t : enumerate_trees(range(4))) {
    const auto cs = collapses(t);
    EXPECT_EQ(std::set<BWTree>(cs.begin(), cs.end()).size(), cs.size()) << t.encoding();
  }
}

TEST(LabelOrder, Examples) {
  EXPECT_TRUE(partial_order(BWTree::scc(NrSequence::parse("231"))).relation.empty());
  const auto cat = partial_order(BWTree::caterpillar(NrSequence::parse("1234")));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) EXPECT_EQ(cat.less(a, b), a < b);
  EXPECT_EQ(partial_order(BWTree::parse("[1[3][2]]")).relation, (std::set<std::pair<Letter, Letter>>{{1, 3}, {1, 2}}));
}

TEST(Compatible, Examples) {
  for (const auto& phi : permutations(3)) EXPECT_TRUE(compatible(BWTree::scc(NrSequence::parse("213")), phi));
  EXPECT_FALSE(compatible(BWTree::caterpillar(NrSequence::parse("123")), NrSequence::parse("132")));
  EXPECT_THROW(compatible(BWTree::scc(NrSequence::parse("12")), NrSequence::parse("13")), std::invalid_argument);
}

TEST(TSigma, TopCounts) {
  EXPECT_EQ(T_sigma_top(NrSequence::parse("4321")).size(), 15u);
  EXPECT_EQ(T_sigma_top(NrSequence::parse("54321")).size(), 105u);
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : permutations(n))
      EXPECT_EQ(static_cast<std::int64_t>(T_sigma_top(s).size()), oracle::double_factorial(2 * n - 3));
}

TEST(TSigma, GeneratorEqualsFilter) {
  const auto all = enumerate_trees(range(4));
  for (const auto& s : permutations(4)) {
    std::vector<BWTree> filtered;
    for (const auto& t : all)
      if (compatible(t, s)) filtered.push_back(t);
    EXPECT_EQ(T_sigma(s), filtered) << s.to_string();
  }
}

TEST(TSigma, ClosedUnderCollapse) {
  for (const auto& s : permutations(4)) {
    const auto ts = T_sigma(s);
    const std::set<BWTree> in(ts.begin(), ts.end());
    for (const auto& t : ts)
      for (const auto& c : collapses(t)) EXPECT_TRUE(in.count(c)) << s.to_string() << " " << c.encoding();
  }
}

TEST(Grafting, BlackRoundTrip) {
  const auto parts = b_minus_black(BWTree::scc(NrSequence::parse("12")));
  EXPECT_EQ(parts, (std::vector<BWTree>{BWTree::scc(NrSequence{1}), BWTree::scc(NrSequence{2})}));
  const auto cat = BWTree::parse("[1[2]]");
  EXPECT_EQ(b_minus_black(cat).size(), 1u);
  for (const auto& t : enumerate_trees(range(3))) EXPECT_EQ(b_plus_black(b_minus_black(t)), t);
  EXPECT_THROW(b_plus_black({BWTree::scc(NrSequence{1}), BWTree::scc(NrSequence{1})}), std::invalid_argument);
}

TEST(Grafting, WhiteRoundTrip) {
  EXPECT_EQ(b_plus_s(1, {BWTree::scc(NrSequence{2})}), BWTree::parse("[1[2]]"));
  for (const auto& t : enumerate_trees(range(3))) {
    if (!t.is_white_rooted()) {
      EXPECT_THROW(b_minus_white(t), std::invalid_argument);
      continue;
    }
    const auto cut = b_minus_white(t);
    EXPECT_EQ(b_plus_s(cut.label, cut.forest), t);
    const auto again = b_minus_white(b_plus_s(cut.label, cut.forest));
    EXPECT_EQ(again.label, cut.label);
    EXPECT_EQ(again.forest, cut.forest);
  }
  EXPECT_THROW(b_plus_s(2, {BWTree::scc(NrSequence{2})}), std::invalid_argument);
}

TEST(Decomposition, PiecesByBranching) {
  const auto d = decomposition(NrSequence::parse("54321"));
  EXPECT_EQ(d.size_of(1), 15u);
  EXPECT_EQ(d.size_of(2), 30u);
  EXPECT_EQ(d.size_of(3), 36u);
  EXPECT_EQ(d.size_of(4), 24u);
  EXPECT_EQ(d.total(), 105u);
  const auto d4 = decomposition(NrSequence::parse("4321"));
  EXPECT_EQ(d4.size_of(1) + d4.size_of(2) + d4.size_of(3), 15u);
}

TEST(Decomposition, PiecesSplitUnderWhiteCut) {
  for (const auto& sigma : permutations(4)) {
    const auto d = decomposition(sigma);
    for (const auto& [k, by_l] : d.pieces)
      for (const auto& [l, ts] : by_l)
        for (const auto& t : ts) {
          EXPECT_EQ(t.initial_branching(), k);
          const auto cut = b_minus_white(t);
          ASSERT_EQ(static_cast<int>(cut.forest.size()), l.block_count());
          for (int i = 0; i < l.block_count(); ++i) {
            EXPECT_EQ(cut.forest[static_cast<std::size_t>(i)].degree(), l.block(i).size() - 1);
            EXPECT_TRUE(compatible(cut.forest[static_cast<std::size_t>(i)], l.block(i)));
          }
        }
  }
}

TEST(Decomposition, FaceTopBijection) {
  const auto small = face_top_bijection(NrSequence::parse("321"));
  EXPECT_EQ(small.domain_size.at(1), 1u);
  EXPECT_EQ(small.domain_size.at(2), 2u);
  EXPECT_TRUE(small.bijective());
  EXPECT_TRUE(face_top_bijection(NrSequence::parse("21")).bijective());
  EXPECT_EQ(face_top_bijection(NrSequence::parse("21")).top_count, 1u);
  for (const auto& s : permutations(4)) EXPECT_TRUE(face_top_bijection(s).bijective()) << s.to_string();
}

TEST(Decomposition, Filtration) {
  const auto sigma = NrSequence::parse("4321");
  std::size_t prev = 0;
  for (int k = 1; k <= 3; ++k) {
    const auto f = filtration(sigma, k);
    EXPECT_GE(f.size(), prev);
    prev = f.size();
  }
  EXPECT_EQ(prev, T_sigma(sigma).size());
}

TEST(Decomposition, HalfAsManySubdivisions) {
  for (int n = 3; n <= 4; ++n) {
    std::set<std::set<std::vector<NrSequence>>> seen;
    for (const auto& s : permutations(n)) {
      seen.insert(subdivision_signature(s));
      auto swapped = s.letters();
      std::swap(swapped[static_cast<std::size_t>(n - 2)], swapped[static_cast<std::size_t>(n - 1)]);
      EXPECT_EQ(subdivision_signature(s), subdivision_signature(NrSequence(swapped)));
    }
    EXPECT_EQ(static_cast<std::int64_t>(seen.size()), oracle::factorial(n) / 2);
  }
}

TEST(Tree, Json) {
  const auto j = to_json(BWTree::parse("[1[3][2]]"));
  EXPECT_EQ(j["encoding"], "[1[3][2]]");
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["label_set"], nlohmann::json::array({1, 2, 3}));
}
