#include <gtest/gtest.h>

#include <set>

#include "permop/cellcx.hpp"
#include "permop/operad.hpp"

using namespace permop;

namespace {

std::map<std::string, std::int64_t> terms(const SequenceSum& s) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [k, m] : s.terms()) out[k.to_string()] = m;
  return out;
}

CactSequence seq(const char* s) { return CactSequence::parse(s); }

}  // namespace

TEST(Sequence, ParseAndDegree) {
  const auto s = seq("12321");
  EXPECT_EQ(s.arity(), 3);
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(seq("10,2,10").word(), (std::vector<Letter>{10, 2, 10}));
  EXPECT_THROW(seq("1a1"), std::invalid_argument);
  EXPECT_THROW(sequence_to_tree(seq("11")), std::invalid_argument);
  EXPECT_THROW(sequence_to_tree(seq("1212")), std::invalid_argument);
}

TEST(Sequence, TreeConversion) {
  EXPECT_EQ(tree_to_sequence(BWTree::scc(NrSequence::parse("312"))).to_string(), "312");
  EXPECT_EQ(tree_to_sequence(BWTree::parse("[1[2]]")).to_string(), "121");
  EXPECT_EQ(tree_to_sequence(BWTree::caterpillar(NrSequence::parse("123"))).to_string(), "12321");
  EXPECT_EQ(tree_to_sequence(BWTree::parse("[1[3][2]]")).to_string(), "13121");
}

TEST(Sequence, RoundTrip) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(label_range(n))) {
      const auto s = tree_to_sequence(t);
      EXPECT_EQ(sequence_to_tree(s), t);
      EXPECT_EQ(s.degree(), t.degree());
      EXPECT_FALSE(has_interleaving(s));
    }
}

TEST(Compose, Examples) {
  EXPECT_EQ(terms(compose(seq("121"), 2, seq("121"))), (std::map<std::string, std::int64_t>{{"12321", 1}}));
  EXPECT_EQ(terms(compose(seq("121"), 1, seq("121"))),
            (std::map<std::string, std::int64_t>{{"12131", 1}, {"12321", 1}, {"13121", 1}}));
  EXPECT_THROW(compose(seq("121"), 3, seq("121")), std::invalid_argument);
}

TEST(Compose, UnitAndDegree) {
  const CactSequence unit({1});
  for (const auto& t : enumerate_trees(label_range(3))) {
    const auto s = tree_to_sequence(t);
    EXPECT_EQ(terms(compose(unit, 1, s)), (std::map<std::string, std::int64_t>{{s.to_string(), 1}}));
    for (Letter i : s.label_set()) EXPECT_EQ(terms(compose(s, i, unit)), (std::map<std::string, std::int64_t>{{s.to_string(), 1}}));
    for (Letter i : s.label_set()) {
      const auto r = compose(s, i, seq("121"));
      for (const auto& [k, m] : r.terms()) {
        EXPECT_EQ(k.degree(), s.degree() + 1);
        EXPECT_EQ(k.arity(), 4);
        EXPECT_NO_THROW(sequence_to_tree(k));
      }
    }
  }
}

TEST(Compose, SplittingConvention) {
  EXPECT_EQ(kSplitting, Splitting::overlapping);
  for (int i = 1; i <= 4; ++i) EXPECT_TRUE(insertion_lemma_holds(i, Splitting::overlapping)) << i;
  EXPECT_FALSE(insertion_lemma_holds(2, Splitting::disjoint) && insertion_lemma_holds(3, Splitting::disjoint) &&
               insertion_lemma_holds(4, Splitting::disjoint));
  EXPECT_EQ(pin_splitting(4), Splitting::overlapping);
}

TEST(DyerLashof, Right) {
  EXPECT_EQ(terms(dyer_lashof_right(2)), (std::map<std::string, std::int64_t>{{"121", 1}}));
  const std::vector<std::size_t> sizes{1, 3, 15, 105};
  for (int n = 2; n <= 5; ++n) {
    const auto r = to_trees(dyer_lashof_right(n));
    EXPECT_EQ(r.size(), sizes[static_cast<std::size_t>(n - 2)]);
    EXPECT_TRUE(r.all_multiplicities(1));
    EXPECT_EQ(r.support(), T_sigma_top(NrSequence::identity(n)));
  }
}

TEST(DyerLashof, Left) {
  EXPECT_EQ(terms(dyer_lashof_left(2)), (std::map<std::string, std::int64_t>{{"121", 1}}));
  EXPECT_EQ(terms(dyer_lashof_left(3)), (std::map<std::string, std::int64_t>{{"12321", 1}}));
  EXPECT_EQ(terms(dyer_lashof_left(4)), (std::map<std::string, std::int64_t>{{"1234321", 1}}));
  for (int n = 2; n <= 5; ++n)
    EXPECT_EQ(to_trees(dyer_lashof_left(n)).support(), std::vector<BWTree>{BWTree::caterpillar(NrSequence::identity(n))});
}

TEST(Equivariance, SeededSpotCheck) {
  std::vector<CactSequence> pool;
  for (int m = 2; m <= 3; ++m)
    for (const auto& t : enumerate_trees(label_range(m))) pool.push_back(tree_to_sequence(t));
  EXPECT_EQ(equivariance_spot_check(pool, 100, 20240531), 0);
  EXPECT_EQ(equivariance_spot_check(pool, 100, 7), 0);
}

TEST(FormalSum, Output) {
  SequenceSum s;
  s.add(seq("121"));
  s.add(seq("121"));
  s.add(seq("12"));
  EXPECT_EQ(s.multiplicity(seq("121")), 2);
  EXPECT_EQ(to_lines(s), "1 x 12\n2 x 121\n");
  EXPECT_EQ(to_json(s).size(), 2u);
}
