#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "permop/seqcomb.hpp"

using namespace permop;

namespace {

std::vector<std::string> strings(const std::vector<Unshuffle>& v) {
  std::vector<std::string> out;
  for (const auto& u : v) out.push_back(u.to_string());
  return out;
}

}  // namespace

TEST(NrSequence, ParseAndPrint) {
  EXPECT_EQ(NrSequence::parse("3214").to_string(), "3214");
  EXPECT_EQ(NrSequence::parse("10,2,7").letters(), (std::vector<Letter>{10, 2, 7}));
  EXPECT_THROW(NrSequence::parse("1231"), std::invalid_argument);
  EXPECT_THROW(NrSequence::parse(""), std::invalid_argument);
  EXPECT_THROW(NrSequence::parse("1a"), std::invalid_argument);
}

TEST(NrSequence, RemoveFirst) {
  EXPECT_EQ(remove_first(NrSequence::parse("2341")).to_string(), "341");
  EXPECT_EQ(remove_first(NrSequence::parse("12")).to_string(), "2");
  EXPECT_EQ(remove_first(NrSequence::parse("53214")).to_string(), "3214");
  EXPECT_THROW(remove_first(NrSequence::parse("5")), std::invalid_argument);
}

TEST(Unshuffles, ThreeOne) {
  const auto got = strings(unshuffles(NrSequence::parse("3214"), {3, 1}));
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()),
            (std::set<std::string>{"321|4", "324|1", "314|2", "214|3"}));
  EXPECT_EQ(got.size(), 4u);
}

TEST(Unshuffles, TwoTwo) {
  const auto got = strings(unshuffles(NrSequence::parse("3214"), {2, 2}));
  EXPECT_EQ(got.size(), 6u);
  for (const char* s : {"32|14", "31|24", "34|21"}) EXPECT_NE(std::find(got.begin(), got.end(), s), got.end()) << s;
}

TEST(Unshuffles, SingleLetter) { EXPECT_EQ(strings(unshuffles(NrSequence{5}, {1})), std::vector<std::string>{"5"}); }

TEST(Unshuffles, RejectsBadParts) {
  EXPECT_THROW(unshuffles(NrSequence::parse("123"), {0, 3}), std::invalid_argument);
  EXPECT_THROW(unshuffles(NrSequence::parse("123"), {1, 1}), std::invalid_argument);
  EXPECT_THROW(unshuffles(NrSequence::parse("123"), {}), std::invalid_argument);
}

TEST(Unshuffles, OrderedWithoutDuplicates) {
  const auto phi = NrSequence::parse("41352");
  for (const auto& parts : compositions(5)) {
    const auto v = unshuffles(phi, parts);
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_EQ(std::set<Unshuffle>(v.begin(), v.end()).size(), v.size());
    std::int64_t multinomial = oracle::factorial(5);
    for (int m : parts) multinomial /= oracle::factorial(m);
    EXPECT_EQ(static_cast<std::int64_t>(v.size()), multinomial);
    for (const auto& u : v) EXPECT_TRUE(u.is_unshuffle_of(phi));
  }
}

TEST(PosetLeq, Examples) {
  EXPECT_TRUE(poset_leq(Unshuffle::parse("153|49|76|28"), Unshuffle::parse("153|4796|28")));
  const auto a = Unshuffle::parse("13|24");
  EXPECT_TRUE(poset_leq(a, a));
  EXPECT_TRUE(poset_leq(a, Unshuffle::parse("2413")));
  EXPECT_FALSE(poset_leq(a, Unshuffle::parse("3412")));
  EXPECT_THROW(poset_leq(a, Unshuffle::parse("125")), std::invalid_argument);
}

TEST(PosetLeq, MatchesBruteForceClosure) {
  for (int n = 1; n <= 4; ++n) {
    const auto up = oracle::closure(n);
    const auto all = oracle::all_unshuffles_of_n(n);
    for (const auto& a : all)
      for (const auto& b : all)
        ASSERT_EQ(poset_leq(oracle::to_unshuffle(a), oracle::to_unshuffle(b)), up.at(oracle::key(a)).count(oracle::key(b)) > 0)
            << oracle::key(a) << " vs " << oracle::key(b);
  }
}

TEST(JSigma, Segment) {
  const auto P = build_J_sigma(NrSequence::parse("12"));
  ASSERT_EQ(P.size(), 3);
  std::set<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : P.covers()) covers.insert({P.element(lo).to_string(), P.element(hi).to_string()});
  EXPECT_EQ(covers, (std::set<std::pair<std::string, std::string>>{{"1|2", "12"}, {"2|1", "12"}}));
}

TEST(JSigma, GradedWithUniqueMaximum) {
  for (const auto& sigma : permutations(4)) {
    const auto P = build_J_sigma(sigma);
    EXPECT_TRUE(P.validate().empty());
    ASSERT_EQ(P.maximal().size(), 1u);
    EXPECT_EQ(P.element(P.maximal().front()), Unshuffle({sigma}));
    for (int m : P.minimal()) EXPECT_EQ(P.grade(m), 0);
    for (auto [lo, hi] : P.covers()) EXPECT_EQ(P.grade(hi), P.grade(lo) + 1);
    // faces of P_4: ordered partitions into 4-d blocks
    EXPECT_EQ(P.grade_counts(), oracle::permutahedron_f(4));
  }
}

TEST(JN, Sizes) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(build_J_n(n).size(), oracle::factorial(n) << (n - 1)) << n;
  EXPECT_EQ(build_J_n(3).grade_counts(), (std::vector<std::int64_t>{6, 12, 6}));
  EXPECT_EQ(build_J_n(1).size(), 1);
}

TEST(JN, ElementsAbove13Bar24) {
  const auto J = build_J_n(4);
  const int a = *J.index_of(Unshuffle::parse("13|24"));
  std::set<std::string> above;
  for (int b = 0; b < J.size(); ++b)
    if (b != a && J.leq(a, b)) above.insert(J.element(b).to_string());
  EXPECT_EQ(above, (std::set<std::string>{"1324", "1234", "1243", "2134", "2143", "2413"}));
}

TEST(JN, PosetJson) {
  const auto j = poset_to_json(build_J_sigma(NrSequence::parse("12")));
  EXPECT_EQ(j["elements"].size(), 3u);
  EXPECT_EQ(j["covers"].size(), 2u);
  EXPECT_TRUE(j["elements"][0].contains("blocks"));
  EXPECT_TRUE(j["elements"][0].contains("grade"));
}
