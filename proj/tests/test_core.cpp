#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pmdepth/core.hpp"
#include "pmdepth/enumerate.hpp"

using namespace pmdepth;

namespace {

std::vector<Arc> arcs(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Arc> out;
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

TEST(ParsePartition, WorkedExample) {
  const auto p = parse_partition("1378|26|45", 8);
  ASSERT_EQ(p.size(), 8);
  const std::vector<SetPartition::Block> want{{1, 3, 7, 8}, {2, 6}, {4, 5}};
  EXPECT_EQ(p.blocks(), want);
  EXPECT_EQ(p.openers(), (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ(p.closers(), (std::vector<Vertex>{5, 6, 8}));
}

TEST(ParsePartition, Singleton) {
  const auto p = parse_partition("1", 1);
  ASSERT_EQ(p.blocks().size(), 1U);
  EXPECT_EQ(p.blocks()[0], (SetPartition::Block{1}));
}

TEST(ParsePartition, Canonicalizes) {
  EXPECT_EQ(format_partition(parse_partition("45|62|8731", 8)), "1378|26|45");
}

TEST(ParsePartition, Errors) {
  EXPECT_THROW(parse_partition("12|13", 3), ParseError);   // duplicate
  EXPECT_THROW(parse_partition("12|34", 3), ParseError);   // out of range
  EXPECT_THROW(parse_partition("12", 3), ParseError);      // missing
  EXPECT_THROW(parse_partition("12||3", 3), ParseError);   // empty block
  EXPECT_THROW(parse_partition("1a|23", 3), ParseError);
  EXPECT_THROW(parse_partition("", 3), ParseError);
  EXPECT_THROW(parse_partition("0|12", 2), ParseError);
}

TEST(ParsePartition, MultiDigitLabels) {
  const auto p = parse_partition("1,3,10|2,4|5|6,7,8,9", 10);
  EXPECT_EQ(p.blocks()[0], (SetPartition::Block{1, 3, 10}));
  EXPECT_EQ(format_partition(p), "1,3,10|2,4|5|6,7,8,9");
  // comma-free blocks are single labels once n >= 10
  const auto q = parse_partition("1,2|3,4,5,6,7,8,9|10", 10);
  EXPECT_EQ(q.blocks().back(), (SetPartition::Block{10}));
  EXPECT_THROW(parse_partition("1378|26|45|9|10", 10), ParseError);
}

TEST(ParsePartition, RoundTripOverAllPartitions) {
  for (int n : {1, 4, 7, 11}) {
    if (n == 11) {
      std::mt19937 rng(7);
      for (int t = 0; t < 200; ++t) {
        std::vector<int> rgs{0};
        int mx = 0;
        for (int i = 1; i < n; ++i) {
          rgs.push_back(static_cast<int>(rng() % static_cast<unsigned>(mx + 2)));
          mx = std::max(mx, rgs.back());
        }
        const auto p = SetPartition::from_rgs(rgs);
        EXPECT_EQ(parse_partition(format_partition(p), n), p);
      }
      continue;
    }
    for_each_set_partition(n, [&](const SetPartition& p) {
      EXPECT_EQ(parse_partition(format_partition(p), n), p);
    });
  }
}

TEST(PartitionArcs, Examples) {
  EXPECT_EQ(partition_arcs(parse_partition("1378|26|45", 8)), arcs({{1, 3}, {2, 6}, {3, 7}, {4, 5}, {7, 8}}));
  EXPECT_TRUE(partition_arcs(parse_partition("1|2|3", 3)).empty());
  EXPECT_EQ(partition_arcs(parse_partition("12|34", 4)), arcs({{1, 2}, {3, 4}}));
}

TEST(PartitionArcs, CountIsNMinusBlocks) {
  for (int n = 1; n <= 7; ++n) {
    for_each_set_partition(n, [&](const SetPartition& p) {
      const auto a = partition_arcs(p);
      EXPECT_EQ(a.size(), static_cast<std::size_t>(n) - p.block_count());
      EXPECT_EQ(extended_arcs(p).size(), a.size() + 2 * p.block_count());
    });
  }
}

TEST(ExtendedArcs, WorkedExample) {
  const auto ext = extended_arcs(parse_partition("1378|26|45", 8));
  ASSERT_EQ(ext.size(), 11U);
  std::set<Vertex> left, right;
  int finite = 0;
  for (const auto& g : ext) {
    if (g.lo.kind() == Endpoint::Kind::LeftInf) left.insert(g.hi.vertex());
    else if (g.hi.kind() == Endpoint::Kind::RightInf) right.insert(g.lo.vertex());
    else ++finite;
  }
  EXPECT_EQ(finite, 5);
  EXPECT_EQ(left, (std::set<Vertex>{1, 2, 4}));
  EXPECT_EQ(right, (std::set<Vertex>{5, 6, 8}));
}

TEST(ExtendedArcs, SingleVertex) {
  const auto ext = extended_arcs(parse_partition("1", 1));
  const std::vector<GeneralizedArc> want{{Endpoint::left_inf(), Endpoint::at(1)},
                                         {Endpoint::at(1), Endpoint::right_inf()}};
  EXPECT_EQ(ext, want);
}

TEST(ExtendedArcs, TwoAdjacentPairs) {
  const auto ext = extended_arcs(parse_partition("12|34", 4));
  const std::vector<GeneralizedArc> want{
      {Endpoint::left_inf(), Endpoint::at(1)}, {Endpoint::left_inf(), Endpoint::at(3)},
      {Endpoint::at(1), Endpoint::at(2)},      {Endpoint::at(2), Endpoint::right_inf()},
      {Endpoint::at(3), Endpoint::at(4)},      {Endpoint::at(4), Endpoint::right_inf()}};
  EXPECT_EQ(ext, want);
}

TEST(Endpoint, SentinelOrder) {
  EXPECT_LT(Endpoint::left_inf(), Endpoint::at(1));
  EXPECT_LT(Endpoint::at(1), Endpoint::at(2));
  EXPECT_LT(Endpoint::at(1000), Endpoint::right_inf());
  EXPECT_LT(Endpoint::left_inf(), Endpoint::right_inf());
}

TEST(MatchingFromPartition, Examples) {
  EXPECT_EQ(matching_from_partition(parse_partition("14|23", 4)).arcs(), arcs({{1, 4}, {2, 3}}));
  EXPECT_EQ(matching_from_partition(parse_partition("12", 2)).arcs(), arcs({{1, 2}}));
  EXPECT_THROW(matching_from_partition(parse_partition("1378|26|45", 8)), DomainError);
  EXPECT_THROW(matching_from_partition(parse_partition("12|3", 3)), DomainError);
}

TEST(PerfectMatching, Validation) {
  EXPECT_THROW(PerfectMatching::from_arcs({{1, 2}, {2, 3}}), DomainError);
  EXPECT_THROW(PerfectMatching::from_arcs({{1, 5}, {2, 3}}), DomainError);
  EXPECT_THROW(PerfectMatching::from_arcs({}), DomainError);
  EXPECT_THROW(parse_matching("1-2,3"), ParseError);
  EXPECT_THROW(parse_matching("1-2,2-3"), ParseError);
  const auto m = parse_matching(" 2-3 , 4-1");
  EXPECT_EQ(format_matching(m), "1-4,2-3");
  EXPECT_EQ(m.partner(1), 4);
  EXPECT_EQ(m.partner(3), 2);
}

TEST(AsInvolution, Examples) {
  EXPECT_EQ(as_involution(parse_matching("1-2,3-4")), (std::vector<Vertex>{2, 1, 4, 3}));
  EXPECT_EQ(as_involution(parse_matching("1-3,2-4")), (std::vector<Vertex>{3, 4, 1, 2}));
  EXPECT_EQ(as_involution(parse_matching("1-4,2-3")), (std::vector<Vertex>{4, 3, 2, 1}));
}

TEST(AsInvolution, BijectionOntoFixedPointFreeInvolutions) {
  for (int n = 1; n <= 4; ++n) {
    const auto want = oracle::all_fpf_involutions(n);
    std::set<std::vector<int>> got;
    for_each_perfect_matching(n, [&](const PerfectMatching& m) {
      const auto sigma = as_involution(m);
      for (int i = 1; i <= 2 * n; ++i) {
        EXPECT_NE(sigma[i - 1], i);
        EXPECT_EQ(sigma[sigma[i - 1] - 1], i);
      }
      EXPECT_TRUE(got.insert(sigma).second);
      EXPECT_EQ(PerfectMatching::from_involution(sigma), m);
    });
    EXPECT_EQ(got, want);
  }
  // n = 5, 6: injectivity and count only (the permutation scan is too large)
  for (int n = 5; n <= 6; ++n) {
    std::set<std::vector<Vertex>> got;
    for_each_perfect_matching(n, [&](const PerfectMatching& m) { got.insert(as_involution(m)); });
    EXPECT_EQ(got.size(), oracle::odd_double_factorial(n));
  }
}

TEST(ArcsCross, Predicate) {
  EXPECT_TRUE(arcs_cross(Arc{1, 3}, Arc{2, 4}));
  EXPECT_TRUE(arcs_cross(Arc{2, 4}, Arc{1, 3}));
  EXPECT_FALSE(arcs_cross(Arc{1, 4}, Arc{2, 3}));
  EXPECT_FALSE(arcs_cross(Arc{1, 3}, Arc{3, 7}));
  const GeneralizedArc l{Endpoint::left_inf(), Endpoint::at(3)};
  const GeneralizedArc r{Endpoint::at(2), Endpoint::right_inf()};
  EXPECT_TRUE(arcs_cross(l, r));
  const GeneralizedArc l2{Endpoint::left_inf(), Endpoint::at(1)};
  EXPECT_FALSE(arcs_cross(l, l2));
}
