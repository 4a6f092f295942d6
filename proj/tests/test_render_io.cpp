#include <gtest/gtest.h>

#include <regex>

#include "pmdepth/io.hpp"
#include "pmdepth/render.hpp"

using namespace pmdepth;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST(RenderSvg, ArcDiagram) {
  const auto svg = render_svg({parse_partition("1378|26|45", 8)});
  EXPECT_EQ(svg.rfind("<?xml", 0), 0U);
  EXPECT_EQ(count(svg, "<circle class=\"vertex\""), 8U);
  EXPECT_EQ(count(svg, "class=\"arc"), 5U);
  EXPECT_EQ(count(svg, "class=\"half-arc"), 0U);
  EXPECT_NE(svg.find(">8</text>"), std::string::npos);
}

TEST(RenderSvg, ExtendedDiagram) {
  RenderSpec spec{parse_partition("1378|26|45", 8)};
  spec.extended = true;
  const auto svg = render_svg(spec);
  EXPECT_EQ(count(svg, "class=\"arc"), 5U);
  EXPECT_EQ(count(svg, "class=\"half-arc left\""), 3U);
  EXPECT_EQ(count(svg, "class=\"half-arc right\""), 3U);
}

TEST(RenderSvg, HighlightCrossings) {
  RenderSpec spec{parse_matching("1-3,2-4")};
  spec.highlight = PairKind::Crossings;
  const auto svg = render_svg(spec);
  EXPECT_EQ(count(svg, "class=\"arc highlight\""), 2U);
  spec.highlight = PairKind::Nestings;
  EXPECT_EQ(count(render_svg(spec), "highlight"), 0U);

  RenderSpec mixed{parse_matching("1-4,2-3,5-6")};
  mixed.highlight = PairKind::Nestings;
  EXPECT_EQ(count(render_svg(mixed), "class=\"arc highlight\""), 2U);
  mixed.highlight = PairKind::Alignments;
  EXPECT_EQ(count(render_svg(mixed), "class=\"arc highlight\""), 3U);
}

TEST(RenderSvg, Validation) {
  RenderSpec spec{parse_partition("12|3", 3)};
  spec.highlight = PairKind::Crossings;
  EXPECT_THROW(render_svg(spec), DomainError);
  RenderSpec tiny{parse_partition("1", 1)};
  tiny.width = 10;
  EXPECT_THROW(render_svg(tiny), DomainError);
  EXPECT_THROW(parse_pair_kind("loops"), ParseError);
}

TEST(RenderSvg, DeterministicAndElementCountsMatch) {
  for (int n = 1; n <= 6; ++n) {
    for_each_set_partition(n, [&](const SetPartition& p) {
      for (bool ext : {false, true}) {
        RenderSpec spec{p};
        spec.extended = ext;
        const auto a = render_svg(spec);
        ASSERT_EQ(a, render_svg(spec));
        const std::size_t arcs = partition_arcs(p).size();
        ASSERT_EQ(count(a, "class=\"arc"), arcs);
        ASSERT_EQ(count(a, "class=\"half-arc"), ext ? 2 * p.block_count() : 0U);
      }
    });
  }
}

TEST(Json, PartitionForm) {
  const auto p = parse_partition("1378|26|45", 8);
  const json j = p;
  EXPECT_EQ(j.dump(), R"({"blocks":[[1,3,7,8],[2,6],[4,5]],"n":8})");
  EXPECT_EQ(json::parse(R"({"n":8,"blocks":[[4,5],[8,7,3,1],[6,2]]})").get<SetPartition>(), p);
  EXPECT_THROW(json::parse(R"({"n":3,"blocks":[[1,2]]})").get<SetPartition>(), ParseError);
  EXPECT_THROW(json::parse(R"({"blocks":[[1]]})").get<SetPartition>(), ParseError);
}

TEST(Json, StatRecordFieldNames) {
  const json j = stat_record(parse_matching("1-3,2-4"));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"al", "cnumber", "cro", "dindex", "ell", "inumber", "nst", "span_sum",
                                            "tvd"}));
  EXPECT_EQ(j.get<StatRecord>(), stat_record(parse_matching("1-3,2-4")));
}

TEST(Json, PolynomialAndTables) {
  const json j = q_double_factorial(3);
  EXPECT_EQ(j.dump(), "[1,2,3,3,3,2,1]");
  EXPECT_EQ(j.get<QPolynomial>(), q_double_factorial(3));
  const json t = joint_distribution(Family::Matchings, 2, {Statistic::Cro, Statistic::Nst});
  EXPECT_EQ(t["stats"].dump(), R"(["cro","nst"])");
  EXPECT_EQ(t["total"], 3);
}

TEST(Json, ReportsCarryRequiredFields) {
  SuiteOptions opt;
  opt.ids = {"TRIPLE"};
  opt.max_n_matchings = 2;
  const json j = run_identity_suite(opt);
  ASSERT_EQ(j["results"].size(), 2U);
  for (const char* key : {"identity", "n", "status", "objects_visited", "elapsed_ms"}) {
    EXPECT_TRUE(j["results"][0].contains(key)) << key;
  }
  EXPECT_FALSE(j["results"][0].contains("counterexample"));
  const json rank = verify_rank_is_length(2);
  EXPECT_EQ(rank["status"], "PASS");
  EXPECT_EQ(rank["rank_generating_function"].dump(), "[1,1,1]");
}
