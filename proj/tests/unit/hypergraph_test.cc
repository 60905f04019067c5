#include "nsd/hypergraph.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "naive_oracle.hpp"
#include "nsd/families.hpp"
#include "nsd/solver.hpp"

namespace nsd {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;
using ::testing::UnorderedElementsAre;

Hypergraph triangle() { return Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(HypergraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(3, {{0}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(4, {{0, 1}, {1, 2, 3}}, 2), std::invalid_argument);
}

TEST(HypergraphTest, InfersUniformity) {
  EXPECT_EQ(triangle().uniformity(), 2u);
  EXPECT_EQ(Hypergraph(4, {{0, 1}, {1, 2, 3}}).uniformity(), std::nullopt);
}

TEST(HypergraphTest, FindEdgeIgnoresVertexOrder) {
  const Hypergraph h = triangle();
  EXPECT_EQ(h.find_edge({2, 1}), 1u);
  EXPECT_EQ(h.find_edge({0, 0}), std::nullopt);
}

TEST(DegreeTest, Examples) {
  EXPECT_EQ(degree(triangle(), 0), 2u);
  EXPECT_EQ(degree(tight_path(3, 1, 3), 2), 2u);
  EXPECT_EQ(degree(Hypergraph(4, {{0, 1}}), 3), 0u);
  EXPECT_THROW(degree(triangle(), 3), std::out_of_range);
}

TEST(NeighborhoodTest, Examples) {
  EXPECT_THAT(neighborhood(triangle(), 0), ElementsAre(1, 2));
  EXPECT_THAT(neighborhood(Hypergraph(4, {{0, 1, 2, 3}}), 0), ElementsAre(1, 2, 3));
  EXPECT_THAT(neighborhood(Hypergraph(3, {{0, 1}}), 2), IsEmpty());
  EXPECT_THROW(neighborhood(triangle(), 9), std::out_of_range);
}

TEST(SigmaTest, ModesOnAllOnes) {
  const Hypergraph h = tight_path(3, 1, 3);
  const auto e = sigma(h, Weighting::constant(h, SigmaMode::edge_only), SigmaMode::edge_only);
  const auto ven = sigma(h, Weighting::constant(h, SigmaMode::full_total), SigmaMode::full_total);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    EXPECT_EQ(e[v], static_cast<Color>(degree(h, v)));
    EXPECT_EQ(ven[v], static_cast<Color>(1 + degree(h, v) + neighborhood(h, v).size()));
  }
}

TEST(SigmaTest, TotalAddsOwnWeight) {
  const Hypergraph h(3, {{0, 1}, {1, 2}});
  const Weighting w({2, 3}, std::vector<Weight>{1, 2, 3}, 3);
  EXPECT_THAT(sigma(h, w, SigmaMode::total), ElementsAre(3, 7, 6));
  EXPECT_THAT(sigma(h, w, SigmaMode::full_total), ElementsAre(5, 11, 8));
}

TEST(SigmaTest, ShapeErrors) {
  const Hypergraph h = triangle();
  EXPECT_THROW(sigma(h, Weighting({1, 1}, std::nullopt, 1), SigmaMode::edge_only),
               std::invalid_argument);
  EXPECT_THROW(sigma(h, Weighting::constant(h, SigmaMode::edge_only), SigmaMode::total),
               std::invalid_argument);
}

TEST(SigmaTest, OverflowIsReported) {
  const Hypergraph h(2, {{0, 1}});
  const Weight big = std::numeric_limits<Weight>::max();
  const Weighting w({big}, std::vector<Weight>{big, 1}, big);
  EXPECT_THROW(sigma(h, w, SigmaMode::total), std::overflow_error);
}

TEST(SigmaModeTest, ParsesShortNames) {
  EXPECT_EQ(parse_sigma_mode("e"), SigmaMode::edge_only);
  EXPECT_EQ(parse_sigma_mode("ve"), SigmaMode::total);
  EXPECT_EQ(parse_sigma_mode("ven"), SigmaMode::full_total);
  EXPECT_EQ(parse_sigma_mode("x"), std::nullopt);
  EXPECT_EQ(to_string(SigmaMode::full_total), "ven");
}

TEST(IsProperTest, Examples) {
  const Hypergraph h = triangle();
  const std::vector<Color> distinct{1, 2, 3}, same{5, 5, 5}, pair{7, 7, 9};
  EXPECT_TRUE(is_proper(h, distinct));
  EXPECT_FALSE(is_proper(h, same));
  EXPECT_TRUE(is_proper(Hypergraph(3, {{0, 1, 2}}), pair));
  EXPECT_THROW(is_proper(h, std::vector<Color>{1, 2}), std::invalid_argument);
  EXPECT_THAT(monochromatic_edges(Hypergraph(3, {{0, 1}, {1, 2}}), pair), ElementsAre(0));
}

TEST(IsNiceTest, Examples) {
  EXPECT_FALSE(is_nice(Hypergraph(2, {{0, 1}})));
  EXPECT_TRUE(is_nice(tight_cycle(2, 1, 6)));
  EXPECT_FALSE(is_nice(Hypergraph(6, {{0, 1, 2}, {3, 4, 5}})));
  EXPECT_TRUE(is_nice(Hypergraph(5, {{0, 1, 2}, {2, 3, 4}})));
}

TEST(DegreeCriterionTest, Examples) {
  EXPECT_TRUE(every_edge_has_degree_distinct_pair(tight_path(3, 1, 3)));
  EXPECT_FALSE(every_edge_has_degree_distinct_pair(tight_cycle(2, 1, 5)));
  EXPECT_FALSE(every_edge_has_degree_distinct_pair(tight_path(4, 2, 3)));
}

TEST(TwinsTest, Examples) {
  EXPECT_THAT(detect_twins(triangle()), IsEmpty());
  EXPECT_EQ(detect_twins(Hypergraph(4, {{0, 1, 2, 3}})).size(), 6u);
  const Hypergraph c6 = tight_cycle(2, 1, 6);
  const auto blown = blowup_transform(c6, std::vector<std::size_t>(6, 2));
  EXPECT_EQ(blown.hypergraph.uniformity(), 4u);
  auto classes = twin_classes(blown.hypergraph);
  auto parts = blown.parts;
  std::sort(classes.begin(), classes.end());
  std::sort(parts.begin(), parts.end());
  EXPECT_EQ(classes, parts);
}

TEST(IsRegularTest, Examples) {
  EXPECT_EQ(is_regular(tight_cycle(2, 1, 8)), 2u);
  EXPECT_EQ(is_regular(tight_path(3, 1, 3)), std::nullopt);
  EXPECT_EQ(is_regular(projective_plane(2).hypergraph), 3u);
}

// Properties over generated hypergraphs.

class HypergraphPropertyTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(HypergraphPropertyTest, ConstantWeightsScaleDegrees) {
  testing::Gen g(GetParam());
  const Hypergraph h = g.small_hypergraph(8, 10, 4);
  const Weight c = static_cast<Weight>(g.range(1, 5));
  const auto colors = sigma(h, Weighting::constant(h, SigmaMode::edge_only, c),
                            SigmaMode::edge_only);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    EXPECT_EQ(colors[v], c * static_cast<Color>(degree(h, v)));
  }
}

TEST_P(HypergraphPropertyTest, SigmaMatchesDefinition) {
  testing::Gen g(GetParam());
  const Hypergraph h = g.small_hypergraph(8, 10, 4);
  for (SigmaMode mode : {SigmaMode::edge_only, SigmaMode::total, SigmaMode::full_total}) {
    const Weighting w = g.weighting(h, mode, 5);
    const std::vector<Weight> vw = w.vertex_weights().value_or(std::vector<Weight>{});
    EXPECT_EQ(sigma(h, w, mode), testing::naive_colors(h, w.edge_weights(), vw, mode));
  }
}

TEST_P(HypergraphPropertyTest, ProperIsShiftInvariant) {
  testing::Gen g(GetParam());
  const Hypergraph h = g.small_hypergraph(8, 10, 4);
  const auto colors = sigma(h, g.weighting(h, SigmaMode::edge_only, 3), SigmaMode::edge_only);
  auto shifted = colors;
  for (auto& c : shifted) c += 17;
  EXPECT_EQ(is_proper(h, colors), is_proper(h, shifted));
}

TEST_P(HypergraphPropertyTest, DegreeCriterionDecidesChiOne) {
  testing::Gen g(GetParam());
  const Hypergraph h = g.small_hypergraph(7, 8, 4);
  EXPECT_EQ(every_edge_has_degree_distinct_pair(h),
            testing::naive_feasible(h, SigmaMode::edge_only, 1));
}

TEST_P(HypergraphPropertyTest, TwinClassesPartitionTwinPairs) {
  testing::Gen g(GetParam());
  const Hypergraph h = g.small_hypergraph(7, 6, 4);
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (auto [u, v] : detect_twins(h)) {
    EXPECT_LT(u, v);
    pairs.emplace(u, v);
  }
  std::set<std::pair<VertexId, VertexId>> from_classes;
  for (const auto& cls : twin_classes(h)) {
    EXPECT_GE(cls.size(), 2u);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) from_classes.emplace(cls[i], cls[j]);
    }
  }
  EXPECT_EQ(pairs, from_classes);
}

TEST_P(HypergraphPropertyTest, InvariantsSurviveRelabeling) {
  testing::Gen g(GetParam());
  const Hypergraph h = g.small_hypergraph(8, 10, 4);
  const Hypergraph r = testing::relabel(h, g.engine());
  EXPECT_EQ(is_nice(h), is_nice(r));
  EXPECT_EQ(every_edge_has_degree_distinct_pair(h), every_edge_has_degree_distinct_pair(r));
  EXPECT_EQ(is_regular(h), is_regular(r));
  EXPECT_EQ(detect_twins(h).size(), detect_twins(r).size());
}

INSTANTIATE_TEST_SUITE_P(Seeds, HypergraphPropertyTest, ::testing::Range<std::uint64_t>(1, 41));

}  // namespace
}  // namespace nsd
