#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "phrecon/vertex_recon.hpp"
#include "test_support.hpp"

namespace phrecon {
namespace {

Diagram dgm0_only(Direction s, std::vector<double> births) {
  Diagram d;
  d.direction = s;
  for (double b : births) d.dim0.push_back({b, kInfinity});
  return d;
}

LineFamily family(Direction s, std::vector<double> offsets) { return lines_from_dgm0(dgm0_only(s, offsets)); }

TEST(LinesFromDgm0, SingleVertex) {
  const LineFamily f = lines_from_dgm0(lower_star_diagrams({{{0.25, 0.0}}, {}}, {1, 0}));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.lines[0], (Line{{1, 0}, 0.25}));
}

TEST(LinesFromDgm0, EmptyAndSorted) {
  EXPECT_EQ(lines_from_dgm0(dgm0_only({0, 1}, {})).size(), 0u);
  const LineFamily f = lines_from_dgm0(dgm0_only({0, 1}, {2, 0, 1}));
  ASSERT_EQ(f.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(f.lines[static_cast<std::size_t>(i)], (Line{{0, 1}, static_cast<double>(i)}));
}

TEST(LinesFromDgm0, DuplicateHeights) {
  EXPECT_THROW(lines_from_dgm0(dgm0_only({1, 0}, {0.5, 0.5 + 1e-12})), DuplicateHeights);
}

TEST(ThirdDirection, WorkedExample) {
  const Direction s3 = third_direction(BoxGaps{2.0, 1.0});
  EXPECT_NEAR(s3.dx, -1.0 / std::sqrt(17.0), 1e-12);
  EXPECT_NEAR(s3.dy, 4.0 / std::sqrt(17.0), 1e-12);
}

TEST(ThirdDirection, UnitBox) {
  const Direction s3 = third_direction(family({1, 0}, {0, 1}), family({0, 1}, {0, 1}));
  EXPECT_NEAR(s3.dx, -1.0 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(s3.dy, 2.0 / std::sqrt(5.0), 1e-12);
}

TEST(ThirdDirection, FullWidthAndSmallestAdjacentGap) {
  // Width is the full extent 3, not the largest adjacent gap 2.
  const BoxGaps g = box_gaps(family({1, 0}, {0, 1, 3}), family({0, 1}, {0, 0.5, 2}));
  EXPECT_EQ(g.width, 3.0);
  EXPECT_EQ(g.height, 0.5);
}

TEST(ThirdDirection, SingleVertexFallback) {
  const Direction s3 = third_direction(family({1, 0}, {0.3}), family({0, 1}, {0.7}));
  EXPECT_EQ(s3.dx, std::numbers::sqrt2 / 2);
  EXPECT_EQ(s3.dy, std::numbers::sqrt2 / 2);
}

TEST(MatchAndIntersect, SingleLine) {
  const Point2 v{0.4, -0.2};
  const Direction s3 = Direction::unit(1, 1);
  const auto out = match_and_intersect(family({0, 1}, {v.y}), family(s3, {height(v, s3)}), Line{{1, 0}, v.x});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(out[0].x, v.x, 1e-12);
  EXPECT_NEAR(out[0].y, v.y, 1e-12);
}

TEST(MatchAndIntersect, TwoByTwoGrid) {
  const LineFamily f1 = family({1, 0}, {0, 2});
  const LineFamily f2 = family({0, 1}, {0, 1});
  const Direction s3 = third_direction(f1, f2);
  const LineFamily f3 = family(s3, {height({0, 0}, s3), height({2, 1}, s3)});
  const auto fast = match_and_intersect(f2, f3, f1.lines.front());
  const auto slow = triple_intersections(f1, f2, f3);
  EXPECT_TRUE(testing::same_points(slow, {{0, 0}, {2, 1}}, 1e-12));
  EXPECT_TRUE(testing::same_points(fast, slow, 1e-9));
}

TEST(MatchAndIntersect, RandomInstancesAgreeWithTripleIntersections) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const PlaneGraph g = random_plane_graph(n, 0.0, seed);
    const LineFamily f1 = lines_from_dgm0(lower_star_diagrams(g, kFirstAxis));
    const LineFamily f2 = lines_from_dgm0(lower_star_diagrams(g, kSecondAxis));
    const LineFamily f3 = lines_from_dgm0(lower_star_diagrams(g, third_direction(f1, f2)));
    const auto fast = match_and_intersect(f2, f3, f1.lines.front());
    const auto slow = triple_intersections(f1, f2, f3);
    EXPECT_TRUE(testing::same_points(fast, slow, 1e-9)) << "seed " << seed;
    EXPECT_TRUE(testing::same_points(fast, g.vertices, 1e-9)) << "seed " << seed;
  }
}

TEST(TripleIntersections, DisjointFamilies) {
  EXPECT_TRUE(triple_intersections(family({1, 0}, {0}), family({0, 1}, {0}), family(Direction::unit(1, 1), {5})).empty());
  EXPECT_TRUE(testing::same_points(
      triple_intersections(family({1, 0}, {0.5}), family({0, 1}, {-1}), family(Direction::unit(1, 1), {-0.5 / std::sqrt(2.0)})),
      {{0.5, -1}}, 1e-12));
}

TEST(LocatePoint, Examples) {
  EXPECT_EQ(locate_point(dgm0_only({1, 0}, {3}), dgm0_only({0, 1}, {7})), (Point2{3, 7}));
  EXPECT_EQ(locate_point(dgm0_only({1, 0}, {0}), dgm0_only({0, 1}, {0})), (Point2{0, 0}));
  // x = 1 and (3x + 4y)/5 = 1.
  const Point2 p = locate_point(dgm0_only({1, 0}, {1}), dgm0_only({0.6, 0.8}, {1}));
  EXPECT_NEAR(p.x, 1.0, 1e-12);
  EXPECT_NEAR(p.y, 0.5, 1e-12);
}

TEST(LocatePoint, Errors) {
  EXPECT_THROW(locate_point(dgm0_only({1, 0}, {1}), dgm0_only({2, 0}, {1})), ParallelLines);
  EXPECT_THROW(locate_point(dgm0_only({1, 0}, {1, 2}), dgm0_only({0, 1}, {1})), WrongCardinality);
  EXPECT_THROW(locate_point(dgm0_only({1, 0}, {1}), dgm0_only({0, 1}, {})), WrongCardinality);
}

TEST(ReconstructVertices, SingleVertex) {
  DiagramOracle o({{{3, 7}}, {}});
  const auto v = reconstruct_vertices(o);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (Point2{3, 7}));
  EXPECT_EQ(o.query_count(), 3u);
}

TEST(ReconstructVertices, WorkedExample) {
  const PlaneGraph g = testing::worked_example_graph();
  DiagramOracle o(g);
  const auto r = reconstruct_vertices_detailed(o);
  EXPECT_TRUE(testing::same_points(r.vertices, g.vertices, 1e-12));
  const auto log = o.query_log();
  ASSERT_EQ(log.size(), 3u);
  EXPECT_EQ(log[0], kFirstAxis);
  EXPECT_EQ(log[1], kSecondAxis);
  EXPECT_NEAR(log[2].dx, -1.0 / std::sqrt(17.0), 1e-12);
  EXPECT_NEAR(log[2].dy, 4.0 / std::sqrt(17.0), 1e-12);
}

TEST(ReconstructVertices, HundredRandomVertices) {
  GeneratorOptions opts;
  opts.margin = 1e-5;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const PlaneGraph g = random_plane_graph(100, 0.3, seed, opts);
    DiagramOracle o(g);
    EXPECT_TRUE(testing::same_points(reconstruct_vertices(o), g.vertices, 1e-6));
    EXPECT_EQ(o.query_count(), 3u);
  }
}

TEST(ReconstructVertices, DuplicateHeightsAbort) {
  DiagramOracle o({{{0, 0}, {0, 1}}, {}});
  EXPECT_THROW(reconstruct_vertices(o), Error);
}

TEST(VertexLocalization, EveryTiltedLineHitsTheGridAndOnlyOneRowInTheBox) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const PlaneGraph g = random_plane_graph(2 + seed % 12, 0.0, seed);
    const LineFamily f1 = lines_from_dgm0(lower_star_diagrams(g, kFirstAxis));
    const LineFamily f2 = lines_from_dgm0(lower_star_diagrams(g, kSecondAxis));
    const LineFamily f3 = lines_from_dgm0(lower_star_diagrams(g, third_direction(f1, f2)));
    const double xmin = f1.lines.front().offset;
    const double xmax = f1.lines.back().offset;
    for (const auto& l3 : f3.lines) {
      std::size_t grid_hits = 0;
      for (const auto& a : f1.lines)
        for (const auto& b : f2.lines)
          if (std::abs(l3.residual(intersect_lines(a, b))) <= 1e-9) ++grid_hits;
      EXPECT_GE(grid_hits, 1u);
      std::size_t rows_in_box = 0;
      for (const auto& b : f2.lines) {
        const Point2 p = intersect_lines(l3, b);
        if (p.x >= xmin - 1e-12 && p.x <= xmax + 1e-12) ++rows_in_box;
      }
      EXPECT_LE(rows_in_box, 1u) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace phrecon
