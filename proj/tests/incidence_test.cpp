#include "gqveld/incidence.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gqveld/models.hpp"

namespace gqveld {
namespace {

TEST(Geometry, RejectsMalformedInput) {
  EXPECT_THROW(Geometry(3, {{0}}), std::invalid_argument);
  EXPECT_THROW(Geometry(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Geometry(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Geometry(3, {{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(Geometry(65, {}), std::invalid_argument);
}

TEST(Geometry, CollinearityIsSymmetricWithEmptyDiagonal) {
  const auto g = build_gq24_quadric().geometry;
  for (int x = 0; x < g.num_points(); ++x) {
    EXPECT_FALSE(g.collinear(x, x));
    for (int y = 0; y < g.num_points(); ++y) EXPECT_EQ(g.collinear(x, y), g.collinear(y, x));
  }
}

TEST(Geometry, EqualityIgnoresLineOrder) {
  EXPECT_EQ(Geometry(4, {{0, 1}, {2, 3}}), Geometry(4, {{3, 2}, {1, 0}}));
}

TEST(GqAxioms, QuadricModelPasses) {
  const auto g = build_gq24_quadric().geometry;
  EXPECT_TRUE(verify_gq_axioms(g, {2, 4}).ok());
  EXPECT_EQ(g.num_points(), 27);
  EXPECT_EQ(g.num_lines(), 45);
}

TEST(GqAxioms, W3Passes) {
  const auto g = build_w3();
  EXPECT_TRUE(verify_gq_axioms(g, {3, 3}).ok());
  EXPECT_EQ(g.num_points(), 40);
  EXPECT_EQ(g.num_lines(), 40);
}

TEST(GqAxioms, RemovingALineBreaksAxiomOne) {
  auto lines = build_gq22().lines();
  lines.pop_back();
  const auto report = verify_gq_axioms(Geometry(15, lines), {2, 2});
  ASSERT_FALSE(report.ok());
  ASSERT_FALSE(report.checks[0].pass);
  EXPECT_FALSE(report.checks[0].witness.empty());
}

TEST(GqAxioms, WrongOrderIsReported) {
  const auto report = verify_gq_axioms(build_gq22(), {2, 4});
  EXPECT_FALSE(report.ok());
  EXPECT_NE(report.first_failure(), nullptr);
}

TEST(Perp, PointPerpSizes) {
  const auto g24 = build_gq24_quadric().geometry;
  for (int x = 0; x < 27; ++x) EXPECT_EQ(perp(g24, x).size(), 11);
  const auto g22 = build_gq22();
  for (int x = 0; x < 15; ++x) EXPECT_EQ(perp(g22, x).size(), 7);
  const auto w3 = build_w3();
  for (int x = 0; x < 40; ++x) EXPECT_EQ(perp(w3, x).size(), 13);
}

TEST(Perp, CollinearPairGivesTheirLine) {
  const auto g = build_gq24_quadric().geometry;
  for (int l = 0; l < g.num_lines(); ++l) {
    const auto& pts = g.lines()[static_cast<std::size_t>(l)];
    const PointSet pair = PointSet::single(pts[0]) | PointSet::single(pts[1]);
    // brute-force intersection of the two perps
    PointSet expected;
    for (int z = 0; z < 27; ++z) {
      if ((z == pts[0] || g.collinear(z, pts[0])) && (z == pts[1] || g.collinear(z, pts[1]))) expected.insert(z);
    }
    EXPECT_EQ(perp(g, pair), expected);
    EXPECT_EQ(perp(g, pair), g.line_set(l));
  }
}

TEST(Perp, EmptySetIsAnError) {
  EXPECT_THROW(perp(build_gq22(), PointSet{}), std::invalid_argument);
}

TEST(Perp, AntitoneAndExtensive) {
  const auto g = build_gq24_quadric().geometry;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    PointSet b(rng() & PointSet::full(27).bits());
    if (b.empty()) continue;
    PointSet a(b.bits() & rng());
    if (a.empty()) a = PointSet::single(b.first());
    EXPECT_TRUE(perp(g, b).is_subset_of(perp(g, a)));
    const PointSet pa = perp(g, a);
    if (!pa.empty()) {
      EXPECT_TRUE(a.is_subset_of(perp(g, pa)));
    }
  }
}

TEST(HyperbolicLine, W3HasFourPointHyperbolicLines) {
  const auto g = build_w3();
  for (int x = 0; x < g.num_points(); ++x) {
    for (int y = x + 1; y < g.num_points(); ++y) {
      if (g.collinear(x, y)) continue;
      const PointSet h = hyperbolic_line(g, x, y);
      EXPECT_EQ(h.size(), 4);
      EXPECT_TRUE(h.contains(x) && h.contains(y));
    }
  }
}

TEST(HyperbolicLine, DoilyHasThreePointHyperbolicLines) {
  const auto g = build_gq22();
  for (int x = 0; x < 15; ++x) {
    for (int y = x + 1; y < 15; ++y) {
      if (g.collinear(x, y)) continue;
      const PointSet h = hyperbolic_line(g, x, y);
      EXPECT_EQ(h.size(), 3);
      EXPECT_TRUE(h.contains(x) && h.contains(y));
    }
  }
}

TEST(HyperbolicLine, CollinearInputIsAnError) {
  const auto g = build_gq22();
  const auto& l = g.lines().front();
  EXPECT_THROW(hyperbolic_line(g, l[0], l[1]), std::invalid_argument);
  EXPECT_THROW(hyperbolic_line(g, 0, 0), std::invalid_argument);
}

TEST(Triads, Census) {
  // Oracle values from tests/oracles/oracle.py.
  EXPECT_EQ(triad_census(build_gq24_quadric().geometry), (std::map<int, long>{{3, 720}}));
  EXPECT_EQ(triad_census(build_gq22()), (std::map<int, long>{{1, 60}, {3, 20}}));
  EXPECT_EQ(triad_census(build_grid()), (std::map<int, long>{{0, 6}}));
}

TEST(Triads, BucketsSumToNonCollinearTriples) {
  for (const auto& g : {build_gq22(), build_gq24_quadric().geometry, build_grid()}) {
    long total = 0;
    for (const auto& [c, n] : triad_census(g)) total += n;
    long triples = 0;
    const int v = g.num_points();
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b)
        for (int c = b + 1; c < v; ++c)
          triples += !g.collinear(a, b) && !g.collinear(a, c) && !g.collinear(b, c);
    EXPECT_EQ(total, triples);
  }
}

TEST(Ovoids, Counts) {
  EXPECT_TRUE(find_ovoids(build_gq24_quadric().geometry).empty());
  const auto doily = find_ovoids(build_gq22());
  EXPECT_EQ(doily.size(), 6u);
  for (PointSet o : doily) EXPECT_EQ(o.size(), 5);
  const auto grid = find_ovoids(build_grid());
  EXPECT_EQ(grid.size(), 6u);
  for (PointSet o : grid) EXPECT_EQ(o.size(), 3);
}

TEST(Ovoids, MeetEveryLineOnce) {
  for (const auto& g : {build_gq22(), build_grid()}) {
    for (PointSet o : find_ovoids(g)) {
      for (PointSet l : g.line_sets()) EXPECT_EQ((l & o).size(), 1);
    }
  }
}

TEST(Spreads, Counts) {
  const auto g24 = build_gq24_quadric().geometry;
  const auto s24 = find_spreads(g24);
  EXPECT_EQ(s24.size(), 200u);  // oracle
  for (const auto& s : s24) EXPECT_EQ(s.size(), 9u);
  const auto s22 = find_spreads(build_gq22());
  EXPECT_EQ(s22.size(), 6u);
  for (const auto& s : s22) EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(find_spreads(build_grid()).size(), 2u);
}

TEST(Spreads, PartitionThePoints) {
  const auto g = build_gq24_quadric().geometry;
  for (const auto& s : find_spreads(g)) {
    PointSet covered;
    for (int l : s) {
      EXPECT_FALSE(covered.intersects(g.line_set(l)));
      covered |= g.line_set(l);
    }
    EXPECT_EQ(covered, g.all_points());
  }
}

}  // namespace
}  // namespace gqveld
