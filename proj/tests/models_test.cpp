#include "gqveld/models.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace gqveld {
namespace {

TEST(Gq22, Counts) {
  const auto g = build_gq22();
  EXPECT_EQ(g.num_points(), 15);
  EXPECT_EQ(g.num_lines(), 15);
  for (const auto& l : g.lines()) EXPECT_EQ(l.size(), 3u);
  for (int x = 0; x < 15; ++x) EXPECT_EQ(g.lines_through(x).size(), 3u);
  EXPECT_TRUE(verify_gq_axioms(g, {2, 2}).ok());
}

TEST(Grid, IsGq21) {
  EXPECT_TRUE(verify_gq_axioms(build_grid(), {2, 1}).ok());
}

TEST(Gq24Quadric, Counts) {
  const auto m = build_gq24_quadric();
  EXPECT_EQ(m.geometry.num_points(), 27);
  EXPECT_EQ(m.geometry.num_lines(), 45);
  for (const auto& l : m.geometry.lines()) EXPECT_EQ(l.size(), 3u);
  for (int x = 0; x < 27; ++x) EXPECT_EQ(m.geometry.lines_through(x).size(), 5u);
  EXPECT_TRUE(verify_gq_axioms(m.geometry, {2, 4}).ok());
}

TEST(Gq24Quadric, DictionaryMatchesQuadric) {
  const auto m = build_gq24_quadric();
  for (std::size_t i = 0; i < m.coords.size(); ++i) {
    EXPECT_EQ(m.form.on_bits(m.coords[i]), 0);
    EXPECT_EQ(m.point_of(m.coords[i]), static_cast<int>(i));
  }
  for (const auto& l : m.geometry.lines()) {
    EXPECT_EQ(m.coords[static_cast<std::size_t>(l[0])] ^ m.coords[static_cast<std::size_t>(l[1])],
              m.coords[static_cast<std::size_t>(l[2])]);
  }
}

TEST(Gq24Quadric, NoPlaneOnQuadric) {
  EXPECT_TRUE(no_plane_on_quadric(build_gq24_quadric()));
}

TEST(W3, Counts) {
  const auto g = build_w3();
  EXPECT_EQ(g.num_points(), 40);
  EXPECT_EQ(g.num_lines(), 40);
  for (const auto& l : g.lines()) EXPECT_EQ(l.size(), 4u);
  for (int x = 0; x < 40; ++x) EXPECT_EQ(g.lines_through(x).size(), 4u);
  EXPECT_TRUE(verify_gq_axioms(g, {3, 3}).ok());
}

TEST(Payne, EveryBasePointGivesGq24WithSpread) {
  const auto w3 = build_w3();
  for (int x = 0; x < 40; ++x) {
    const auto p = build_gq24_payne(w3, x);
    EXPECT_EQ(p.geometry.num_points(), 27);
    EXPECT_EQ(p.geometry.num_lines(), 45);
    EXPECT_TRUE(verify_gq_axioms(p.geometry, {2, 4}).ok());
    ASSERT_EQ(p.classical_spread.size(), 9u);
    PointSet covered;
    for (int l : p.classical_spread) {
      ASSERT_GE(l, 0);
      EXPECT_FALSE(covered.intersects(p.geometry.line_set(l)));
      covered |= p.geometry.line_set(l);
    }
    EXPECT_EQ(covered, p.geometry.all_points());
  }
}

TEST(Payne, BasePointOutOfRange) {
  EXPECT_THROW(build_gq24_payne(build_w3(), 40), std::out_of_range);
}

TEST(Isomorphism, PayneAndQuadricModels) {
  const auto q = build_gq24_quadric();
  const auto p = build_gq24_payne(build_w3(), 0);
  const auto f = find_isomorphism(p.geometry, q.geometry);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(preserves_lines(p.geometry, q.geometry, *f));
}

TEST(Isomorphism, IdentityAccepted) {
  const auto g = build_gq22();
  std::vector<int> id(15);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(preserves_lines(g, g, id));
  EXPECT_TRUE(find_isomorphism(g, g).has_value());
}

TEST(Isomorphism, DifferentSizesHaveNone) {
  EXPECT_FALSE(find_isomorphism(build_gq22(), build_gq24_quadric().geometry).has_value());
}

TEST(Isomorphism, DetectsNonIsomorphicSameSize) {
  // Two 4-point geometries with two lines each: disjoint vs. intersecting.
  const Geometry a(4, {{0, 1}, {2, 3}});
  const Geometry b(4, {{0, 1}, {1, 2}});
  EXPECT_FALSE(find_isomorphism(a, b).has_value());
}

TEST(Isomorphism, RelabelledCopy) {
  const auto g = build_gq24_quadric().geometry;
  std::vector<int> perm(27);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  std::vector<std::vector<int>> lines;
  for (const auto& l : g.lines()) {
    std::vector<int> nl;
    for (int x : l) nl.push_back(perm[static_cast<std::size_t>(x)]);
    lines.push_back(nl);
  }
  const Geometry h(27, lines);
  const auto f = find_isomorphism(g, h);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(preserves_lines(g, h, *f));
}

}  // namespace
}  // namespace gqveld
