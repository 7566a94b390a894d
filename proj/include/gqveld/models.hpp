#pragma once

// Concrete constructions: the doily GQ(2,2), the grid GQ(2,1), GQ(2,4) on the
// elliptic quadric of PG(5,2), the symplectic quadrangle W(3), and GQ(2,4)
// derived from W(3) at a point. Also geometry isomorphism search.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "gqveld/fflinalg.hpp"
#include "gqveld/incidence.hpp"
#include "gqveld/isomorphism.hpp"

namespace gqveld {

/// 3x3 grid: points r*3+c, rows then columns as lines.
inline Geometry build_grid() {
  return Geometry(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
}

namespace detail {

// Points of PG(n-1, 2) as bit masks 1..2^n-1 (lexicographic order), lines as
// {a, b, a^b} with `keep(a, b)` deciding membership.
template <typename Keep>
std::vector<std::vector<int>> gf2_lines(const std::vector<std::uint64_t>& points, Keep&& keep) {
  std::map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);
  std::set<std::vector<int>> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      auto it = index.find(points[i] ^ points[j]);
      if (it == index.end() || !keep(points[i], points[j])) continue;
      std::vector<int> l{static_cast<int>(i), static_cast<int>(j), it->second};
      std::sort(l.begin(), l.end());
      lines.insert(std::move(l));
    }
  }
  return {lines.begin(), lines.end()};
}

}  // namespace detail

/// GQ(2,2): points of PG(3,2), lines totally isotropic for the standard
/// symplectic form.
inline Geometry build_gq22() {
  const BilinearForm b = standard_symplectic_form(4, 2);
  std::vector<std::uint64_t> pts;
  for (const auto& v : enumerate_projective_points(4, 2)) pts.push_back(v.to_bits());
  auto lines = detail::gf2_lines(pts, [&](std::uint64_t x, std::uint64_t y) { return b.on_bits(x, y) == 0; });
  return Geometry(static_cast<int>(pts.size()), std::move(lines));
}

/// GQ(2,4) realized on the elliptic quadric, with each point's coordinates.
struct QuadricModel {
  Geometry geometry;
  QuadraticForm form;
  BilinearForm polar;
  std::vector<std::uint64_t> coords;  // point index -> 6-bit vector

  // Point index of a vector on the quadric, -1 otherwise.
  int point_of(std::uint64_t v) const {
    auto it = std::lower_bound(coords.begin(), coords.end(), v);
    return it != coords.end() && *it == v ? static_cast<int>(it - coords.begin()) : -1;
  }
};

inline QuadricModel build_gq24_quadric() {
  QuadraticForm q = standard_elliptic_form();
  BilinearForm b = polarize(q);
  std::vector<std::uint64_t> coords;
  for (const auto& v : quadric_points(q)) coords.push_back(v.to_bits());
  auto lines = detail::gf2_lines(coords, [](std::uint64_t, std::uint64_t) { return true; });
  Geometry g(static_cast<int>(coords.size()), std::move(lines));
  return {std::move(g), std::move(q), std::move(b), std::move(coords)};
}

/// True when no plane of PG(5,2) lies entirely on the quadric.
inline bool no_plane_on_quadric(const QuadricModel& m) {
  for (const auto& l : m.geometry.lines()) {
    const std::uint64_t a = m.coords[static_cast<std::size_t>(l[0])];
    const std::uint64_t b = m.coords[static_cast<std::size_t>(l[1])];
    for (std::size_t c = 0; c < m.coords.size(); ++c) {
      const std::uint64_t x = m.coords[c];
      if (x == a || x == b || x == (a ^ b)) continue;
      if (m.point_of(x ^ a) >= 0 && m.point_of(x ^ b) >= 0 && m.point_of(x ^ a ^ b) >= 0) return false;
    }
  }
  return true;
}

/// W(3): points of PG(3,3), lines totally isotropic for the standard
/// symplectic form on GF(3)^4.
inline Geometry build_w3() {
  const BilinearForm b = standard_symplectic_form(4, 3);
  const auto pts = enumerate_projective_points(4, 3);
  std::map<FieldVector, int> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], static_cast<int>(i));
  std::set<std::vector<int>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (b(pts[i], pts[j]) != 0) continue;
      std::vector<int> l{static_cast<int>(i), static_cast<int>(j), index.at((pts[i] + pts[j]).normalized()),
                         index.at((pts[i] + pts[j].scaled(2)).normalized())};
      std::sort(l.begin(), l.end());
      lines.insert(std::move(l));
    }
  }
  return Geometry(static_cast<int>(pts.size()), {lines.begin(), lines.end()});
}

/// GQ(2,4) derived from W(3) at a base point x.
struct PayneModel {
  Geometry geometry;
  std::vector<int> w3_point;         // new point index -> W(3) point index
  std::vector<int> classical_spread;  // indices of the nine lines from hyperbolic lines through x
};

inline PayneModel build_gq24_payne(const Geometry& w3, int x) {
  if (x < 0 || x >= w3.num_points()) throw std::out_of_range("base point out of range");
  const PointSet far = perp(w3, x).complement(w3.num_points());
  std::vector<int> w3_point = far.to_vector();
  std::vector<int> index(static_cast<std::size_t>(w3.num_points()), -1);
  for (std::size_t i = 0; i < w3_point.size(); ++i) index[static_cast<std::size_t>(w3_point[i])] = static_cast<int>(i);
  auto relabel = [&](PointSet s) {
    std::vector<int> l;
    (s & far).for_each([&](int p) { l.push_back(index[static_cast<std::size_t>(p)]); });
    return l;
  };

  std::vector<std::vector<int>> lines;
  for (int l = 0; l < w3.num_lines(); ++l) {
    if (!w3.line_set(l).contains(x)) lines.push_back(relabel(w3.line_set(l)));
  }
  std::set<std::vector<int>> hyperbolic;
  far.for_each([&](int y) {
    auto l = relabel(hyperbolic_line(w3, x, y));
    hyperbolic.insert(l);
  });
  lines.insert(lines.end(), hyperbolic.begin(), hyperbolic.end());

  Geometry g(static_cast<int>(w3_point.size()), std::move(lines));
  std::vector<int> spread;
  for (const auto& l : hyperbolic) spread.push_back(g.line_index(PointSet::of(l)));
  std::sort(spread.begin(), spread.end());
  return {std::move(g), std::move(w3_point), std::move(spread)};
}

inline PointSet map_points(const std::vector<int>& mapping, PointSet s) {
  PointSet out;
  s.for_each([&](int x) { out.insert(mapping[static_cast<std::size_t>(x)]); });
  return out;
}

/// True when `mapping` is a bijection carrying the lines of g1 onto those of g2.
inline bool preserves_lines(const Geometry& g1, const Geometry& g2, const std::vector<int>& mapping) {
  if (g1.num_points() != g2.num_points() || g1.num_lines() != g2.num_lines()) return false;
  if (static_cast<int>(mapping.size()) != g1.num_points()) return false;
  PointSet image;
  for (int y : mapping) {
    if (y < 0 || y >= g2.num_points() || image.contains(y)) return false;
    image.insert(y);
  }
  std::vector<PointSet> target = g2.line_sets();
  std::sort(target.begin(), target.end());
  for (PointSet l : g1.line_sets()) {
    if (!std::binary_search(target.begin(), target.end(), map_points(mapping, l))) return false;
  }
  return true;
}

/// A point bijection g1 -> g2 mapping lines onto lines, or nullopt if none
/// exists. Any result has been re-verified with preserves_lines.
inline std::optional<std::vector<int>> find_isomorphism(const Geometry& g1, const Geometry& g2) {
  if (g1.num_points() != g2.num_points() || g1.num_lines() != g2.num_lines()) return std::nullopt;
  std::vector<PointSet> a, b;
  for (int x = 0; x < g1.num_points(); ++x) a.push_back(g1.neighbours(x));
  for (int x = 0; x < g2.num_points(); ++x) b.push_back(g2.neighbours(x));
  return detail::match_adjacency(a, b, [&](const std::vector<int>& m) { return preserves_lines(g1, g2, m); });
}

}  // namespace gqveld
