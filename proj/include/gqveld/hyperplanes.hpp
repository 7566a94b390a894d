#pragma once

// Geometric hyperplanes: exhaustive search with constraint propagation, the
// quadric-section construction, and classification by kind.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqveld/incidence.hpp"
#include "gqveld/models.hpp"

namespace gqveld {

enum class HyperplaneKind { perp, subquadrangle, ovoid, unclassified };

inline const char* to_string(HyperplaneKind k) {
  switch (k) {
    case HyperplaneKind::perp: return "perp";
    case HyperplaneKind::subquadrangle: return "subquadrangle";
    case HyperplaneKind::ovoid: return "ovoid";
    case HyperplaneKind::unclassified: break;
  }
  return "unclassified";
}

struct HyperplaneClass {
  HyperplaneKind kind = HyperplaneKind::unclassified;
  int center = -1;                 // perp only
  std::optional<GQOrder> order;    // subquadrangle only
};

/// A proper point subset meeting every line in one or all of its points.
struct Hyperplane {
  PointSet points;
  HyperplaneClass type;
  std::uint64_t geometry_id = 0;

  HyperplaneKind kind() const { return type.kind; }
  bool is_doily() const {
    return type.kind == HyperplaneKind::subquadrangle && type.order && type.order->s == 2 && type.order->t == 2;
  }
};

inline void require_same_geometry(const Geometry& g, const Hyperplane& h) {
  if (h.geometry_id != g.id()) throw std::invalid_argument("hyperplane belongs to a different geometry");
}

inline bool is_geometric_hyperplane(const Geometry& g, PointSet s) {
  if (s == g.all_points()) return false;
  for (PointSet l : g.line_sets()) {
    const int k = (l & s).size();
    if (k != 1 && k != l.size()) return false;
  }
  return true;
}

/// Kind of a hyperplane: a point perp, a full subquadrangle of smaller t, or
/// an ovoid. Throws if `s` is not a hyperplane.
inline HyperplaneClass classify_hyperplane(const Geometry& g, PointSet s) {
  if (!is_geometric_hyperplane(g, s)) throw std::invalid_argument("point set is not a geometric hyperplane");
  for (int x = 0; x < g.num_points(); ++x) {
    if (perp(g, x) == s) return {HyperplaneKind::perp, x, std::nullopt};
  }
  int parent_t = 0;
  for (int x = 0; x < g.num_points(); ++x) parent_t = std::max(parent_t, static_cast<int>(g.lines_through(x).size()) - 1);

  const auto sub = induced_geometry(g, s);
  if (sub.geometry.num_lines() > 0) {
    const int s_order = static_cast<int>(sub.geometry.lines().front().size()) - 1;
    const int t_order = static_cast<int>(sub.geometry.lines_through(0).size()) - 1;
    if (t_order >= 1 && t_order < parent_t && verify_gq_axioms(sub.geometry, {s_order, t_order}).ok()) {
      return {HyperplaneKind::subquadrangle, -1, GQOrder{s_order, t_order}};
    }
  }
  bool ovoid = std::all_of(g.line_sets().begin(), g.line_sets().end(),
                           [&](PointSet l) { return (l & s).size() == 1; });
  if (ovoid) return {HyperplaneKind::ovoid, -1, std::nullopt};
  return {};
}

inline Hyperplane make_hyperplane(const Geometry& g, PointSet s) {
  return {s, classify_hyperplane(g, s), g.id()};
}

namespace detail {

// Unit propagation of the line constraint "meets in exactly one or all".
// Returns false on contradiction.
inline bool propagate(const Geometry& g, PointSet& in, PointSet& out) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (PointSet l : g.line_sets()) {
      const PointSet li = l & in, lo = l & out, lu = l - in - out;
      const int a = li.size(), b = lo.size();
      if (b > 0) {
        if (a >= 2) return false;
        if (a == 1 && !lu.empty()) {
          out |= lu;
          changed = true;
        } else if (a == 0) {
          if (lu.empty()) return false;
          if (lu.size() == 1) {
            in |= lu;
            changed = true;
          }
        }
      } else if (a >= 2 && !lu.empty()) {
        in |= lu;
        changed = true;
      }
    }
  }
  return true;
}

inline void hyperplane_search(const Geometry& g, PointSet in, PointSet out, std::vector<PointSet>& found) {
  if (!propagate(g, in, out)) return;
  const PointSet open = g.all_points() - in - out;
  if (open.empty()) {
    if (in != g.all_points() && is_geometric_hyperplane(g, in)) found.push_back(in);
    return;
  }
  const int x = open.first();
  hyperplane_search(g, in | PointSet::single(x), out, found);
  hyperplane_search(g, in, out | PointSet::single(x), found);
}

}  // namespace detail

/// All geometric hyperplanes, classified, in increasing bitmask order.
inline std::vector<Hyperplane> enumerate_hyperplanes_search(const Geometry& g) {
  std::vector<PointSet> found;
  detail::hyperplane_search(g, PointSet{}, PointSet{}, found);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Hyperplane> out;
  out.reserve(found.size());
  for (PointSet s : found) out.push_back(make_hyperplane(g, s));
  return out;
}

/// Intersection of the quadric with the PG(5,2) hyperplane {x : b(v,x) = 0}.
/// Filters all 2^v proper subsets; only for small geometries.
inline std::vector<PointSet> enumerate_hyperplanes_bruteforce(const Geometry& g) {
  if (g.num_points() > 20) throw std::invalid_argument("brute-force hyperplane filter is limited to 20 points");
  std::vector<PointSet> out;
  const std::uint64_t full = g.all_points().bits();
  for (std::uint64_t m = 0; m < full; ++m) {
    if (is_geometric_hyperplane(g, PointSet(m))) out.emplace_back(m);
  }
  return out;
}

struct QuadricSection {
  std::uint64_t normal;  // v
  bool tangent;          // Q(v) = 0
  int tangency_point;    // point index of v when tangent, else -1
  Hyperplane hyperplane;
};

inline std::vector<QuadricSection> enumerate_hyperplanes_quadric(const QuadricModel& m) {
  std::vector<QuadricSection> out;
  const int n = m.form.dimension();
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
    PointSet s;
    for (std::size_t i = 0; i < m.coords.size(); ++i) {
      if (m.polar.on_bits(v, m.coords[i]) == 0) s.insert(static_cast<int>(i));
    }
    const bool tangent = m.form.on_bits(v) == 0;
    out.push_back({v, tangent, tangent ? m.point_of(v) : -1, make_hyperplane(m.geometry, s)});
  }
  return out;
}

}  // namespace gqveld
