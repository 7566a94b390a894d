#pragma once

// Finite point-line geometries and generalized-quadrangle vocabulary:
// axioms, perps, hyperbolic lines, triads, ovoids and spreads.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gqveld/point_set.hpp"

namespace gqveld {

struct GQOrder {
  int s;
  int t;
};

/// Point-line incidence structure on points 0..v-1 (v <= 64). Immutable once
/// built; per-point line lists and the collinearity relation are cached.
class Geometry {
 public:
  Geometry(int num_points, std::vector<std::vector<int>> lines) : v_(num_points) {
    if (num_points < 1 || num_points > PointSet::kMaxPoints) {
      throw std::invalid_argument("geometry must have between 1 and 64 points");
    }
    for (auto& l : lines) {
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end()) throw std::invalid_argument("line repeats a point");
      if (l.size() < 2) throw std::invalid_argument("line with fewer than two points");
      for (int x : l) {
        if (x < 0 || x >= v_) throw std::invalid_argument("line point index out of range");
      }
    }
    std::sort(lines.begin(), lines.end());
    if (std::adjacent_find(lines.begin(), lines.end()) != lines.end()) throw std::invalid_argument("repeated line");
    lines_ = std::move(lines);

    line_sets_.reserve(lines_.size());
    lines_through_.assign(static_cast<std::size_t>(v_), {});
    neighbours_.assign(static_cast<std::size_t>(v_), PointSet{});
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      PointSet s = PointSet::of(lines_[i]);
      line_sets_.push_back(s);
      for (int x : lines_[i]) {
        lines_through_[static_cast<std::size_t>(x)].push_back(static_cast<int>(i));
        neighbours_[static_cast<std::size_t>(x)] |= s;
      }
    }
    for (int x = 0; x < v_; ++x) neighbours_[static_cast<std::size_t>(x)].erase(x);
    static std::atomic<std::uint64_t> next_id{1};
    id_ = next_id.fetch_add(1);
  }

  // Identity of this construction; copies share it.
  std::uint64_t id() const { return id_; }
  int num_points() const { return v_; }
  int num_lines() const { return static_cast<int>(lines_.size()); }
  PointSet all_points() const { return PointSet::full(v_); }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<PointSet>& line_sets() const { return line_sets_; }
  PointSet line_set(int i) const { return line_sets_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& lines_through(int x) const { return lines_through_[static_cast<std::size_t>(x)]; }

  // Points collinear with x, x excluded.
  PointSet neighbours(int x) const { return neighbours_[static_cast<std::size_t>(x)]; }
  bool collinear(int x, int y) const { return x != y && neighbours(x).contains(y); }

  // Index of the line through both points, or -1.
  int line_through(int x, int y) const {
    for (int l : lines_through(x)) {
      if (line_set(l).contains(y)) return l;
    }
    return -1;
  }

  int line_index(PointSet s) const {
    auto it = std::find(line_sets_.begin(), line_sets_.end(), s);
    return it == line_sets_.end() ? -1 : static_cast<int>(it - line_sets_.begin());
  }

  // Line sets compared as sets; point labels matter.
  friend bool operator==(const Geometry& a, const Geometry& b) { return a.v_ == b.v_ && a.lines_ == b.lines_; }

 private:
  int v_;
  std::vector<std::vector<int>> lines_;
  std::vector<PointSet> line_sets_;
  std::vector<std::vector<int>> lines_through_;
  std::vector<PointSet> neighbours_;
  std::uint64_t id_ = 0;
};

/// Substructure on the points of `subset` with exactly the lines fully
/// contained in it, reindexed in increasing point order. `original[i]` is the
/// parent index of new point i.
struct InducedGeometry {
  Geometry geometry;
  std::vector<int> original;
};

inline InducedGeometry induced_geometry(const Geometry& g, PointSet subset) {
  std::vector<int> original = subset.to_vector();
  std::vector<int> index(static_cast<std::size_t>(g.num_points()), -1);
  for (std::size_t i = 0; i < original.size(); ++i) index[static_cast<std::size_t>(original[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> lines;
  for (const auto& l : g.lines()) {
    if (!PointSet::of(l).is_subset_of(subset)) continue;
    std::vector<int> nl;
    for (int x : l) nl.push_back(index[static_cast<std::size_t>(x)]);
    lines.push_back(std::move(nl));
  }
  return {Geometry(static_cast<int>(original.size()), std::move(lines)), std::move(original)};
}

inline PointSet lift(const InducedGeometry& sub, PointSet local) {
  PointSet out;
  local.for_each([&](int x) { out.insert(sub.original[static_cast<std::size_t>(x)]); });
  return out;
}

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // empty on success
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
  }
  const AxiomCheck* first_failure() const {
    for (const auto& c : checks) {
      if (!c.pass) return &c;
    }
    return nullptr;
  }
};

/// Checks the three GQ(s,t) axioms plus the point and line counts. Failures
/// are reported with a witness, never thrown.
inline AxiomReport verify_gq_axioms(const Geometry& g, GQOrder order) {
  AxiomReport report;
  const int v = g.num_points();
  const int b = g.num_lines();

  // Two points on two common lines is the same event as two lines sharing
  // two points; it fails axioms (i) and (ii) together.
  std::string shared_witness;
  for (int l = 0; l < b && shared_witness.empty(); ++l) {
    for (int m = l + 1; m < b; ++m) {
      if ((g.line_set(l) & g.line_set(m)).size() >= 2) {
        shared_witness = "lines " + std::to_string(l) + " and " + std::to_string(m) + " share two points";
        break;
      }
    }
  }

  AxiomCheck i1{"points on 1+t lines, two points on at most one line", true, {}};
  for (int x = 0; x < v && i1.pass; ++x) {
    const auto& through = g.lines_through(x);
    if (static_cast<int>(through.size()) != order.t + 1) {
      i1.pass = false;
      i1.witness = "point " + std::to_string(x) + " lies on " + std::to_string(through.size()) + " lines";
    }
  }
  if (i1.pass && !shared_witness.empty()) {
    i1.pass = false;
    i1.witness = shared_witness;
  }
  report.checks.push_back(i1);

  AxiomCheck i2{"lines have 1+s points, two lines share at most one point", true, {}};
  for (int l = 0; l < b && i2.pass; ++l) {
    if (g.line_set(l).size() != order.s + 1) {
      i2.pass = false;
      i2.witness = "line " + std::to_string(l) + " has " + std::to_string(g.line_set(l).size()) + " points";
    }
  }
  if (i2.pass && !shared_witness.empty()) {
    i2.pass = false;
    i2.witness = shared_witness;
  }
  report.checks.push_back(i2);

  AxiomCheck i3{"unique collinear projection for every anti-flag", true, {}};
  for (int l = 0; l < b && i3.pass; ++l) {
    const PointSet line = g.line_set(l);
    for (int x = 0; x < v; ++x) {
      if (line.contains(x)) continue;
      // Each y on L collinear with x gives a pair (y, line xy); they are unique
      // iff exactly one point of L is collinear with x.
      const int n = (g.neighbours(x) & line).size();
      if (n != 1) {
        i3.pass = false;
        i3.witness = "point " + std::to_string(x) + " and line " + std::to_string(l) + " have " + std::to_string(n) +
                     " connecting pairs";
        break;
      }
    }
  }
  report.checks.push_back(i3);

  const int st1 = order.s * order.t + 1;
  AxiomCheck pc{"|P| = (s+1)(st+1)", v == (order.s + 1) * st1, {}};
  if (!pc.pass) pc.witness = "|P| = " + std::to_string(v);
  report.checks.push_back(pc);
  AxiomCheck lc{"|B| = (t+1)(st+1)", b == (order.t + 1) * st1, {}};
  if (!lc.pass) lc.witness = "|B| = " + std::to_string(b);
  report.checks.push_back(lc);
  return report;
}

/// x-perp: x together with every point collinear with it.
inline PointSet perp(const Geometry& g, int x) {
  PointSet s = g.neighbours(x);
  s.insert(x);
  return s;
}

/// Intersection of the perps of the members of `a`.
inline PointSet perp(const Geometry& g, PointSet a) {
  if (a.empty()) throw std::invalid_argument("perp of the empty set");
  PointSet s = g.all_points();
  a.for_each([&](int x) { s &= perp(g, x); });
  return s;
}

/// {x,y}-perp-perp for non-collinear x and y.
inline PointSet hyperbolic_line(const Geometry& g, int x, int y) {
  if (x == y || g.collinear(x, y)) throw std::invalid_argument("hyperbolic line needs two non-collinear points");
  PointSet pair = PointSet::single(x) | PointSet::single(y);
  return perp(g, perp(g, pair));
}

struct Triad {
  int a, b, c;
  PointSet centers;
};

inline std::vector<Triad> triads(const Geometry& g) {
  std::vector<Triad> out;
  const int v = g.num_points();
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (g.collinear(a, b)) continue;
      for (int c = b + 1; c < v; ++c) {
        if (g.collinear(a, c) || g.collinear(b, c)) continue;
        PointSet t = PointSet::single(a) | PointSet::single(b) | PointSet::single(c);
        out.push_back({a, b, c, perp(g, t)});
      }
    }
  }
  return out;
}

/// Number of centers -> number of triads with that many centers.
inline std::map<int, long> triad_census(const Geometry& g) {
  std::map<int, long> hist;
  for (const auto& t : triads(g)) ++hist[t.centers.size()];
  return hist;
}

namespace detail {

inline void ovoid_search(const Geometry& g, PointSet chosen, PointSet blocked, std::vector<bool>& covered,
                         std::vector<PointSet>& out) {
  int target = -1;
  for (int l = 0; l < g.num_lines(); ++l) {
    if (!covered[static_cast<std::size_t>(l)]) { target = l; break; }
  }
  if (target < 0) {
    out.push_back(chosen);
    return;
  }
  PointSet options = g.line_set(target) - blocked;
  options.for_each([&](int x) {
    for (int l : g.lines_through(x)) covered[static_cast<std::size_t>(l)] = true;
    ovoid_search(g, chosen | PointSet::single(x), blocked | perp(g, x), covered, out);
    for (int l : g.lines_through(x)) covered[static_cast<std::size_t>(l)] = false;
  });
}

inline void spread_search(const Geometry& g, PointSet covered, std::vector<int>& chosen,
                          std::vector<std::vector<int>>& out) {
  const PointSet open = g.all_points() - covered;
  if (open.empty()) {
    auto s = chosen;
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
    return;
  }
  const int x = open.first();
  for (int l : g.lines_through(x)) {
    if (g.line_set(l).intersects(covered)) continue;
    chosen.push_back(l);
    spread_search(g, covered | g.line_set(l), chosen, out);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Every point set meeting each line exactly once. Branches on the first
/// uncovered line, so results come out in a fixed order.
inline std::vector<PointSet> find_ovoids(const Geometry& g) {
  std::vector<PointSet> out;
  std::vector<bool> covered(static_cast<std::size_t>(g.num_lines()), false);
  detail::ovoid_search(g, PointSet{}, PointSet{}, covered, out);
  return out;
}

/// Every partition of the points into lines, each as sorted line indices.
inline std::vector<std::vector<int>> find_spreads(const Geometry& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  detail::spread_search(g, PointSet{}, chosen, out);
  return out;
}

}  // namespace gqveld
