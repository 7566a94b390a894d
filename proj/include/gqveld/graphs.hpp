#pragma once

// Simple graphs on at most 64 vertices and the graph certificates of GQ(2,4):
// strong regularity, hyperplane complements, grids and the Gray configuration.

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqveld/hyperplanes.hpp"
#include "gqveld/incidence.hpp"
#include "gqveld/isomorphism.hpp"

namespace gqveld {

/// Undirected loop-free graph stored as adjacency bit rows.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > PointSet::kMaxPoints) throw std::invalid_argument("graph order must be in [0, 64]");
  }

  int order() const { return static_cast<int>(adj_.size()); }
  const std::vector<PointSet>& rows() const { return adj_; }
  PointSet neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return neighbours(u).contains(v); }
  int degree(int v) const { return neighbours(v).size(); }

  int num_edges() const {
    int e = 0;
    for (PointSet r : adj_) e += r.size();
    return e / 2;
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u < 0 || v < 0 || u >= order() || v >= order()) throw std::out_of_range("vertex out of range");
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
  }

  SimpleGraph complement() const {
    SimpleGraph c(order());
    for (int v = 0; v < order(); ++v) {
      PointSet r = neighbours(v).complement(order());
      r.erase(v);
      c.adj_[static_cast<std::size_t>(v)] = r;
    }
    return c;
  }

  // Subgraph on `keep`, vertices renumbered in increasing order.
  SimpleGraph induced(PointSet keep) const {
    const auto vs = keep.to_vector();
    SimpleGraph s(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (adjacent(vs[i], vs[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
    return s;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<PointSet> adj_;
};

inline SimpleGraph collinearity_graph(const Geometry& g) {
  SimpleGraph s(g.num_points());
  for (int x = 0; x < g.num_points(); ++x) {
    g.neighbours(x).for_each([&](int y) {
      if (x < y) s.add_edge(x, y);
    });
  }
  return s;
}

struct SrgParameters {
  int v, k, lambda, mu;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// (v, k, lambda, mu) if the graph is strongly regular, else nullopt.
/// Complete and edgeless graphs report mu = 0 / lambda = 0 respectively.
inline std::optional<SrgParameters> srg_parameters(const SimpleGraph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const int k = g.degree(0);
  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != k) return std::nullopt;
    for (int v = u + 1; v < n; ++v) {
      const int common = (g.neighbours(u) & g.neighbours(v)).size();
      int& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0) slot = common;
      if (slot != common) return std::nullopt;
    }
  }
  return SrgParameters{n, k, std::max(lambda, 0), std::max(mu, 0)};
}

inline std::vector<std::array<int, 3>> triangles(const SimpleGraph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.order(); ++a) {
    g.neighbours(a).for_each([&](int b) {
      if (b <= a) return;
      (g.neighbours(a) & g.neighbours(b)).for_each([&](int c) {
        if (c > b) out.push_back({a, b, c});
      });
    });
  }
  return out;
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  PointSet seen = PointSet::single(0), frontier = seen;
  while (!frontier.empty()) {
    PointSet next;
    frontier.for_each([&](int v) { next |= g.neighbours(v); });
    frontier = next - seen;
    seen |= next;
  }
  return seen == PointSet::full(g.order());
}

/// Two-colouring if one exists: bit set = second colour class.
inline std::optional<PointSet> bipartition(const SimpleGraph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      bool ok = true;
      g.neighbours(v).for_each([&](int w) {
        auto& c = colour[static_cast<std::size_t>(w)];
        if (c < 0) {
          c = 1 - colour[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (c == colour[static_cast<std::size_t>(v)]) {
          ok = false;
        }
      });
      if (!ok) return std::nullopt;
    }
  }
  PointSet second;
  for (int v = 0; v < g.order(); ++v) {
    if (colour[static_cast<std::size_t>(v)] == 1) second.insert(v);
  }
  return second;
}

inline bool is_bipartite(const SimpleGraph& g) { return bipartition(g).has_value(); }

/// Length of a shortest cycle, or -1 for a forest.
inline int girth(const SimpleGraph& g) {
  int best = -1;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1), parent(static_cast<std::size_t>(g.order()), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      g.neighbours(v).for_each([&](int w) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          q.push(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          const int len = dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best < 0 || len < best) best = len;
        }
      });
    }
  }
  return best;
}

inline std::optional<std::vector<int>> find_graph_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
  return detail::match_adjacency(a.rows(), b.rows(), [](const std::vector<int>&) { return true; });
}

inline SimpleGraph k66_minus_perfect_matching() {
  SimpleGraph g(12);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i != j) g.add_edge(i, 6 + j);
    }
  }
  return g;
}

inline SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

struct ClebschCertificate {
  SimpleGraph graph{0};
  std::optional<SrgParameters> srg;
  bool all_petersen = false;  // every non-neighbourhood is SRG(10,3,0,1)
};

/// Collinearity graph on the 16 points off a perp, and the graphs on the
/// non-neighbours of each of its vertices.
inline ClebschCertificate clebsch_certificate(const Geometry& g, const Hyperplane& h) {
  require_same_geometry(g, h);
  if (h.kind() != HyperplaneKind::perp) throw std::invalid_argument("Clebsch certificate needs a perp hyperplane");
  ClebschCertificate c;
  c.graph = collinearity_graph(g).induced(h.points.complement(g.num_points()));
  c.srg = srg_parameters(c.graph);
  c.all_petersen = true;
  for (int v = 0; v < c.graph.order(); ++v) {
    PointSet far = c.graph.neighbours(v).complement(c.graph.order());
    far.erase(v);
    c.all_petersen = c.all_petersen && srg_parameters(c.graph.induced(far)) == SrgParameters{10, 3, 0, 1};
  }
  return c;
}

struct DoubleSixCertificate {
  SimpleGraph graph{0};
  bool regular5 = false;
  bool bipartite = false;
  bool is_k66_minus_matching = false;
  bool traces_are_ovoids = false;  // each outside point sees an ovoid of the doily
};

inline DoubleSixCertificate double_six_certificate(const Geometry& g, const Hyperplane& h) {
  require_same_geometry(g, h);
  if (!h.is_doily()) throw std::invalid_argument("double-six certificate needs a GQ(2,2) hyperplane");
  DoubleSixCertificate c;
  const PointSet outside = h.points.complement(g.num_points());
  c.graph = collinearity_graph(g).induced(outside);
  c.regular5 = c.graph.order() == 12;
  for (int v = 0; v < c.graph.order(); ++v) c.regular5 = c.regular5 && c.graph.degree(v) == 5;
  c.bipartite = is_bipartite(c.graph);
  c.is_k66_minus_matching = find_graph_isomorphism(c.graph, k66_minus_perfect_matching()).has_value();
  const auto doily = induced_geometry(g, h.points);
  c.traces_are_ovoids = true;
  outside.for_each([&](int x) {
    const PointSet trace = g.neighbours(x) & h.points;
    bool ovoid = trace.size() == 5;
    for (PointSet l : doily.geometry.line_sets()) ovoid = ovoid && (lift(doily, l) & trace).size() == 1;
    c.traces_are_ovoids = c.traces_are_ovoids && ovoid;
  });
  return c;
}

/// Point sets of all GQ(2,1) subquadrangles: 3x3 arrays built from two
/// disjoint lines and their three transversals.
inline std::vector<PointSet> find_grids(const Geometry& g) {
  std::set<PointSet> grids;
  for (int l1 = 0; l1 < g.num_lines(); ++l1) {
    for (int l2 = l1 + 1; l2 < g.num_lines(); ++l2) {
      const PointSet a = g.line_set(l1), b = g.line_set(l2);
      if (a.intersects(b)) continue;
      PointSet third;
      bool ok = true;
      a.for_each([&](int x) {
        const PointSet partner = g.neighbours(x) & b;
        if (partner.size() != 1) { ok = false; return; }
        const int m = g.line_through(x, partner.first());
        third |= g.line_set(m) - a - b;
      });
      if (!ok || g.line_index(third) < 0) continue;
      const PointSet grid = a | b | third;
      const auto sub = induced_geometry(g, grid);
      if (sub.geometry.num_lines() == 6 && verify_gq_axioms(sub.geometry, {2, 1}).ok()) grids.insert(grid);
    }
  }
  return {grids.begin(), grids.end()};
}

/// Unordered triples of pairwise disjoint grids covering every point.
inline std::vector<std::array<PointSet, 3>> disjoint_grid_triples(const Geometry& g) {
  const auto grids = find_grids(g);
  std::vector<std::array<PointSet, 3>> out;
  for (std::size_t i = 0; i < grids.size(); ++i) {
    for (std::size_t j = i + 1; j < grids.size(); ++j) {
      if (grids[i].intersects(grids[j])) continue;
      const PointSet rest = (grids[i] | grids[j]).complement(g.num_points());
      if (std::binary_search(grids.begin() + static_cast<std::ptrdiff_t>(j) + 1, grids.end(), rest)) {
        out.push_back({grids[i], grids[j], rest});
      }
    }
  }
  return out;
}

struct GrayCertificate {
  int points = 0;
  int lines = 0;
  bool all_degrees_three = false;  // 3 lines per point and 3 points per line
  SimpleGraph incidence{0};
  bool cubic = false;
  bool bipartite = false;
  bool connected = false;
  int girth = -1;
};

/// Removes the 18 grid lines of a disjoint triple and certifies the remaining
/// 27_3 configuration and its point-line incidence graph.
inline GrayCertificate gray_configuration(const Geometry& g, const std::array<PointSet, 3>& triple) {
  PointSet covered;
  for (PointSet grid : triple) {
    if (covered.intersects(grid)) throw std::invalid_argument("grids of the triple are not disjoint");
    const auto sub = induced_geometry(g, grid);
    if (grid.size() != 9 || sub.geometry.num_lines() != 6) throw std::invalid_argument("triple member is not a grid");
    covered |= grid;
  }
  if (covered != g.all_points()) throw std::invalid_argument("grid triple does not cover the point set");

  std::vector<PointSet> kept;
  for (PointSet l : g.line_sets()) {
    if (std::none_of(triple.begin(), triple.end(), [&](PointSet grid) { return l.is_subset_of(grid); })) kept.push_back(l);
  }
  GrayCertificate c;
  c.points = g.num_points();
  c.lines = static_cast<int>(kept.size());
  c.incidence = SimpleGraph(c.points + c.lines);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    kept[i].for_each([&](int x) { c.incidence.add_edge(x, c.points + static_cast<int>(i)); });
  }
  c.all_degrees_three = true;
  for (int v = 0; v < c.incidence.order(); ++v) c.all_degrees_three = c.all_degrees_three && c.incidence.degree(v) == 3;
  c.cubic = c.all_degrees_three;
  c.bipartite = is_bipartite(c.incidence);
  c.connected = is_connected(c.incidence);
  c.girth = girth(c.incidence);
  return c;
}

/// graph6 encoding for graphs of at most 62 vertices.
inline std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 62) throw std::invalid_argument("graph6 writer supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline SimpleGraph from_graph6(const std::string& s) {
  if (s.empty() || s[0] < 63 || s[0] > 125) throw std::invalid_argument("malformed graph6 string");
  const int n = s[0] - 63;
  SimpleGraph g(n);
  std::size_t pos = 1;
  int bit = -1, cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit < 0) {
        if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
        cur = s[pos++] - 63;
        if (cur < 0 || cur > 63) throw std::invalid_argument("malformed graph6 string");
        bit = 5;
      }
      if ((cur >> bit--) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

inline std::string to_dot(const SimpleGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (int u = 0; u < g.order(); ++u) {
    g.neighbours(u).for_each([&](int v) {
      if (u < v) os << "  " << u << " -- " << v << ";\n";
    });
  }
  os << "}\n";
  return os.str();
}

}  // namespace gqveld
