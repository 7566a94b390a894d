#pragma once

// Veldkamp spaces: hyperplanes as points, constant-intersection families as
// lines. Includes the GF(2) vector-space certificate, the four-type line
// classification for GQ(2,4), and the quadric polarity split.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqveld/fflinalg.hpp"
#include "gqveld/hyperplanes.hpp"
#include "gqveld/incidence.hpp"
#include "gqveld/models.hpp"

namespace gqveld {

enum class VeldkampLineType { unknown, I, II, III, IV };

inline const char* to_string(VeldkampLineType t) {
  switch (t) {
    case VeldkampLineType::I: return "I";
    case VeldkampLineType::II: return "II";
    case VeldkampLineType::III: return "III";
    case VeldkampLineType::IV: return "IV";
    case VeldkampLineType::unknown: break;
  }
  return "unknown";
}

struct VeldkampLine {
  std::vector<int> members;  // sorted indices into VeldkampSpace::points
  PointSet common;
  VeldkampLineType type = VeldkampLineType::unknown;
  int perps = 0;
  int doilies = 0;
};

struct VeldkampSpace {
  Geometry geometry;
  std::vector<Hyperplane> points;  // increasing bitmask order
  std::vector<VeldkampLine> lines;

  int index_of(PointSet s) const {
    auto it = std::lower_bound(points.begin(), points.end(), s,
                               [](const Hyperplane& h, PointSet x) { return h.points < x; });
    return it != points.end() && it->points == s ? static_cast<int>(it - points.begin()) : -1;
  }
};

/// Complement of the symmetric difference. Equal inputs give the full point
/// set, the zero vector, reported as nullopt.
inline std::optional<Hyperplane> veldkamp_sum(const Geometry& g, const Hyperplane& h1, const Hyperplane& h2) {
  require_same_geometry(g, h1);
  require_same_geometry(g, h2);
  const PointSet s = (h1.points ^ h2.points).complement(g.num_points());
  if (s == g.all_points()) return std::nullopt;
  if (!is_geometric_hyperplane(g, s)) throw VerificationError("Veldkamp sum is not a geometric hyperplane");
  return make_hyperplane(g, s);
}

/// Builds every Veldkamp line by scanning, for each pair of hyperplanes, all
/// hyperplanes sharing their intersection. `hyperplanes` must be the complete
/// census of `g`.
inline VeldkampSpace build_veldkamp_space(const Geometry& g, std::vector<Hyperplane> hyperplanes) {
  for (const auto& h : hyperplanes) require_same_geometry(g, h);
  std::sort(hyperplanes.begin(), hyperplanes.end(), [](const Hyperplane& a, const Hyperplane& b) { return a.points < b.points; });
  VeldkampSpace space{g, std::move(hyperplanes), {}};
  const auto& pts = space.points;
  const auto n = pts.size();
  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[i][j]) continue;
      const PointSet common = pts[i].points & pts[j].points;
      VeldkampLine line;
      line.common = common;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || ((pts[k].points & pts[i].points) == common && (pts[k].points & pts[j].points) == common)) {
          line.members.push_back(static_cast<int>(k));
        }
      }
      for (std::size_t a = 0; a < line.members.size(); ++a) {
        for (std::size_t b = a + 1; b < line.members.size(); ++b) {
          auto x = static_cast<std::size_t>(line.members[a]), y = static_cast<std::size_t>(line.members[b]);
          if (covered[x][y]) throw VerificationError("hyperplane pair lies on two Veldkamp lines");
          covered[x][y] = covered[y][x] = true;
        }
      }
      for (int m : line.members) {
        const auto& h = pts[static_cast<std::size_t>(m)];
        line.perps += h.kind() == HyperplaneKind::perp;
        line.doilies += h.is_doily();
      }
      space.lines.push_back(std::move(line));
    }
  }

  // Closure under the Veldkamp sum doubles as the completeness check.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PointSet s = (pts[i].points ^ pts[j].points).complement(g.num_points());
      if (is_geometric_hyperplane(g, s) && space.index_of(s) < 0) {
        throw VerificationError("hyperplane census is incomplete: a Veldkamp sum is missing");
      }
    }
  }
  for (const auto& l : space.lines) {
    if (l.members.size() != 3) continue;
    const PointSet sum = (pts[static_cast<std::size_t>(l.members[0])].points ^ pts[static_cast<std::size_t>(l.members[1])].points)
                             .complement(g.num_points());
    if (sum != pts[static_cast<std::size_t>(l.members[2])].points) {
      throw VerificationError("third point of a Veldkamp line differs from the Veldkamp sum");
    }
  }
  return space;
}

inline std::size_t count_pairs_covered(const VeldkampSpace& v) {
  std::size_t pairs = 0;
  for (const auto& l : v.lines) pairs += l.members.size() * (l.members.size() - 1) / 2;
  return pairs;
}

/// Certificate that the hyperplanes, via complement indicators, form the
/// nonzero vectors of GF(2)^rank with Veldkamp lines as {a, b, a+b}.
struct ProjectiveCertificate {
  int rank = 0;
  int dimension = -1;  // projective dimension, rank - 1
  bool closed = false;
  bool full_space = false;  // point count = 2^rank - 1
  bool lines_match = false;
};

inline ProjectiveCertificate certify_projective_space(const VeldkampSpace& v) {
  const int np = v.geometry.num_points();
  std::vector<std::uint64_t> comp;
  std::vector<FieldVector> vecs;
  for (const auto& h : v.points) {
    comp.push_back(h.points.complement(np).bits());
    vecs.push_back(FieldVector::from_bits(np, comp.back()));
  }
  std::vector<std::uint64_t> sorted = comp;
  sorted.push_back(0);
  std::sort(sorted.begin(), sorted.end());

  ProjectiveCertificate cert;
  cert.closed = true;
  std::set<std::array<int, 3>> triples;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    for (std::size_t j = i + 1; j < comp.size(); ++j) {
      const std::uint64_t s = comp[i] ^ comp[j];
      if (!std::binary_search(sorted.begin(), sorted.end(), s)) {
        cert.closed = false;
        continue;
      }
      const int k = static_cast<int>(std::find(comp.begin(), comp.end(), s) - comp.begin());
      std::array<int, 3> t{static_cast<int>(i), static_cast<int>(j), k};
      std::sort(t.begin(), t.end());
      triples.insert(t);
    }
  }
  if (!cert.closed) throw VerificationError("complement indicators are not closed under addition");

  cert.rank = gf_rank(vecs);
  cert.dimension = cert.rank - 1;
  cert.full_space = static_cast<std::uint64_t>(v.points.size()) == (std::uint64_t{1} << cert.rank) - 1;
  std::set<std::array<int, 3>> lines;
  bool all_triples = true;
  for (const auto& l : v.lines) {
    if (l.members.size() != 3) {
      all_triples = false;
      break;
    }
    lines.insert({l.members[0], l.members[1], l.members[2]});
  }
  cert.lines_match = all_triples && lines == triples;
  return cert;
}

struct LineCensus {
  int type_i = 0, type_ii = 0, type_iii = 0, type_iv = 0;
  friend bool operator==(const LineCensus&, const LineCensus&) = default;
};

namespace detail {

inline std::map<int, InducedGeometry> doily_geometries(const VeldkampSpace& v) {
  std::map<int, InducedGeometry> out;
  for (std::size_t i = 0; i < v.points.size(); ++i) {
    if (v.points[i].is_doily()) out.emplace(static_cast<int>(i), induced_geometry(v.geometry, v.points[i].points));
  }
  return out;
}

inline bool is_ovoid_of(const InducedGeometry& d, PointSet s) {
  return std::all_of(d.geometry.line_sets().begin(), d.geometry.line_sets().end(),
                     [&](PointSet l) { return (lift(d, l) & s).size() == 1; });
}

inline bool is_point_perp_of(const InducedGeometry& d, PointSet s) {
  for (int x = 0; x < d.geometry.num_points(); ++x) {
    if (lift(d, perp(d.geometry, x)) == s) return true;
  }
  return false;
}

inline bool is_grid(const Geometry& g, PointSet s) {
  if (s.size() != 9) return false;
  const auto sub = induced_geometry(g, s);
  return sub.geometry.num_lines() == 6 && verify_gq_axioms(sub.geometry, {2, 1}).ok();
}

inline bool pairwise_non_collinear(const Geometry& g, PointSet s) {
  bool ok = true;
  s.for_each([&](int x) { ok = ok && !g.neighbours(x).intersects(s); });
  return ok;
}

}  // namespace detail

/// Tags each line of V(GQ(2,4)) with its type. Composition (perps, doilies)
/// and the structure of the common intersection must agree on the type; any
/// disagreement throws VerificationError.
inline LineCensus classify_lines(VeldkampSpace& v) {
  const auto doilies = detail::doily_geometries(v);
  LineCensus census;
  for (auto& l : v.lines) {
    if (l.members.size() != 3) throw VerificationError("Veldkamp line of GQ(2,4) without exactly three points");
    std::vector<const InducedGeometry*> ds;
    for (int m : l.members) {
      auto it = doilies.find(m);
      if (it != doilies.end()) ds.push_back(&it->second);
    }
    const int k = l.common.size();
    bool ok = false;
    if (l.perps == 3 && l.doilies == 0) {
      l.type = VeldkampLineType::I;
      ok = k == 3 && v.geometry.line_index(l.common) >= 0;
      ++census.type_i;
    } else if (l.perps == 2 && l.doilies == 1) {
      l.type = VeldkampLineType::II;
      ok = k == 5 && detail::pairwise_non_collinear(v.geometry, l.common) && detail::is_ovoid_of(*ds[0], l.common);
      ++census.type_ii;
    } else if (l.perps == 1 && l.doilies == 2) {
      l.type = VeldkampLineType::III;
      ok = k == 7 && detail::is_point_perp_of(*ds[0], l.common) && detail::is_point_perp_of(*ds[1], l.common);
      ++census.type_iii;
    } else if (l.perps == 0 && l.doilies == 3) {
      l.type = VeldkampLineType::IV;
      ok = k == 9 && detail::is_grid(v.geometry, l.common);
      ++census.type_iv;
    }
    if (!ok) {
      throw VerificationError("Veldkamp line with " + std::to_string(l.perps) + " perps, " + std::to_string(l.doilies) +
                              " doilies and a " + std::to_string(k) + "-point intersection matches no type");
    }
  }
  return census;
}

struct PolaritySplit {
  std::vector<int> isotropic;   // line indices
  std::vector<int> hyperbolic;
};

namespace detail {

inline std::vector<std::uint64_t> section_normals(const VeldkampSpace& v, const QuadricModel& m) {
  if (v.geometry.id() != m.geometry.id()) {
    throw std::invalid_argument("Veldkamp space was not built on this quadric model");
  }
  std::vector<std::uint64_t> normal(v.points.size(), 0);
  for (const auto& s : enumerate_hyperplanes_quadric(m)) {
    const int i = v.index_of(s.hyperplane.points);
    if (i < 0) throw VerificationError("quadric section missing from the Veldkamp points");
    normal[static_cast<std::size_t>(i)] = s.normal;
  }
  for (auto x : normal) {
    if (x == 0) throw VerificationError("Veldkamp point without a quadric section");
  }
  return normal;
}

}  // namespace detail

/// Splits the lines by the polarized elliptic form: {H_u, H_v, H_u+v} is
/// isotropic iff b(u, v) = 0. When lines carry type tags, isotropic lines
/// must be exactly those of Types I and III.
inline PolaritySplit polarity_split(const VeldkampSpace& v, const QuadricModel& m) {
  const auto normal = detail::section_normals(v, m);
  PolaritySplit split;
  for (std::size_t i = 0; i < v.lines.size(); ++i) {
    const auto& l = v.lines[i];
    if (l.members.size() != 3) throw VerificationError("Veldkamp line without exactly three points");
    const auto u = normal[static_cast<std::size_t>(l.members[0])];
    const auto w = normal[static_cast<std::size_t>(l.members[1])];
    if ((u ^ w) != normal[static_cast<std::size_t>(l.members[2])]) {
      throw VerificationError("Veldkamp line is not a line of the dual PG(5,2)");
    }
    const bool iso = m.polar.on_bits(u, w) == 0;
    (iso ? split.isotropic : split.hyperbolic).push_back(static_cast<int>(i));
    if (l.type != VeldkampLineType::unknown) {
      const bool odd_perps = l.type == VeldkampLineType::I || l.type == VeldkampLineType::III;
      if (iso != odd_perps) throw VerificationError("polarity split disagrees with the line types");
    }
  }
  return split;
}

struct QuadricPointSplit {
  std::vector<int> on_quadric;   // Veldkamp point indices
  std::vector<int> off_quadric;
};

/// Partitions Veldkamp points by Q(v); on-quadric points must be the perps of
/// v itself, off-quadric points doilies.
inline QuadricPointSplit quadric_point_split(const VeldkampSpace& v, const QuadricModel& m) {
  const auto normal = detail::section_normals(v, m);
  QuadricPointSplit split;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    const auto& h = v.points[i];
    if (m.form.on_bits(normal[i]) == 0) {
      const int p = m.point_of(normal[i]);
      if (h.kind() != HyperplaneKind::perp || h.type.center != p || h.points != perp(m.geometry, p)) {
        throw VerificationError("tangent section is not the perp of its tangency point");
      }
      split.on_quadric.push_back(static_cast<int>(i));
    } else {
      if (!h.is_doily()) throw VerificationError("non-tangent section is not a GQ(2,2)");
      split.off_quadric.push_back(static_cast<int>(i));
    }
  }
  return split;
}

/// How often a family of sub-objects of the doilies is shared between doilies.
struct SharedCount {
  int incidences = 0;  // (doily, object) pairs
  int distinct = 0;
  int min_share = 0;
  int max_share = 0;
  std::vector<PointSet> objects;  // sorted distinct objects
};

struct DoilyCounts {
  SharedCount ovoids;     // ovoids of doilies
  SharedCount perp_sets;  // point perps inside doilies
  SharedCount grids;      // GQ(2,1) subquadrangles of doilies
};

namespace detail {

inline SharedCount tally(const std::map<PointSet, int>& m, int incidences) {
  SharedCount c;
  c.incidences = incidences;
  c.distinct = static_cast<int>(m.size());
  c.min_share = m.empty() ? 0 : m.begin()->second;
  for (const auto& [obj, n] : m) {
    c.min_share = std::min(c.min_share, n);
    c.max_share = std::max(c.max_share, n);
    c.objects.push_back(obj);
  }
  return c;
}

}  // namespace detail

/// Ovoids, point perps and grids of every doily, lifted to the parent
/// geometry and counted with multiplicity.
inline DoilyCounts doily_substructure_counts(const VeldkampSpace& v) {
  std::map<PointSet, int> ovoids, perps, grids;
  int n_ovoids = 0, n_perps = 0, n_grids = 0;
  for (const auto& [idx, d] : detail::doily_geometries(v)) {
    for (PointSet o : find_ovoids(d.geometry)) {
      ++ovoids[lift(d, o)];
      ++n_ovoids;
    }
    for (int x = 0; x < d.geometry.num_points(); ++x) {
      ++perps[lift(d, perp(d.geometry, x))];
      ++n_perps;
    }
    for (const auto& h : enumerate_hyperplanes_search(d.geometry)) {
      if (h.kind() == HyperplaneKind::subquadrangle) {
        ++grids[lift(d, h.points)];
        ++n_grids;
      }
    }
  }
  return {detail::tally(ovoids, n_ovoids), detail::tally(perps, n_perps), detail::tally(grids, n_grids)};
}

}  // namespace gqveld
