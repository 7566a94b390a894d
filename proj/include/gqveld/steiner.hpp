#pragma once

// E7 weights and roots, the 28 bitangents, Steiner complexes and the
// reconstruction of the hyperplanes of GQ(2,4) from the 2-(28,12,11) design.
//
// Scales: a weight is ±v_ij with 3 at positions i,j and -1 elsewhere (norm 24).
// Roots are stored doubled so the half-integer ones are integral (norm 8).
// Squared distances between weights are 48 - 2 w.w', i.e. 32, 64 or 96.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gqveld/graphs.hpp"
#include "gqveld/hyperplanes.hpp"
#include "gqveld/incidence.hpp"
#include "gqveld/point_set.hpp"
#include "gqveld/veldkamp.hpp"

namespace gqveld {

using Coords = std::array<int, 8>;

inline int dot(const Coords& a, const Coords& b) {
  int s = 0;
  for (std::size_t i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

struct WeightVector {
  Coords coords{};
  int bitangent = 0;
  int sign = 1;
};

enum class RootType { transposition, bipartition };

struct RootVector {
  Coords doubled{};
  RootType type = RootType::transposition;
};

struct Bitangent {
  int i = 0, j = 0;  // 0-based duad, i < j
};

struct E7System {
  std::vector<WeightVector> weights;  // index 2*b is +v_b, 2*b+1 is -v_b
  std::vector<RootVector> roots;      // 28 transposition roots, then 35 bipartition roots
  std::vector<Bitangent> bitangents;  // duads in lexicographic order
  std::set<int> distance_spectrum;    // squared distances between distinct weights

  int weight_index(const Coords& c) const {
    auto it = lookup_.find(c);
    return it == lookup_.end() ? -1 : it->second;
  }

 private:
  std::map<Coords, int> lookup_;
  friend E7System build_weights_and_roots();
};

inline E7System build_weights_and_roots() {
  E7System s;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      const int b = static_cast<int>(s.bitangents.size());
      s.bitangents.push_back({i, j});
      Coords v;
      v.fill(-1);
      v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(j)] = 3;
      Coords neg;
      for (std::size_t k = 0; k < 8; ++k) neg[k] = -v[k];
      s.weights.push_back({v, b, 1});
      s.weights.push_back({neg, b, -1});
    }
  }
  for (std::size_t w = 0; w < s.weights.size(); ++w) s.lookup_[s.weights[w].coords] = static_cast<int>(w);

  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      Coords r{};
      r[static_cast<std::size_t>(i)] = 2;
      r[static_cast<std::size_t>(j)] = -2;
      s.roots.push_back({r, RootType::transposition});
    }
  }
  // Balanced bipartitions {A|B} with 0 in A; A gets +1, B gets -1.
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (!(mask & 1U) || __builtin_popcount(mask) != 4) continue;
    Coords r;
    for (std::size_t k = 0; k < 8; ++k) r[k] = (mask >> k) & 1U ? 1 : -1;
    s.roots.push_back({r, RootType::bipartition});
  }

  for (std::size_t a = 0; a < s.weights.size(); ++a) {
    for (std::size_t b = a + 1; b < s.weights.size(); ++b) {
      s.distance_spectrum.insert(48 - 2 * dot(s.weights[a].coords, s.weights[b].coords));
    }
  }
  if (s.distance_spectrum != std::set<int>{32, 64, 96}) throw VerificationError("unexpected weight distance spectrum");
  return s;
}

/// w - (2 w.r / r.r) r in the doubled root scale, which is w - (w.R) R / 4.
inline Coords reflect(const RootVector& r, const Coords& w) {
  const int c = dot(w, r.doubled);
  Coords out;
  for (std::size_t k = 0; k < 8; ++k) {
    const int num = c * r.doubled[k];
    if (num % 4 != 0) throw VerificationError("reflection leaves the integer lattice");
    out[k] = w[k] - num / 4;
  }
  return out;
}

inline int reflect(const E7System& s, int root, int weight) {
  const int w = s.weight_index(reflect(s.roots.at(static_cast<std::size_t>(root)), s.weights.at(static_cast<std::size_t>(weight)).coords));
  if (w < 0) throw VerificationError("reflection image is not a weight");
  return w;
}

struct SteinerComplex {
  int root = 0;
  PointSet bitangents;                     // 12 of the 28
  std::vector<std::pair<int, int>> pairs;  // the six transpositions, each (smaller, larger)
  int moved_weights = 0;

  int partner(int b) const {
    for (auto [x, y] : pairs) {
      if (x == b) return y;
      if (y == b) return x;
    }
    return -1;
  }
};

inline SteinerComplex steiner_complex(const E7System& s, int root) {
  SteinerComplex c;
  c.root = root;
  for (int w = 0; w < static_cast<int>(s.weights.size()); ++w) {
    const int img = reflect(s, root, w);
    if (img == w) continue;
    ++c.moved_weights;
    if (reflect(s, root, img) != w) throw VerificationError("reflection is not an involution");
    const int b = s.weights[static_cast<std::size_t>(w)].bitangent;
    const int b2 = s.weights[static_cast<std::size_t>(img)].bitangent;
    if (b == b2) throw VerificationError("reflection sends a weight to its negative");
    c.bitangents.insert(b);
    if (b < b2 && s.weights[static_cast<std::size_t>(w)].sign > 0) c.pairs.emplace_back(b, b2);
  }
  std::sort(c.pairs.begin(), c.pairs.end());
  PointSet covered;
  for (auto [x, y] : c.pairs) {
    if (covered.contains(x) || covered.contains(y)) throw VerificationError("complex pairs overlap");
    covered.insert(x);
    covered.insert(y);
  }
  if (c.moved_weights != 24 || c.bitangents.size() != 12 || c.pairs.size() != 6 || covered != c.bitangents) {
    throw VerificationError("reflection is not twelve disjoint transpositions");
  }
  return c;
}

/// All 63 complexes indexed by root; throws if two roots give the same 12-set.
inline std::vector<SteinerComplex> steiner_complexes(const E7System& s) {
  std::vector<SteinerComplex> out;
  std::set<PointSet> seen;
  for (int r = 0; r < static_cast<int>(s.roots.size()); ++r) {
    out.push_back(steiner_complex(s, r));
    if (!seen.insert(out.back().bitangents).second) throw VerificationError("two roots share a Steiner complex");
  }
  return out;
}

struct DesignCertificate {
  int t = 2, v = 0, k = 0, lambda = 0, blocks = 0;
  std::set<int> block_sizes;
  std::set<int> point_replication;
  std::set<int> pair_replication;
  bool is_design() const { return block_sizes.size() == 1 && point_replication.size() == 1 && pair_replication.size() == 1; }
};

inline DesignCertificate design_parameters(const std::vector<SteinerComplex>& complexes) {
  DesignCertificate d;
  d.v = 28;
  d.blocks = static_cast<int>(complexes.size());
  for (const auto& c : complexes) d.block_sizes.insert(c.bitangents.size());
  for (int x = 0; x < d.v; ++x) {
    d.point_replication.insert(static_cast<int>(std::count_if(complexes.begin(), complexes.end(), [&](const SteinerComplex& c) { return c.bitangents.contains(x); })));
    for (int y = x + 1; y < d.v; ++y) {
      const PointSet xy = PointSet::single(x) | PointSet::single(y);
      d.pair_replication.insert(static_cast<int>(std::count_if(complexes.begin(), complexes.end(), [&](const SteinerComplex& c) { return xy.is_subset_of(c.bitangents); })));
    }
  }
  d.k = d.block_sizes.empty() ? 0 : *d.block_sizes.begin();
  d.lambda = d.pair_replication.empty() ? 0 : *d.pair_replication.begin();
  return d;
}

enum class Syzygy { syzygetic, azygetic };

inline const char* to_string(Syzygy s) { return s == Syzygy::syzygetic ? "syzygetic" : "azygetic"; }

struct SyzygyResult {
  Syzygy relation = Syzygy::syzygetic;
  int companion = -1;      // gamma or delta
  bool literal_sum = false;  // delta equals alpha + beta exactly, before sign normalisation
};

namespace detail {

inline int complex_index(const std::vector<SteinerComplex>& cs, PointSet s) {
  for (const auto& c : cs) {
    if (c.bitangents == s) return c.root;
  }
  return -1;
}

}  // namespace detail

inline SyzygyResult syzygy(const E7System& s, const std::vector<SteinerComplex>& cs, int a, int b) {
  if (a == b) throw std::invalid_argument("syzygy needs two distinct complexes");
  const auto& ca = cs.at(static_cast<std::size_t>(a));
  const auto& cb = cs.at(static_cast<std::size_t>(b));
  const auto& ra = s.roots[static_cast<std::size_t>(a)].doubled;
  const auto& rb = s.roots[static_cast<std::size_t>(b)].doubled;
  const int meet = (ca.bitangents & cb.bitangents).size();
  SyzygyResult out;
  if (meet == 4) {
    out.relation = Syzygy::syzygetic;
    const PointSet all = PointSet::full(28);
    for (const auto& c : cs) {
      if (c.root == a || c.root == b) continue;
      if ((c.bitangents & ca.bitangents).size() != 4 || (c.bitangents & cb.bitangents).size() != 4) continue;
      if ((c.bitangents | ca.bitangents | cb.bitangents) != all) continue;
      if (out.companion >= 0) throw VerificationError("syzygetic pair has two covering companions");
      out.companion = c.root;
    }
    if (out.companion < 0) throw VerificationError("syzygetic pair has no covering companion");
    // Root-level description: the member of S_{a,b} orthogonal to all others.
    std::vector<int> sab;
    for (int r = 0; r < static_cast<int>(s.roots.size()); ++r) {
      const auto& rr = s.roots[static_cast<std::size_t>(r)].doubled;
      if (dot(rr, ra) == 0 && dot(rr, rb) == 0) sab.push_back(r);
    }
    std::vector<int> central;
    for (int r : sab) {
      const auto& rr = s.roots[static_cast<std::size_t>(r)].doubled;
      if (std::all_of(sab.begin(), sab.end(), [&](int o) { return o == r || dot(rr, s.roots[static_cast<std::size_t>(o)].doubled) == 0; })) {
        central.push_back(r);
      }
    }
    if (central != std::vector<int>{out.companion}) throw VerificationError("companion is not the central root of S_{a,b}");
    const PointSet star = (ca.bitangents ^ cb.bitangents).complement(28);
    if (cs[static_cast<std::size_t>(out.companion)].bitangents != star) throw VerificationError("S_gamma differs from the Veldkamp sum");
  } else if (meet == 6) {
    out.relation = Syzygy::azygetic;
    out.companion = detail::complex_index(cs, ca.bitangents ^ cb.bitangents);
    if (out.companion < 0) throw VerificationError("symmetric difference of an azygetic pair is not a complex");
    const auto& rd = s.roots[static_cast<std::size_t>(out.companion)].doubled;
    bool match = false;
    for (int sa : {1, -1}) {
      for (int sb : {1, -1}) {
        Coords sum;
        for (std::size_t k = 0; k < 8; ++k) sum[k] = sa * ra[k] + sb * rb[k];
        if (sum == rd) {
          match = true;
          out.literal_sum = out.literal_sum || (sa == 1 && sb == 1);
        }
      }
    }
    if (!match) throw VerificationError("delta is not a signed sum of alpha and beta");
  } else {
    throw VerificationError("complexes meet in " + std::to_string(meet) + " bitangents");
  }
  return out;
}

/// Syzygy data for all unordered pairs of the 63 complexes.
struct SyzygyTable {
  std::vector<std::vector<std::optional<SyzygyResult>>> entry;
  int syzygetic_pairs = 0;
  int azygetic_pairs = 0;
  int literal_sums = 0;

  const SyzygyResult& at(int a, int b) const {
    const auto& e = entry.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
    if (!e) throw std::invalid_argument("syzygy is defined for distinct complexes only");
    return *e;
  }
};

inline SyzygyTable syzygy_table(const E7System& s, const std::vector<SteinerComplex>& cs) {
  const auto n = cs.size();
  SyzygyTable t;
  t.entry.assign(n, std::vector<std::optional<SyzygyResult>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto r = syzygy(s, cs, static_cast<int>(a), static_cast<int>(b));
      t.entry[a][b] = t.entry[b][a] = r;
      if (r.relation == Syzygy::syzygetic) {
        ++t.syzygetic_pairs;
      } else {
        ++t.azygetic_pairs;
        t.literal_sums += r.literal_sum;
      }
    }
  }
  return t;
}

/// B(a, b): 0 for syzygetic, 1 for azygetic. Undefined on the diagonal.
inline int symplectic_form(const SyzygyTable& t, int a, int b) {
  return t.at(a, b).relation == Syzygy::azygetic ? 1 : 0;
}

struct ParityCertificate {
  int p = 0;
  int pairs = 0;
  int syzygetic = 0;
  int azygetic = 0;
};

/// Membership parity of p over {S_a, S_b, companion}: odd for syzygetic
/// triples, even for azygetic ones.
inline ParityCertificate parity_rules_check(int p, const std::vector<SteinerComplex>& cs, const SyzygyTable& t) {
  if (p < 0 || p >= 28) throw std::out_of_range("bitangent index out of range");
  ParityCertificate cert{p, 0, 0, 0};
  for (std::size_t a = 0; a < cs.size(); ++a) {
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      const auto& r = t.at(static_cast<int>(a), static_cast<int>(b));
      const auto& cc = cs[static_cast<std::size_t>(r.companion)];
      const int count = cs[a].bitangents.contains(p) + cs[b].bitangents.contains(p) + cc.bitangents.contains(p);
      const bool syz = r.relation == Syzygy::syzygetic;
      const PointSet expected = syz ? (cs[a].bitangents ^ cs[b].bitangents).complement(28) : cs[a].bitangents ^ cs[b].bitangents;
      if ((count % 2 == 1) != syz || cc.bitangents != expected) {
        throw VerificationError("parity rule fails for p=" + std::to_string(p) + " and complexes " + std::to_string(a) + ", " + std::to_string(b));
      }
      ++cert.pairs;
      ++(syz ? cert.syzygetic : cert.azygetic);
    }
  }
  return cert;
}

struct DpFamily {
  int p = 0;
  std::vector<int> bitangent_of;    // local point -> bitangent, 27 entries
  std::vector<PointSet> members;    // D_p over X, indexed by root
  std::vector<PointSet> reduced;    // D'_p over the 27 local points, indexed by root
  std::map<int, int> member_sizes;
  std::map<int, int> reduced_sizes;
  bool closed = false;

  int local(int b) const { return b < p ? b : b - 1; }

  PointSet to_local(PointSet s) const {
    PointSet out;
    s.for_each([&](int b) {
      if (b != p) out.insert(local(b));
    });
    return out;
  }

  int root_of(PointSet local_set) const {
    auto it = std::find(reduced.begin(), reduced.end(), local_set);
    return it == reduced.end() ? -1 : static_cast<int>(it - reduced.begin());
  }
};

inline DpFamily build_dp(int p, const std::vector<SteinerComplex>& cs) {
  if (p < 0 || p >= 28) throw std::out_of_range("bitangent index out of range");
  DpFamily d;
  d.p = p;
  for (int b = 0; b < 28; ++b) {
    if (b != p) d.bitangent_of.push_back(b);
  }
  for (const auto& c : cs) {
    const PointSet m = c.bitangents.contains(p) ? c.bitangents : c.bitangents.complement(28);
    d.members.push_back(m);
    d.reduced.push_back(d.to_local(m));
    ++d.member_sizes[m.size()];
    ++d.reduced_sizes[d.reduced.back().size()];
  }
  const std::set<PointSet> family(d.reduced.begin(), d.reduced.end());
  d.closed = family.size() == d.reduced.size();
  for (std::size_t i = 0; i < d.reduced.size() && d.closed; ++i) {
    for (std::size_t j = i + 1; j < d.reduced.size() && d.closed; ++j) {
      d.closed = family.count((d.reduced[i] ^ d.reduced[j]).complement(27)) == 1;
    }
  }
  return d;
}

/// Which triangle types occur among the six signed weights of three bitangents.
struct TriangleConditions {
  bool side_one = false;    // (a): all squared sides 32
  bool side_sqrt2 = false;  // (b): all squared sides 64
};

inline TriangleConditions triangle_conditions(const E7System& s, int q, int r, int t) {
  const std::array<int, 6> w{2 * q, 2 * q + 1, 2 * r, 2 * r + 1, 2 * t, 2 * t + 1};
  auto d2 = [&](int a, int b) {
    return 48 - 2 * dot(s.weights[static_cast<std::size_t>(a)].coords, s.weights[static_cast<std::size_t>(b)].coords);
  };
  TriangleConditions c;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      for (int k = j + 1; k < 6; ++k) {
        const int x = d2(w[i], w[j]), y = d2(w[i], w[k]), z = d2(w[j], w[k]);
        if (x == y && y == z) {
          c.side_one = c.side_one || x == 32;
          c.side_sqrt2 = c.side_sqrt2 || x == 64;
        }
      }
    }
  }
  return c;
}

struct TriangleScan {
  int triples = 0;
  int side_one = 0;
  int side_sqrt2 = 0;
};

/// Every triple of distinct bitangents satisfies exactly one condition.
inline TriangleScan verify_triangle_dichotomy(const E7System& s) {
  TriangleScan scan;
  for (int a = 0; a < 28; ++a) {
    for (int b = a + 1; b < 28; ++b) {
      for (int c = b + 1; c < 28; ++c) {
        const auto t = triangle_conditions(s, a, b, c);
        if (t.side_one == t.side_sqrt2) throw VerificationError("triangle conditions are not exclusive");
        ++scan.triples;
        ++(t.side_one ? scan.side_one : scan.side_sqrt2);
      }
    }
  }
  return scan;
}

enum class AdjacencyConvention { side_one, side_sqrt2 };

inline const char* to_string(AdjacencyConvention c) { return c == AdjacencyConvention::side_one ? "side-1" : "side-sqrt2"; }

struct InducedSteinerGeometry {
  DpFamily family;
  SimpleGraph side_one_graph{27};
  SimpleGraph side_sqrt2_graph{27};
  std::optional<SrgParameters> side_one_srg;
  std::optional<SrgParameters> side_sqrt2_srg;
  AdjacencyConvention convention = AdjacencyConvention::side_one;
  Geometry geometry;
};

/// Builds both edge rules on X \ {p}, keeps the one that is SRG(27,10,1,5),
/// and turns its 45 triangles into lines.
inline InducedSteinerGeometry build_induced_geometry(const E7System& s, const std::vector<SteinerComplex>& cs, int p) {
  DpFamily d = build_dp(p, cs);
  SimpleGraph ga(27), gb(27);
  for (int i = 0; i < 27; ++i) {
    for (int j = i + 1; j < 27; ++j) {
      const auto t = triangle_conditions(s, p, d.bitangent_of[static_cast<std::size_t>(i)], d.bitangent_of[static_cast<std::size_t>(j)]);
      if (t.side_one == t.side_sqrt2) throw VerificationError("triangle conditions are not exclusive");
      (t.side_one ? ga : gb).add_edge(i, j);
    }
  }
  const auto sa = srg_parameters(ga), sb = srg_parameters(gb);
  const SrgParameters target{27, 10, 1, 5};
  if ((sa == target) == (sb == target)) throw VerificationError("no unique adjacency convention gives SRG(27,10,1,5)");
  const auto conv = sa == target ? AdjacencyConvention::side_one : AdjacencyConvention::side_sqrt2;
  std::vector<std::vector<int>> lines;
  for (const auto& tri : triangles(conv == AdjacencyConvention::side_one ? ga : gb)) lines.push_back({tri[0], tri[1], tri[2]});
  if (lines.size() != 45) throw VerificationError("induced graph does not have 45 triangles");
  Geometry geometry(27, lines);
  if (!verify_gq_axioms(geometry, {2, 4}).ok()) throw VerificationError("induced geometry is not GQ(2,4)");
  return {std::move(d), std::move(ga), std::move(gb), sa, sb, conv, std::move(geometry)};
}

/// D'_p coincides with the geometric hyperplanes found by search.
inline bool hyperplane_family_matches(const InducedSteinerGeometry& ig) {
  std::set<PointSet> found, family(ig.family.reduced.begin(), ig.family.reduced.end());
  for (const auto& h : enumerate_hyperplanes_search(ig.geometry)) found.insert(h.points);
  return found == family;
}

/// For blocks through p: B \ {p} is the perp of the partner of p in B.
inline int perps_from_pairing(const InducedSteinerGeometry& ig, const std::vector<SteinerComplex>& cs) {
  const auto& d = ig.family;
  int matched = 0;
  for (const auto& c : cs) {
    if (!c.bitangents.contains(d.p)) continue;
    const int q = c.partner(d.p);
    if (q < 0) throw VerificationError("p has no partner in its complex");
    if (d.to_local(c.bitangents) != perp(ig.geometry, d.local(q))) {
      throw VerificationError("block through p is not the perp of its partner");
    }
    ++matched;
  }
  return matched;
}

inline std::vector<Hyperplane> family_hyperplanes(const InducedSteinerGeometry& ig) {
  std::vector<Hyperplane> hs;
  for (PointSet s : ig.family.reduced) hs.push_back(make_hyperplane(ig.geometry, s));
  return hs;
}

struct IsotropicCensus {
  int isotropic = 0;
  int non_isotropic = 0;
  LineCensus types;
  bool matches_types = false;  // isotropic exactly on Types I and III
};

inline IsotropicCensus isotropic_line_census(const InducedSteinerGeometry& ig, const SyzygyTable& t) {
  VeldkampSpace v = build_veldkamp_space(ig.geometry, family_hyperplanes(ig));
  IsotropicCensus c;
  c.types = classify_lines(v);
  c.matches_types = true;
  for (const auto& l : v.lines) {
    std::array<int, 3> r{};
    for (std::size_t i = 0; i < 3; ++i) r[i] = ig.family.root_of(v.points[static_cast<std::size_t>(l.members[i])].points);
    const bool iso = symplectic_form(t, r[0], r[1]) == 0 && symplectic_form(t, r[0], r[2]) == 0 && symplectic_form(t, r[1], r[2]) == 0;
    ++(iso ? c.isotropic : c.non_isotropic);
    const bool odd = l.type == VeldkampLineType::I || l.type == VeldkampLineType::III;
    c.matches_types = c.matches_types && iso == odd;
  }
  return c;
}

/// Counts failures of B(a, b + c) = B(a, b) + B(a, c), with b + c read off
/// the Veldkamp sum in D'_p and B(a, a) taken as 0.
inline long bilinearity_violations(const DpFamily& d, const SyzygyTable& t) {
  const int n = static_cast<int>(d.reduced.size());
  auto form = [&](int a, int b) { return a == b ? 0 : symplectic_form(t, a, b); };
  long bad = 0;
  for (int b = 0; b < n; ++b) {
    for (int c = b + 1; c < n; ++c) {
      const int s = d.root_of((d.reduced[static_cast<std::size_t>(b)] ^ d.reduced[static_cast<std::size_t>(c)]).complement(27));
      if (s < 0) throw VerificationError("Veldkamp sum leaves D'_p");
      for (int a = 0; a < n; ++a) bad += form(a, s) != ((form(a, b) + form(a, c)) & 1);
    }
  }
  return bad;
}

}  // namespace gqveld
