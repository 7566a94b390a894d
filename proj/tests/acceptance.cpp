// Acceptance run: one PASS/FAIL line per criterion, exact integer targets.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gqveld/autgroup.hpp"
#include "gqveld/graphs.hpp"
#include "gqveld/hyperplanes.hpp"
#include "gqveld/incidence.hpp"
#include "gqveld/models.hpp"
#include "gqveld/steiner.hpp"
#include "gqveld/veldkamp.hpp"

using namespace gqveld;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<PointSet> sets_of(const std::vector<Hyperplane>& hs) {
  std::vector<PointSet> out;
  for (const auto& h : hs) out.push_back(h.points);
  return out;
}

std::map<HyperplaneKind, int> kinds(const std::vector<Hyperplane>& hs) {
  std::map<HyperplaneKind, int> m;
  for (const auto& h : hs) ++m[h.kind()];
  return m;
}

const QuadricModel& quadric() {
  static const QuadricModel m = build_gq24_quadric();
  return m;
}

Outcome hyperplane_census() {
  Outcome o;
  const auto& m = quadric();
  const auto search = enumerate_hyperplanes_search(m.geometry);
  std::vector<PointSet> sections;
  for (const auto& s : enumerate_hyperplanes_quadric(m)) sections.push_back(s.hyperplane.points);
  std::sort(sections.begin(), sections.end());
  o.require(search.size() == 63, "search count " + std::to_string(search.size()));
  o.require(sections.size() == 63, "section count " + std::to_string(sections.size()));
  const auto k = kinds(search);
  o.require(k.count(HyperplaneKind::perp) && k.at(HyperplaneKind::perp) == 27, "perp count");
  o.require(k.count(HyperplaneKind::subquadrangle) && k.at(HyperplaneKind::subquadrangle) == 36, "doily count");
  o.require(!k.count(HyperplaneKind::ovoid), "ovoid hyperplane present");
  o.require(sets_of(search) == sections, "search and quadric sections differ");
  return o;
}

Outcome veldkamp_gq24() {
  Outcome o;
  const auto& g = quadric().geometry;
  const auto v = build_veldkamp_space(g, enumerate_hyperplanes_search(g));
  o.require(v.lines.size() == 651, "lines " + std::to_string(v.lines.size()));
  o.require(std::all_of(v.lines.begin(), v.lines.end(), [](const VeldkampLine& l) { return l.members.size() == 3; }), "line size");
  o.require(count_pairs_covered(v) == 1953, "pairs covered " + std::to_string(count_pairs_covered(v)));
  const auto c = certify_projective_space(v);
  o.require(c.rank == 6, "rank " + std::to_string(c.rank));
  o.require(c.full_space && c.lines_match, "lines are not the {a,b,a+b} triples");
  return o;
}

Outcome table_one() {
  Outcome o;
  const auto& g = quadric().geometry;
  auto v = build_veldkamp_space(g, enumerate_hyperplanes_search(g));
  const auto c = classify_lines(v);
  o.require(c == LineCensus{45, 216, 270, 120}, "census " + std::to_string(c.type_i) + "/" + std::to_string(c.type_ii) + "/" +
                                                     std::to_string(c.type_iii) + "/" + std::to_string(c.type_iv));
  const std::map<VeldkampLineType, int> common{{VeldkampLineType::I, 3}, {VeldkampLineType::II, 5}, {VeldkampLineType::III, 7}, {VeldkampLineType::IV, 9}};
  for (const auto& l : v.lines) o.require(common.at(l.type) == l.common.size(), "intersection size");
  return o;
}

Outcome counting_identities() {
  Outcome o;
  const auto& g = quadric().geometry;
  const auto v = build_veldkamp_space(g, enumerate_hyperplanes_search(g));
  const auto d = doily_substructure_counts(v);
  o.require(d.ovoids.incidences == 216 && d.ovoids.distinct == 216 && d.ovoids.max_share == 1, "ovoids");
  o.require(d.perp_sets.incidences == 540 && d.perp_sets.distinct == 270 && d.perp_sets.min_share == 2 && d.perp_sets.max_share == 2, "perp-sets");
  o.require(d.grids.incidences == 360 && d.grids.distinct == 120 && d.grids.min_share == 3 && d.grids.max_share == 3, "grids");
  o.require(disjoint_grid_triples(g).size() == 40, "disjoint grid triples");
  return o;
}

Outcome section_dichotomy() {
  Outcome o;
  const auto& m = quadric();
  int tangent = 0, other = 0;
  for (const auto& s : enumerate_hyperplanes_quadric(m)) {
    if (s.tangent) {
      ++tangent;
      o.require(s.hyperplane.points.size() == 11 && s.hyperplane.points == perp(m.geometry, s.tangency_point), "tangent section");
    } else {
      ++other;
      o.require(s.hyperplane.points.size() == 15 && s.hyperplane.is_doily(), "non-tangent section");
    }
  }
  o.require(tangent == 27 && other == 36, "section counts");
  auto v = build_veldkamp_space(m.geometry, enumerate_hyperplanes_search(m.geometry));
  classify_lines(v);
  const auto split = polarity_split(v, m);
  o.require(split.isotropic.size() == 315 && split.hyperbolic.size() == 336, "polarity split");
  for (int i : split.isotropic) {
    const auto t = v.lines[static_cast<std::size_t>(i)].type;
    o.require(t == VeldkampLineType::I || t == VeldkampLineType::III, "isotropic line of type II/IV");
  }
  return o;
}

struct SteinerData {
  E7System sys = build_weights_and_roots();
  std::vector<SteinerComplex> cs = steiner_complexes(sys);
  SyzygyTable table = syzygy_table(sys, cs);
};

const SteinerData& steiner() {
  static const SteinerData d;
  return d;
}

Outcome steiner_machinery() {
  Outcome o;
  const auto& d = steiner();
  int twelve = 0;
  for (const auto& c : d.cs) twelve += c.moved_weights == 24 && c.pairs.size() == 6 && c.bitangents.size() == 12;
  o.require(twelve == 63, "reflections as 12 transpositions");
  std::set<PointSet> distinct;
  for (const auto& c : d.cs) distinct.insert(c.bitangents);
  o.require(distinct.size() == 63, "distinct complexes");
  const auto des = design_parameters(d.cs);
  o.require(des.is_design() && des.v == 28 && des.k == 12 && des.lambda == 11, "2-(28,12,11)");
  o.require(des.point_replication == std::set<int>{27}, "replication 27");
  o.require(d.table.syzygetic_pairs + d.table.azygetic_pairs == 1953, "pairs meeting in 4 or 6");
  for (int a = 0; a < 63; ++a) {
    for (int b = a + 1; b < 63; ++b) {
      const auto& r = d.table.at(a, b);
      const PointSet sa = d.cs[static_cast<std::size_t>(a)].bitangents, sb = d.cs[static_cast<std::size_t>(b)].bitangents;
      const PointSet sc = d.cs[static_cast<std::size_t>(r.companion)].bitangents;
      if (r.relation == Syzygy::syzygetic) {
        o.require((sa | sb | sc) == PointSet::full(28), "syzygetic triple does not cover X");
      } else {
        o.require(sc == (sa ^ sb), "symmetric difference is not the companion");
      }
    }
  }
  for (int p = 0; p < 28; ++p) o.require(parity_rules_check(p, d.cs, d.table).pairs == 1953, "parity at " + std::to_string(p));
  verify_triangle_dichotomy(d.sys);
  return o;
}

Outcome steiner_reconstruction() {
  Outcome o;
  const auto& d = steiner();
  for (int p = 0; p < 28; ++p) {
    const auto ig = build_induced_geometry(d.sys, d.cs, p);
    const std::string at = " at p=" + std::to_string(p);
    o.require(ig.family.reduced_sizes == std::map<int, int>{{11, 27}, {15, 36}}, "D'_p census" + at);
    o.require(ig.family.closed, "closure" + at);
    o.require(hyperplane_family_matches(ig), "hyperplane family" + at);
    o.require(find_isomorphism(ig.geometry, quadric().geometry).has_value(), "isomorphism" + at);
    const auto iso = isotropic_line_census(ig, d.table);
    o.require(iso.isotropic == 315 && iso.non_isotropic == 336 && iso.matches_types, "isotropic census" + at);
  }
  return o;
}

Outcome veldkamp_gq22() {
  Outcome o;
  const auto g = build_gq22();
  const auto hs = enumerate_hyperplanes_search(g);
  const auto k = kinds(hs);
  o.require(hs.size() == 31, "hyperplanes " + std::to_string(hs.size()));
  o.require(k.count(HyperplaneKind::perp) && k.at(HyperplaneKind::perp) == 15, "perps");
  o.require(k.count(HyperplaneKind::subquadrangle) && k.at(HyperplaneKind::subquadrangle) == 10, "grids");
  o.require(k.count(HyperplaneKind::ovoid) && k.at(HyperplaneKind::ovoid) == 6, "ovoids");
  const auto v = build_veldkamp_space(g, hs);
  const auto c = certify_projective_space(v);
  o.require(c.rank == 5 && c.lines_match, "rank " + std::to_string(c.rank));
  o.require(v.lines.size() == 155, "lines " + std::to_string(v.lines.size()));
  return o;
}

Outcome graph_certificates() {
  Outcome o;
  const auto& g = quadric().geometry;
  const auto cg = collinearity_graph(g);
  o.require(srg_parameters(cg) == SrgParameters{27, 10, 1, 5}, "collinearity SRG");
  o.require(triangles(cg).size() == 45, "triangles");
  for (const auto& h : enumerate_hyperplanes_search(g)) {
    if (h.kind() == HyperplaneKind::perp) {
      const auto c = clebsch_certificate(g, h);
      o.require(c.srg == SrgParameters{16, 5, 0, 2} && c.all_petersen, "Clebsch/Petersen");
    } else {
      const auto c = double_six_certificate(g, h);
      o.require(c.graph.order() == 12 && c.regular5 && c.bipartite && c.is_k66_minus_matching, "double-six");
    }
  }
  const auto triples = disjoint_grid_triples(g);
  o.require(!triples.empty(), "no grid triple");
  for (const auto& t : triples) {
    const auto gray = gray_configuration(g, t);
    o.require(gray.points == 27 && gray.lines == 27 && gray.all_degrees_three, "27_3 configuration");
    o.require(gray.incidence.order() == 54 && gray.cubic && gray.bipartite && gray.girth == 8, "Gray incidence graph");
  }
  return o;
}

Outcome group_and_spreads() {
  Outcome o;
  const auto& m = quadric();
  const auto grp = group_closure(transvection_generators(m));
  o.require(grp.order() == 51840, "order " + std::to_string(grp.order()));
  std::vector<PointSet> hs;
  for (const auto& h : enumerate_hyperplanes_search(m.geometry)) hs.push_back(h.points);
  o.require(orbit_sizes(set_orbits(grp, hs)) == std::vector<std::size_t>{27, 36}, "hyperplane orbits");
  const auto w3 = build_w3();
  const auto spreads = find_spreads(m.geometry);
  const auto so = spread_orbits(m.geometry, grp, spreads, transport_spread(build_gq24_payne(w3, 0), m.geometry));
  o.require(so.orbits.size() == 2 && so.classical >= 0, "spread orbits");
  int iso = 0;
  for (int x = 0; x < w3.num_points(); ++x) iso += find_isomorphism(build_gq24_payne(w3, x).geometry, m.geometry).has_value();
  o.require(iso == 40, "Payne models isomorphic: " + std::to_string(iso));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& g : {build_grid(), build_gq22()}) {
    o.require(sets_of(enumerate_hyperplanes_search(g)) == enumerate_hyperplanes_bruteforce(g),
              "search differs from brute force on " + std::to_string(g.num_points()) + " points");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hyperplane census of GQ(2,4)", hyperplane_census},
      {"V(GQ(2,4)) is PG(5,2)", veldkamp_gq24},
      {"line types 45/216/270/120", table_one},
      {"doily counting identities and 40 grid triples", counting_identities},
      {"section dichotomy and 315/336 polarity split", section_dichotomy},
      {"E7 weights, Steiner complexes, 2-(28,12,11) design, syzygy", steiner_machinery},
      {"D'_p reconstruction for all 28 bitangents", steiner_reconstruction},
      {"V(GQ(2,2)) is PG(4,2)", veldkamp_gq22},
      {"graph certificates", graph_certificates},
      {"automorphism group and spread orbits", group_and_spreads},
      {"search equals brute force on small geometries", oracle_equivalence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2zu  %-60s %8.1f ms%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), ms,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
