#pragma once

// Verification suites behind `gqveld verify`. Each suite collects checks of
// the form {claim, check, expected, actual, pass}. Checks whose value is a
// computed baseline rather than a published number carry expected = null.

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqveld/autgroup.hpp"
#include "gqveld/graphs.hpp"
#include "gqveld/hyperplanes.hpp"
#include "gqveld/incidence.hpp"
#include "gqveld/models.hpp"
#include "gqveld/steiner.hpp"
#include "gqveld/veldkamp.hpp"
#include "json.hpp"

namespace gqveld {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolVersion = "1.0.0";

enum class GeometryChoice { gq21, gq22, gq24 };

inline const char* to_string(GeometryChoice g) {
  switch (g) {
    case GeometryChoice::gq21: return "gq21";
    case GeometryChoice::gq22: return "gq22";
    case GeometryChoice::gq24: return "gq24";
  }
  return "?";
}

inline std::optional<GeometryChoice> parse_geometry(const std::string& s) {
  if (s == "gq21") return GeometryChoice::gq21;
  if (s == "gq22") return GeometryChoice::gq22;
  if (s == "gq24") return GeometryChoice::gq24;
  return std::nullopt;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"models", "hyperplanes", "veldkamp", "steiner", "graphs", "aut"};
  return names;
}

struct ReportOptions {
  std::string suite = "all";
  GeometryChoice geometry = GeometryChoice::gq24;
  int seed_point = 0;  // bitangent p for D_p, and Payne base point
};

class SuiteReport {
 public:
  explicit SuiteReport(std::string name) : name_(std::move(name)) {}

  void expect(const std::string& claim, const std::string& check, const json& expected, const json& actual) {
    add(claim, check, expected, actual, expected == actual);
  }

  void derived(const std::string& claim, const std::string& check, const json& actual, bool pass = true) {
    add(claim, check, nullptr, actual, pass);
  }

  void fail(const std::string& claim, const std::string& check, const std::string& why) {
    add(claim, check, nullptr, why, false);
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const json& c) { return c["pass"].get<bool>(); });
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_) {
      if (!c["pass"].get<bool>()) out.push_back(name_ + ": " + c["check"].get<std::string>());
    }
    return out;
  }

  json to_json() const { return {{"name", name_}, {"pass", passed()}, {"checks", checks_}}; }

 private:
  void add(const std::string& claim, const std::string& check, const json& expected, const json& actual, bool pass) {
    checks_.push_back({{"claim", claim}, {"check", check}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
  }

  std::string name_;
  std::vector<json> checks_;
};

namespace detail {

inline Geometry geometry_for(GeometryChoice g) {
  switch (g) {
    case GeometryChoice::gq21: return build_grid();
    case GeometryChoice::gq22: return build_gq22();
    case GeometryChoice::gq24: break;
  }
  return build_gq24_quadric().geometry;
}

inline GQOrder order_for(GeometryChoice g) {
  switch (g) {
    case GeometryChoice::gq21: return {2, 1};
    case GeometryChoice::gq22: return {2, 2};
    case GeometryChoice::gq24: break;
  }
  return {2, 4};
}

inline json kind_census(const std::vector<Hyperplane>& hs) {
  std::map<std::string, int> c{{"perp", 0}, {"subquadrangle", 0}, {"ovoid", 0}};
  for (const auto& h : hs) ++c[to_string(h.kind())];
  return c;
}

inline std::vector<PointSet> point_sets(const std::vector<Hyperplane>& hs) {
  std::vector<PointSet> out;
  for (const auto& h : hs) out.push_back(h.points);
  return out;
}

inline json census_json(const std::map<int, long>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

inline json census_json(const std::map<int, int>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

inline json line_type_census(const LineCensus& c) { return {{"I", c.type_i}, {"II", c.type_ii}, {"III", c.type_iii}, {"IV", c.type_iv}}; }

inline void models_suite(SuiteReport& r, const ReportOptions& o) {
  const Geometry g = geometry_for(o.geometry);
  const std::map<GeometryChoice, std::pair<int, int>> size{{GeometryChoice::gq21, {9, 6}}, {GeometryChoice::gq22, {15, 15}}, {GeometryChoice::gq24, {27, 45}}};
  const auto [np, nl] = size.at(o.geometry);
  r.expect("point count", "models.points", np, g.num_points());
  r.expect("line count", "models.lines", nl, g.num_lines());
  const auto axioms = verify_gq_axioms(g, order_for(o.geometry));
  r.expect("GQ axioms hold", "incidence.verify_gq_axioms", true, axioms.ok());
  r.derived("triad census by number of centers", "incidence.triad_census", census_json(triad_census(g)));
  const auto ovoids = find_ovoids(g);
  if (o.geometry == GeometryChoice::gq24) {
    r.expect("GQ(2,4) has no ovoids", "incidence.find_ovoids", 0, ovoids.size());
    const auto m = build_gq24_quadric();
    r.expect("elliptic quadric point count", "fflinalg.quadric_point_count", 27, quadric_point_count(m.form));
    r.expect("no plane lies on the quadric", "models.no_plane_on_quadric", true, no_plane_on_quadric(m));
    r.expect("W(3) point count", "models.build_w3", 40, build_w3().num_points());
    const auto w3 = build_w3();
    int isomorphic = 0;
    for (int x = 0; x < w3.num_points(); ++x) isomorphic += find_isomorphism(build_gq24_payne(w3, x).geometry, m.geometry).has_value();
    r.expect("Payne models isomorphic to the quadric model, all base points", "models.find_isomorphism", 40, isomorphic);
    r.derived("spread count", "incidence.find_spreads", find_spreads(g).size());
  } else {
    r.derived("ovoid count", "incidence.find_ovoids", ovoids.size());
    r.derived("spread count", "incidence.find_spreads", find_spreads(g).size());
  }
}

inline void hyperplanes_suite(SuiteReport& r, const ReportOptions& o) {
  const Geometry g = geometry_for(o.geometry);
  const auto hs = enumerate_hyperplanes_search(g);
  switch (o.geometry) {
    case GeometryChoice::gq21:
      r.derived("hyperplane count", "hyperplanes.enumerate_hyperplanes_search", hs.size());
      r.derived("hyperplane kinds", "hyperplanes.classify_hyperplane", kind_census(hs));
      break;
    case GeometryChoice::gq22:
      r.expect("hyperplane count", "hyperplanes.enumerate_hyperplanes_search", 31, hs.size());
      r.expect("hyperplane kinds", "hyperplanes.classify_hyperplane", json{{"perp", 15}, {"subquadrangle", 10}, {"ovoid", 6}}, kind_census(hs));
      break;
    case GeometryChoice::gq24: {
      r.expect("hyperplane count", "hyperplanes.enumerate_hyperplanes_search", 63, hs.size());
      r.expect("hyperplane kinds", "hyperplanes.classify_hyperplane", json{{"perp", 27}, {"subquadrangle", 36}, {"ovoid", 0}}, kind_census(hs));
      const auto m = build_gq24_quadric();
      const auto sections = enumerate_hyperplanes_quadric(m);
      std::vector<PointSet> qs;
      int tangent_ok = 0, tangent = 0, other_ok = 0, other = 0;
      for (const auto& s : sections) {
        qs.push_back(s.hyperplane.points);
        if (s.tangent) {
          ++tangent;
          tangent_ok += s.hyperplane.points.size() == 11 && s.hyperplane.points == perp(m.geometry, s.tangency_point);
        } else {
          ++other;
          other_ok += s.hyperplane.points.size() == 15 && s.hyperplane.is_doily();
        }
      }
      std::sort(qs.begin(), qs.end());
      r.expect("quadric sections", "hyperplanes.enumerate_hyperplanes_quadric", 63, sections.size());
      r.expect("search and quadric sections agree", "hyperplanes.enumerate_hyperplanes_quadric", true, qs == point_sets(hs));
      r.expect("tangent sections are 11-point perps of the tangency point", "hyperplanes.tangent_sections", json{{"count", 27}, {"ok", 27}}, json{{"count", tangent}, {"ok", tangent_ok}});
      r.expect("non-tangent sections are 15-point doilies", "hyperplanes.non_tangent_sections", json{{"count", 36}, {"ok", 36}}, json{{"count", other}, {"ok", other_ok}});
      break;
    }
  }
  for (GeometryChoice small : {GeometryChoice::gq21, GeometryChoice::gq22}) {
    const Geometry sg = geometry_for(small);
    r.expect(std::string("search equals brute-force filter on ") + to_string(small), "hyperplanes.enumerate_hyperplanes_bruteforce", true,
             point_sets(enumerate_hyperplanes_search(sg)) == enumerate_hyperplanes_bruteforce(sg));
  }
}

inline void veldkamp_suite(SuiteReport& r, const ReportOptions& o) {
  const Geometry g = geometry_for(o.geometry);
  auto v = build_veldkamp_space(g, enumerate_hyperplanes_search(g));
  const auto cert = certify_projective_space(v);
  bool all_three = std::all_of(v.lines.begin(), v.lines.end(), [](const VeldkampLine& l) { return l.members.size() == 3; });
  const auto pairs = v.points.size() * (v.points.size() - 1) / 2;
  struct Exp { json lines, rank; };
  const std::map<GeometryChoice, Exp> exp{{GeometryChoice::gq21, {nullptr, nullptr}}, {GeometryChoice::gq22, {155, 5}}, {GeometryChoice::gq24, {651, 6}}};
  const auto& e = exp.at(o.geometry);
  auto put = [&](const std::string& claim, const std::string& check, const json& expected, const json& actual) {
    if (expected.is_null()) r.derived(claim, check, actual); else r.expect(claim, check, expected, actual);
  };
  put("Veldkamp line count", "veldkamp.build_veldkamp_space", e.lines, v.lines.size());
  r.expect("every Veldkamp line has three points", "veldkamp.build_veldkamp_space", true, all_three);
  r.expect("lines partition the pairs of hyperplanes", "veldkamp.count_pairs_covered", pairs, count_pairs_covered(v));
  put("GF(2)-rank of complement indicators", "veldkamp.certify_projective_space", e.rank, cert.rank);
  put("projective dimension", "veldkamp.certify_projective_space", e.rank.is_null() ? json(nullptr) : json(e.rank.get<int>() - 1), cert.dimension);
  r.expect("hyperplanes fill the whole projective space", "veldkamp.certify_projective_space", true, cert.full_space);
  r.expect("lines are exactly the {a, b, a+b} triples", "veldkamp.certify_projective_space", true, cert.lines_match);
  if (o.geometry != GeometryChoice::gq24) return;
  r.expect("Veldkamp line types", "veldkamp.classify_lines", json{{"I", 45}, {"II", 216}, {"III", 270}, {"IV", 120}}, line_type_census(classify_lines(v)));
  const auto dc = doily_substructure_counts(v);
  r.expect("ovoids of doilies, each in one doily", "veldkamp.doily_substructure_counts", json{{"incidences", 216}, {"distinct", 216}, {"share", 1}},
           json{{"incidences", dc.ovoids.incidences}, {"distinct", dc.ovoids.distinct}, {"share", dc.ovoids.min_share == dc.ovoids.max_share ? dc.ovoids.max_share : -1}});
  r.expect("perp-sets of doilies, each in two doilies", "veldkamp.doily_substructure_counts", json{{"incidences", 540}, {"distinct", 270}, {"share", 2}},
           json{{"incidences", dc.perp_sets.incidences}, {"distinct", dc.perp_sets.distinct}, {"share", dc.perp_sets.min_share == dc.perp_sets.max_share ? dc.perp_sets.max_share : -1}});
  r.expect("grids of doilies, each in three doilies", "veldkamp.doily_substructure_counts", json{{"incidences", 360}, {"distinct", 120}, {"share", 3}},
           json{{"incidences", dc.grids.incidences}, {"distinct", dc.grids.distinct}, {"share", dc.grids.min_share == dc.grids.max_share ? dc.grids.max_share : -1}});
  const auto m = build_gq24_quadric();
  auto vm = build_veldkamp_space(m.geometry, enumerate_hyperplanes_search(m.geometry));
  classify_lines(vm);
  const auto split = polarity_split(vm, m);
  r.expect("polarity split of Veldkamp lines", "veldkamp.polarity_split", json{{"isotropic", 315}, {"hyperbolic", 336}},
           json{{"isotropic", split.isotropic.size()}, {"hyperbolic", split.hyperbolic.size()}});
  const auto qs = quadric_point_split(vm, m);
  r.expect("Veldkamp points on and off the quadric", "veldkamp.quadric_point_split", json{{"on", 27}, {"off", 36}},
           json{{"on", qs.on_quadric.size()}, {"off", qs.off_quadric.size()}});
}

inline void steiner_suite(SuiteReport& r, const ReportOptions& o) {
  const auto s = build_weights_and_roots();
  r.expect("weights, roots and bitangents", "steiner.build_weights_and_roots", json{{"weights", 56}, {"roots", 63}, {"bitangents", 28}},
           json{{"weights", s.weights.size()}, {"roots", s.roots.size()}, {"bitangents", s.bitangents.size()}});
  r.expect("squared weight distances in ratio 1:2:3", "steiner.build_weights_and_roots", json::array({32, 64, 96}), s.distance_spectrum);
  const auto cs = steiner_complexes(s);
  int twelve = 0;
  for (const auto& c : cs) twelve += c.moved_weights == 24 && c.pairs.size() == 6;
  r.expect("reflections acting as 12 disjoint transpositions on weights", "steiner.reflect", 63, twelve);
  std::set<PointSet> distinct;
  for (const auto& c : cs) distinct.insert(c.bitangents);
  r.expect("distinct Steiner complexes", "steiner.steiner_complex", 63, distinct.size());
  const auto d = design_parameters(cs);
  r.expect("design", "steiner.design_parameters", json{{"t", 2}, {"v", 28}, {"k", 12}, {"lambda", 11}},
           json{{"t", d.t}, {"v", d.v}, {"k", d.is_design() ? d.k : -1}, {"lambda", d.is_design() ? d.lambda : -1}});
  r.expect("per-point replication", "steiner.design_parameters", json::array({27}), d.point_replication);
  const auto t = syzygy_table(s, cs);
  r.expect("pairs of complexes meeting in 4 or 6 bitangents", "steiner.syzygy", 1953, t.syzygetic_pairs + t.azygetic_pairs);
  r.derived("syzygetic / azygetic pairs", "steiner.syzygy", json{{"syzygetic", t.syzygetic_pairs}, {"azygetic", t.azygetic_pairs}});
  r.derived("azygetic pairs with delta = alpha + beta before sign normalisation", "steiner.syzygy", t.literal_sums);
  int parity_ok = 0;
  for (int p = 0; p < 28; ++p) parity_ok += parity_rules_check(p, cs, t).pairs == 1953;
  r.expect("parity rules for every bitangent", "steiner.parity_rules_check", 28, parity_ok);
  const auto scan = verify_triangle_dichotomy(s);
  r.expect("triples satisfying exactly one triangle condition", "steiner.triangle_conditions", 3276, scan.triples);
  r.derived("triples by condition", "steiner.triangle_conditions", json{{"side_one", scan.side_one}, {"side_sqrt2", scan.side_sqrt2}});

  const auto quadric = build_gq24_quadric().geometry;
  int rebuilt = 0, census_ok = 0, closed = 0, matched = 0, iso = 0;
  std::set<std::string> conventions;
  for (int p = 0; p < 28; ++p) {
    const auto ig = build_induced_geometry(s, cs, p);
    conventions.insert(to_string(ig.convention));
    census_ok += ig.family.reduced_sizes == std::map<int, int>{{11, 27}, {15, 36}};
    closed += ig.family.closed;
    matched += hyperplane_family_matches(ig);
    iso += find_isomorphism(ig.geometry, quadric).has_value();
    rebuilt += perps_from_pairing(ig, cs) == 27;
  }
  r.expect("D'_p size census, every p", "steiner.build_dp", 28, census_ok);
  r.expect("D'_p closed under the Veldkamp sum, every p", "steiner.build_dp", 28, closed);
  r.expect("D'_p equals the hyperplanes of the induced geometry, every p", "steiner.build_induced_geometry", 28, matched);
  r.expect("induced geometry isomorphic to the quadric model, every p", "models.find_isomorphism", 28, iso);
  r.expect("blocks through p are perps of the partner of p, every p", "steiner.perps_from_pairing", 28, rebuilt);
  r.derived("edge rule giving SRG(27,10,1,5)", "steiner.build_induced_geometry", json(std::vector<std::string>(conventions.begin(), conventions.end())), conventions.size() == 1);

  const int p = o.seed_point;
  const auto dp = build_dp(p, cs);
  r.expect("D_p size census at seed point", "steiner.build_dp", json{{"12", 27}, {"16", 36}}, census_json(dp.member_sizes));
  const auto ig = build_induced_geometry(s, cs, p);
  const auto iso_census = isotropic_line_census(ig, t);
  r.expect("isotropic lines at seed point", "steiner.isotropic_line_census", json{{"isotropic", 315}, {"non_isotropic", 336}},
           json{{"isotropic", iso_census.isotropic}, {"non_isotropic", iso_census.non_isotropic}});
  r.expect("isotropic lines are exactly Types I and III", "steiner.isotropic_line_census", true, iso_census.matches_types);
  r.expect("B is bilinear for the Veldkamp sum", "steiner.bilinearity_violations", 0, bilinearity_violations(dp, t));
}

inline void graphs_suite(SuiteReport& r, const ReportOptions&) {
  const auto g = build_gq24_quadric().geometry;
  const auto cg = collinearity_graph(g);
  auto srg_json = [](const std::optional<SrgParameters>& s) {
    return s ? json::array({s->v, s->k, s->lambda, s->mu}) : json(nullptr);
  };
  r.expect("collinearity graph", "graphs.srg_parameters", json::array({27, 10, 1, 5}), srg_json(srg_parameters(cg)));
  r.expect("triangles of the collinearity graph", "graphs.triangles", 45, triangles(cg).size());
  r.expect("Schlafli graph (complement)", "graphs.srg_parameters", json::array({27, 16, 10, 8}), srg_json(srg_parameters(cg.complement())));
  r.expect("doily collinearity graph", "graphs.srg_parameters", json::array({15, 6, 1, 3}), srg_json(srg_parameters(collinearity_graph(build_gq22()))));
  int clebsch = 0, petersen = 0, double_six = 0, traces = 0;
  for (const auto& h : enumerate_hyperplanes_search(g)) {
    if (h.kind() == HyperplaneKind::perp) {
      const auto c = clebsch_certificate(g, h);
      clebsch += c.srg == SrgParameters{16, 5, 0, 2};
      petersen += c.all_petersen;
    } else if (h.is_doily()) {
      const auto c = double_six_certificate(g, h);
      double_six += c.regular5 && c.bipartite && c.is_k66_minus_matching;
      traces += c.traces_are_ovoids;
    }
  }
  r.expect("perp complements that are SRG(16,5,0,2)", "graphs.clebsch_certificate", 27, clebsch);
  r.expect("perp complements with Petersen non-neighbourhoods", "graphs.clebsch_certificate", 27, petersen);
  r.expect("doily complements isomorphic to K6,6 minus a perfect matching", "graphs.double_six_certificate", 36, double_six);
  r.derived("doily complements whose traces are ovoids", "graphs.double_six_certificate", traces, traces == 36);
  r.expect("grids", "graphs.find_grids", 120, find_grids(g).size());
  const auto triples = disjoint_grid_triples(g);
  r.expect("disjoint grid triples", "graphs.disjoint_grid_triples", 40, triples.size());
  if (triples.empty()) return;
  const auto gray = gray_configuration(g, triples.front());
  r.expect("Gray configuration", "graphs.gray_configuration",
           json{{"points", 27}, {"lines", 27}, {"vertices", 54}, {"cubic", true}, {"bipartite", true}},
           json{{"points", gray.points}, {"lines", gray.lines}, {"vertices", gray.incidence.order()}, {"cubic", gray.cubic}, {"bipartite", gray.bipartite}});
  r.derived("Gray incidence graph girth", "graphs.girth", gray.girth, gray.connected && gray.girth == 8);
}

inline void aut_suite(SuiteReport& r, const ReportOptions& o) {
  const auto m = build_gq24_quadric();
  const auto gens = transvection_generators(m);
  r.derived("transvection generators", "autgroup.transvection_generators", gens.size());
  const auto grp = group_closure(gens);
  r.expect("automorphism group order", "autgroup.group_closure", 51840, grp.order());
  r.derived("point stabilizer order", "autgroup.stabilizer_order", stabilizer_order(grp, 0), stabilizer_order(grp, 0) * 27 == grp.order());
  std::vector<PointSet> pts;
  for (int x = 0; x < 27; ++x) pts.push_back(PointSet::single(x));
  r.derived("point orbits", "autgroup.set_orbits", orbit_sizes(set_orbits(grp, pts)));
  r.derived("line orbits", "autgroup.set_orbits", orbit_sizes(set_orbits(grp, m.geometry.line_sets())));
  r.expect("hyperplane orbits", "autgroup.set_orbits", json::array({27, 36}), orbit_sizes(set_orbits(grp, point_sets(enumerate_hyperplanes_search(m.geometry)))));
  const auto spreads = find_spreads(m.geometry);
  const auto w3 = build_w3();
  const int base = o.seed_point % w3.num_points();
  const auto so = spread_orbits(m.geometry, grp, spreads, transport_spread(build_gq24_payne(w3, base), m.geometry));
  r.expect("spread orbits", "autgroup.spread_orbits", 2, so.orbits.size());
  r.expect("Payne spread lies in a tagged classical orbit", "autgroup.spread_orbits", true, so.classical >= 0);
  const auto& cls = so.orbits[static_cast<std::size_t>(so.classical)];
  r.derived("spread orbit sizes (classical, other)", "autgroup.spread_orbits",
            json::array({cls.size(), spreads.size() - cls.size()}));
}

using SuiteFn = void (*)(SuiteReport&, const ReportOptions&);

inline SuiteFn suite_function(const std::string& name) {
  static const std::map<std::string, SuiteFn> fns{{"models", models_suite}, {"hyperplanes", hyperplanes_suite}, {"veldkamp", veldkamp_suite},
                                                  {"steiner", steiner_suite}, {"graphs", graphs_suite}, {"aut", aut_suite}};
  auto it = fns.find(name);
  return it == fns.end() ? nullptr : it->second;
}

}  // namespace detail

/// Runs one suite; verification errors become a failed check.
inline SuiteReport run_suite(const std::string& name, const ReportOptions& o) {
  const auto fn = detail::suite_function(name);
  if (!fn) throw std::invalid_argument("unknown suite: " + name);
  SuiteReport r(name);
  try {
    fn(r, o);
  } catch (const VerificationError& e) {
    r.fail("suite completed", name + ".exception", e.what());
  }
  return r;
}

struct Report {
  json document;
  bool pass = false;
  std::vector<std::string> failures;
};

inline Report run_report(const ReportOptions& o) {
  if (o.seed_point < 0 || o.seed_point >= 28) throw std::out_of_range("seed point must be in [0, 28)");
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    if (!detail::suite_function(o.suite)) throw std::invalid_argument("unknown suite: " + o.suite);
    names = {o.suite};
  }
  Report rep;
  json suites = json::array();
  for (const auto& n : names) {
    const auto s = run_suite(n, o);
    suites.push_back(s.to_json());
    for (auto& f : s.failures()) rep.failures.push_back(f);
  }
  rep.pass = rep.failures.empty();
  rep.document = {{"schema_version", kSchemaVersion},
                  {"tool", {{"name", "gqveld"}, {"version", kToolVersion}}},
                  {"options", {{"suite", o.suite}, {"geometry", to_string(o.geometry)}, {"seed_point", o.seed_point}}},
                  {"suites", suites},
                  {"pass", rep.pass}};
  return rep;
}

}  // namespace gqveld
