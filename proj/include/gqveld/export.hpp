#pragma once

// Object exports for `gqveld export`: graphs as JSON, DOT or graph6, and the
// typed Veldkamp lines of GQ(2,4) as JSON.

#include <stdexcept>
#include <string>
#include <vector>

#include "gqveld/graphs.hpp"
#include "gqveld/report.hpp"
#include "gqveld/veldkamp.hpp"

namespace gqveld {

enum class ExportFormat { json, dot, graph6 };

inline std::optional<ExportFormat> parse_format(const std::string& s) {
  if (s == "json") return ExportFormat::json;
  if (s == "dot") return ExportFormat::dot;
  if (s == "graph6") return ExportFormat::graph6;
  return std::nullopt;
}

inline const std::vector<std::string>& export_selectors() {
  static const std::vector<std::string> s{"collinearity-graph", "schlafli", "clebsch", "gray", "veldkamp-lines"};
  return s;
}

class ExportError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline json graph_json(const SimpleGraph& g, const std::string& name) {
  json edges = json::array();
  for (int u = 0; u < g.order(); ++u) {
    g.neighbours(u).for_each([&](int v) {
      if (u < v) edges.push_back({u, v});
    });
  }
  return {{"name", name}, {"order", g.order()}, {"edges", edges}};
}

inline std::string format_graph(const SimpleGraph& g, const std::string& name, ExportFormat f) {
  switch (f) {
    case ExportFormat::json: return graph_json(g, name).dump(2) + "\n";
    case ExportFormat::dot: return to_dot(g, name);
    case ExportFormat::graph6: return to_graph6(g) + "\n";
  }
  return {};
}

inline json veldkamp_lines_json(GeometryChoice choice) {
  const Geometry g = detail::geometry_for(choice);
  auto v = build_veldkamp_space(g, enumerate_hyperplanes_search(g));
  if (choice == GeometryChoice::gq24) classify_lines(v);
  json points = json::array();
  for (const auto& h : v.points) points.push_back({{"points", h.points.to_vector()}, {"kind", to_string(h.kind())}});
  json lines = json::array();
  for (const auto& l : v.lines) {
    lines.push_back({{"members", l.members}, {"common", l.common.to_vector()}, {"type", to_string(l.type)}, {"perps", l.perps}, {"doilies", l.doilies}});
  }
  return {{"geometry", to_string(choice)}, {"hyperplanes", points}, {"lines", lines}};
}

/// Renders `selector`; throws ExportError for unknown selectors or formats a
/// selector does not support.
inline std::string export_object(const std::string& selector, ExportFormat f, GeometryChoice choice = GeometryChoice::gq24) {
  if (selector == "veldkamp-lines") {
    if (f != ExportFormat::json) throw ExportError("veldkamp-lines supports only --format json");
    return veldkamp_lines_json(choice).dump(2) + "\n";
  }
  if (selector == "collinearity-graph") return format_graph(collinearity_graph(detail::geometry_for(choice)), "collinearity", f);
  const Geometry g = build_gq24_quadric().geometry;
  if (selector == "schlafli") return format_graph(collinearity_graph(g).complement(), "schlafli", f);
  if (selector == "clebsch") {
    for (const auto& h : enumerate_hyperplanes_search(g)) {
      if (h.kind() == HyperplaneKind::perp) return format_graph(clebsch_certificate(g, h).graph, "clebsch", f);
    }
    throw VerificationError("no perp hyperplane found");
  }
  if (selector == "gray") {
    const auto triples = disjoint_grid_triples(g);
    if (triples.empty()) throw VerificationError("no disjoint grid triple found");
    return format_graph(gray_configuration(g, triples.front()).incidence, "gray", f);
  }
  throw ExportError("unknown export selector: " + selector);
}

}  // namespace gqveld
