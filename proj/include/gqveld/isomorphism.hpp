#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "gqveld/point_set.hpp"

namespace gqveld::detail {

// Per-vertex invariant: degree, sorted neighbour degrees, triangle count.
inline std::vector<int> vertex_profile(const std::vector<PointSet>& adj, int v) {
  const PointSet nb = adj[static_cast<std::size_t>(v)];
  std::vector<int> key{nb.size()};
  std::vector<int> nd;
  int triangles = 0;
  nb.for_each([&](int u) {
    nd.push_back(adj[static_cast<std::size_t>(u)].size());
    triangles += (adj[static_cast<std::size_t>(u)] & nb).size();
  });
  std::sort(nd.begin(), nd.end());
  key.push_back(triangles / 2);
  key.insert(key.end(), nd.begin(), nd.end());
  return key;
}

/// Backtracking search for a bijection f with a[x] ~ a[y] iff b[f(x)] ~ b[f(y)]
/// whose image also satisfies `accept`. Candidate images are restricted to
/// vertices with the same profile and consistent adjacency to every vertex
/// already placed.
template <typename Accept>
std::optional<std::vector<int>> match_adjacency(const std::vector<PointSet>& a, const std::vector<PointSet>& b,
                                                Accept&& accept) {
  const int n = static_cast<int>(a.size());
  if (n != static_cast<int>(b.size())) return std::nullopt;
  if (n == 0) {
    std::vector<int> empty;
    if (accept(empty)) return empty;
    return std::nullopt;
  }

  std::map<std::vector<int>, int> classes;
  std::vector<int> class_a(static_cast<std::size_t>(n));
  std::vector<PointSet> class_members_b;
  std::vector<int> count_a;
  for (int v = 0; v < n; ++v) {
    auto [it, fresh] = classes.try_emplace(vertex_profile(a, v), static_cast<int>(classes.size()));
    if (fresh) {
      class_members_b.emplace_back();
      count_a.push_back(0);
    }
    class_a[static_cast<std::size_t>(v)] = it->second;
    ++count_a[static_cast<std::size_t>(it->second)];
  }
  for (int v = 0; v < n; ++v) {
    auto it = classes.find(vertex_profile(b, v));
    if (it == classes.end()) return std::nullopt;
    class_members_b[static_cast<std::size_t>(it->second)].insert(v);
  }
  for (std::size_t c = 0; c < count_a.size(); ++c) {
    if (class_members_b[c].size() != count_a[c]) return std::nullopt;
  }

  // Place vertices with the most already-placed neighbours first.
  std::vector<int> order;
  PointSet placed;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int v = 0; v < n; ++v) {
      if (placed.contains(v)) continue;
      const int score = (a[static_cast<std::size_t>(v)] & placed).size();
      if (score > best_score) { best = v; best_score = score; }
    }
    order.push_back(best);
    placed.insert(best);
  }

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::optional<std::vector<int>> found;
  PointSet used;

  auto search = [&](auto& self, int depth) -> bool {
    if (depth == n) {
      if (accept(image)) {
        found = image;
        return true;
      }
      return false;
    }
    const int v = order[static_cast<std::size_t>(depth)];
    PointSet cand = class_members_b[static_cast<std::size_t>(class_a[static_cast<std::size_t>(v)])] - used;
    for (int j = 0; j < depth && !cand.empty(); ++j) {
      const int u = order[static_cast<std::size_t>(j)];
      const PointSet nb = b[static_cast<std::size_t>(image[static_cast<std::size_t>(u)])];
      cand = a[static_cast<std::size_t>(v)].contains(u) ? (cand & nb) : (cand - nb);
    }
    for (std::uint64_t bits = cand.bits(); bits != 0; bits &= bits - 1) {
      const int w = std::countr_zero(bits);
      image[static_cast<std::size_t>(v)] = w;
      used.insert(w);
      if (self(self, depth + 1)) return true;
      used.erase(w);
    }
    image[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace gqveld::detail
