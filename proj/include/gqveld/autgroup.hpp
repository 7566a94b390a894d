#pragma once

// Automorphism group of GQ(2,4) generated by the orthogonal transvections of
// the elliptic quadric, and orbit computations on points, lines, hyperplanes
// and spreads.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "gqveld/incidence.hpp"
#include "gqveld/models.hpp"
#include "gqveld/point_set.hpp"

namespace gqveld {

class PointPermutation {
 public:
  // Checks bijectivity and that every line of g goes to a line of g.
  PointPermutation(const Geometry& g, std::vector<std::uint8_t> image) : image_(std::move(image)) {
    if (static_cast<int>(image_.size()) != g.num_points()) throw VerificationError("permutation has the wrong length");
    PointSet seen;
    for (auto x : image_) {
      if (x >= image_.size() || seen.contains(x)) throw VerificationError("image array is not a bijection");
      seen.insert(x);
    }
    for (PointSet l : g.line_sets()) {
      if (g.line_index(apply(l)) < 0) throw VerificationError("permutation does not preserve lines");
    }
  }

  static PointPermutation identity(int n) {
    std::vector<std::uint8_t> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), std::uint8_t{0});
    return PointPermutation(std::move(id));
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<std::uint8_t>& image() const { return image_; }

  PointSet apply(PointSet s) const {
    PointSet out;
    s.for_each([&](int x) { out.insert(image_[static_cast<std::size_t>(x)]); });
    return out;
  }

  // x -> other(this(x)); products of automorphisms need no re-check.
  PointPermutation then(const PointPermutation& other) const {
    std::vector<std::uint8_t> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) out[i] = other.image_[image_[i]];
    return PointPermutation(std::move(out));
  }

  PointPermutation inverse() const {
    std::vector<std::uint8_t> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) out[image_[i]] = static_cast<std::uint8_t>(i);
    return PointPermutation(std::move(out));
  }

  friend bool operator==(const PointPermutation&, const PointPermutation&) = default;
  friend auto operator<=>(const PointPermutation&, const PointPermutation&) = default;

  struct Hash {
    std::size_t operator()(const PointPermutation& p) const {
      return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(p.image_.data()), p.image_.size()));
    }
  };

 private:
  explicit PointPermutation(std::vector<std::uint8_t> image) : image_(std::move(image)) {}
  std::vector<std::uint8_t> image_;
};

/// x -> x + b(x, v) v for each of the 36 vectors with Q(v) = 1.
inline std::vector<PointPermutation> transvection_generators(const QuadricModel& m) {
  std::vector<PointPermutation> gens;
  for (std::uint64_t v = 1; v < 64; ++v) {
    if (m.form.on_bits(v) != 1) continue;
    std::vector<std::uint8_t> image;
    for (auto x : m.coords) {
      const int y = m.point_of(m.polar.on_bits(x, v) ? x ^ v : x);
      if (y < 0) throw VerificationError("transvection leaves the quadric");
      image.push_back(static_cast<std::uint8_t>(y));
    }
    gens.emplace_back(m.geometry, std::move(image));
  }
  return gens;
}

struct PermutationGroup {
  std::vector<PointPermutation> elements;  // sorted, identity first

  std::size_t order() const { return elements.size(); }
  bool contains(const PointPermutation& p) const { return std::binary_search(elements.begin(), elements.end(), p); }
};

inline PermutationGroup group_closure(const std::vector<PointPermutation>& gens, std::size_t bound = 1'000'000) {
  if (gens.empty()) throw std::invalid_argument("group closure needs at least one generator");
  const auto id = PointPermutation::identity(gens.front().size());
  std::unordered_set<PointPermutation, PointPermutation::Hash> seen{id};
  std::queue<PointPermutation> todo;
  todo.push(id);
  while (!todo.empty()) {
    const PointPermutation e = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      auto next = e.then(g);
      if (seen.insert(next).second) {
        if (seen.size() > bound) throw VerificationError("group closure exceeds the safety bound");
        todo.push(std::move(next));
      }
    }
  }
  PermutationGroup group{{seen.begin(), seen.end()}};
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

inline std::size_t stabilizer_order(const PermutationGroup& g, int x) {
  return static_cast<std::size_t>(std::count_if(g.elements.begin(), g.elements.end(), [&](const PointPermutation& p) { return p(x) == x; }));
}

/// Partition of a family of point sets into orbits (lists of indices), in
/// order of first member. The family must be invariant under the group.
inline std::vector<std::vector<int>> set_orbits(const PermutationGroup& g, const std::vector<PointSet>& family) {
  std::map<PointSet, int> index;
  for (std::size_t i = 0; i < family.size(); ++i) index[family[i]] = static_cast<int>(i);
  std::vector<bool> done(family.size(), false);
  std::vector<std::vector<int>> orbits;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (done[i]) continue;
    std::set<int> orbit;
    for (const auto& p : g.elements) {
      auto it = index.find(p.apply(family[i]));
      if (it == index.end()) throw VerificationError("family is not invariant under the group");
      orbit.insert(it->second);
    }
    for (int j : orbit) done[static_cast<std::size_t>(j)] = true;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

inline std::vector<std::size_t> orbit_sizes(const std::vector<std::vector<int>>& orbits) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

inline std::vector<int> apply_to_spread(const Geometry& g, const PointPermutation& p, const std::vector<int>& spread) {
  std::vector<int> out;
  for (int l : spread) out.push_back(g.line_index(p.apply(g.line_set(l))));
  std::sort(out.begin(), out.end());
  return out;
}

/// Payne distinguished spread carried into the target geometry by an isomorphism.
inline std::vector<int> transport_spread(const PayneModel& payne, const Geometry& target) {
  const auto f = find_isomorphism(payne.geometry, target);
  if (!f) throw VerificationError("Payne model is not isomorphic to the target geometry");
  std::vector<int> out;
  for (int l : payne.classical_spread) out.push_back(target.line_index(map_points(*f, payne.geometry.line_set(l))));
  std::sort(out.begin(), out.end());
  return out;
}

struct SpreadOrbits {
  std::vector<std::vector<int>> orbits;  // indices into the spread list
  int classical = -1;                    // orbit containing the reference spread
};

inline SpreadOrbits spread_orbits(const Geometry& g, const PermutationGroup& group, const std::vector<std::vector<int>>& spreads,
                                  const std::vector<int>& classical_spread) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < spreads.size(); ++i) {
    auto s = spreads[i];
    std::sort(s.begin(), s.end());
    index[s] = static_cast<int>(i);
  }
  std::vector<bool> done(spreads.size(), false);
  SpreadOrbits out;
  for (std::size_t i = 0; i < spreads.size(); ++i) {
    if (done[i]) continue;
    std::set<int> orbit;
    for (const auto& p : group.elements) {
      auto it = index.find(apply_to_spread(g, p, spreads[i]));
      if (it == index.end()) throw VerificationError("image of a spread is missing from the spread list");
      orbit.insert(it->second);
    }
    for (int j : orbit) done[static_cast<std::size_t>(j)] = true;
    out.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  if (out.orbits.size() != 2) throw VerificationError("expected 2 spread orbits, found " + std::to_string(out.orbits.size()));
  auto ref = index.find(classical_spread);
  if (ref == index.end()) throw VerificationError("reference spread is not in the spread list");
  for (std::size_t o = 0; o < out.orbits.size(); ++o) {
    if (std::binary_search(out.orbits[o].begin(), out.orbits[o].end(), ref->second)) out.classical = static_cast<int>(o);
  }
  return out;
}

}  // namespace gqveld
