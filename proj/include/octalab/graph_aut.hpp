#pragma once

#include <optional>

#include "octalab/geometry.hpp"
#include "octalab/graph.hpp"
#include "octalab/perm_group.hpp"

namespace octalab {

struct AutGroupResult {
  std::vector<Perm> generators;  // each verified to preserve adjacency
  uint64_t order = 1;            // from closure enumeration of the generators
  PermGroup group;               // fully enumerated on the vertex domain
};

// Automorphism group via equitable partition refinement with backtracking.
// Target cell: first smallest non-singleton; branching is lexicographic.
// Optional seed colors restrict to color-preserving automorphisms; they must
// be a genuine invariant if the caller wants the full group.
AutGroupResult automorphism_group(const Graph& g, const std::vector<int>& seed_colors = {},
                                  uint64_t budget = PermGroup::kDefaultBudget);

// Color-preserving isomorphism via lockstep refinement + backtracking.
std::optional<Perm> graph_isomorphism(const Graph& a, const Graph& b,
                                      const std::vector<int>& colors_a = {},
                                      const std::vector<int>& colors_b = {});

// Point bijection carrying lines onto lines (searched on the two incidence
// graphs with point/line sides as colors); nullopt when none exists.
std::optional<std::vector<uint16_t>> geometry_isomorphism(const Geometry& a, const Geometry& b);

// The graph with vertex v renamed to p[v].
Graph apply_relabeling(const Graph& g, const Perm& p);

}  // namespace octalab
