#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octalab/graph.hpp"
#include "octalab/octagon.hpp"
#include "octalab/plane_group.hpp"
#include "octalab/report.hpp"

namespace octalab {

// Orbits of g on the 168 hyperovals, each a sorted list of hyperoval indices,
// ordered by least member. Generators must act on the point side of the
// plane (collineations).
std::vector<std::vector<uint16_t>> hyperoval_orbits(const ProjectivePlane& plane,
                                                    const PermGroup& g);

// Graph on the given hyperovals with disjointness as adjacency.
Graph hyperoval_disjointness_graph(const ProjectivePlane& plane,
                                   const std::vector<uint16_t>& hyperoval_ids);

// The Gewirtz graph, realized on the hyperoval orbit containing the first
// hyperoval. Checks the 3 x 56 orbit split and that the result is strongly
// regular (56, 10, 0, 2).
Graph build_gewirtz(const ProjectivePlane& plane, const PermGroup& l34);

struct SpecialEightSet {
  Perm sigma;                   // central involution of the automorphism group
  std::vector<uint16_t> fixed;  // its 8 fixed vertices, sorted
};

// Fixed-vertex sets of aut's central involutions. Verifies there are 315,
// that each fixes exactly 8 vertices inducing two disjoint 4-cycles, that the
// elementwise stabilizer of each 8-set is exactly {id, sigma}, and that
// sigma -> fixed set is injective; throws with the offending sigma otherwise.
std::vector<SpecialEightSet> special_eight_sets(const Graph& gewirtz, const PermGroup& aut,
                                                int jobs = 0);

// |fixed(i) intersect fixed(j)| for all pairs, row-major; rows are computed
// as independent tasks.
std::vector<uint8_t> fixed_set_intersections(const std::vector<SpecialEightSet>& sets,
                                             int jobs = 0);

// Graph joining distance-2 point pairs that have a unique common neighbour in
// the collinearity graph (the local stand-in for the second subconstituent).
Graph distance_two_unique_neighbor_graph(const Geometry& g);

// One row of the comparison table: a suborbit of the rebuilt octagon, its
// size, and the measured fixed-set intersection with the base involution.
struct GewirtzTableRow {
  std::string orbit;
  uint32_t size = 0;
  int intersection = -1;
};

// The suite's report plus its exportable artifacts; `table` and `surrogate`
// stay empty when the run fails before they are computed.
struct GewirtzArtifacts {
  Report report;
  std::vector<GewirtzTableRow> table;
  std::optional<Graph> surrogate;
};

// Full battery: hyperoval orbits, srg parameters, automorphism group order,
// special 8-sets, the octagon rebuilt from aut's central involutions matched
// against `reference`, the surrogate graph's intersection array and distance
// distribution, and the per-suborbit fixed-set intersection column.
GewirtzArtifacts gewirtz_artifacts(const ProjectivePlane& plane, const PermGroup& l34,
                                   const InvolutionOctagon& reference, int jobs = 0);

Report gewirtz_suite(const ProjectivePlane& plane, const PermGroup& l34,
                     const InvolutionOctagon& reference, int jobs = 0);

}  // namespace octalab
