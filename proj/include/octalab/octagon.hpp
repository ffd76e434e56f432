#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octalab/geometry.hpp"
#include "octalab/perm_group.hpp"
#include "octalab/pg24.hpp"
#include "octalab/plane_group.hpp"

// The near octagon on the central involutions of the full collineation group
// of PG(2,4). Points are the 315 central involutions (the elations); lines
// are the commuting triples {x, y, xy} whose conjugation orbit is admitted
// (by default the two smallest orbit sizes that occur).

namespace octalab {

struct InvolutionOctagon {
  const PermGroup* group;              // acting group, kept alive by the caller
  std::vector<Perm> involutions;       // point i, sorted by image array
  std::vector<uint32_t> point_elems;   // element index of each point in *group
  TripleOrbits triple_data;            // every commuting triple + its orbit
  std::vector<uint64_t> admitted_sizes;  // orbit sizes used for lines, ascending
  Geometry geometry;
  std::vector<uint64_t> line_orbit_sizes;  // conjugation orbit size per line
  Spread spread;  // the lines from the smallest admitted orbit size

  // point index of a group element; error if it is not a point
  uint32_t point_of_element(uint32_t elem_index) const;
};

// admissible: conjugation orbit sizes whose triples become lines; empty means
// the two smallest sizes observed.
InvolutionOctagon build_involution_octagon(const PermGroup& g,
                                           std::vector<uint64_t> admissible = {});

// Conjugation action of the group on the octagon's points. The result's
// order equals the group order exactly when the action is faithful.
PermGroup induced_point_group(const InvolutionOctagon& o,
                              uint64_t budget = PermGroup::kDefaultBudget);

// Flag of the plane fixed by each point (center + axis of the elation).
std::vector<uint16_t> point_flags(const InvolutionOctagon& o);

// Flags of PG(2,4) as 105 points; a line for each plane point (the flags
// through it) and each plane line (the flags on it). 42 lines of size 5.
Geometry h41_flag_geometry();

// --- reference suborbit picture ----------------------------------------------

struct DiagramNode {
  std::string name;
  int distance;            // from the base point
  uint32_t size;
  std::string pair_group;  // isomorphism type of <base, y> for y in the orbit
};

struct DiagramEdge {
  std::string lower, upper;  // each line has 1 point in lower, 2 in upper
  int lines_per_lower, lines_per_upper;
  uint32_t line_count;
};

struct ReferenceDiagram {
  std::vector<DiagramNode> nodes;
  std::vector<DiagramEdge> edges;
};

// The expected suborbit diagram of the octagon: 8 orbits and 10 line classes.
const ReferenceDiagram& reference_suborbit_diagram();

struct DiagramMatch {
  bool ok = false;
  std::string detail;                    // first mismatch when !ok
  std::vector<std::string> orbit_names;  // fixture name per diagram orbit
  std::vector<std::string> node_rows;    // human-readable summary rows
  std::vector<std::string> edge_rows;
};

// Matches a computed suborbit diagram against the reference picture,
// including pair-group types (checked constant on every orbit).
DiagramMatch match_reference_diagram(const InvolutionOctagon& o, const SuborbitDiagram& d);

// --- quotient by the spread ----------------------------------------------------

struct QuotientFlagMap {
  bool ok = false;
  std::string detail;
  std::vector<uint16_t> spread_flag;  // flag index per spread line
};

// The explicit isomorphism from the quotient geometry (spread lines as
// points, quads as lines) onto the flag geometry: each spread line is an
// elation fiber sharing one center-axis flag, and each quad maps onto the
// flags through one plane point or on one plane line.
QuotientFlagMap quotient_flag_isomorphism(const InvolutionOctagon& o, const Spread& s,
                                          const Geometry& quotient);

}  // namespace octalab
