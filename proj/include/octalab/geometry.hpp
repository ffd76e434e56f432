#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octalab/common.hpp"
#include "octalab/graph.hpp"
#include "octalab/perm_group.hpp"

namespace octalab {

// Connected partial linear space on points 0..n-1. Lines are sorted point
// index vectors with >= 2 points; two points share at most one line.
// Construction validates all of that and precomputes collinearity.
class Geometry {
 public:
  Geometry(uint32_t num_points, std::vector<std::vector<uint16_t>> lines);

  uint32_t num_points() const { return n_; }
  uint32_t num_lines() const { return uint32_t(lines_.size()); }
  const std::vector<std::vector<uint16_t>>& lines() const { return lines_; }
  const std::vector<uint16_t>& line(uint32_t l) const { return lines_[l]; }
  const std::vector<uint16_t>& lines_through(uint16_t p) const { return lines_through_[p]; }
  bool collinear(uint16_t a, uint16_t b) const { return adj_.get(a, b); }
  int32_t line_of_pair(uint16_t a, uint16_t b) const { return line_of_pair_[size_t(a) * n_ + b]; }
  const BitMatrix& adjacency() const { return adj_; }

  int dist(uint16_t a, uint16_t b) const { return distances()[size_t(a) * n_ + b]; }
  const std::vector<int16_t>& distances() const;
  int diameter() const;

 private:
  uint32_t n_;
  std::vector<std::vector<uint16_t>> lines_;
  std::vector<std::vector<uint16_t>> lines_through_;
  BitMatrix adj_;
  std::vector<int32_t> line_of_pair_;
  mutable std::vector<int16_t> dist_;  // lazy all-pairs BFS
};

// --- basic verification ----------------------------------------------------

struct GeometryOrder {
  uint32_t s = 0, t = 0;
  bool operator==(const GeometryOrder&) const = default;
};

// Every line has s+1 points and every point is on t+1 lines, or an explanation.
std::optional<GeometryOrder> order_of(const Geometry& g, std::string* why = nullptr);

struct NearPolygonCheck {
  bool ok = false;
  int diameter = -1;
  std::string witness;  // empty when ok
};

// Near polygon axiom: every (point, line) pair has a unique nearest point on
// the line.
NearPolygonCheck verify_near_polygon(const Geometry& g);

// Counts of points at each distance from x (index = distance).
std::vector<uint64_t> point_distance_profile(const Geometry& g, uint16_t x);

// --- convexity and quads -----------------------------------------------------

// Smallest subset containing the seed, closed under full lines (once two
// points of a line are in) and under geodesics. Returns sorted points.
std::vector<uint16_t> convex_closure(const Geometry& g, const std::vector<uint16_t>& seed);

struct Quad {
  std::vector<uint16_t> points;      // sorted
  std::vector<uint32_t> line_ids;    // parent lines fully inside, sorted
  GeometryOrder order;
};

// Convex closures of distance-2 pairs with >= 2 common neighbours that induce
// a nondegenerate generalized quadrangle; deduplicated, sorted by point set.
std::vector<Quad> find_quads(const Geometry& g, int jobs = 0);

enum class PointQuadClass { Classical, Ovoidal };

struct PointQuadResult {
  PointQuadClass cls;
  // classical: the unique nearest point x' (all distances factor through it)
  uint16_t gate = 0;
};

PointQuadResult classify_point_quad(const Geometry& g, uint16_t x, const Quad& q);

// --- spreads and quotients --------------------------------------------------

struct Spread {
  std::vector<uint32_t> line_ids;  // sorted
};

// Lines lying in at least two quads; errors (mentioning the ambiguity) if
// that rule does not produce a partition of the points.
Spread spread_from_quads(const Geometry& g, const std::vector<Quad>& quads);

// Points = spread lines, lines = quads as sets of the spread lines they
// contain. Precondition (checked): the spread lines inside each quad
// partition that quad's points.
Geometry quotient_geometry(const Geometry& g, const Spread& s, const std::vector<Quad>& quads);

struct GenPolygonCheck {
  bool ok = false;
  int diameter = -1;
  int girth = -1;
  std::string detail;
};

// Generalized n-gon test on the incidence graph: diameter n and girth 2n.
GenPolygonCheck verify_generalized_polygon(const Geometry& g, int n);

// Two lines are parallel when each point of one sees a unique nearest point
// on the other, at the constant line-to-line distance.
bool lines_parallel(const Geometry& g, uint32_t l1, uint32_t l2);

// True when every triangle of the collinearity graph lies inside a line.
// For geometries with 3-point lines this identifies lines with triangles,
// so collinearity-graph automorphisms are exactly geometry automorphisms.
bool triangles_are_lines(const Geometry& g, std::string* witness = nullptr);

// The collinearity graph as a standalone Graph.
Graph collinearity_graph(const Geometry& g);

// --- suborbit diagrams -------------------------------------------------------

struct LineClassStat {
  // (orbit index, points of the line in that orbit), sorted by orbit index
  std::vector<std::pair<uint32_t, int>> signature;
  uint32_t line_count = 0;
  // lines of this class through a point of signature[i].first
  std::vector<int> lines_per_point;
};

struct SuborbitDiagram {
  uint16_t base = 0;
  std::vector<std::vector<uint16_t>> orbits;  // orbit 0 = {base}; sorted members
  std::vector<int> orbit_distance;            // from base
  std::vector<LineClassStat> line_classes;
};

// Orbits of the stabilizer of `base` in G (a full point-action group whose
// generators must preserve g's lines), plus per-orbit line statistics.
// Orbits are sorted by (distance, size, least member).
SuborbitDiagram suborbit_diagram(const Geometry& g, const PermGroup& G, uint16_t base);

std::string suborbit_diagram_to_json(const SuborbitDiagram& d,
                                     const std::vector<std::string>& orbit_names);
std::string suborbit_diagram_to_dot(const SuborbitDiagram& d,
                                    const std::vector<std::string>& orbit_names);

// --- plain text geometry format ----------------------------------------------
//
//   points N
//   <one line per geometry line: sorted point indices, space separated>

std::string geometry_to_text(const Geometry& g);
Geometry geometry_from_text(std::istream& is);
Geometry geometry_from_text(const std::string& text);

}  // namespace octalab
