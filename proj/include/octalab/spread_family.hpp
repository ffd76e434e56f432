#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "octalab/geometry.hpp"
#include "octalab/report.hpp"

// Axioms of the near-octagon family defined by a line spread S and a
// parameter t' (with the near octagon of order (s,t) as ambient space):
//
//   (P1) every point of Gamma2'(x) is on t' lines meeting Gamma1''(x)
//   (P2) every point of Gamma2''(x) is on a unique line meeting Gamma1''(x)
//   (P3) every point of Gamma3'(x) is on t' lines meeting Gamma2''(x)
//   (P4) every point of Gamma3''(x) is on t/t' lines meeting Gamma2''(x)
//
// where Gamma1'(x) = L_x \ {x} for the spread line L_x through x, and
// Gammai'(x) consists of the points at distance i collinear with a point of
// Gamma(i-1)'(x), the rest of the distance-i sphere being Gammai''(x).

namespace octalab {

// class codes per point: 0 = base, 1 = G1', 2 = G1'', 3 = G2', 4 = G2'',
// 5 = G3', 6 = G3'', 7 = G4
struct GammaPartition {
  std::vector<int8_t> cls;
  std::array<std::vector<uint16_t>, 8> members;
};

GammaPartition gamma_partition(const Geometry& g, const Spread& s, uint16_t base);

// Runs the whole axiom battery at EVERY base point plus the global spread,
// quad, quotient and classicality checks. Never stops at the first failure;
// each check is one report row whose detail carries a witness on failure.
Report check_family(const Geometry& g, const Spread& s, uint32_t t_prime, int jobs = 0);

// Flags of the Fano plane as points, with the flags through a plane point /
// on a plane line as lines: the generalized hexagon of order (2,1).
Geometry fano_flag_geometry();

// Cartesian product of a generalized hexagon of order (s, t-1) with a line
// of size s+1: points are (hexagon point, level); lines are the hexagon
// lines at each level plus the vertical fibers. The spread is the fibers.
std::pair<Geometry, Spread> build_product(const Geometry& h, uint32_t line_size);

struct ProductDecomposition {
  bool ok = false;
  std::string detail;
  std::optional<Geometry> hexagon;  // induced on the fiber over the first point of L*
  std::vector<uint16_t> level;      // fiber index per point (nearest point of L*)
  std::vector<uint16_t> shadow;     // hexagon point per point (spread line meets the fiber once)
};

// Certifies that (g, s) is a hexagon-times-line product by rebuilding the
// hexagon copies over a fixed spread line L*. Returns ok=false when the
// t'=1 axioms do not hold (not applicable); throws only if the axioms hold
// but a fiber fails to be a subspace.
ProductDecomposition recognize_product(const Geometry& g, const Spread& s);

}  // namespace octalab
