#pragma once

// Small fixture geometries and graphs shared by the test binaries.

#include <array>
#include <map>
#include <vector>

#include "octalab/geometry.hpp"
#include "octalab/graph.hpp"

namespace octalab::testing {

// r x c grid: points (i,j), lines = rows and columns.
inline Geometry grid_geometry(int r, int c) {
  std::vector<std::vector<uint16_t>> lines;
  for (int i = 0; i < r; ++i) {
    std::vector<uint16_t> row;
    for (int j = 0; j < c; ++j) row.push_back(uint16_t(i * c + j));
    lines.push_back(row);
  }
  for (int j = 0; j < c; ++j) {
    std::vector<uint16_t> col;
    for (int i = 0; i < r; ++i) col.push_back(uint16_t(i * c + j));
    lines.push_back(col);
  }
  return Geometry(uint32_t(r * c), std::move(lines));
}

// Generalized quadrangle of order (2,2): points = 2-subsets of a 6-set,
// lines = perfect matchings of the 6-set; two points collinear iff disjoint.
inline Geometry w2_geometry() {
  std::map<std::pair<int, int>, uint16_t> index;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      index[{a, b}] = uint16_t(pairs.size());
      pairs.push_back({a, b});
    }
  std::vector<std::vector<uint16_t>> lines;
  // partitions of {0..5} into three pairs; first pair always contains 0
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != b) rest.push_back(x);
    // rest has 4 elements; 3 ways to split into two pairs
    for (int k = 1; k < 4; ++k) {
      std::vector<int> other;
      for (int i = 1; i < 4; ++i)
        if (i != k) other.push_back(rest[i]);
      std::vector<uint16_t> line{index[{0, b}],
                                 index[{std::min(rest[0], rest[k]), std::max(rest[0], rest[k])}],
                                 index[{std::min(other[0], other[1]), std::max(other[0], other[1])}]};
      std::sort(line.begin(), line.end());
      lines.push_back(line);
    }
  }
  return Geometry(15, std::move(lines));
}

inline Graph cycle_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph path_graph(uint32_t n) {
  Graph g(n);
  for (uint32_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Petersen: vertices = 2-subsets of a 5-set, adjacent iff disjoint.
inline Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  Graph g(10);
  for (uint32_t i = 0; i < 10; ++i)
    for (uint32_t j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

// 4x4 rook's graph and the Shrikhande graph: the classic srg(16,6,2,2) pair
// that degree/count refinements cannot tell apart.
inline Graph rook4x4_graph() {
  Graph g(16);
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v)
      if (u / 4 == v / 4 || u % 4 == v % 4) g.add_edge(uint32_t(u), uint32_t(v));
  return g;
}

inline Graph shrikhande_graph() {
  Graph g(16);
  auto idx = [](int x, int y) { return uint32_t(((x % 4 + 4) % 4) * 4 + ((y % 4 + 4) % 4)); };
  const std::array<std::pair<int, int>, 6> deltas{
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (auto [dx, dy] : deltas) {
        uint32_t u = idx(x, y), v = idx(x + dx, y + dy);
        if (!g.adjacent(u, v)) g.add_edge(u, v);
      }
  return g;
}

}  // namespace octalab::testing
