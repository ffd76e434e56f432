#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "octalab/common.hpp"

namespace octalab {

// Simple undirected graph over vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  explicit Graph(uint32_t n) : n_(n), adj_(n, n) {}

  uint32_t num_vertices() const { return n_; }
  void add_edge(uint32_t u, uint32_t v);
  bool adjacent(uint32_t u, uint32_t v) const { return adj_.get(u, v); }
  uint32_t degree(uint32_t v) const { return uint32_t(adj_.row_count(v)); }
  std::vector<uint16_t> neighbors(uint32_t v) const;
  uint64_t num_edges() const;
  const BitMatrix& adjacency() const { return adj_; }

 private:
  uint32_t n_;
  BitMatrix adj_;
};

// All-pairs BFS distances, row-major; -1 for unreachable. The parallel kernel
// splits by source vertex; the serial twin is the reference for equality tests.
std::vector<int16_t> all_pairs_distances(const BitMatrix& adj, int jobs);
std::vector<int16_t> all_pairs_distances_serial(const BitMatrix& adj);

struct SrgParams {
  uint32_t v, k, lambda, mu;
  bool operator==(const SrgParams&) const = default;
};

// Strongly regular parameters, or nullopt with an explanation.
std::optional<SrgParams> srg_params(const Graph& g, std::string* why = nullptr);

struct DrgParams {
  std::vector<uint32_t> b;  // b_0 .. b_{d-1}
  std::vector<uint32_t> c;  // c_1 .. c_d
  bool operator==(const DrgParams&) const = default;
  std::string str() const;
  // k_0..k_d derived from the array
  std::vector<uint64_t> distance_distribution() const;
};

// Distance-regular parameters (intersection array), or nullopt with reason.
std::optional<DrgParams> drg_params(const Graph& g, std::string* why = nullptr);

// --- text formats -------------------------------------------------------------
//
// native:   "v N" header, then N lines; line i lists the neighbours of i.
// DIMACS:   "p edge N M" plus "e u v" records (1-based).

std::string graph_to_text(const Graph& g);
Graph graph_from_text(std::istream& is);
Graph graph_from_dimacs(std::istream& is);
Graph graph_from_text(const std::string& text);
Graph graph_from_dimacs(const std::string& text);

}  // namespace octalab
