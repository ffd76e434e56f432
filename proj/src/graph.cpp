#include "octalab/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "octalab/parallel.hpp"

namespace octalab {

void Graph::add_edge(uint32_t u, uint32_t v) {
  require(u < n_ && v < n_ && u != v, "bad edge (", u, ",", v, ")");
  adj_.set(u, v);
  adj_.set(v, u);
}

std::vector<uint16_t> Graph::neighbors(uint32_t v) const {
  std::vector<uint16_t> out;
  for (uint32_t u = 0; u < n_; ++u)
    if (adj_.get(v, u)) out.push_back(uint16_t(u));
  return out;
}

uint64_t Graph::num_edges() const {
  uint64_t total = 0;
  for (uint32_t v = 0; v < n_; ++v) total += adj_.row_count(v);
  return total / 2;
}

namespace {

void bfs_row(const BitMatrix& adj, uint32_t src, int16_t* out) {
  const uint32_t n = uint32_t(adj.rows());
  std::fill(out, out + n, int16_t(-1));
  std::vector<uint16_t> queue{uint16_t(src)};
  out[src] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    uint16_t u = queue[head];
    const uint64_t* row = adj.row(u);
    for (uint32_t w = 0; w < adj.words(); ++w) {
      uint64_t bits = row[w];
      while (bits) {
        uint32_t v = w * 64 + uint32_t(std::countr_zero(bits));
        bits &= bits - 1;
        if (out[v] < 0) {
          out[v] = int16_t(out[u] + 1);
          queue.push_back(uint16_t(v));
        }
      }
    }
  }
}

}  // namespace

std::vector<int16_t> all_pairs_distances(const BitMatrix& adj, int jobs) {
  const uint32_t n = uint32_t(adj.rows());
  std::vector<int16_t> dist(size_t(n) * n);
  parallel_for(n, jobs, [&](size_t src) { bfs_row(adj, uint32_t(src), &dist[src * n]); });
  return dist;
}

std::vector<int16_t> all_pairs_distances_serial(const BitMatrix& adj) {
  const uint32_t n = uint32_t(adj.rows());
  std::vector<int16_t> dist(size_t(n) * n);
  for (uint32_t src = 0; src < n; ++src) bfs_row(adj, src, &dist[size_t(src) * n]);
  return dist;
}

std::optional<SrgParams> srg_params(const Graph& g, std::string* why) {
  auto explain = [&](const std::string& s) {
    if (why) *why = s;
    return std::nullopt;
  };
  const uint32_t n = g.num_vertices();
  if (n == 0) return explain("empty graph");
  uint32_t k = g.degree(0);
  for (uint32_t v = 1; v < n; ++v)
    if (g.degree(v) != k)
      return explain("not regular: degree(" + std::to_string(v) + ") != degree(0)");

  std::optional<uint32_t> lambda, mu;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) {
      uint32_t common = uint32_t(g.adjacency().count_and(u, v));
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) slot = common;
      if (*slot != common)
        return explain("common-neighbour count not constant at pair (" + std::to_string(u) +
                       "," + std::to_string(v) + ")");
    }
  if (!lambda) return explain("no edges; lambda undefined");
  if (!mu) return explain("complete graph; mu undefined");
  return SrgParams{n, k, *lambda, *mu};
}

std::string DrgParams::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ';';
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

std::vector<uint64_t> DrgParams::distance_distribution() const {
  std::vector<uint64_t> k{1};
  for (size_t i = 0; i < b.size(); ++i) k.push_back(k.back() * b[i] / c[i]);
  return k;
}

std::optional<DrgParams> drg_params(const Graph& g, std::string* why) {
  auto explain = [&](const std::string& s) {
    if (why) *why = s;
    return std::nullopt;
  };
  const uint32_t n = g.num_vertices();
  if (n == 0) return explain("empty graph");
  std::vector<int16_t> dist = all_pairs_distances_serial(g.adjacency());
  int d = 0;
  for (int16_t v : dist) {
    if (v < 0) return explain("graph is not connected");
    d = std::max(d, int(v));
  }

  std::vector<int64_t> b(size_t(d) + 1, -1), c(size_t(d) + 1, -1);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = 0; v < n; ++v) {
      int i = dist[size_t(u) * n + v];
      uint32_t further = 0, nearer = 0;
      for (uint16_t w : g.neighbors(v)) {
        int dw = dist[size_t(u) * n + w];
        if (dw == i + 1) ++further;
        if (dw == i - 1) ++nearer;
      }
      if (i < d) {
        if (b[i] < 0) b[i] = further;
        if (b[i] != further)
          return explain("b_" + std::to_string(i) + " not constant at (" + std::to_string(u) +
                         "," + std::to_string(v) + ")");
      }
      if (i > 0) {
        if (c[i] < 0) c[i] = nearer;
        if (c[i] != nearer)
          return explain("c_" + std::to_string(i) + " not constant at (" + std::to_string(u) +
                         "," + std::to_string(v) + ")");
      }
    }
  DrgParams out;
  for (int i = 0; i < d; ++i) out.b.push_back(uint32_t(b[i]));
  for (int i = 1; i <= d; ++i) out.c.push_back(uint32_t(c[i]));
  return out;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << "v " << g.num_vertices() << '\n';
  for (uint32_t v = 0; v < g.num_vertices(); ++v) {
    bool first = true;
    for (uint16_t u : g.neighbors(v)) {
      os << (first ? "" : " ") << u;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Graph graph_from_text(std::istream& is) {
  std::string tag;
  uint32_t n = 0;
  require(bool(is >> tag) && tag == "v", "graph text must start with a 'v N' header");
  require(bool(is >> n), "missing vertex count");
  is.ignore();  // rest of header line
  Graph g(n);
  std::string line;
  for (uint32_t v = 0; v < n; ++v) {
    require(bool(std::getline(is, line)), "graph text truncated at vertex ", v);
    std::istringstream row(line);
    uint32_t u;
    while (row >> u) {
      require(u < n, "neighbour index out of range at vertex ", v);
      if (u != v && !g.adjacent(u, v)) g.add_edge(v, u);
    }
  }
  return g;
}

Graph graph_from_dimacs(std::istream& is) {
  std::string line;
  uint32_t n = 0;
  uint64_t m = 0, seen = 0;
  bool have_header = false;
  std::optional<Graph> g;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream row(line);
    char kind;
    row >> kind;
    if (kind == 'p') {
      std::string fmt;
      require(bool(row >> fmt >> n >> m) && fmt == "edge", "bad DIMACS problem line");
      g.emplace(n);
      have_header = true;
    } else if (kind == 'e') {
      require(have_header, "edge before DIMACS header");
      uint32_t u, v;
      require(bool(row >> u >> v), "bad DIMACS edge line");
      require(u >= 1 && v >= 1 && u <= n && v <= n, "DIMACS vertex out of range");
      if (u != v && !g->adjacent(u - 1, v - 1)) g->add_edge(u - 1, v - 1);
      ++seen;
    }
  }
  require(have_header, "no DIMACS header found");
  require(seen == m, "DIMACS edge count mismatch: header says ", m, ", found ", seen);
  return *g;
}

Graph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  return graph_from_text(is);
}

Graph graph_from_dimacs(const std::string& text) {
  std::istringstream is(text);
  return graph_from_dimacs(is);
}

}  // namespace octalab
