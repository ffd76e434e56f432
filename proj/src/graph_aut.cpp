#include "octalab/graph_aut.hpp"

#include <algorithm>
#include <map>

namespace octalab {

namespace {

// Ordered partition of the vertex set; cells hold sorted members.
struct Partition {
  std::vector<std::vector<uint16_t>> cells;
  std::vector<int32_t> color;  // vertex -> cell index

  static Partition seeded(uint32_t n, const std::vector<int>& seed_colors) {
    require(seed_colors.empty() || seed_colors.size() == n, "seed color count mismatch");
    std::map<int, std::vector<uint16_t>> by_color;
    for (uint32_t v = 0; v < n; ++v) by_color[seed_colors.empty() ? 0 : seed_colors[v]].push_back(uint16_t(v));
    Partition p;
    p.color.assign(n, 0);
    for (auto& [c, members] : by_color) {
      for (uint16_t v : members) p.color[v] = int32_t(p.cells.size());
      p.cells.push_back(std::move(members));
    }
    return p;
  }

  // first smallest non-singleton cell, or -1 when discrete
  int32_t target_cell() const {
    int32_t best = -1;
    for (uint32_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (best < 0 || cells[i].size() < cells[best].size()))
        best = int32_t(i);
    return best;
  }

  void individualize(uint32_t cell, uint16_t v) {
    auto& members = cells[cell];
    members.erase(std::find(members.begin(), members.end(), v));
    color[v] = int32_t(cells.size());
    cells.push_back({v});
  }
};

struct Side {
  const BitMatrix* adj;
  Partition* part;
};

// Equitable refinement, processing both sides in lockstep. Cells split by
// neighbour counts against splitter cells; fragments are ordered by count,
// so the refinement is isomorphism-invariant. Returns false as soon as the
// two sides split differently (no isomorphism can respect the partitions).
bool refine(std::vector<Side> sides, std::vector<uint32_t> queue) {
  const uint32_t n = uint32_t(sides[0].adj->rows());
  const size_t words = sides[0].adj->words();
  std::vector<std::vector<uint64_t>> mask(sides.size(), std::vector<uint64_t>(words));
  std::vector<std::vector<int>> cnt(sides.size(), std::vector<int>(n));

  for (size_t qhead = 0; qhead < queue.size(); ++qhead) {
    uint32_t s = queue[qhead];
    for (size_t k = 0; k < sides.size(); ++k) {
      std::fill(mask[k].begin(), mask[k].end(), 0);
      for (uint16_t v : sides[k].part->cells[s]) mask[k][v / 64] |= uint64_t(1) << (v % 64);
      for (uint32_t v = 0; v < n; ++v) {
        const uint64_t* row = sides[k].adj->row(v);
        int c = 0;
        for (size_t w = 0; w < words; ++w) c += std::popcount(row[w] & mask[k][w]);
        cnt[k][v] = c;
      }
    }

    const size_t ncells = sides[0].part->cells.size();
    for (uint32_t c = 0; c < ncells; ++c) {
      if (sides[0].part->cells[c].size() <= 1 &&
          (sides.size() == 1 || sides[1].part->cells[c].size() <= 1)) {
        // singletons can still mismatch on the count value across sides
        if (sides.size() == 2 &&
            cnt[0][sides[0].part->cells[c][0]] != cnt[1][sides[1].part->cells[c][0]])
          return false;
        continue;
      }
      std::vector<std::map<int, std::vector<uint16_t>>> groups(sides.size());
      for (size_t k = 0; k < sides.size(); ++k)
        for (uint16_t v : sides[k].part->cells[c]) groups[k][cnt[k][v]].push_back(v);
      if (sides.size() == 2) {
        if (groups[0].size() != groups[1].size()) return false;
        auto it0 = groups[0].begin();
        auto it1 = groups[1].begin();
        for (; it0 != groups[0].end(); ++it0, ++it1)
          if (it0->first != it1->first || it0->second.size() != it1->second.size()) return false;
      }
      if (groups[0].size() == 1) continue;

      const uint32_t first_fresh = uint32_t(sides[0].part->cells.size());
      bool first_group = true;
      std::vector<int> keys;
      for (auto& [key, members] : groups[0]) keys.push_back(key);
      for (int key : keys) {
        for (size_t k = 0; k < sides.size(); ++k) {
          auto& members = groups[k][key];
          if (first_group) {
            sides[k].part->cells[c] = members;
          } else {
            for (uint16_t v : members) sides[k].part->color[v] = int32_t(sides[k].part->cells.size());
            sides[k].part->cells.push_back(members);
          }
        }
        first_group = false;
      }
      queue.push_back(c);
      for (uint32_t fresh = first_fresh; fresh < sides[0].part->cells.size(); ++fresh)
        queue.push_back(fresh);
    }
  }
  return true;
}

bool refine_all(std::vector<Side> sides) {
  std::vector<uint32_t> queue;
  for (uint32_t i = 0; i < sides[0].part->cells.size(); ++i) queue.push_back(i);
  return refine(std::move(sides), std::move(queue));
}

bool leaf_matches(const BitMatrix& A, const BitMatrix& B, const std::vector<uint16_t>& map) {
  const uint32_t n = uint32_t(A.rows());
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (A.get(u, v) != B.get(map[u], map[v])) return false;
  return true;
}

// pa, pb already refined and compatible
std::optional<std::vector<uint16_t>> iso_search(const BitMatrix& A, const BitMatrix& B,
                                                const Partition& pa, const Partition& pb) {
  int32_t t = pa.target_cell();
  if (t < 0) {
    std::vector<uint16_t> map(A.rows());
    for (uint32_t i = 0; i < pa.cells.size(); ++i) map[pa.cells[i][0]] = pb.cells[i][0];
    if (leaf_matches(A, B, map)) return map;
    return std::nullopt;
  }
  uint16_t u = pa.cells[t][0];
  for (uint16_t w : pb.cells[t]) {
    Partition qa = pa, qb = pb;
    qa.individualize(uint32_t(t), u);
    qb.individualize(uint32_t(t), w);
    if (!refine({{&A, &qa}, {&B, &qb}}, {uint32_t(t), uint32_t(qa.cells.size() - 1)})) continue;
    if (auto r = iso_search(A, B, qa, qb)) return r;
  }
  return std::nullopt;
}

std::vector<uint16_t> orbit_under(uint16_t b, const std::vector<Perm>& gens) {
  std::vector<uint16_t> orbit{b};
  std::vector<bool> seen(gens.empty() ? size_t(b) + 1 : gens[0].degree(), false);
  if (seen.size() <= b) seen.resize(size_t(b) + 1, false);
  seen[b] = true;
  for (size_t head = 0; head < orbit.size(); ++head)
    for (const Perm& g : gens) {
      uint16_t w = g[orbit[head]];
      if (!seen[w]) {
        seen[w] = true;
        orbit.push_back(w);
      }
    }
  return orbit;
}

// Automorphisms of (adj, p): generators plus order by orbit-stabilizer.
std::pair<std::vector<Perm>, uint64_t> aut_recurse(const BitMatrix& adj, const Partition& p) {
  int32_t t = p.target_cell();
  if (t < 0) return {{}, 1};
  uint16_t b = p.cells[t][0];

  Partition ps = p;
  ps.individualize(uint32_t(t), b);
  bool ok = refine({{&adj, &ps}}, {uint32_t(t), uint32_t(ps.cells.size() - 1)});
  require(ok, "single-sided refinement cannot fail");
  auto [gens, stab_order] = aut_recurse(adj, ps);

  std::vector<uint16_t> orbit = orbit_under(b, gens);
  for (uint16_t w : p.cells[t]) {
    if (w == b || std::find(orbit.begin(), orbit.end(), w) != orbit.end()) continue;
    Partition qa = p, qb = p;
    qa.individualize(uint32_t(t), b);
    qb.individualize(uint32_t(t), w);
    if (!refine({{&adj, &qa}, {&adj, &qb}}, {uint32_t(t), uint32_t(qa.cells.size() - 1)}))
      continue;
    if (auto m = iso_search(adj, adj, qa, qb)) {
      gens.push_back(Perm::from_images(std::move(*m)));
      orbit = orbit_under(b, gens);
    }
  }
  return {std::move(gens), stab_order * orbit.size()};
}

}  // namespace

AutGroupResult automorphism_group(const Graph& g, const std::vector<int>& seed_colors,
                                  uint64_t budget) {
  Partition p = Partition::seeded(g.num_vertices(), seed_colors);
  bool ok = refine_all({{&g.adjacency(), &p}});
  require(ok, "single-sided refinement cannot fail");
  auto [gens, order] = aut_recurse(g.adjacency(), p);

  for (const Perm& a : gens)
    for (uint32_t u = 0; u < g.num_vertices(); ++u)
      for (uint32_t v = u + 1; v < g.num_vertices(); ++v)
        require(g.adjacent(u, v) == g.adjacent(a[u], a[v]),
                "generator fails to preserve adjacency");

  PermGroup group =
      PermGroup::closure(make_indexed_domain("v", g.num_vertices()), gens, budget);
  require(group.order() == order, "closure order ", group.order(),
          " disagrees with orbit-stabilizer order ", order);
  uint64_t confirmed = group.order();
  return AutGroupResult{std::move(gens), confirmed, std::move(group)};
}

std::optional<Perm> graph_isomorphism(const Graph& a, const Graph& b,
                                      const std::vector<int>& colors_a,
                                      const std::vector<int>& colors_b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return std::nullopt;
  Partition pa = Partition::seeded(a.num_vertices(), colors_a);
  Partition pb = Partition::seeded(b.num_vertices(), colors_b);
  if (pa.cells.size() != pb.cells.size()) return std::nullopt;
  for (uint32_t i = 0; i < pa.cells.size(); ++i)
    if (pa.cells[i].size() != pb.cells[i].size()) return std::nullopt;
  if (!refine_all({{&a.adjacency(), &pa}, {&b.adjacency(), &pb}})) return std::nullopt;
  auto m = iso_search(a.adjacency(), b.adjacency(), pa, pb);
  if (!m) return std::nullopt;
  return Perm::from_images(std::move(*m));
}

std::optional<std::vector<uint16_t>> geometry_isomorphism(const Geometry& a, const Geometry& b) {
  if (a.num_points() != b.num_points() || a.lines().size() != b.lines().size())
    return std::nullopt;
  auto incidence = [](const Geometry& g) {
    Graph inc(g.num_points() + uint32_t(g.lines().size()));
    for (uint32_t li = 0; li < g.lines().size(); ++li)
      for (uint16_t p : g.lines()[li]) inc.add_edge(p, g.num_points() + li);
    return inc;
  };
  Graph ia = incidence(a), ib = incidence(b);
  std::vector<int> ca(ia.num_vertices(), 0), cb(ib.num_vertices(), 0);
  for (uint32_t v = a.num_points(); v < ia.num_vertices(); ++v) ca[v] = 1;
  for (uint32_t v = b.num_points(); v < ib.num_vertices(); ++v) cb[v] = 1;
  auto m = graph_isomorphism(ia, ib, ca, cb);
  if (!m) return std::nullopt;
  std::vector<uint16_t> out(a.num_points());
  for (uint16_t p = 0; p < a.num_points(); ++p) out[p] = (*m)[p];
  return out;
}

Graph apply_relabeling(const Graph& g, const Perm& p) {
  require(p.degree() == g.num_vertices(), "relabeling degree mismatch");
  Graph out(g.num_vertices());
  for (uint32_t u = 0; u < g.num_vertices(); ++u)
    for (uint32_t v = u + 1; v < g.num_vertices(); ++v)
      if (g.adjacent(u, v)) out.add_edge(p[u], p[v]);
  return out;
}

}  // namespace octalab
