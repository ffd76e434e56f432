#include "octalab/geometry.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "octalab/graph.hpp"
#include "octalab/parallel.hpp"

namespace octalab {

Geometry::Geometry(uint32_t num_points, std::vector<std::vector<uint16_t>> lines)
    : n_(num_points), lines_(std::move(lines)) {
  require(n_ > 0, "geometry needs at least one point");
  lines_through_.assign(n_, {});
  adj_ = BitMatrix(n_, n_);
  line_of_pair_.assign(size_t(n_) * n_, -1);

  for (uint32_t li = 0; li < lines_.size(); ++li) {
    auto& pts = lines_[li];
    require(pts.size() >= 2, "line ", li, " has fewer than 2 points");
    require(std::is_sorted(pts.begin(), pts.end()), "line ", li, " is not sorted");
    for (size_t i = 0; i < pts.size(); ++i) {
      require(pts[i] < n_, "line ", li, " mentions point ", pts[i], " out of range");
      require(i == 0 || pts[i] != pts[i - 1], "line ", li, " repeats a point");
      lines_through_[pts[i]].push_back(uint16_t(li));
    }
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        require(line_of_pair_[size_t(pts[i]) * n_ + pts[j]] < 0,
                "points ", pts[i], " and ", pts[j], " lie on two lines");
        line_of_pair_[size_t(pts[i]) * n_ + pts[j]] = int32_t(li);
        line_of_pair_[size_t(pts[j]) * n_ + pts[i]] = int32_t(li);
        adj_.set(pts[i], pts[j]);
        adj_.set(pts[j], pts[i]);
      }
  }

  // connectivity (isolated points count as disconnected unless n == 1)
  std::vector<uint16_t> queue{0};
  std::vector<bool> seen(n_, false);
  seen[0] = true;
  for (size_t head = 0; head < queue.size(); ++head)
    for (uint32_t v = 0; v < n_; ++v)
      if (adj_.get(queue[head], v) && !seen[v]) {
        seen[v] = true;
        queue.push_back(uint16_t(v));
      }
  require(queue.size() == n_, "geometry is not connected (reached ", queue.size(), " of ", n_,
          " points)");
}

const std::vector<int16_t>& Geometry::distances() const {
  if (dist_.empty()) dist_ = all_pairs_distances(adj_, default_jobs());
  return dist_;
}

int Geometry::diameter() const {
  const auto& d = distances();
  return int(*std::max_element(d.begin(), d.end()));
}

std::optional<GeometryOrder> order_of(const Geometry& g, std::string* why) {
  auto explain = [&](const std::string& s) {
    if (why) *why = s;
    return std::nullopt;
  };
  if (g.lines().empty()) return explain("no lines");
  size_t line_size = g.lines()[0].size();
  for (size_t li = 0; li < g.lines().size(); ++li)
    if (g.lines()[li].size() != line_size)
      return explain("line " + std::to_string(li) + " has " +
                     std::to_string(g.lines()[li].size()) + " points, expected " +
                     std::to_string(line_size));
  size_t point_degree = g.lines_through(0).size();
  for (uint16_t p = 0; p < g.num_points(); ++p)
    if (g.lines_through(p).size() != point_degree)
      return explain("point " + std::to_string(p) + " lies on " +
                     std::to_string(g.lines_through(p).size()) + " lines, expected " +
                     std::to_string(point_degree));
  return GeometryOrder{uint32_t(line_size - 1), uint32_t(point_degree - 1)};
}

NearPolygonCheck verify_near_polygon(const Geometry& g) {
  NearPolygonCheck out;
  out.diameter = g.diameter();
  for (uint16_t x = 0; x < g.num_points(); ++x)
    for (uint32_t li = 0; li < g.lines().size(); ++li) {
      int best = INT16_MAX, count = 0;
      for (uint16_t y : g.lines()[li]) {
        int d = g.dist(x, y);
        if (d < best) {
          best = d;
          count = 1;
        } else if (d == best) {
          ++count;
        }
      }
      if (count != 1) {
        out.witness = "point " + std::to_string(x) + " has " + std::to_string(count) +
                      " nearest points on line " + std::to_string(li) + " (distance " +
                      std::to_string(best) + ")";
        return out;
      }
    }
  out.ok = true;
  return out;
}

std::vector<uint64_t> point_distance_profile(const Geometry& g, uint16_t x) {
  std::vector<uint64_t> profile(size_t(g.diameter()) + 1, 0);
  for (uint16_t y = 0; y < g.num_points(); ++y) ++profile[size_t(g.dist(x, y))];
  return profile;
}

std::vector<uint16_t> convex_closure(const Geometry& g, const std::vector<uint16_t>& seed) {
  const uint32_t n = g.num_points();
  std::vector<bool> in(n, false);
  std::vector<uint16_t> members;
  auto add = [&](uint16_t p) {
    if (!in[p]) {
      in[p] = true;
      members.push_back(p);
    }
  };
  for (uint16_t p : seed) {
    require(p < n, "seed point out of range");
    add(p);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    size_t before = members.size();
    // close under lines with two members
    for (const auto& line : g.lines()) {
      int inside = 0;
      for (uint16_t p : line)
        if (in[p]) ++inside;
      if (inside >= 2 && inside < int(line.size()))
        for (uint16_t p : line) add(p);
    }
    // close under geodesics
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        uint16_t a = members[i], b = members[j];
        int dab = g.dist(a, b);
        for (uint16_t z = 0; z < n; ++z)
          if (!in[z] && g.dist(a, z) + g.dist(z, b) == dab) add(z);
      }
    changed = members.size() != before;
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// Induced lines (parent line ids fully inside the sorted point set).
std::vector<uint32_t> lines_inside(const Geometry& g, const std::vector<uint16_t>& pts) {
  std::vector<bool> in(g.num_points(), false);
  for (uint16_t p : pts) in[p] = true;
  std::vector<uint32_t> out;
  for (uint32_t li = 0; li < g.lines().size(); ++li) {
    bool all = true;
    for (uint16_t p : g.lines()[li])
      if (!in[p]) {
        all = false;
        break;
      }
    if (all) out.push_back(li);
  }
  return out;
}

// Is the induced geometry a nondegenerate generalized quadrangle? Fills `ord`.
bool induces_gq(const Geometry& g, const std::vector<uint16_t>& pts,
                const std::vector<uint32_t>& line_ids, GeometryOrder& ord) {
  if (line_ids.empty()) return false;
  std::map<uint16_t, int> degree;
  for (uint16_t p : pts) degree[p] = 0;
  size_t line_size = g.lines()[line_ids[0]].size();
  for (uint32_t li : line_ids) {
    if (g.lines()[li].size() != line_size) return false;
    for (uint16_t p : g.lines()[li]) ++degree[p];
  }
  int point_degree = degree.begin()->second;
  for (auto& [p, d] : degree)
    if (d != point_degree) return false;
  if (line_size < 2 || point_degree < 2) return false;  // nondegenerate: s,t >= 1

  // GQ axiom inside the candidate: a point x off a line L is collinear
  // (via a line of the candidate) with exactly one point of L
  std::vector<bool> in(g.num_points(), false);
  for (uint16_t p : pts) in[p] = true;
  std::vector<bool> line_in(g.lines().size(), false);
  for (uint32_t li : line_ids) line_in[li] = true;
  for (uint16_t x : pts)
    for (uint32_t li : line_ids) {
      bool on_line = false;
      int cnt = 0;
      for (uint16_t y : g.lines()[li]) {
        if (y == x) {
          on_line = true;
          break;
        }
        if (g.collinear(x, y) && line_in[size_t(g.line_of_pair(x, y))]) ++cnt;
      }
      if (!on_line && cnt != 1) return false;
    }
  ord = GeometryOrder{uint32_t(line_size - 1), uint32_t(point_degree - 1)};
  return true;
}

}  // namespace

std::vector<Quad> find_quads(const Geometry& g, int jobs) {
  if (jobs == 0) jobs = default_jobs();
  const uint32_t n = g.num_points();
  std::vector<std::pair<uint16_t, uint16_t>> pairs;
  for (uint16_t x = 0; x < n; ++x)
    for (uint16_t y = uint16_t(x + 1); y < n; ++y)
      if (g.dist(x, y) == 2 && g.adjacency().count_and(x, y) >= 2) pairs.emplace_back(x, y);

  std::vector<std::vector<uint16_t>> closures(pairs.size());
  parallel_for(pairs.size(), jobs, [&](size_t i) {
    closures[i] = convex_closure(g, {pairs[i].first, pairs[i].second});
  });

  std::set<std::vector<uint16_t>> seen;
  std::vector<Quad> quads;
  for (const auto& pts : closures) {
    if (!seen.insert(pts).second) continue;
    Quad q;
    q.points = pts;
    std::vector<uint32_t> inside = lines_inside(g, pts);
    if (!induces_gq(g, pts, inside, q.order)) continue;
    q.line_ids = std::move(inside);
    quads.push_back(std::move(q));
  }
  std::sort(quads.begin(), quads.end(),
            [](const Quad& a, const Quad& b) { return a.points < b.points; });
  return quads;
}

PointQuadResult classify_point_quad(const Geometry& g, uint16_t x, const Quad& q) {
  int best = INT16_MAX;
  std::vector<uint16_t> nearest;
  for (uint16_t y : q.points) {
    int d = g.dist(x, y);
    if (d < best) {
      best = d;
      nearest.assign(1, y);
    } else if (d == best) {
      nearest.push_back(y);
    }
  }

  bool classical = nearest.size() == 1;
  if (classical) {
    uint16_t gate = nearest[0];
    for (uint16_t y : q.points)
      if (g.dist(x, y) != best + g.dist(gate, y)) {
        classical = false;
        break;
      }
    if (classical) return PointQuadResult{PointQuadClass::Classical, gate};
  }

  // ovoidal: the nearest set meets every quad line exactly once
  std::vector<bool> near_set(g.num_points(), false);
  for (uint16_t y : nearest) near_set[y] = true;
  bool ovoidal = true;
  for (uint32_t li : q.line_ids) {
    int cnt = 0;
    for (uint16_t y : g.lines()[li])
      if (near_set[y]) ++cnt;
    if (cnt != 1) {
      ovoidal = false;
      break;
    }
  }
  require(ovoidal, "point ", x, " is neither classical nor ovoidal for the quad");
  require(!classical, "point ", x, " satisfies both verdicts");  // unreachable by construction
  return PointQuadResult{PointQuadClass::Ovoidal, nearest[0]};
}

Spread spread_from_quads(const Geometry& g, const std::vector<Quad>& quads) {
  std::vector<int> quad_count(g.lines().size(), 0);
  for (const Quad& q : quads)
    for (uint32_t li : q.line_ids) ++quad_count[li];

  Spread s;
  for (uint32_t li = 0; li < g.lines().size(); ++li)
    if (quad_count[li] >= 2) s.line_ids.push_back(li);

  std::vector<int> cover(g.num_points(), 0);
  for (uint32_t li : s.line_ids)
    for (uint16_t p : g.lines()[li]) ++cover[p];
  for (uint16_t p = 0; p < g.num_points(); ++p)
    if (cover[p] != 1)
      fail("lines lying in two or more quads do not determine a spread (point ", p,
           " covered ", cover[p], " times; the quad-intersection rule is ambiguous here)");
  return s;
}

Geometry quotient_geometry(const Geometry& g, const Spread& s, const std::vector<Quad>& quads) {
  std::vector<int32_t> spread_index(g.lines().size(), -1);
  for (uint32_t i = 0; i < s.line_ids.size(); ++i) spread_index[s.line_ids[i]] = int32_t(i);

  std::vector<std::vector<uint16_t>> qlines;
  for (size_t qi = 0; qi < quads.size(); ++qi) {
    const Quad& q = quads[qi];
    std::vector<uint16_t> members;
    std::vector<int> cover(g.num_points(), 0);
    for (uint32_t li : q.line_ids)
      if (spread_index[li] >= 0) {
        members.push_back(uint16_t(spread_index[li]));
        for (uint16_t p : g.lines()[li]) ++cover[p];
      }
    for (uint16_t p : q.points)
      require(cover[p] == 1, "spread lines inside quad ", qi, " do not partition it (point ", p,
              " covered ", cover[p], " times)");
    std::sort(members.begin(), members.end());
    qlines.push_back(std::move(members));
  }
  return Geometry(uint32_t(s.line_ids.size()), std::move(qlines));
}

GenPolygonCheck verify_generalized_polygon(const Geometry& g, int n) {
  GenPolygonCheck out;
  const uint32_t np = g.num_points();
  const uint32_t nl = uint32_t(g.lines().size());
  Graph inc(np + nl);
  for (uint32_t li = 0; li < nl; ++li)
    for (uint16_t p : g.lines()[li]) inc.add_edge(p, np + li);

  std::vector<int16_t> dist = all_pairs_distances_serial(inc.adjacency());
  const uint32_t total = np + nl;
  int diameter = 0;
  for (int16_t d : dist) {
    if (d < 0) {
      out.detail = "incidence graph is disconnected";
      return out;
    }
    diameter = std::max(diameter, int(d));
  }
  out.diameter = diameter;

  // girth by BFS from every vertex; the first non-tree edge closes a cycle
  int girth = INT32_MAX;
  std::vector<int> level(total), parent(total);
  for (uint32_t src = 0; src < total; ++src) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<uint32_t> queue{src};
    level[src] = 0;
    parent[src] = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
      uint32_t u = queue[head];
      if (2 * level[u] >= girth) break;  // cannot improve
      for (uint16_t v : inc.neighbors(u)) {
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          parent[v] = int(u);
          queue.push_back(v);
        } else if (int(v) != parent[u]) {
          girth = std::min(girth, level[u] + level[v] + 1);
        }
      }
    }
  }
  out.girth = girth;

  if (diameter != n)
    out.detail = "incidence diameter " + std::to_string(diameter) + ", expected " +
                 std::to_string(n);
  else if (girth != 2 * n)
    out.detail = "incidence girth " + std::to_string(girth) + ", expected " +
                 std::to_string(2 * n);
  else
    out.ok = true;
  return out;
}

bool lines_parallel(const Geometry& g, uint32_t l1, uint32_t l2) {
  const auto& a = g.lines()[l1];
  const auto& b = g.lines()[l2];
  int d = INT16_MAX;
  for (uint16_t x : a)
    for (uint16_t y : b) d = std::min(d, g.dist(x, y));
  for (uint16_t x : a) {
    int cnt = 0;
    for (uint16_t y : b)
      if (g.dist(x, y) == d) ++cnt;
    if (cnt != 1) return false;
  }
  for (uint16_t y : b) {
    int cnt = 0;
    for (uint16_t x : a)
      if (g.dist(x, y) == d) ++cnt;
    if (cnt != 1) return false;
  }
  return true;
}

bool triangles_are_lines(const Geometry& g, std::string* witness) {
  const uint32_t n = g.num_points();
  const BitMatrix& adj = g.adjacency();
  const size_t words = (n + 63) / 64;
  for (uint16_t a = 0; a < n; ++a)
    for (uint16_t b = a + 1; b < n; ++b) {
      if (!g.collinear(a, b)) continue;
      const auto& line = g.lines()[size_t(g.line_of_pair(a, b))];
      const uint64_t* ra = adj.row(a);
      const uint64_t* rb = adj.row(b);
      for (size_t w = 0; w < words; ++w) {
        uint64_t both = ra[w] & rb[w];
        while (both) {
          uint16_t z = uint16_t(w * 64 + uint32_t(std::countr_zero(both)));
          both &= both - 1;
          if (!std::binary_search(line.begin(), line.end(), z)) {
            if (witness)
              *witness = "triangle {" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(z) + "} is not contained in a line";
            return false;
          }
        }
      }
    }
  return true;
}

Graph collinearity_graph(const Geometry& g) {
  const uint32_t n = g.num_points();
  Graph out(n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = a + 1; b < n; ++b)
      if (g.collinear(uint16_t(a), uint16_t(b))) out.add_edge(a, b);
  return out;
}

SuborbitDiagram suborbit_diagram(const Geometry& g, const PermGroup& G, uint16_t base) {
  const uint32_t n = g.num_points();
  require(G.domain().size() == n, "group does not act on the geometry's points");
  require(base < n, "base point out of range");
  for (const Perm& h : G.generators())
    for (const auto& line : g.lines()) {
      std::vector<uint16_t> img;
      for (uint16_t p : line) img.push_back(h[p]);
      std::sort(img.begin(), img.end());
      require(g.line_of_pair(img[0], img[1]) >= 0 &&
                  g.lines()[size_t(g.line_of_pair(img[0], img[1]))] == img,
              "group generator does not preserve the line set");
    }

  // stabilizer of the base point, as whole elements (G is fully enumerated)
  std::vector<const Perm*> stab;
  for (const Perm& e : G.elements())
    if (e[base] == base) stab.push_back(&e);

  SuborbitDiagram out;
  out.base = base;
  std::vector<int32_t> orbit_of(n, -1);
  for (uint16_t p = 0; p < n; ++p) {
    if (orbit_of[p] >= 0) continue;
    int32_t id = int32_t(out.orbits.size());
    std::vector<uint16_t> members{p};
    orbit_of[p] = id;
    for (size_t head = 0; head < members.size(); ++head)
      for (const Perm* e : stab) {
        uint16_t q = (*e)[members[head]];
        if (orbit_of[q] < 0) {
          orbit_of[q] = id;
          members.push_back(q);
        }
      }
    std::sort(members.begin(), members.end());
    out.orbits.push_back(std::move(members));
  }

  // canonical order: distance from base, then size, then least member
  std::vector<uint32_t> perm(out.orbits.size());
  for (uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  auto key = [&](uint32_t i) {
    return std::tuple(g.dist(base, out.orbits[i][0]), out.orbits[i].size(), out.orbits[i][0]);
  };
  std::sort(perm.begin(), perm.end(), [&](uint32_t a, uint32_t b) { return key(a) < key(b); });
  std::vector<std::vector<uint16_t>> sorted;
  for (uint32_t i : perm) sorted.push_back(std::move(out.orbits[i]));
  out.orbits = std::move(sorted);
  for (uint32_t i = 0; i < out.orbits.size(); ++i) {
    out.orbit_distance.push_back(g.dist(base, out.orbits[i][0]));
    for (uint16_t p : out.orbits[i]) orbit_of[p] = int32_t(i);
  }

  // line classes by orbit signature
  std::map<std::vector<std::pair<uint32_t, int>>, uint32_t> class_of;
  std::vector<std::vector<uint32_t>> class_lines;
  for (uint32_t li = 0; li < g.lines().size(); ++li) {
    std::map<uint32_t, int> sig;
    for (uint16_t p : g.lines()[li]) ++sig[uint32_t(orbit_of[p])];
    std::vector<std::pair<uint32_t, int>> key_vec(sig.begin(), sig.end());
    auto [it, fresh] = class_of.try_emplace(key_vec, uint32_t(class_lines.size()));
    if (fresh) class_lines.emplace_back();
    class_lines[it->second].push_back(li);
  }

  for (const auto& [sig, cid] : class_of) {
    LineClassStat stat;
    stat.signature = sig;
    stat.line_count = uint32_t(class_lines[cid].size());
    for (auto [orbit, pts_on_line] : sig) {
      // lines of this class through each point of the orbit must be constant
      std::optional<int> per_point;
      for (uint16_t p : out.orbits[orbit]) {
        int cnt = 0;
        for (uint32_t li : class_lines[cid])
          for (uint16_t q : g.lines()[li])
            if (q == p) ++cnt;
        if (!per_point) per_point = cnt;
        require(*per_point == cnt, "line class multiplicity is not orbit-constant");
      }
      stat.lines_per_point.push_back(*per_point);
      (void)pts_on_line;
    }
    out.line_classes.push_back(std::move(stat));
  }
  std::sort(out.line_classes.begin(), out.line_classes.end(),
            [](const LineClassStat& a, const LineClassStat& b) {
              return a.signature < b.signature;
            });
  return out;
}

std::string suborbit_diagram_to_json(const SuborbitDiagram& d,
                                     const std::vector<std::string>& orbit_names) {
  require(orbit_names.empty() || orbit_names.size() == d.orbits.size(),
          "orbit name count mismatch");
  auto name = [&](uint32_t i) {
    return orbit_names.empty() ? "orbit" + std::to_string(i) : orbit_names[i];
  };
  nlohmann::ordered_json j;
  j["base"] = d.base;
  j["orbits"] = nlohmann::ordered_json::array();
  for (uint32_t i = 0; i < d.orbits.size(); ++i)
    j["orbits"].push_back({{"name", name(i)},
                           {"size", d.orbits[i].size()},
                           {"distance", d.orbit_distance[i]}});
  j["line_classes"] = nlohmann::ordered_json::array();
  for (const auto& cls : d.line_classes) {
    nlohmann::ordered_json e;
    e["orbits"] = nlohmann::ordered_json::array();
    e["points_per_line"] = nlohmann::ordered_json::array();
    e["lines_per_point"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < cls.signature.size(); ++i) {
      e["orbits"].push_back(name(cls.signature[i].first));
      e["points_per_line"].push_back(cls.signature[i].second);
      e["lines_per_point"].push_back(cls.lines_per_point[i]);
    }
    e["line_count"] = cls.line_count;
    j["line_classes"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string suborbit_diagram_to_dot(const SuborbitDiagram& d,
                                    const std::vector<std::string>& orbit_names) {
  require(orbit_names.empty() || orbit_names.size() == d.orbits.size(),
          "orbit name count mismatch");
  auto name = [&](uint32_t i) {
    return orbit_names.empty() ? "orbit" + std::to_string(i) : orbit_names[i];
  };
  std::ostringstream os;
  os << "graph suborbits {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (uint32_t i = 0; i < d.orbits.size(); ++i)
    os << "  " << name(i) << " [label=\"" << name(i) << "\\n" << d.orbits[i].size()
       << "\"];\n";
  for (const auto& cls : d.line_classes) {
    if (cls.signature.size() != 2) continue;
    os << "  " << name(cls.signature[0].first) << " -- " << name(cls.signature[1].first)
       << " [label=\"" << cls.signature[0].second << "|" << cls.signature[1].second << "  "
       << cls.lines_per_point[0] << ":" << cls.lines_per_point[1] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string geometry_to_text(const Geometry& g) {
  std::ostringstream os;
  os << "points " << g.num_points() << '\n';
  for (const auto& line : g.lines()) {
    for (size_t i = 0; i < line.size(); ++i) os << (i ? " " : "") << line[i];
    os << '\n';
  }
  return os.str();
}

Geometry geometry_from_text(std::istream& is) {
  std::string tag;
  uint32_t n = 0;
  require(bool(is >> tag) && tag == "points", "geometry text must start with 'points N'");
  require(bool(is >> n), "missing point count");
  is.ignore();
  std::vector<std::vector<uint16_t>> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<uint16_t> pts;
    uint32_t p;
    while (row >> p) {
      require(p < n, "point index out of range in geometry text");
      pts.push_back(uint16_t(p));
    }
    lines.push_back(std::move(pts));
  }
  return Geometry(n, std::move(lines));
}

Geometry geometry_from_text(const std::string& text) {
  std::istringstream is(text);
  return geometry_from_text(is);
}

}  // namespace octalab
