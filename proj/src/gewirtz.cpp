#include "octalab/gewirtz.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "octalab/graph_aut.hpp"
#include "octalab/parallel.hpp"

namespace octalab {

std::vector<std::vector<uint16_t>> hyperoval_orbits(const ProjectivePlane& plane,
                                                    const PermGroup& g) {
  const auto& hos = plane.hyperovals();
  const size_t m = hos.size();

  std::vector<std::vector<uint32_t>> gen_image;
  for (const Perm& p : g.generators()) {
    std::vector<uint32_t> img(m);
    for (size_t h = 0; h < m; ++h) {
      std::array<uint16_t, 6> to;
      for (int i = 0; i < 6; ++i) {
        uint16_t q = p[hos[h][i]];
        require(q < plane.num_points(), "group does not act on the point side of the plane");
        to[size_t(i)] = q;
      }
      std::sort(to.begin(), to.end());
      auto it = std::lower_bound(hos.begin(), hos.end(), to);
      require(it != hos.end() && *it == to, "image of hyperoval ", h, " is not a hyperoval");
      img[h] = uint32_t(it - hos.begin());
    }
    gen_image.push_back(std::move(img));
  }

  std::vector<char> seen(m, 0);
  std::vector<std::vector<uint16_t>> orbits;
  for (size_t h = 0; h < m; ++h) {
    if (seen[h]) continue;
    std::vector<uint16_t> orbit{uint16_t(h)};
    seen[h] = 1;
    for (size_t head = 0; head < orbit.size(); ++head)
      for (const auto& img : gen_image) {
        uint32_t to = img[orbit[head]];
        if (!seen[to]) {
          seen[to] = 1;
          orbit.push_back(uint16_t(to));
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Graph hyperoval_disjointness_graph(const ProjectivePlane& plane,
                                   const std::vector<uint16_t>& hyperoval_ids) {
  const auto& hos = plane.hyperovals();
  std::vector<uint32_t> mask;
  for (uint16_t id : hyperoval_ids) {
    require(id < hos.size(), "hyperoval index ", id, " out of range");
    uint32_t bits = 0;
    for (uint16_t p : hos[id]) bits |= 1u << p;
    mask.push_back(bits);
  }
  Graph g(uint32_t(hyperoval_ids.size()));
  for (uint32_t i = 0; i < mask.size(); ++i)
    for (uint32_t j = i + 1; j < mask.size(); ++j)
      if ((mask[i] & mask[j]) == 0) g.add_edge(i, j);
  return g;
}

Graph build_gewirtz(const ProjectivePlane& plane, const PermGroup& l34) {
  const auto orbits = hyperoval_orbits(plane, l34);
  require(orbits.size() == 3, "expected 3 hyperoval orbits, found ", orbits.size());
  for (const auto& orbit : orbits)
    require(orbit.size() == 56, "expected hyperoval orbits of size 56, found ", orbit.size());

  Graph g = hyperoval_disjointness_graph(plane, orbits[0]);
  std::string why;
  const auto p = srg_params(g, &why);
  require(p.has_value(), "disjointness graph is not strongly regular: ", why);
  require(*p == SrgParams{56, 10, 0, 2}, "unexpected parameters (", p->v, ", ", p->k, ", ",
          p->lambda, ", ", p->mu, ")");
  return g;
}

std::vector<SpecialEightSet> special_eight_sets(const Graph& gewirtz, const PermGroup& aut,
                                                int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  const uint32_t n = gewirtz.num_vertices();
  std::vector<Perm> invs = aut.central_involutions();
  require(invs.size() == 315, "expected 315 central involutions, found ", invs.size());

  std::vector<SpecialEightSet> sets(invs.size());
  std::vector<std::string> err(invs.size());
  const std::vector<Perm>& elems = aut.elements();

  parallel_for(invs.size(), jobs, [&](size_t i) {
    const Perm& sigma = invs[i];
    std::vector<uint16_t> fixed;
    for (uint32_t v = 0; v < n; ++v)
      if (sigma[v] == v) fixed.push_back(uint16_t(v));
    sets[i] = {sigma, fixed};
    auto blame = [&](const std::string& what) {
      err[i] = "involution " + sigma.cycle_string() + ": " + what;
    };

    if (fixed.size() != 8) {
      blame("fixes " + std::to_string(fixed.size()) + " vertices, not 8");
      return;
    }

    // two disjoint 4-cycles = 2-regular with two components of size 4
    std::array<int, 8> comp;
    comp.fill(-1);
    for (int a = 0; a < 8; ++a) {
      int deg = 0;
      for (int b = 0; b < 8; ++b) deg += a != b && gewirtz.adjacent(fixed[size_t(a)], fixed[size_t(b)]);
      if (deg != 2) {
        blame("fixed set is not 2-regular inside");
        return;
      }
    }
    int comps = 0;
    for (int a = 0; a < 8; ++a) {
      if (comp[size_t(a)] >= 0) continue;
      std::vector<int> stack{a};
      comp[size_t(a)] = comps;
      int size = 0;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++size;
        for (int b = 0; b < 8; ++b)
          if (comp[size_t(b)] < 0 && gewirtz.adjacent(fixed[size_t(u)], fixed[size_t(b)])) {
            comp[size_t(b)] = comps;
            stack.push_back(b);
          }
      }
      if (size != 4) {
        blame("fixed set splits into a component of size " + std::to_string(size) + ", not 4");
        return;
      }
      ++comps;
    }
    if (comps != 2) {
      blame("fixed set has " + std::to_string(comps) + " components, not 2");
      return;
    }

    // elementwise stabilizer of the 8-set must be exactly {id, sigma}
    uint64_t stab = 0;
    for (const Perm& e : elems) {
      bool fixes_all = true;
      for (uint16_t v : fixed)
        if (e[v] != v) {
          fixes_all = false;
          break;
        }
      if (!fixes_all) continue;
      ++stab;
      if (!e.is_identity() && !(e == sigma)) {
        blame("a third element fixes the 8-set pointwise: " + e.cycle_string());
        return;
      }
    }
    if (stab != 2) blame("elementwise stabilizer has order " + std::to_string(stab) + ", not 2");
  });

  for (const std::string& e : err)
    if (!e.empty()) fail(e);

  std::set<std::vector<uint16_t>> distinct;
  for (const SpecialEightSet& s : sets) distinct.insert(s.fixed);
  require(distinct.size() == sets.size(), "two involutions share one fixed 8-set");
  return sets;
}

std::vector<uint8_t> fixed_set_intersections(const std::vector<SpecialEightSet>& sets, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  const size_t n = sets.size();
  std::vector<uint64_t> mask(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (uint16_t v : sets[i].fixed) {
      require(v < 64, "fixed vertex ", v, " does not fit the 64-bit mask");
      mask[i] |= uint64_t(1) << v;
    }
  std::vector<uint8_t> table(n * n);
  parallel_for(n, jobs, [&](size_t i) {
    for (size_t j = 0; j < n; ++j)
      table[i * n + j] = uint8_t(std::popcount(mask[i] & mask[j]));
  });
  return table;
}

Graph distance_two_unique_neighbor_graph(const Geometry& g) {
  const uint32_t n = g.num_points();
  g.distances();
  const BitMatrix& adj = g.adjacency();
  Graph out(n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j)
      if (g.dist(uint16_t(i), uint16_t(j)) == 2 && adj.count_and(i, j) == 1) out.add_edge(i, j);
  return out;
}

GewirtzArtifacts gewirtz_artifacts(const ProjectivePlane& plane, const PermGroup& l34,
                                   const InvolutionOctagon& reference, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  GewirtzArtifacts art;
  Report& rep = art.report;
  rep.title = "Gewirtz graph and its involution octagon";

  const auto orbits = hyperoval_orbits(plane, l34);
  {
    std::string sizes;
    for (const auto& orbit : orbits)
      sizes += (sizes.empty() ? "" : ", ") + std::to_string(orbit.size());
    const bool ok = orbits.size() == 3 &&
                    std::all_of(orbits.begin(), orbits.end(),
                                [](const std::vector<uint16_t>& o) { return o.size() == 56; });
    rep.add("gewirtz:hyperoval-orbits", ok,
            ok ? "the 168 hyperovals fall into 3 orbits of 56" : "orbit sizes " + sizes);
    if (!ok) return art;
  }

  Graph gw = hyperoval_disjointness_graph(plane, orbits[0]);
  {
    std::string why;
    const auto p = srg_params(gw, &why);
    const bool ok = p && *p == SrgParams{56, 10, 0, 2};
    std::string detail = ok ? "strongly regular (56, 10, 0, 2)" : why;
    if (p && !ok)
      detail = "parameters (" + std::to_string(p->v) + ", " + std::to_string(p->k) + ", " +
               std::to_string(p->lambda) + ", " + std::to_string(p->mu) +
               "), expected (56, 10, 0, 2)";
    rep.add("gewirtz:srg", ok, detail);
    if (!ok) return art;
  }

  try {
    const AutGroupResult aut = automorphism_group(gw);
    rep.add("gewirtz:aut-order", aut.order == 80640,
            "automorphism group order " + std::to_string(aut.order) +
                (aut.order == 80640 ? "" : ", expected 80640"));

    std::vector<SpecialEightSet> sets;
    try {
      sets = special_eight_sets(gw, aut.group, jobs);
      rep.add("gewirtz:special-sets", true,
              "315 central involutions; every fixed set has 8 vertices inducing two 4-cycles, "
              "elementwise stabilizer of order 2, and all 315 sets are distinct");
    } catch (const Error& e) {
      rep.add("gewirtz:special-sets", false, e.what());
      return art;
    }

    InvolutionOctagon o = build_involution_octagon(aut.group);
    require(o.involutions.size() == sets.size(), "octagon points and 8-sets disagree in number");
    for (size_t i = 0; i < sets.size(); ++i)
      require(o.involutions[i] == sets[i].sigma, "octagon point order drifted from the 8-sets");

    {
      const auto iso = geometry_isomorphism(o.geometry, reference.geometry);
      rep.add("gewirtz:octagon-isomorphic", iso.has_value(),
              iso.has_value()
                  ? "octagon rebuilt from the graph's automorphisms is isomorphic to the reference"
                  : "no isomorphism onto the reference octagon");
    }

    const PermGroup induced = induced_point_group(o);
    const SuborbitDiagram diag = suborbit_diagram(o.geometry, induced, 0);
    const DiagramMatch match = match_reference_diagram(o, diag);
    rep.add("gewirtz:suborbit-diagram", match.ok,
            match.ok ? "suborbit diagram at base 0 matches the reference table" : match.detail);

    const Graph surrogate = distance_two_unique_neighbor_graph(o.geometry);
    art.surrogate = surrogate;
    std::string why;
    const auto drg = drg_params(surrogate, &why);
    const bool drg_ok = drg && drg->str() == "{32,27,8,1;1,4,27,32}";
    rep.add("gewirtz:surrogate-drg", drg_ok,
            drg_ok ? "distance-2-unique-neighbour graph is distance regular, {32,27,8,1;1,4,27,32}"
                   : (drg ? "unexpected intersection array " + drg->str() : why));
    if (drg_ok) {
      const auto distribution = drg->distance_distribution();
      const std::vector<uint64_t> want{1, 32, 216, 64, 2};
      std::string got;
      for (uint64_t c : distribution) got += (got.empty() ? "" : ", ") + std::to_string(c);
      rep.add("gewirtz:surrogate-distribution", distribution == want,
              distribution == want ? "distance distribution (1, 32, 216, 64, 2)"
                                   : "distance distribution (" + got + ")");
    } else {
      rep.add("gewirtz:surrogate-distribution", false, "no intersection array");
    }

    const std::vector<uint8_t> table = fixed_set_intersections(sets, jobs);
    const size_t np = sets.size();
    if (!match.ok) {
      rep.add("gewirtz:intersection-column", false,
              "suborbits not identified, column not checkable");
    } else {
      for (size_t k = 0; k < diag.orbits.size(); ++k)
        art.table.push_back({match.orbit_names[k], uint32_t(diag.orbits[k].size()),
                             int(table[size_t(diag.base) * np + diag.orbits[k][0]])});
      const std::map<std::string, int> expect{{"O0", 8},  {"O1a", 0}, {"O1b", 4}, {"O2a", 0},
                                              {"O2b", 2}, {"O3a", 0}, {"O3b", 2}, {"O4", 1}};
      std::string msg;
      for (size_t k = 0; k < diag.orbits.size() && msg.empty(); ++k) {
        const int want = expect.at(match.orbit_names[k]);
        for (uint16_t y : diag.orbits[k])
          if (table[size_t(diag.base) * np + y] != want) {
            msg = "fixed sets of the base and a point of " + match.orbit_names[k] + " share " +
                  std::to_string(table[size_t(diag.base) * np + y]) + " vertices, expected " +
                  std::to_string(want);
            break;
          }
      }
      rep.add("gewirtz:intersection-column", msg.empty(),
              msg.empty() ? "per-suborbit fixed-set intersections are (8, 0, 4, 0, 2, 0, 2, 1)"
                          : msg);
    }
    {
      std::string msg;
      for (size_t i = 0; i < np && msg.empty(); ++i) {
        uint64_t sum = 0;
        for (size_t j = 0; j < np; ++j) sum += table[i * np + j];
        if (sum != 360)
          msg = "row " + std::to_string(i) + " sums to " + std::to_string(sum) + ", expected 360";
      }
      rep.add("gewirtz:intersection-row-sum", msg.empty(),
              msg.empty() ? "every fixed-set intersection row sums to 360" : msg);
    }
  } catch (const Error& e) {
    rep.add("gewirtz:error", false, e.what());
  }
  return art;
}

Report gewirtz_suite(const ProjectivePlane& plane, const PermGroup& l34,
                     const InvolutionOctagon& reference, int jobs) {
  return gewirtz_artifacts(plane, l34, reference, jobs).report;
}

}  // namespace octalab
