#include "octalab/octagon.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace octalab {

uint32_t InvolutionOctagon::point_of_element(uint32_t elem_index) const {
  const Perm& p = group->element(elem_index);
  auto it = std::lower_bound(involutions.begin(), involutions.end(), p);
  require(it != involutions.end() && *it == p, "element ", elem_index,
          " is not a point of the octagon");
  return uint32_t(it - involutions.begin());
}

InvolutionOctagon build_involution_octagon(const PermGroup& g, std::vector<uint64_t> admissible) {
  std::vector<Perm> invs = g.central_involutions();
  const uint32_t n = uint32_t(invs.size());
  require(n >= 3, "too few central involutions to form any line");

  std::vector<uint32_t> point_elems;
  std::vector<int64_t> point_of(g.order(), -1);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t e = g.index_of(invs[i]);
    point_elems.push_back(e);
    point_of[e] = i;
  }

  // every commuting pair of points whose product is again a point gives the
  // candidate line {x, y, xy}; collect unique triples of element indices
  std::set<Triple> seen;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) {
      if (!invs[i].commutes_with(invs[j])) continue;
      Triple t = make_triple(g, invs[i], invs[j]);
      if (point_of[t[0]] < 0 || point_of[t[1]] < 0 || point_of[t[2]] < 0) continue;
      seen.insert(t);
    }
  std::vector<Triple> triples(seen.begin(), seen.end());
  TripleOrbits orbits = triple_orbits(g, triples);

  if (admissible.empty()) {
    std::vector<uint64_t> sizes = orbits.orbit_sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    admissible.assign(sizes.begin(), sizes.begin() + std::min<size_t>(2, sizes.size()));
  }
  std::sort(admissible.begin(), admissible.end());
  require(!admissible.empty(), "no admissible orbit sizes");

  auto admitted = [&](uint64_t size) {
    return std::binary_search(admissible.begin(), admissible.end(), size);
  };

  std::vector<std::pair<std::vector<uint16_t>, uint64_t>> line_data;
  for (size_t k = 0; k < orbits.triples.size(); ++k) {
    uint64_t size = orbits.orbit_sizes[orbits.label[k]];
    if (!admitted(size)) continue;
    const Triple& t = orbits.triples[k];
    std::vector<uint16_t> line{uint16_t(point_of[t[0]]), uint16_t(point_of[t[1]]),
                               uint16_t(point_of[t[2]])};
    std::sort(line.begin(), line.end());
    line_data.push_back({std::move(line), size});
  }
  std::sort(line_data.begin(), line_data.end());

  std::vector<std::vector<uint16_t>> lines;
  std::vector<uint64_t> line_orbit_sizes;
  for (auto& [line, size] : line_data) {
    lines.push_back(std::move(line));
    line_orbit_sizes.push_back(size);
  }

  Geometry geom(n, std::move(lines));
  Spread spread;
  for (uint32_t li = 0; li < geom.num_lines(); ++li)
    if (line_orbit_sizes[li] == admissible.front()) spread.line_ids.push_back(li);

  return InvolutionOctagon{&g,
                           std::move(invs),
                           std::move(point_elems),
                           std::move(orbits),
                           std::move(admissible),
                           std::move(geom),
                           std::move(line_orbit_sizes),
                           std::move(spread)};
}

PermGroup induced_point_group(const InvolutionOctagon& o, uint64_t budget) {
  const PermGroup& g = *o.group;
  const uint32_t n = uint32_t(o.involutions.size());
  std::vector<int64_t> point_of(g.order(), -1);
  for (uint32_t i = 0; i < n; ++i) point_of[o.point_elems[i]] = i;

  std::vector<Perm> gens;
  for (const Perm& h : g.generators()) {
    std::vector<uint16_t> img(n);
    for (uint32_t i = 0; i < n; ++i) {
      int64_t p = point_of[g.index_of(o.involutions[i].conjugated_by(h))];
      require(p >= 0, "conjugation moved a central involution out of the point set");
      img[i] = uint16_t(p);
    }
    gens.push_back(Perm::from_images(std::move(img)));
  }
  return PermGroup::closure(make_indexed_domain("x", n), std::move(gens), budget);
}

std::vector<uint16_t> point_flags(const InvolutionOctagon& o) {
  const ProjectivePlane& plane = ProjectivePlane::pg24();
  std::vector<uint16_t> out;
  out.reserve(o.involutions.size());
  for (const Perm& x : o.involutions) {
    Flag f = elation_center_axis(plane, x);
    auto it = std::lower_bound(plane.flags().begin(), plane.flags().end(), f);
    require(it != plane.flags().end() && *it == f, "fixed flag is not a flag of the plane");
    out.push_back(uint16_t(it - plane.flags().begin()));
  }
  return out;
}

Geometry h41_flag_geometry() {
  const ProjectivePlane& plane = ProjectivePlane::pg24();
  const auto& flags = plane.flags();
  std::vector<std::vector<uint16_t>> lines;
  for (uint16_t p = 0; p < plane.num_points(); ++p) {
    std::vector<uint16_t> line;
    for (uint16_t f = 0; f < flags.size(); ++f)
      if (flags[f].point == p) line.push_back(f);
    lines.push_back(std::move(line));
  }
  for (uint16_t l = 0; l < plane.num_lines(); ++l) {
    std::vector<uint16_t> line;
    for (uint16_t f = 0; f < flags.size(); ++f)
      if (flags[f].line == l) line.push_back(f);
    lines.push_back(std::move(line));
  }
  return Geometry(uint32_t(flags.size()), std::move(lines));
}

const ReferenceDiagram& reference_suborbit_diagram() {
  static const ReferenceDiagram ref{
      {
          {"O0", 0, 1, "C2"},
          {"O1a", 1, 2, "C2xC2"},
          {"O1b", 1, 8, "C2xC2"},
          {"O2a", 2, 16, "C2xC2"},
          {"O2b", 2, 32, "D8"},
          {"O3a", 3, 64, "D8"},
          {"O3b", 3, 64, "S3"},
          {"O4", 4, 128, "D10"},
      },
      {
          {"O0", "O1a", 1, 1, 1},
          {"O0", "O1b", 4, 1, 4},
          {"O1a", "O2a", 4, 1, 8},
          {"O1b", "O2a", 2, 2, 16},
          {"O1b", "O2b", 2, 1, 16},
          {"O2a", "O3a", 2, 1, 32},
          {"O2b", "O3a", 2, 2, 64},
          {"O2b", "O3b", 2, 2, 64},
          {"O3a", "O4", 2, 2, 128},
          {"O3b", "O4", 3, 3, 192},
      },
  };
  return ref;
}

DiagramMatch match_reference_diagram(const InvolutionOctagon& o, const SuborbitDiagram& d) {
  const ReferenceDiagram& ref = reference_suborbit_diagram();
  DiagramMatch m;
  auto mismatch = [&](std::string why) {
    m.ok = false;
    m.detail = std::move(why);
    return m;
  };

  // pair group of each orbit, checked constant over the orbit
  const Perm& base = o.involutions[d.base];
  std::vector<std::string> pair_group(d.orbits.size());
  for (uint32_t i = 0; i < d.orbits.size(); ++i) {
    for (uint16_t y : d.orbits[i]) {
      std::string t = dihedral_type(base, o.involutions[y]);
      if (pair_group[i].empty())
        pair_group[i] = t;
      else if (pair_group[i] != t)
        return mismatch("orbit " + std::to_string(i) + " mixes pair groups " + pair_group[i] +
                        " and " + t);
    }
  }

  if (d.orbits.size() != ref.nodes.size())
    return mismatch("expected " + std::to_string(ref.nodes.size()) + " orbits, found " +
                    std::to_string(d.orbits.size()));

  // orbit -> fixture node, by (distance, size, pair group)
  std::vector<int> node_of(d.orbits.size(), -1);
  std::vector<bool> used(ref.nodes.size(), false);
  for (uint32_t i = 0; i < d.orbits.size(); ++i) {
    for (uint32_t k = 0; k < ref.nodes.size(); ++k) {
      const DiagramNode& nd = ref.nodes[k];
      if (used[k] || nd.distance != d.orbit_distance[i] || nd.size != d.orbits[i].size() ||
          nd.pair_group != pair_group[i])
        continue;
      node_of[i] = int(k);
      used[k] = true;
      break;
    }
    if (node_of[i] < 0)
      return mismatch("no fixture node for orbit " + std::to_string(i) + " (distance " +
                      std::to_string(d.orbit_distance[i]) + ", size " +
                      std::to_string(d.orbits[i].size()) + ", pair group " + pair_group[i] + ")");
    m.orbit_names.push_back(ref.nodes[node_of[i]].name);
  }

  for (uint32_t i = 0; i < d.orbits.size(); ++i)
    m.node_rows.push_back(m.orbit_names[i] + ": size " + std::to_string(d.orbits[i].size()) +
                          ", distance " + std::to_string(d.orbit_distance[i]) + ", pair group " +
                          pair_group[i]);

  if (d.line_classes.size() != ref.edges.size())
    return mismatch("expected " + std::to_string(ref.edges.size()) + " line classes, found " +
                    std::to_string(d.line_classes.size()));

  std::map<std::string, uint32_t> orbit_by_name;
  for (uint32_t i = 0; i < d.orbits.size(); ++i) orbit_by_name[m.orbit_names[i]] = i;

  std::vector<bool> edge_used(d.line_classes.size(), false);
  for (const DiagramEdge& e : ref.edges) {
    uint32_t lo = orbit_by_name.at(e.lower), hi = orbit_by_name.at(e.upper);
    std::vector<std::pair<uint32_t, int>> want{{lo, 1}, {hi, 2}};
    std::sort(want.begin(), want.end());
    bool lower_first = want[0].first == lo;
    std::vector<int> want_per_point{e.lines_per_lower, e.lines_per_upper};
    if (!lower_first) std::swap(want_per_point[0], want_per_point[1]);

    bool found = false;
    for (uint32_t c = 0; c < d.line_classes.size(); ++c) {
      const LineClassStat& cls = d.line_classes[c];
      if (edge_used[c] || cls.signature != want) continue;
      if (cls.line_count != e.line_count)
        return mismatch(e.lower + " -- " + e.upper + ": expected " +
                        std::to_string(e.line_count) + " lines, found " +
                        std::to_string(cls.line_count));
      if (cls.lines_per_point != want_per_point)
        return mismatch(e.lower + " -- " + e.upper + ": line multiplicities differ");
      edge_used[c] = true;
      found = true;
      m.edge_rows.push_back(e.lower + " -- " + e.upper + ": " + std::to_string(e.line_count) +
                            (e.line_count == 1 ? " line" : " lines") + " (1 point in " + e.lower +
                            ", 2 in " + e.upper + "), " +
                            std::to_string(e.lines_per_lower) + " per " + e.lower + " point, " +
                            std::to_string(e.lines_per_upper) + " per " + e.upper + " point");
      break;
    }
    if (!found) return mismatch("no line class joins " + e.lower + " and " + e.upper);
  }

  m.ok = true;
  m.detail = "suborbit diagram matches the reference picture";
  return m;
}

QuotientFlagMap quotient_flag_isomorphism(const InvolutionOctagon& o, const Spread& s,
                                          const Geometry& quotient) {
  QuotientFlagMap out;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.detail = std::move(why);
    return out;
  };
  std::vector<uint16_t> flags = point_flags(o);

  // each spread line must be one elation fiber: a common center-axis flag
  std::vector<bool> flag_seen(ProjectivePlane::pg24().flags().size(), false);
  for (uint32_t qi = 0; qi < s.line_ids.size(); ++qi) {
    const auto& line = o.geometry.lines()[s.line_ids[qi]];
    uint16_t f = flags[line[0]];
    for (uint16_t p : line)
      if (flags[p] != f)
        return fail("spread line " + std::to_string(s.line_ids[qi]) +
                    " mixes points with different fixed flags");
    if (flag_seen[f]) return fail("two spread lines share the fixed flag " + std::to_string(f));
    flag_seen[f] = true;
    out.spread_flag.push_back(f);
  }
  if (out.spread_flag.size() != flag_seen.size())
    return fail("spread does not cover every flag of the plane");

  // quad images must be the flag pencils (one per plane point or plane line)
  Geometry h41 = h41_flag_geometry();
  if (quotient.num_points() != out.spread_flag.size() || quotient.num_lines() != h41.num_lines())
    return fail("quotient size differs from the flag geometry");
  for (uint32_t li = 0; li < quotient.num_lines(); ++li) {
    std::vector<uint16_t> image;
    for (uint16_t q : quotient.lines()[li]) image.push_back(out.spread_flag[q]);
    std::sort(image.begin(), image.end());
    int32_t target = h41.line_of_pair(image[0], image[1]);
    if (target < 0 || h41.lines()[size_t(target)] != image)
      return fail("image of quotient line " + std::to_string(li) +
                  " is not a line of the flag geometry");
  }
  out.ok = true;
  out.detail = "spread lines are elation fibers; quads map onto the flag pencils";
  return out;
}

}  // namespace octalab
