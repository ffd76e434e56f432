#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "octalab/gewirtz.hpp"
#include "octalab/graph_aut.hpp"

using namespace octalab;

namespace {

const PermGroup& l34() {
  static PermGroup g = build_group_l34(ProjectivePlane::pg24());
  return g;
}

const Graph& gewirtz() {
  static Graph g = build_gewirtz(ProjectivePlane::pg24(), l34());
  return g;
}

const AutGroupResult& aut() {
  static AutGroupResult a = automorphism_group(gewirtz());
  return a;
}

const std::vector<SpecialEightSet>& eight_sets() {
  static std::vector<SpecialEightSet> s = special_eight_sets(gewirtz(), aut().group);
  return s;
}

const InvolutionOctagon& octagon_from_graph() {
  static InvolutionOctagon o = build_involution_octagon(aut().group);
  return o;
}

const InvolutionOctagon& reference_octagon() {
  static PermGroup g = build_group_g(ProjectivePlane::pg24());
  static InvolutionOctagon o = build_involution_octagon(g);
  return o;
}

}  // namespace

TEST_CASE("hyperoval orbits split 168 into three times 56") {
  const auto orbits = hyperoval_orbits(ProjectivePlane::pg24(), l34());
  REQUIRE(orbits.size() == 3);
  std::set<uint16_t> all;
  for (const auto& orbit : orbits) {
    CHECK(orbit.size() == 56);
    CHECK(std::is_sorted(orbit.begin(), orbit.end()));
    all.insert(orbit.begin(), orbit.end());
  }
  CHECK(all.size() == 168);
  CHECK(orbits[0].front() == 0);  // the lexicographically least hyperoval picks the orbit
  CHECK(orbits[0].front() < orbits[1].front());
  CHECK(orbits[1].front() < orbits[2].front());
}

TEST_CASE("disjointness graph on the chosen orbit is the Gewirtz graph") {
  const Graph& g = gewirtz();
  CHECK(g.num_vertices() == 56);
  CHECK(g.num_edges() == 280);
  auto p = srg_params(g);
  REQUIRE(p.has_value());
  CHECK(*p == SrgParams{56, 10, 0, 2});

  SUBCASE("all three orbit choices give isomorphic graphs") {
    const auto orbits = hyperoval_orbits(ProjectivePlane::pg24(), l34());
    for (int k : {1, 2}) {
      Graph other = hyperoval_disjointness_graph(ProjectivePlane::pg24(), orbits[size_t(k)]);
      auto q = srg_params(other);
      REQUIRE(q.has_value());
      CHECK(*q == SrgParams{56, 10, 0, 2});
      CHECK(graph_isomorphism(g, other).has_value());
    }
  }
}

TEST_CASE("automorphism group has order 80640") {
  CHECK(aut().order == 80640);
  CHECK(aut().group.order() == 80640);
  for (const Perm& gen : aut().generators)
    for (uint32_t u = 0; u < 56; ++u)
      for (uint32_t v = u + 1; v < 56; ++v)
        CHECK(gewirtz().adjacent(u, v) == gewirtz().adjacent(gen[u], gen[v]));
}

TEST_CASE("special 8-sets") {
  const auto& sets = eight_sets();
  CHECK(sets.size() == 315);

  // independent re-check of the induced two-4-cycles shape on a sample
  for (size_t i = 0; i < sets.size(); i += 23) {
    const auto& fx = sets[i].fixed;
    REQUIRE(fx.size() == 8);
    CHECK(std::is_sorted(fx.begin(), fx.end()));
    for (uint16_t v : fx) CHECK(sets[i].sigma[v] == v);
    CHECK(sets[i].sigma.num_fixed_points() == 8);

    int edges = 0;
    std::vector<int> deg(8, 0);
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        if (gewirtz().adjacent(fx[size_t(a)], fx[size_t(b)])) {
          ++edges;
          ++deg[size_t(a)];
          ++deg[size_t(b)];
        }
    CHECK(edges == 8);  // two 4-cycles
    CHECK(std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }));
    // a 4-cycle has two vertices non-adjacent to any given vertex; an 8-cycle
    // would have four at distance >= 2 on each side, so count non-neighbours
    // inside the component via a diagonal: each vertex has exactly one vertex
    // at distance 2 in its own 4-cycle
    for (int a = 0; a < 8; ++a) {
      int diagonal = 0;
      for (int b = 0; b < 8; ++b) {
        if (a == b || gewirtz().adjacent(fx[size_t(a)], fx[size_t(b)])) continue;
        int common = 0;
        for (int c = 0; c < 8; ++c)
          common += gewirtz().adjacent(fx[size_t(a)], fx[size_t(c)]) &&
                    gewirtz().adjacent(fx[size_t(b)], fx[size_t(c)]);
        diagonal += common == 2;
      }
      CHECK(diagonal == 1);
    }
  }

  std::set<std::vector<uint16_t>> distinct;
  for (const auto& s : sets) distinct.insert(s.fixed);
  CHECK(distinct.size() == 315);
}

TEST_CASE("fixed-set intersection table") {
  const auto& sets = eight_sets();
  const auto table = fixed_set_intersections(sets);
  const size_t n = sets.size();
  REQUIRE(table.size() == n * n);
  for (size_t i = 0; i < n; ++i) {
    CHECK(table[i * n + i] == 8);
    uint64_t sum = 0;
    for (size_t j = 0; j < n; ++j) {
      CHECK(table[i * n + j] == table[j * n + i]);
      sum += table[i * n + j];
    }
    CHECK(sum == 360);
  }
}

TEST_CASE("octagon rebuilt from the graph automorphisms") {
  const InvolutionOctagon& o = octagon_from_graph();
  CHECK(o.geometry.num_points() == 315);
  CHECK(o.geometry.num_lines() == 525);
  auto ord = order_of(o.geometry);
  REQUIRE(ord.has_value());
  CHECK(*ord == GeometryOrder{2, 4});

  auto iso = geometry_isomorphism(o.geometry, reference_octagon().geometry);
  REQUIRE(iso.has_value());
  // spot-check that the point map carries lines onto lines
  const auto& f = *iso;
  for (uint32_t l = 0; l < o.geometry.num_lines(); l += 41) {
    std::vector<uint16_t> img;
    for (uint16_t p : o.geometry.line(l)) img.push_back(f[p]);
    std::sort(img.begin(), img.end());
    CHECK(reference_octagon().geometry.line_of_pair(img[0], img[1]) >= 0);
    CHECK(reference_octagon().geometry.line(
              uint32_t(reference_octagon().geometry.line_of_pair(img[0], img[1]))) == img);
  }
}

TEST_CASE("surrogate graph and the suborbit table") {
  const InvolutionOctagon& o = octagon_from_graph();
  const Graph surrogate = distance_two_unique_neighbor_graph(o.geometry);
  CHECK(surrogate.num_vertices() == 315);

  auto drg = drg_params(surrogate);
  REQUIRE(drg.has_value());
  CHECK(drg->str() == "{32,27,8,1;1,4,27,32}");
  CHECK(drg->distance_distribution() == std::vector<uint64_t>{1, 32, 216, 64, 2});

  PermGroup induced = induced_point_group(o);
  SuborbitDiagram diag = suborbit_diagram(o.geometry, induced, 0);
  DiagramMatch match = match_reference_diagram(o, diag);
  REQUIRE(match.ok);

  std::map<std::string, size_t> by_name;
  for (size_t k = 0; k < diag.orbits.size(); ++k) by_name[match.orbit_names[k]] = k;

  // the surrogate's neighbourhood of the base is exactly the O2b suborbit
  std::vector<uint16_t> nbrs;
  for (uint32_t v = 0; v < 315; ++v)
    if (surrogate.adjacent(0, v)) nbrs.push_back(uint16_t(v));
  CHECK(nbrs == diag.orbits[by_name.at("O2b")]);

  // collinearity = the two distance-1 suborbits
  std::vector<uint16_t> coll;
  for (uint32_t v = 1; v < 315; ++v)
    if (o.geometry.collinear(0, uint16_t(v))) coll.push_back(uint16_t(v));
  std::vector<uint16_t> expected(diag.orbits[by_name.at("O1a")]);
  expected.insert(expected.end(), diag.orbits[by_name.at("O1b")].begin(),
                  diag.orbits[by_name.at("O1b")].end());
  std::sort(expected.begin(), expected.end());
  CHECK(coll == expected);

  // per-suborbit intersection column (8, 0, 4, 0, 2, 0, 2, 1)
  const auto& sets = eight_sets();
  const auto table = fixed_set_intersections(sets);
  const std::map<std::string, int> expect{{"O0", 8},  {"O1a", 0}, {"O1b", 4}, {"O2a", 0},
                                          {"O2b", 2}, {"O3a", 0}, {"O3b", 2}, {"O4", 1}};
  for (size_t k = 0; k < diag.orbits.size(); ++k)
    for (uint16_t y : diag.orbits[k])
      CHECK(int(table[size_t(y)]) == expect.at(match.orbit_names[k]));
}

TEST_CASE("artifacts expose the comparison table and the surrogate graph") {
  GewirtzArtifacts art = gewirtz_artifacts(ProjectivePlane::pg24(), l34(), reference_octagon());
  CHECK(art.report.all_pass());

  REQUIRE(art.table.size() == 8);
  CHECK(art.table[0].orbit == "O0");
  std::map<std::string, GewirtzTableRow> rows;
  uint32_t total = 0;
  for (const GewirtzTableRow& r : art.table) {
    rows[r.orbit] = r;
    total += r.size;
  }
  CHECK(total == 315);
  const std::map<std::string, std::pair<uint32_t, int>> expect{
      {"O0", {1, 8}},   {"O1a", {2, 0}},  {"O1b", {8, 4}},  {"O2a", {16, 0}},
      {"O2b", {32, 2}}, {"O3a", {64, 0}}, {"O3b", {64, 2}}, {"O4", {128, 1}}};
  REQUIRE(rows.size() == expect.size());
  for (const auto& [name, want] : expect) {
    REQUIRE(rows.count(name) == 1);
    CHECK(rows.at(name).size == want.first);
    CHECK(rows.at(name).intersection == want.second);
  }

  REQUIRE(art.surrogate.has_value());
  CHECK(art.surrogate->num_vertices() == 315);
  const std::string text = graph_to_text(*art.surrogate);
  Graph back = graph_from_text(text);
  CHECK(back.num_vertices() == art.surrogate->num_vertices());
  CHECK(back.num_edges() == art.surrogate->num_edges());
  CHECK(graph_to_text(back) == text);
}

TEST_CASE("end-to-end suite") {
  Report rep = gewirtz_suite(ProjectivePlane::pg24(), l34(), reference_octagon());
  INFO(report_to_text(rep));
  CHECK(rep.all_pass());

  const std::vector<std::string> tags{
      "gewirtz:hyperoval-orbits",  "gewirtz:srg",
      "gewirtz:aut-order",         "gewirtz:special-sets",
      "gewirtz:octagon-isomorphic", "gewirtz:suborbit-diagram",
      "gewirtz:surrogate-drg",     "gewirtz:surrogate-distribution",
      "gewirtz:intersection-column", "gewirtz:intersection-row-sum",
  };
  REQUIRE(rep.checks.size() == tags.size());
  for (size_t i = 0; i < tags.size(); ++i) CHECK(rep.checks[i].tag == tags[i]);
}
