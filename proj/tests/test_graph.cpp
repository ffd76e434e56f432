#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "octalab/graph.hpp"
#include "octalab/graph_aut.hpp"

using namespace octalab;
using namespace octalab::testing;

namespace {

Perm random_perm(uint32_t n, std::mt19937& rng) {
  std::vector<uint16_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = uint16_t(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(img);
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g = petersen_graph();
  CHECK(g.num_vertices() == 10);
  CHECK(g.num_edges() == 15);
  for (uint32_t v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
  CHECK(g.neighbors(0).size() == 3);
}

TEST_CASE("strongly regular parameters") {
  auto c5 = srg_params(cycle_graph(5));
  REQUIRE(c5.has_value());
  CHECK(*c5 == SrgParams{5, 2, 0, 1});

  auto pet = srg_params(petersen_graph());
  REQUIRE(pet.has_value());
  CHECK(*pet == SrgParams{10, 3, 0, 1});

  // path is not regular
  std::string why;
  auto p4 = srg_params(path_graph(4), &why);
  CHECK(!p4.has_value());
  CHECK(!why.empty());

  // complete graph has no nonadjacent pairs: mu undefined
  CHECK(!srg_params(complete_graph(4)).has_value());

  // rook's graph
  auto rook = srg_params(rook4x4_graph());
  REQUIRE(rook.has_value());
  CHECK(*rook == SrgParams{16, 6, 2, 2});
}

TEST_CASE("distance regular parameters") {
  auto pet = drg_params(petersen_graph());
  REQUIRE(pet.has_value());
  CHECK(pet->str() == "{3,2;1,1}");
  CHECK(pet->distance_distribution() == std::vector<uint64_t>{1, 3, 6});

  auto c6 = drg_params(cycle_graph(6));
  REQUIRE(c6.has_value());
  CHECK(c6->str() == "{2,1,1;1,1,2}");
  CHECK(c6->distance_distribution() == std::vector<uint64_t>{1, 2, 2, 1});

  // path graph is not distance regular
  std::string why;
  CHECK(!drg_params(path_graph(4), &why).has_value());
  CHECK(!why.empty());
}

TEST_CASE("distance kernels agree") {
  std::mt19937 rng(7);
  Graph g(40);
  for (uint32_t u = 0; u < 40; ++u)
    for (uint32_t v = u + 1; v < 40; ++v)
      if (rng() % 5 == 0) g.add_edge(u, v);
  auto par = all_pairs_distances(g.adjacency(), 4);
  auto ser = all_pairs_distances_serial(g.adjacency());
  CHECK(par == ser);
}

TEST_CASE("automorphism groups of small graphs") {
  CHECK(automorphism_group(complete_graph(4)).order == 24);
  CHECK(automorphism_group(cycle_graph(5)).order == 10);
  CHECK(automorphism_group(path_graph(3)).order == 2);
  CHECK(automorphism_group(petersen_graph()).order == 120);
  CHECK(automorphism_group(rook4x4_graph()).order == 1152);
  CHECK(automorphism_group(shrikhande_graph()).order == 192);
}

TEST_CASE("automorphism generators preserve adjacency and close up") {
  auto aut = automorphism_group(petersen_graph());
  CHECK(aut.group.order() == 120);
  Graph g = petersen_graph();
  for (const Perm& p : aut.generators)
    for (uint32_t u = 0; u < 10; ++u)
      for (uint32_t v = 0; v < 10; ++v)
        CHECK(g.adjacent(u, v) == g.adjacent(p[u], p[v]));
}

TEST_CASE("seed colors restrict automorphisms") {
  // distinguishing the two ends of a path kills the flip
  std::vector<int> colors{0, 1, 2};
  CHECK(automorphism_group(path_graph(3), colors).order == 1);
  // coloring all vertices alike changes nothing
  std::vector<int> same(10, 5);
  CHECK(automorphism_group(petersen_graph(), same).order == 120);
}

TEST_CASE("aut order is invariant under relabeling") {
  std::mt19937 rng(2026);
  Graph g = petersen_graph();
  for (int trial = 0; trial < 5; ++trial) {
    Perm p = random_perm(10, rng);
    Graph h = apply_relabeling(g, p);
    CHECK(automorphism_group(h).order == 120);
  }
}

TEST_CASE("graph isomorphism finds an explicit map") {
  std::mt19937 rng(99);
  Graph g = petersen_graph();
  Perm p = random_perm(10, rng);
  Graph h = apply_relabeling(g, p);
  auto iso = graph_isomorphism(g, h);
  REQUIRE(iso.has_value());
  for (uint32_t u = 0; u < 10; ++u)
    for (uint32_t v = 0; v < 10; ++v)
      CHECK(g.adjacent(u, v) == h.adjacent((*iso)[u], (*iso)[v]));
}

TEST_CASE("isomorphism rejects different graphs") {
  CHECK(!graph_isomorphism(petersen_graph(), cycle_graph(10)).has_value());
  // same strongly regular parameters, different graphs: the search must
  // exhaust rather than being fooled by counting invariants
  CHECK(!graph_isomorphism(rook4x4_graph(), shrikhande_graph()).has_value());
}

TEST_CASE("colored isomorphism respects colors") {
  Graph g = cycle_graph(4);
  std::vector<int> ca{0, 1, 0, 1};
  std::vector<int> cb{1, 0, 1, 0};
  auto iso = graph_isomorphism(g, g, ca, cb);
  REQUIRE(iso.has_value());
  for (uint32_t v = 0; v < 4; ++v) CHECK(ca[v] == cb[(*iso)[v]]);
  std::vector<int> cc{0, 0, 0, 1};
  CHECK(!graph_isomorphism(g, g, ca, cc).has_value());
}

TEST_CASE("geometry isomorphism") {
  std::mt19937 rng(5);
  Geometry g = grid_geometry(3, 3);
  Perm p = random_perm(9, rng);
  std::vector<std::vector<uint16_t>> lines;
  for (uint32_t l = 0; l < g.num_lines(); ++l) {
    std::vector<uint16_t> line;
    for (uint16_t x : g.line(l)) line.push_back(p[x]);
    std::sort(line.begin(), line.end());
    lines.push_back(line);
  }
  Geometry h(9, std::move(lines));
  auto iso = geometry_isomorphism(g, h);
  REQUIRE(iso.has_value());
  for (uint32_t l = 0; l < g.num_lines(); ++l) {
    std::vector<uint16_t> mapped;
    for (uint16_t x : g.line(l)) mapped.push_back((*iso)[x]);
    std::sort(mapped.begin(), mapped.end());
    bool found = false;
    for (uint32_t m = 0; m < h.num_lines(); ++m)
      if (h.line(m) == mapped) found = true;
    CHECK(found);
  }
  // grid of order (2,1) vs quadrangle of order (2,2): different line counts
  CHECK(!geometry_isomorphism(g, w2_geometry()).has_value());
  // 3x4 and 4x3 grids are isomorphic
  auto gi = geometry_isomorphism(grid_geometry(3, 4), grid_geometry(4, 3));
  CHECK(gi.has_value());
}

TEST_CASE("graph text round trip") {
  Graph g = petersen_graph();
  std::string text = graph_to_text(g);
  Graph back = graph_from_text(text);
  CHECK(back.num_vertices() == 10);
  CHECK(back.adjacency() == g.adjacency());
  CHECK_THROWS_AS(graph_from_text("v x\n"), Error);
}

TEST_CASE("dimacs import") {
  std::string text = "c tiny triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
  Graph g = graph_from_dimacs(text);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK_THROWS_AS(graph_from_dimacs("p edge 3 2\ne 1 2\n"), Error);
  CHECK_THROWS_AS(graph_from_dimacs("e 1 2\n"), Error);
  CHECK_THROWS_AS(graph_from_dimacs("p edge 2 1\ne 1 3\n"), Error);
}
