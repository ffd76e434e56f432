#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "octalab/geometry.hpp"
#include "octalab/graph_aut.hpp"

using namespace octalab;
using namespace octalab::testing;

TEST_CASE("geometry validation rejects bad line sets") {
  CHECK_THROWS_AS(Geometry(3, {{0, 1}, {0, 1, 2}}), Error);   // repeated pair
  CHECK_THROWS_AS(Geometry(3, {{1, 0, 2}}), Error);           // unsorted
  CHECK_THROWS_AS(Geometry(3, {{0}}), Error);                 // short line
  CHECK_THROWS_AS(Geometry(4, {{0, 1, 2}}), Error);           // disconnected
  CHECK_THROWS_AS(Geometry(3, {{0, 1, 1}}), Error);           // duplicate point
  CHECK_THROWS_AS(Geometry(2, {{0, 2}}), Error);              // out of range
}

TEST_CASE("grid basics") {
  Geometry g = grid_geometry(3, 3);
  CHECK(g.num_points() == 9);
  CHECK(g.num_lines() == 6);
  CHECK(g.collinear(0, 1));
  CHECK(!g.collinear(0, 4));
  CHECK(g.line_of_pair(0, 2) == 0);
  CHECK(g.line_of_pair(0, 4) == -1);
  CHECK(g.dist(0, 8) == 2);
  CHECK(g.diameter() == 2);

  auto order = order_of(g);
  REQUIRE(order.has_value());
  CHECK(order->s == 2);
  CHECK(order->t == 1);

  auto np = verify_near_polygon(g);
  CHECK(np.ok);
  CHECK(np.diameter == 2);

  // grid of order (2,1) is a generalized quadrangle
  CHECK(verify_generalized_polygon(g, 4).ok);
  CHECK(!verify_generalized_polygon(g, 6).ok);
}

TEST_CASE("non-uniform order is reported") {
  // one line of size 3, one of size 2, sharing a point
  Geometry g(4, {{0, 1, 2}, {2, 3}});
  std::string why;
  auto order = order_of(g, &why);
  CHECK(!order.has_value());
  CHECK(!why.empty());
}

TEST_CASE("near polygon failure produces a witness") {
  // complete graph K4 with lines = edges: a point sees an opposite
  // edge in two equidistant points
  std::vector<std::vector<uint16_t>> lines;
  for (uint16_t a = 0; a < 4; ++a)
    for (uint16_t b = a + 1; b < 4; ++b) lines.push_back({a, b});
  Geometry g(4, std::move(lines));
  auto np = verify_near_polygon(g);
  CHECK(!np.ok);
  CHECK(!np.witness.empty());
}

TEST_CASE("w2 is a generalized quadrangle of order (2,2)") {
  Geometry g = w2_geometry();
  CHECK(g.num_points() == 15);
  CHECK(g.num_lines() == 15);
  auto order = order_of(g);
  REQUIRE(order.has_value());
  CHECK(order->s == 2);
  CHECK(order->t == 2);
  CHECK(g.diameter() == 2);
  CHECK(verify_near_polygon(g).ok);
  CHECK(verify_generalized_polygon(g, 4).ok);

  // every two noncollinear points have t+1 = 3 common neighbours
  for (uint16_t x = 0; x < 15; ++x)
    for (uint16_t y = x + 1; y < 15; ++y) {
      if (g.collinear(x, y)) continue;
      CHECK(g.adjacency().count_and(x, y) == 3);
    }

  auto profile = point_distance_profile(g, 0);
  CHECK(profile == std::vector<uint64_t>{1, 6, 8});
}

TEST_CASE("convex closure") {
  Geometry g = grid_geometry(3, 3);
  // two points on a common line close up to that full line
  auto line = convex_closure(g, {0, 1});
  CHECK(line == std::vector<uint16_t>{0, 1, 2});
  // opposite corners generate the whole grid
  auto all = convex_closure(g, {0, 8});
  CHECK(all.size() == 9);
  // idempotent
  CHECK(convex_closure(g, all) == all);
  // singleton stays put
  CHECK(convex_closure(g, {4}) == std::vector<uint16_t>{4});
}

TEST_CASE("quad discovery on a quadrangle returns the whole space") {
  Geometry g = w2_geometry();
  auto quads = find_quads(g);
  REQUIRE(quads.size() == 1);
  CHECK(quads[0].points.size() == 15);
  CHECK(quads[0].line_ids.size() == 15);
  CHECK(quads[0].order.s == 2);
  CHECK(quads[0].order.t == 2);
}

TEST_CASE("grid quads") {
  // opposite corners have two common neighbours, and their closure is the
  // whole grid: a (degenerate but valid) quadrangle of order (2,1)
  Geometry g = grid_geometry(3, 3);
  auto quads = find_quads(g);
  REQUIRE(quads.size() == 1);
  CHECK(quads[0].points.size() == 9);
  CHECK(quads[0].order == GeometryOrder{2, 1});
}

TEST_CASE("point-quad classification") {
  Geometry w2 = w2_geometry();

  // point inside the quad: classical with gate = the point itself
  Quad whole;
  whole.points.resize(15);
  for (uint16_t i = 0; i < 15; ++i) whole.points[i] = i;
  for (uint32_t l = 0; l < 15; ++l) whole.line_ids.push_back(l);
  whole.order = GeometryOrder{2, 2};
  auto res = classify_point_quad(w2, 3, whole);
  CHECK(res.cls == PointQuadClass::Classical);
  CHECK(res.gate == 3);

  // extend w2 by an external point joined to the 5-point star ovoid
  // {0,b}; its nearest set in the quad is an ovoid
  std::vector<std::vector<uint16_t>> lines;
  for (uint32_t l = 0; l < 15; ++l) lines.push_back(w2.line(l));
  // star ovoid: all pairs containing element 0 -> indices 0..4 in pair order
  for (uint16_t i = 0; i < 5; ++i) lines.push_back({i, 15});
  Geometry ext(16, std::move(lines));
  auto res2 = classify_point_quad(ext, 15, whole);
  CHECK(res2.cls == PointQuadClass::Ovoidal);
}

TEST_CASE("spread extraction needs quads") {
  Geometry g = grid_geometry(3, 3);
  CHECK_THROWS_AS(spread_from_quads(g, find_quads(g)), Error);
}

TEST_CASE("parallel lines") {
  Geometry g = grid_geometry(3, 3);
  CHECK(lines_parallel(g, 0, 1));   // two rows
  CHECK(lines_parallel(g, 3, 4));   // two columns
  CHECK(!lines_parallel(g, 0, 3));  // row meets column
}

TEST_CASE("triangles versus lines") {
  // rows and columns: every triangle of the rook's graph lies in one
  CHECK(triangles_are_lines(grid_geometry(3, 3)));
  CHECK(triangles_are_lines(w2_geometry()));
  // any projective plane: triangles of the (complete) collinearity graph
  // usually span three different lines
  Geometry fano(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  std::string witness;
  CHECK(!triangles_are_lines(fano, &witness));
  CHECK(!witness.empty());
}

TEST_CASE("geometry text round trip") {
  Geometry g = w2_geometry();
  std::string text = geometry_to_text(g);
  Geometry back = geometry_from_text(text);
  CHECK(back.num_points() == g.num_points());
  REQUIRE(back.num_lines() == g.num_lines());
  for (uint32_t l = 0; l < g.num_lines(); ++l) CHECK(back.line(l) == g.line(l));
  CHECK_THROWS_AS(geometry_from_text("points x\n"), Error);
  CHECK_THROWS_AS(geometry_from_text("lines 3\n0 1 2\n"), Error);
}

TEST_CASE("distance matrix matches serial reference") {
  Geometry g = w2_geometry();
  auto par = all_pairs_distances(g.adjacency(), 4);
  auto ser = all_pairs_distances_serial(g.adjacency());
  CHECK(par == ser);
}

TEST_CASE("suborbit diagram of the grid") {
  Geometry g = grid_geometry(3, 3);
  // collinearity graph of the grid is the rook's graph; its automorphisms
  // permute the triangles, which are exactly the lines
  Graph coll(9);
  for (uint16_t a = 0; a < 9; ++a)
    for (uint16_t b = a + 1; b < 9; ++b)
      if (g.collinear(a, b)) coll.add_edge(a, b);
  auto aut = automorphism_group(coll);
  CHECK(aut.order == 72);

  SuborbitDiagram d = suborbit_diagram(g, aut.group, 0);
  CHECK(d.base == 0);
  REQUIRE(d.orbits.size() == 3);
  CHECK(d.orbits[0] == std::vector<uint16_t>{0});
  CHECK(d.orbits[1].size() == 4);  // row and column of the base
  CHECK(d.orbits[2].size() == 4);  // the rest
  CHECK(d.orbit_distance == std::vector<int>{0, 1, 2});

  REQUIRE(d.line_classes.size() == 2);
  const auto& through = d.line_classes[0];  // lines on the base point
  CHECK(through.signature ==
        std::vector<std::pair<uint32_t, int>>{{0, 1}, {1, 2}});
  CHECK(through.line_count == 2);
  CHECK(through.lines_per_point == std::vector<int>{2, 1});
  const auto& away = d.line_classes[1];
  CHECK(away.signature == std::vector<std::pair<uint32_t, int>>{{1, 1}, {2, 2}});
  CHECK(away.line_count == 4);
  CHECK(away.lines_per_point == std::vector<int>{1, 2});

  std::string json = suborbit_diagram_to_json(d, {"base", "near", "far"});
  CHECK(json.find("\"name\": \"near\"") != std::string::npos);
  CHECK(json.find("\"line_count\": 4") != std::string::npos);
  std::string dot = suborbit_diagram_to_dot(d, {});
  CHECK(dot.find("graph suborbits") != std::string::npos);
  CHECK(dot.find("orbit1 -- orbit2") != std::string::npos);
  CHECK_THROWS_AS(suborbit_diagram_to_json(d, {"just-one"}), Error);

  // a group that moves lines off lines is rejected: use a 4-cycle on one row
  PermGroup bad = PermGroup::closure(
      make_indexed_domain("p", 9),
      {Perm::from_images({1, 2, 3, 0, 4, 5, 6, 7, 8})});
  CHECK_THROWS_AS(suborbit_diagram(g, bad, 0), Error);
}
