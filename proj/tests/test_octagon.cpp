#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "octalab/graph_aut.hpp"
#include "octalab/octagon.hpp"

using namespace octalab;

namespace {

const PermGroup& group_g() {
  static PermGroup g = build_group_g(ProjectivePlane::pg24());
  return g;
}

const InvolutionOctagon& octagon() {
  static InvolutionOctagon o = build_involution_octagon(group_g());
  return o;
}

}  // namespace

TEST_CASE("points are the central involutions") {
  const InvolutionOctagon& o = octagon();
  CHECK(o.involutions.size() == 315);
  CHECK(std::is_sorted(o.involutions.begin(), o.involutions.end()));
  // a single conjugacy class with centralizer order 256
  CHECK(group_g().conjugacy_class(o.involutions[0]).size() == 315);
  CHECK(group_g().centralizer_order(o.involutions[0]) == 256);
  for (uint32_t i = 0; i < 315; i += 37)
    CHECK(o.point_of_element(o.point_elems[i]) == i);
}

TEST_CASE("commuting triples split into three orbits") {
  const InvolutionOctagon& o = octagon();
  CHECK(o.triple_data.triples.size() == 1365);
  std::multiset<uint64_t> sizes(o.triple_data.orbit_sizes.begin(),
                                o.triple_data.orbit_sizes.end());
  CHECK(sizes == std::multiset<uint64_t>{105, 420, 840});
  CHECK(o.admitted_sizes == std::vector<uint64_t>{105, 420});

  CHECK(o.geometry.num_lines() == 525);
  std::map<uint64_t, int> per_size;
  for (uint64_t s : o.line_orbit_sizes) ++per_size[s];
  CHECK(per_size == std::map<uint64_t, int>{{105, 105}, {420, 420}});
  CHECK(o.spread.line_ids.size() == 105);
  for (uint32_t li : o.spread.line_ids) CHECK(o.line_orbit_sizes[li] == 105);
}

TEST_CASE("near octagon of order (2,4)") {
  const Geometry& g = octagon().geometry;
  auto order = order_of(g);
  REQUIRE(order.has_value());
  CHECK(*order == GeometryOrder{2, 4});

  auto np = verify_near_polygon(g);
  CHECK(np.ok);
  CHECK(np.diameter == 4);

  const std::vector<uint64_t> expected{1, 10, 48, 128, 128};
  for (uint16_t x = 0; x < g.num_points(); ++x)
    REQUIRE(point_distance_profile(g, x) == expected);

  CHECK(triangles_are_lines(g));
}

TEST_CASE("line selection matters") {
  // with all three triple orbits admitted the near polygon axiom fails
  InvolutionOctagon all = build_involution_octagon(group_g(), {105, 420, 840});
  CHECK(all.geometry.num_lines() == 1365);
  auto order = order_of(all.geometry);
  REQUIRE(order.has_value());
  CHECK(*order == GeometryOrder{2, 12});
  CHECK(!verify_near_polygon(all.geometry).ok);

  // the smallest orbit alone is a partition: not even connected
  CHECK_THROWS_AS(build_involution_octagon(group_g(), {105}), Error);
}

TEST_CASE("induced point action is faithful") {
  const InvolutionOctagon& o = octagon();
  static PermGroup induced = induced_point_group(o);
  CHECK(induced.order() == group_g().order());

  // generators really act by conjugation
  const Perm& h = group_g().generators()[0];
  const Perm& hx = induced.generators()[0];
  for (uint32_t i = 0; i < 315; i += 41) {
    uint32_t expected =
        o.point_of_element(group_g().index_of(o.involutions[i].conjugated_by(h)));
    CHECK(hx[uint16_t(i)] == expected);
  }

  // and they preserve the line set
  const Geometry& g = o.geometry;
  for (const Perm& gen : induced.generators())
    for (const auto& line : g.lines()) {
      std::vector<uint16_t> img{gen[line[0]], gen[line[1]], gen[line[2]]};
      std::sort(img.begin(), img.end());
      int32_t li = g.line_of_pair(img[0], img[1]);
      REQUIRE(li >= 0);
      CHECK(g.lines()[size_t(li)] == img);
    }

  SUBCASE("suborbit diagram matches the reference picture") {
    SuborbitDiagram d = suborbit_diagram(o.geometry, induced, 0);
    REQUIRE(d.orbits.size() == 8);
    DiagramMatch m = match_reference_diagram(o, d);
    INFO(m.detail);
    CHECK(m.ok);
    CHECK(m.orbit_names == std::vector<std::string>{"O0", "O1a", "O1b", "O2a", "O2b", "O3a",
                                                    "O3b", "O4"});
    CHECK(m.node_rows.size() == 8);
    CHECK(m.edge_rows.size() == 10);

    // transitivity: any other base gives the same picture
    SuborbitDiagram d2 = suborbit_diagram(o.geometry, induced, 123);
    DiagramMatch m2 = match_reference_diagram(o, d2);
    INFO(m2.detail);
    CHECK(m2.ok);
  }
}

TEST_CASE("every flag is fixed by exactly three points") {
  const InvolutionOctagon& o = octagon();
  std::vector<uint16_t> flags = point_flags(o);
  std::map<uint16_t, int> count;
  for (uint16_t f : flags) ++count[f];
  CHECK(count.size() == 105);
  for (auto [f, c] : count) CHECK(c == 3);
}

TEST_CASE("flag geometry of the plane") {
  Geometry h41 = h41_flag_geometry();
  CHECK(h41.num_points() == 105);
  CHECK(h41.num_lines() == 42);
  auto order = order_of(h41);
  REQUIRE(order.has_value());
  CHECK(*order == GeometryOrder{4, 1});
  CHECK(verify_generalized_polygon(h41, 6).ok);
  auto np = verify_near_polygon(h41);
  CHECK(np.ok);
  CHECK(np.diameter == 3);
}

TEST_CASE("quads, spread and quotient") {
  const InvolutionOctagon& o = octagon();
  const Geometry& g = o.geometry;
  auto quads = find_quads(g);
  REQUIRE(quads.size() == 42);

  std::vector<int> quads_of_point(g.num_points(), 0);
  for (const Quad& q : quads) {
    CHECK(q.points.size() == 15);
    CHECK(q.order == GeometryOrder{2, 2});
    CHECK(q.line_ids.size() == 15);
    for (uint16_t p : q.points) ++quads_of_point[p];
  }
  for (int c : quads_of_point) CHECK(c == 2);

  // the two quads through a point meet exactly in its spread line
  std::vector<uint32_t> spread_line_of(g.num_points(), UINT32_MAX);
  for (uint32_t li : o.spread.line_ids)
    for (uint16_t p : g.lines()[li]) spread_line_of[p] = li;
  for (uint16_t x = 0; x < g.num_points(); x += 29) {
    std::vector<const Quad*> through;
    for (const Quad& q : quads)
      if (std::binary_search(q.points.begin(), q.points.end(), x)) through.push_back(&q);
    REQUIRE(through.size() == 2);
    std::vector<uint16_t> common;
    std::set_intersection(through[0]->points.begin(), through[0]->points.end(),
                          through[1]->points.begin(), through[1]->points.end(),
                          std::back_inserter(common));
    CHECK(common == g.lines()[spread_line_of[x]]);
  }

  // lines lying in two quads = the smallest conjugation orbit
  Spread s = spread_from_quads(g, quads);
  CHECK(s.line_ids == o.spread.line_ids);

  Geometry quotient = quotient_geometry(g, s, quads);
  CHECK(quotient.num_points() == 105);
  CHECK(quotient.num_lines() == 42);
  auto order = order_of(quotient);
  REQUIRE(order.has_value());
  CHECK(*order == GeometryOrder{4, 1});
  CHECK(verify_generalized_polygon(quotient, 6).ok);

  SUBCASE("explicit isomorphism with the flag geometry") {
    QuotientFlagMap qm = quotient_flag_isomorphism(o, s, quotient);
    INFO(qm.detail);
    REQUIRE(qm.ok);
    std::set<uint16_t> distinct(qm.spread_flag.begin(), qm.spread_flag.end());
    CHECK(distinct.size() == 105);
    // generic search agrees that the two geometries are isomorphic
    CHECK(geometry_isomorphism(quotient, h41_flag_geometry()).has_value());
  }

  SUBCASE("every point-quad pair is classical") {
    for (uint16_t x = 0; x < g.num_points(); ++x)
      for (const Quad& q : quads) {
        auto r = classify_point_quad(g, x, q);
        REQUIRE(r.cls == PointQuadClass::Classical);
      }
  }

  SUBCASE("spread lines are pairwise parallel") {
    for (size_t i = 0; i < s.line_ids.size(); ++i)
      for (size_t j = i + 1; j < s.line_ids.size(); ++j)
        REQUIRE(lines_parallel(g, s.line_ids[i], s.line_ids[j]));
  }

  SUBCASE("spread census by distance from a point") {
    for (uint16_t x = 0; x < g.num_points(); x += 53) {
      std::map<int, int> census;
      for (uint32_t li : s.line_ids) {
        int d = INT16_MAX;
        for (uint16_t p : g.lines()[li]) d = std::min(d, g.dist(x, p));
        ++census[d];
      }
      CHECK(census == std::map<int, int>{{0, 1}, {1, 8}, {2, 32}, {3, 64}});
    }
  }
}
