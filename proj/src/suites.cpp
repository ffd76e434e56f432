#include "octalab/suites.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "octalab/graph_aut.hpp"
#include "octalab/parallel.hpp"

namespace octalab {

namespace {

template <typename Seq>
std::string seq_string(const Seq& v) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& x : v) {
    if (!first) os << ", ";
    os << uint64_t(x);
    first = false;
  }
  os << ')';
  return os.str();
}

std::string hex16(uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace

Workbench::Workbench(std::string cache_dir, uint64_t budget, int jobs)
    : plane_(ProjectivePlane::pg24()),
      cache_dir_(std::move(cache_dir)),
      budget_(budget),
      jobs_(jobs) {}

PermGroup Workbench::load_or_build(const std::string& name,
                                   std::shared_ptr<const Domain> domain,
                                   std::vector<Perm> gens) {
  const uint64_t want = generator_list_hash(gens);
  std::filesystem::path file;
  if (!cache_dir_.empty()) {
    file = std::filesystem::path(cache_dir_) / (name + "-" + hex16(want) + ".grp");
    if (std::filesystem::exists(file)) {
      try {
        std::ifstream is(file, std::ios::binary);
        PermGroup cached = PermGroup::load(is);
        if (cached.generator_hash() == want && cached.domain().size() == domain->size())
          return cached;
        std::cerr << "octalab: cache file " << file.string()
                  << " was built from different generators; rebuilding\n";
      } catch (const std::exception& e) {
        std::cerr << "octalab: cache file " << file.string() << " is unreadable (" << e.what()
                  << "); rebuilding\n";
      }
    }
  }
  PermGroup grp = PermGroup::closure(std::move(domain), std::move(gens), budget_);
  if (!file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    std::ofstream os(file, std::ios::binary | std::ios::trunc);
    if (os) grp.save(os);
    if (!os) std::cerr << "octalab: could not write cache file " << file.string() << "\n";
  }
  return grp;
}

const PermGroup& Workbench::l34() {
  if (!l34_) l34_ = load_or_build("l34", plane_domain(plane_), transvection_generators(plane_));
  return *l34_;
}

const PermGroup& Workbench::g() {
  if (!g_) g_ = load_or_build("g", plane_domain(plane_), full_group_generators(plane_));
  return *g_;
}

const InvolutionOctagon& Workbench::octagon() {
  if (!octagon_) octagon_ = build_involution_octagon(g());
  return *octagon_;
}

const PermGroup& Workbench::induced() {
  if (!induced_) induced_ = induced_point_group(octagon(), budget_);
  return *induced_;
}

Report group_suite(Workbench& w) {
  Report rep;
  rep.title = "plane collineation groups";
  const PermGroup& l = w.l34();
  const PermGroup& G = w.g();

  rep.add("group:l34-order", l.order() == 20160,
          l.order() == 20160 ? "order 20160 from the 12 transvection generators"
                             : "order " + std::to_string(l.order()) + ", expected 20160");

  bool g_ok = G.order() == 80640 && G.order() == 4 * l.order();
  rep.add("group:g-order", g_ok,
          g_ok ? "order 80640, index 4 over the transvection subgroup"
               : "order " + std::to_string(G.order()) + ", expected 80640 = 4 x " +
                     std::to_string(l.order()));

  bool inside = true;
  for (const Perm& p : l.generators())
    if (!G.contains(p)) inside = false;
  rep.add("group:l34-inside-g", inside,
          inside ? "all 12 transvection generators lie in the full group"
                 : "a transvection generator is missing from the full group");

  Flag f = w.plane().flags()[0];
  size_t big = flag_orbit_size(w.plane(), G, f);
  size_t small = flag_orbit_size(w.plane(), l, f);
  rep.add("group:flag-transitive", big == 105 && small == 105,
          big == 105 && small == 105
              ? "both groups are transitive on the 105 flags"
              : "flag orbit sizes " + std::to_string(big) + " and " + std::to_string(small) +
                    ", expected 105 for both");

  std::vector<Perm> inv = G.central_involutions();
  size_t cls = inv.empty() ? 0 : G.conjugacy_class(inv[0]).size();
  uint64_t cent = inv.empty() ? 0 : G.centralizer_order(inv[0]);
  bool inv_ok = inv.size() == 315 && cls == 315 && cent == 256;
  rep.add("group:central-involutions", inv_ok,
          inv_ok ? "315 central involutions in one conjugacy class, centralizer order 256"
                 : std::to_string(inv.size()) + " central involutions, class size " +
                       std::to_string(cls) + ", centralizer order " + std::to_string(cent));
  return rep;
}

Report octagon_suite(Workbench& w) {
  Report rep;
  rep.title = "involution near octagon";
  const InvolutionOctagon& o = w.octagon();
  const Geometry& g = o.geometry;

  bool pts = g.num_points() == 315 && o.involutions.size() == 315;
  rep.add("octagon:points", pts,
          pts ? "315 points, one per central involution"
              : std::to_string(g.num_points()) + " points from " +
                    std::to_string(o.involutions.size()) + " involutions, expected 315");

  std::vector<uint64_t> sizes = o.triple_data.orbit_sizes;
  std::sort(sizes.begin(), sizes.end());
  bool triples = o.triple_data.triples.size() == 1365 &&
                 sizes == std::vector<uint64_t>{105, 420, 840} &&
                 o.admitted_sizes == std::vector<uint64_t>{105, 420};
  rep.add("octagon:triples", triples,
          triples ? "1365 commuting triples in orbits of sizes 105, 420, 840; the 105 and "
                    "420 orbits become lines"
                  : std::to_string(o.triple_data.triples.size()) + " triples, orbit sizes " +
                        seq_string(sizes) + ", admitted " + seq_string(o.admitted_sizes));

  size_t small_lines = 0, large_lines = 0;
  for (uint64_t s : o.line_orbit_sizes) {
    if (s == 105) ++small_lines;
    if (s == 420) ++large_lines;
  }
  bool lines = g.num_lines() == 525 && small_lines == 105 && large_lines == 420;
  rep.add("octagon:lines", lines,
          lines ? "525 lines: 105 in the small conjugation orbit, 420 in the large"
                : std::to_string(g.num_lines()) + " lines, split " +
                      std::to_string(small_lines) + " + " + std::to_string(large_lines));

  std::string why;
  auto ord = order_of(g, &why);
  bool ord_ok = ord && ord->s == 2 && ord->t == 4;
  rep.add("octagon:order", ord_ok,
          ord_ok ? "order (2, 4): 3 points per line, 5 lines per point"
                 : (ord ? "order (" + std::to_string(ord->s) + ", " + std::to_string(ord->t) +
                              "), expected (2, 4)"
                        : why));

  NearPolygonCheck np = verify_near_polygon(g);
  bool np_ok = np.ok && np.diameter == 4;
  rep.add("octagon:near-polygon", np_ok,
          np_ok ? "near polygon of diameter 4"
                : (np.ok ? "diameter " + std::to_string(np.diameter) + ", expected 4"
                         : np.witness));

  const std::vector<uint64_t> want_profile{1, 10, 48, 128, 128};
  std::string profile_fail;
  for (uint16_t x = 0; x < g.num_points() && profile_fail.empty(); ++x) {
    std::vector<uint64_t> prof = point_distance_profile(g, x);
    if (prof != want_profile)
      profile_fail = "point " + std::to_string(x) + " has profile " + seq_string(prof);
  }
  rep.add("octagon:distance-profile", profile_fail.empty(),
          profile_fail.empty() ? "distance profile (1, 10, 48, 128, 128) from every point"
                               : profile_fail);

  std::string tri_witness;
  bool tri = triangles_are_lines(g, &tri_witness);
  rep.add("octagon:triangles-are-lines", tri,
          tri ? "every triangle of the collinearity graph spans a line" : tri_witness);

  uint64_t ind_order = w.induced().order();
  rep.add("octagon:induced-action", ind_order == 80640 && ind_order == w.g().order(),
          ind_order == 80640
              ? "conjugation acts faithfully on the points (induced order 80640)"
              : "induced action has order " + std::to_string(ind_order) + ", expected 80640");

  std::vector<uint16_t> flags = point_flags(o);
  std::vector<uint32_t> per_flag(105, 0);
  bool fiber_range = true;
  for (uint16_t f : flags) {
    if (f >= per_flag.size()) {
      fiber_range = false;
      break;
    }
    ++per_flag[f];
  }
  bool fibers = fiber_range && std::all_of(per_flag.begin(), per_flag.end(),
                                           [](uint32_t c) { return c == 3; });
  rep.add("octagon:elation-fibers", fibers,
          fibers ? "each of the 105 center-axis flags comes from exactly 3 points"
                 : "fixed flags do not split the points into 105 fibers of 3");
  return rep;
}

SuborbitArtifacts suborbit_artifacts(Workbench& w) {
  SuborbitArtifacts art;
  art.diagram = suborbit_diagram(w.octagon().geometry, w.induced(), 0);
  art.match = match_reference_diagram(w.octagon(), art.diagram);
  return art;
}

Report suborbit_suite(const SuborbitArtifacts& art) {
  Report rep;
  rep.title = "point stabilizer orbits";

  std::vector<uint64_t> sizes;
  for (const auto& orbit : art.diagram.orbits) sizes.push_back(orbit.size());
  std::vector<uint64_t> dists(art.diagram.orbit_distance.begin(),
                              art.diagram.orbit_distance.end());
  bool shape = sizes == std::vector<uint64_t>{1, 2, 8, 16, 32, 64, 64, 128} &&
               dists == std::vector<uint64_t>{0, 1, 1, 2, 2, 3, 3, 4};
  rep.add("suborbits:orbits", shape,
          shape ? "8 orbits of sizes (1, 2, 8, 16, 32, 64, 64, 128) at distances "
                  "(0, 1, 1, 2, 2, 3, 3, 4)"
                : "orbit sizes " + seq_string(sizes) + " at distances " + seq_string(dists));

  bool classes = art.diagram.line_classes.size() == 10;
  rep.add("suborbits:line-classes", classes,
          classes ? "10 line classes across the diagram"
                  : std::to_string(art.diagram.line_classes.size()) +
                        " line classes, expected 10");

  rep.add("suborbits:diagram", art.match.ok,
          art.match.ok ? "matches the embedded reference diagram cell for cell"
                       : art.match.detail);
  return rep;
}

Report suborbit_suite(Workbench& w) { return suborbit_suite(suborbit_artifacts(w)); }

Report quads_suite(Workbench& w) {
  Report rep;
  rep.title = "quads, spread, quotient";
  const InvolutionOctagon& o = w.octagon();
  const Geometry& g = o.geometry;
  const int jobs = w.jobs() > 0 ? w.jobs() : default_jobs();

  std::vector<Quad> quads = find_quads(g, jobs);
  bool count_ok = quads.size() == 42;
  for (const Quad& q : quads)
    count_ok = count_ok && q.points.size() == 15 && q.line_ids.size() == 15 &&
               q.order == GeometryOrder{2, 2};
  rep.add("quads:count", count_ok,
          count_ok ? "42 quads, each a generalized quadrangle of order (2, 2) on 15 points"
                   : std::to_string(quads.size()) + " quads or wrong quad shape");

  std::vector<uint32_t> spread_of(g.num_points(), UINT32_MAX);
  for (uint32_t sl : o.spread.line_ids)
    for (uint16_t p : g.line(sl)) spread_of[p] = sl;

  std::vector<std::vector<uint32_t>> quads_at(g.num_points());
  for (uint32_t qi = 0; qi < quads.size(); ++qi)
    for (uint16_t p : quads[qi].points) quads_at[p].push_back(qi);
  std::string pp_fail;
  for (uint16_t x = 0; x < g.num_points() && pp_fail.empty(); ++x) {
    if (quads_at[x].size() != 2) {
      pp_fail = "point " + std::to_string(x) + " lies on " +
                std::to_string(quads_at[x].size()) + " quads";
      break;
    }
    const auto& a = quads[quads_at[x][0]].points;
    const auto& b = quads[quads_at[x][1]].points;
    std::vector<uint16_t> meet;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
    if (spread_of[x] == UINT32_MAX || meet != g.line(spread_of[x]))
      pp_fail = "the two quads through point " + std::to_string(x) +
                " do not meet exactly in its spread line";
  }
  rep.add("quads:per-point", pp_fail.empty(),
          pp_fail.empty() ? "2 quads through every point, meeting exactly in its spread line"
                          : pp_fail);

  std::string spread_detail = "pairwise quad intersections recover the 105-line spread";
  bool spread_ok = false;
  try {
    spread_ok = spread_from_quads(g, quads).line_ids == o.spread.line_ids;
    if (!spread_ok) spread_detail = "recovered spread differs from the admitted small orbit";
  } catch (const Error& e) {
    spread_detail = e.what();
  }
  rep.add("quads:spread", spread_ok, spread_detail);

  std::vector<uint8_t> classical(g.num_points(), 0);
  parallel_for(g.num_points(), jobs, [&](size_t x) {
    bool all = true;
    for (const Quad& q : quads)
      if (classify_point_quad(g, uint16_t(x), q).cls != PointQuadClass::Classical) all = false;
    classical[x] = all ? 1 : 0;
  });
  size_t classical_pts = size_t(std::count(classical.begin(), classical.end(), uint8_t(1)));
  rep.add("quads:classical", classical_pts == g.num_points(),
          classical_pts == g.num_points()
              ? "all 13230 point-quad pairs are classical"
              : std::to_string(g.num_points() - classical_pts) + " points see an ovoidal quad");

  size_t parallel_pairs = 0;
  for (size_t i = 0; i < o.spread.line_ids.size(); ++i)
    for (size_t j = i + 1; j < o.spread.line_ids.size(); ++j)
      if (lines_parallel(g, o.spread.line_ids[i], o.spread.line_ids[j])) ++parallel_pairs;
  bool par_ok = parallel_pairs == 5460;
  rep.add("quads:parallel-spread", par_ok,
          par_ok ? "all 5460 spread-line pairs are parallel"
                 : std::to_string(5460 - parallel_pairs) + " spread-line pairs not parallel");

  std::string quo_detail;
  std::optional<Geometry> quo;
  try {
    quo = quotient_geometry(g, o.spread, quads);
    auto qord = order_of(*quo);
    GenPolygonCheck gp = verify_generalized_polygon(*quo, 6);
    bool ok = quo->num_points() == 105 && quo->num_lines() == 42 && qord &&
              qord->s == 4 && qord->t == 1 && gp.ok;
    quo_detail = ok ? "quotient on the spread is a generalized hexagon of order (4, 1)"
                    : "quotient has " + std::to_string(quo->num_points()) + " points, " +
                          std::to_string(quo->num_lines()) + " lines; " + gp.detail;
    rep.add("quads:quotient", ok, quo_detail);
  } catch (const Error& e) {
    rep.add("quads:quotient", false, e.what());
  }

  if (quo) {
    QuotientFlagMap qfm = quotient_flag_isomorphism(o, o.spread, *quo);
    rep.add("quads:quotient-flag-isomorphism", qfm.ok,
            qfm.ok ? "every spread fiber owns one plane flag, and fibers map onto the "
                     "flag geometry"
                   : qfm.detail);
    bool generic = geometry_isomorphism(*quo, h41_flag_geometry()).has_value();
    rep.add("quads:generic-isomorphism", generic,
            generic ? "isomorphism search confirms the quotient is the flag geometry"
                    : "no isomorphism with the flag geometry found");
  } else {
    rep.add("quads:quotient-flag-isomorphism", false, "no quotient geometry to map");
    rep.add("quads:generic-isomorphism", false, "no quotient geometry to search");
  }
  return rep;
}

std::vector<Report> family_suites(Workbench& w, const std::string& instance) {
  require(instance == "o2" || instance == "product" || instance == "all",
          "unknown family instance '", instance, "' (expected o2, product, or all)");
  const int jobs = w.jobs() > 0 ? w.jobs() : default_jobs();
  std::vector<Report> out;

  if (instance == "o2" || instance == "all") {
    const InvolutionOctagon& o = w.octagon();
    Report rep = check_family(o.geometry, o.spread, 2, jobs);
    rep.title += " - octagon instance";
    out.push_back(std::move(rep));
  }

  if (instance == "product" || instance == "all") {
    Geometry hex = fano_flag_geometry();
    auto [pg, psp] = build_product(hex, 3);
    Report rep = check_family(pg, psp, 1, jobs);
    rep.title += " - product instance";

    ProductDecomposition dec = recognize_product(pg, psp);
    rep.add("family:recognize-product", dec.ok, dec.detail);
    bool factor = dec.hexagon && geometry_isomorphism(*dec.hexagon, hex).has_value();
    rep.add("family:hexagon-factor", factor,
            factor ? "recovered hexagon factor is isomorphic to the 7-point flag geometry"
                   : "recovered factor does not match the 7-point flag geometry");
    out.push_back(std::move(rep));
  }
  return out;
}

Report aut_suite(Workbench& w, uint64_t seed) {
  Report rep;
  rep.title = "collinearity graph automorphisms";
  const InvolutionOctagon& o = w.octagon();

  std::string tri_witness;
  bool tri = triangles_are_lines(o.geometry, &tri_witness);
  rep.add("aut:triangles-are-lines", tri,
          tri ? "graph and geometry automorphisms coincide (every triangle spans a line)"
              : tri_witness);

  Graph cg = collinearity_graph(o.geometry);
  AutGroupResult ar = automorphism_group(cg, {}, w.budget());
  rep.add("aut:order", ar.order == 80640,
          ar.order == 80640
              ? "automorphism group of the collinearity graph has order 80640"
              : "automorphism group has order " + std::to_string(ar.order) +
                    ", expected 80640");

  const PermGroup& ind = w.induced();
  bool image = ind.order() == 80640 && ind.order() == ar.order;
  for (const Perm& p : ind.generators())
    if (!ar.group.contains(p)) image = false;
  rep.add("aut:conjugation-image", image,
          image ? "conjugation is injective and fills all 80640 automorphisms"
                : "conjugation image does not match the automorphism group");

  std::vector<uint16_t> images(cg.num_vertices());
  std::iota(images.begin(), images.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(images.begin(), images.end(), rng);
  Graph relabeled = apply_relabeling(cg, Perm::from_images(std::move(images)));
  AutGroupResult ar2 = automorphism_group(relabeled, {}, w.budget());
  bool stable = ar2.order == 80640 && graph_isomorphism(relabeled, cg).has_value();
  rep.add("aut:relabel-invariance", stable,
          stable ? "order 80640 and isomorphism class survive relabeling (seed " +
                       std::to_string(seed) + ")"
                 : "relabeled graph has order " + std::to_string(ar2.order) +
                       " (seed " + std::to_string(seed) + ")");
  return rep;
}

GewirtzArtifacts gewirtz_artifacts(Workbench& w) {
  return gewirtz_artifacts(w.plane(), w.l34(), w.octagon(), w.jobs());
}

Report gewirtz_report(Workbench& w) {
  return gewirtz_suite(w.plane(), w.l34(), w.octagon(), w.jobs());
}

std::vector<Report> all_suites(Workbench& w, uint64_t seed) {
  std::vector<Report> out;
  out.push_back(group_suite(w));
  out.push_back(octagon_suite(w));
  out.push_back(suborbit_suite(w));
  out.push_back(quads_suite(w));
  for (Report& r : family_suites(w, "all")) out.push_back(std::move(r));
  out.push_back(aut_suite(w, seed));
  out.push_back(gewirtz_report(w));
  return out;
}

}  // namespace octalab
