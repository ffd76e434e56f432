#include "octalab/spread_family.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <string>

#include "octalab/parallel.hpp"

namespace octalab {

namespace {

const char* kClassName[8] = {"x", "G1'", "G1''", "G2'", "G2''", "G3'", "G3''", "G4"};

// a line type is (class of its unique nearest point, class of its far points),
// encoded as near * 8 + far
std::string type_name(int code) {
  return std::string("(") + kClassName[code / 8] + ", " + kClassName[code % 8] + ")";
}

constexpr int kAdmissible[10] = {0 * 8 + 1, 0 * 8 + 2, 1 * 8 + 3, 2 * 8 + 3, 2 * 8 + 4,
                                 3 * 8 + 5, 4 * 8 + 5, 4 * 8 + 6, 5 * 8 + 7, 6 * 8 + 7};

struct FamilyParams {
  uint64_t s = 0, t = 0, tp = 0;
};

std::map<int, uint64_t> drop_zero(std::map<int, uint64_t> m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

std::map<int, uint64_t> expected_census(const FamilyParams& p) {
  const uint64_t s = p.s, t = p.t, tp = p.tp, d = t - tp;
  return drop_zero({
      {0 * 8 + 1, 1},
      {0 * 8 + 2, t},
      {1 * 8 + 3, s * t},
      {2 * 8 + 3, s * t * tp},
      {2 * 8 + 4, s * t * d},
      {3 * 8 + 5, s * s * t * d},
      {4 * 8 + 5, s * s * t * d * tp},
      {4 * 8 + 6, s * s * t * d * d},
      {5 * 8 + 7, s * s * s * t * d * d},
      {6 * 8 + 7, s * s * s * tp * d * d * (t + 1 - t / tp)},
  });
}

std::map<int, uint64_t> expected_point_types(const FamilyParams& p, int cls) {
  const uint64_t t = p.t, tp = p.tp, d = t - tp, q = t / tp;
  switch (cls) {
    case 0: return drop_zero({{0 * 8 + 1, 1}, {0 * 8 + 2, t}});
    case 1: return drop_zero({{0 * 8 + 1, 1}, {1 * 8 + 3, t}});
    case 2: return drop_zero({{0 * 8 + 2, 1}, {2 * 8 + 3, tp}, {2 * 8 + 4, d}});
    case 3: return drop_zero({{1 * 8 + 3, 1}, {2 * 8 + 3, tp}, {3 * 8 + 5, d}});
    case 4: return drop_zero({{2 * 8 + 4, 1}, {4 * 8 + 5, tp}, {4 * 8 + 6, d}});
    case 5: return drop_zero({{3 * 8 + 5, 1}, {4 * 8 + 5, tp}, {5 * 8 + 7, d}});
    case 6: return drop_zero({{4 * 8 + 6, q}, {6 * 8 + 7, t + 1 - q}});
    default: return drop_zero({{5 * 8 + 7, q}, {6 * 8 + 7, t + 1 - q}});
  }
}

// empty string when the maps agree, otherwise the first discrepancy
std::string first_diff(const std::map<int, uint64_t>& got, const std::map<int, uint64_t>& want) {
  for (const auto& [code, cnt] : want) {
    auto it = got.find(code);
    uint64_t have = it == got.end() ? 0 : it->second;
    if (have != cnt)
      return std::to_string(have) + " lines of type " + type_name(code) + ", expected " +
             std::to_string(cnt);
  }
  for (const auto& [code, cnt] : got)
    if (!want.count(code))
      return std::to_string(cnt) + " lines of unexpected type " + type_name(code);
  return {};
}

int64_t spread_line_through(const Geometry& g, const Spread& s, uint16_t p) {
  int64_t found = -1;
  for (uint32_t lid : s.line_ids) {
    const auto& pts = g.line(lid);
    if (std::binary_search(pts.begin(), pts.end(), p)) {
      require(found < 0, "two spread lines pass through point ", p);
      found = int64_t(lid);
    }
  }
  return found;
}

// tags of the ten per-base-point report rows, in slot order
const char* kBaseTag[10] = {
    "family:sizes",       "family:p1",
    "family:p2",          "family:p3",
    "family:p4",          "family:line-types",
    "family:no-mixed-far-lines", "family:line-census",
    "family:line-multiplicities", "family:spread-census",
};

std::array<std::string, 10> check_base(const Geometry& g, const Spread& sp,
                                       const FamilyParams& prm, uint16_t base) {
  std::array<std::string, 10> out;
  auto set_fail = [&](int slot, const std::string& msg) {
    if (out[size_t(slot)].empty()) out[size_t(slot)] = "base " + std::to_string(base) + ": " + msg;
  };

  const GammaPartition part = gamma_partition(g, sp, base);
  const uint64_t s = prm.s, t = prm.t, tp = prm.tp, d = t - tp;
  const uint32_t n = g.num_points();

  const uint64_t expect_size[8] = {1,
                                   s,
                                   s * t,
                                   s * s * t,
                                   s * s * t * d,
                                   s * s * s * t * d,
                                   s * s * s * tp * d * d,
                                   s * s * s * s * tp * d * d};
  for (int c = 0; c < 8; ++c)
    if (part.members[size_t(c)].size() != expect_size[c])
      set_fail(0, std::string("|") + kClassName[c] + "| = " +
                      std::to_string(part.members[size_t(c)].size()) + ", expected " +
                      std::to_string(expect_size[c]));

  // literal axioms: count lines through each point that meet the target class
  auto meets_class = [&](uint16_t line_id, int8_t c) {
    for (uint16_t p : g.line(line_id))
      if (part.cls[p] == c) return true;
    return false;
  };
  struct Axiom {
    int slot;
    int from_cls;
    int8_t target;
    uint64_t expect;
    const char* what;
  };
  const Axiom axioms[4] = {
      {1, 3, 2, tp, "lines meeting G1''"},
      {2, 4, 2, 1, "lines meeting G1''"},
      {3, 5, 4, tp, "lines meeting G2''"},
      {4, 6, 4, t / tp, "lines meeting G2''"},
  };
  for (const Axiom& ax : axioms)
    for (uint16_t y : part.members[size_t(ax.from_cls)]) {
      uint64_t cnt = 0;
      for (uint16_t l : g.lines_through(y)) cnt += meets_class(l, ax.target);
      if (cnt != ax.expect) {
        set_fail(ax.slot, "point " + std::to_string(y) + " in " + kClassName[ax.from_cls] +
                              " lies on " + std::to_string(cnt) + " " + ax.what + ", expected " +
                              std::to_string(ax.expect));
        break;
      }
    }

  // classify every line; -1 = no admissible type
  const uint32_t m = g.num_lines();
  std::vector<int> line_type(m, -1);
  for (uint32_t l = 0; l < m; ++l) {
    const auto& pts = g.line(l);
    uint16_t nearest = pts[0];
    for (uint16_t p : pts)
      if (g.dist(base, p) < g.dist(base, nearest)) nearest = p;
    int far_cls = -1;
    bool mixed = false;
    for (uint16_t p : pts) {
      if (p == nearest) continue;
      if (far_cls < 0)
        far_cls = part.cls[p];
      else if (far_cls != part.cls[p])
        mixed = true;
    }
    if (mixed) {
      set_fail(5, "line " + std::to_string(l) + " has far points in more than one class");
      continue;
    }
    int code = part.cls[nearest] * 8 + far_cls;
    if (!std::count(std::begin(kAdmissible), std::end(kAdmissible), code)) {
      set_fail(5, "line " + std::to_string(l) + " has type " + type_name(code) +
                      ", not one of the ten admissible types");
      continue;
    }
    line_type[l] = code;
  }

  for (uint32_t l = 0; l < m; ++l) {
    bool has_far_prime = false, has_far_dprime = false;
    for (uint16_t p : g.line(l)) {
      has_far_prime |= part.cls[p] == 5;
      has_far_dprime |= part.cls[p] == 6;
    }
    if (has_far_prime && has_far_dprime) {
      set_fail(6, "line " + std::to_string(l) + " meets both G3' and G3''");
      break;
    }
  }

  std::map<int, uint64_t> census;
  for (uint32_t l = 0; l < m; ++l)
    if (line_type[l] >= 0) ++census[line_type[l]];
  if (std::string diff = first_diff(census, expected_census(prm)); !diff.empty())
    set_fail(7, diff);

  for (uint32_t y = 0; y < n && out[8].empty(); ++y) {
    std::map<int, uint64_t> got;
    bool untyped = false;
    for (uint16_t l : g.lines_through(uint16_t(y))) {
      if (line_type[l] < 0) untyped = true;
      ++got[line_type[l]];
    }
    if (untyped) {
      set_fail(8, "point " + std::to_string(y) + " lies on a line with no admissible type");
      break;
    }
    if (std::string diff = first_diff(got, expected_point_types(prm, part.cls[y])); !diff.empty())
      set_fail(8, "point " + std::to_string(y) + " in " + kClassName[part.cls[y]] + " sees " + diff);
  }

  std::map<int, uint64_t> spread_census;
  bool spread_untyped = false;
  for (uint32_t lid : sp.line_ids) {
    if (line_type[lid] < 0) {
      set_fail(9, "spread line " + std::to_string(lid) + " has no admissible type");
      spread_untyped = true;
      break;
    }
    ++spread_census[line_type[lid]];
  }
  if (!spread_untyped) {
    const std::map<int, uint64_t> want = drop_zero({
        {0 * 8 + 1, 1},
        {2 * 8 + 3, s * t},
        {4 * 8 + 5, s * s * t * d},
        {6 * 8 + 7, s * s * s * tp * d * d},
    });
    if (std::string diff = first_diff(spread_census, want); !diff.empty())
      set_fail(9, "among spread lines, " + diff);
  }

  return out;
}

}  // namespace

GammaPartition gamma_partition(const Geometry& g, const Spread& s, uint16_t base) {
  const uint32_t n = g.num_points();
  g.distances();  // materialized up front so parallel per-base callers only read
  int64_t lx = spread_line_through(g, s, base);
  require(lx >= 0, "no spread line through point ", base);

  GammaPartition part;
  part.cls.assign(n, -1);
  std::vector<char> mark(n, 0);
  for (uint16_t p : g.line(uint32_t(lx))) mark[p] = 1;

  for (uint32_t y = 0; y < n; ++y) {
    int dd = g.dist(base, uint16_t(y));
    require(dd >= 0 && dd <= 4, "point ", y, " is at distance ", dd, " from base ", base);
    if (dd == 0)
      part.cls[y] = 0;
    else if (dd == 1)
      part.cls[y] = mark[y] ? 1 : 2;
    else if (dd == 4)
      part.cls[y] = 7;
  }

  // distance 2 and 3: primed iff collinear with a primed point one step in
  auto split = [&](int dd, int8_t prev_prime, int8_t prime, int8_t dprime) {
    std::fill(mark.begin(), mark.end(), 0);
    for (uint32_t y = 0; y < n; ++y)
      if (part.cls[y] == prev_prime)
        for (uint16_t l : g.lines_through(uint16_t(y)))
          for (uint16_t q : g.line(l)) mark[q] = 1;
    for (uint32_t y = 0; y < n; ++y)
      if (part.cls[y] < 0 && g.dist(base, uint16_t(y)) == dd)
        part.cls[y] = mark[y] ? prime : dprime;
  };
  split(2, 1, 3, 4);
  split(3, 3, 5, 6);

  for (uint32_t y = 0; y < n; ++y) {
    require(part.cls[y] >= 0, "point ", y, " was left unclassified");
    part.members[size_t(part.cls[y])].push_back(uint16_t(y));
  }
  return part;
}

Report check_family(const Geometry& g, const Spread& sp, uint32_t t_prime, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  Report rep;
  rep.title = "spread family axioms";

  std::vector<std::string> problems;
  std::string why;
  const auto ord = order_of(g, &why);
  if (!ord)
    problems.push_back("no uniform order: " + why);
  else if (ord->s < 2)
    problems.push_back("s = " + std::to_string(ord->s) + ", need s >= 2");
  const NearPolygonCheck np = verify_near_polygon(g);
  if (!np.ok)
    problems.push_back("not a near polygon: " + np.witness);
  else if (np.diameter != 4)
    problems.push_back("diameter " + std::to_string(np.diameter) + ", expected 4");
  bool ids_ok = true;
  std::vector<uint32_t> cover(g.num_points(), 0);
  for (uint32_t lid : sp.line_ids) {
    if (lid >= g.num_lines()) {
      problems.push_back("spread line id " + std::to_string(lid) + " out of range");
      ids_ok = false;
      break;
    }
    for (uint16_t p : g.line(lid)) ++cover[p];
  }
  if (ids_ok)
    for (uint32_t p = 0; p < g.num_points(); ++p)
      if (cover[p] != 1) {
        problems.push_back("point " + std::to_string(p) + " lies on " + std::to_string(cover[p]) +
                           " spread lines, not 1");
        break;
      }
  if (ord && (t_prime == 0 || ord->t % t_prime != 0 || t_prime == ord->t))
    problems.push_back("t' = " + std::to_string(t_prime) + " must properly divide t = " +
                       std::to_string(ord->t));

  if (!problems.empty()) {
    std::string all = problems[0];
    for (size_t i = 1; i < problems.size(); ++i) all += "; " + problems[i];
    rep.add("family:preconditions", false, all);
    return rep;
  }

  const FamilyParams prm{ord->s, ord->t, t_prime};
  const std::string s_str = std::to_string(prm.s), t_str = std::to_string(prm.t),
                    tp_str = std::to_string(prm.tp), q_str = std::to_string(prm.t / prm.tp);
  rep.title = "spread family axioms (s=" + s_str + ", t=" + t_str + ", t'=" + tp_str + ")";
  rep.add("family:preconditions", true,
          "near octagon of order (" + s_str + ", " + t_str + ") with a " +
              std::to_string(sp.line_ids.size()) + "-line spread; t' = " + tp_str);

  const uint32_t n = g.num_points();
  g.distances();

  std::vector<std::array<std::string, 10>> slot(n);
  parallel_for(n, jobs, [&](size_t b) { slot[b] = check_base(g, sp, prm, uint16_t(b)); });

  std::string sizes_text = "class sizes (";
  {
    const uint64_t s = prm.s, t = prm.t, tp = prm.tp, d = t - tp;
    const uint64_t e[7] = {s,         s * t,         s * s * t,         s * s * t * d,
                           s * s * s * t * d, s * s * s * tp * d * d, s * s * s * s * tp * d * d};
    for (int i = 0; i < 7; ++i) sizes_text += (i ? ", " : "") + std::to_string(e[i]);
    sizes_text += ") at every base";
  }
  const std::string bases = " (" + std::to_string(n) + " bases)";
  const std::string tp_lines = tp_str + (prm.tp == 1 ? " line" : " lines");
  const std::string q_lines = q_str + (prm.t / prm.tp == 1 ? " line" : " lines");
  const std::string pass_detail[10] = {
      sizes_text,
      "every G2' point lies on exactly " + tp_lines + " meeting G1''" + bases,
      "every G2'' point lies on a unique line meeting G1''" + bases,
      "every G3' point lies on exactly " + tp_lines + " meeting G2''" + bases,
      "every G3'' point lies on exactly " + q_lines + " meeting G2''" + bases,
      "every line has one of the ten admissible types" + bases,
      "no line meets both G3' and G3''" + bases,
      "line counts per type match the census" + bases,
      "per-point line-type multiplicities all match" + bases,
      "spread lines have types (x, G1'), (G1'', G2'), (G2'', G3'), (G3'', G4) in the right counts" +
          bases,
  };
  for (int c = 0; c < 10; ++c) {
    uint64_t bad = 0;
    std::string first;
    for (uint32_t b = 0; b < n; ++b)
      if (!slot[b][size_t(c)].empty()) {
        if (bad == 0) first = slot[b][size_t(c)];
        ++bad;
      }
    if (bad == 0)
      rep.add(kBaseTag[c], true, pass_detail[c]);
    else
      rep.add(kBaseTag[c], false,
              std::to_string(bad) + " of " + std::to_string(n) + " bases fail; first: " + first);
  }

  // global structure rows
  const std::vector<Quad> quads = find_quads(g, jobs);
  {
    std::vector<uint32_t> per_point(n, 0);
    for (const Quad& q : quads)
      for (uint16_t p : q.points) ++per_point[p];
    const uint64_t want = prm.t / prm.tp;
    std::string msg;
    for (uint32_t p = 0; p < n && msg.empty(); ++p)
      if (per_point[p] != want)
        msg = "point " + std::to_string(p) + " lies on " + std::to_string(per_point[p]) +
              " quads, expected " + q_str;
    rep.add("family:quads-per-point", msg.empty(),
            msg.empty() ? std::to_string(quads.size()) + " quads, " + q_str + " through every point"
                        : msg);
  }
  {
    std::vector<std::string> bad(n);
    parallel_for(n, jobs, [&](size_t x) {
      for (size_t qi = 0; qi < quads.size(); ++qi)
        if (classify_point_quad(g, uint16_t(x), quads[qi]).cls != PointQuadClass::Classical) {
          bad[x] = "point " + std::to_string(x) + " is ovoidal to quad " + std::to_string(qi);
          return;
        }
    });
    std::string first;
    for (const std::string& msg : bad)
      if (!msg.empty()) {
        first = msg;
        break;
      }
    rep.add("family:classical", first.empty(),
            first.empty() ? "all " + std::to_string(size_t(n) * quads.size()) +
                                " point-quad pairs are classical"
                          : first);
  }
  {
    const size_t k = sp.line_ids.size();
    std::string msg;
    for (size_t i = 0; i < k && msg.empty(); ++i)
      for (size_t j = i + 1; j < k; ++j)
        if (!lines_parallel(g, sp.line_ids[i], sp.line_ids[j])) {
          msg = "spread lines " + std::to_string(sp.line_ids[i]) + " and " +
                std::to_string(sp.line_ids[j]) + " are not parallel";
          break;
        }
    rep.add("family:parallel-spread", msg.empty(),
            msg.empty() ? "all " + std::to_string(k * (k - 1) / 2) +
                              " spread line pairs are parallel"
                        : msg);
  }
  std::optional<Geometry> quot;
  std::string quot_err;
  try {
    quot.emplace(quotient_geometry(g, sp, quads));
  } catch (const Error& e) {
    quot_err = e.what();
  }
  if (!quot) {
    rep.add("family:quotient-distance", false, "no quotient geometry: " + quot_err);
    rep.add("family:quotient-hexagon", false, "no quotient geometry: " + quot_err);
  } else {
    const size_t k = sp.line_ids.size();
    std::string msg;
    for (size_t i = 0; i < k && msg.empty(); ++i)
      for (size_t j = i + 1; j < k; ++j) {
        int dmin = INT_MAX;
        for (uint16_t a : g.line(sp.line_ids[i]))
          for (uint16_t b : g.line(sp.line_ids[j])) dmin = std::min(dmin, g.dist(a, b));
        if (quot->dist(uint16_t(i), uint16_t(j)) != dmin) {
          msg = "spread lines " + std::to_string(sp.line_ids[i]) + " and " +
                std::to_string(sp.line_ids[j]) + ": quotient distance " +
                std::to_string(quot->dist(uint16_t(i), uint16_t(j))) +
                " but nearest points are " + std::to_string(dmin) + " apart";
          break;
        }
      }
    rep.add("family:quotient-distance", msg.empty(),
            msg.empty() ? "quotient distance equals nearest-point distance for every pair" : msg);

    std::string qwhy;
    const auto qord = order_of(*quot, &qwhy);
    const GeometryOrder want{uint32_t(prm.s * prm.tp), uint32_t(prm.t / prm.tp - 1)};
    const GenPolygonCheck hex = verify_generalized_polygon(*quot, 6);
    std::string detail;
    if (!qord)
      detail = "quotient has no uniform order: " + qwhy;
    else if (!(*qord == want))
      detail = "quotient order (" + std::to_string(qord->s) + ", " + std::to_string(qord->t) +
               "), expected (" + std::to_string(want.s) + ", " + std::to_string(want.t) + ")";
    else if (!hex.ok)
      detail = "quotient is not a generalized hexagon: " + hex.detail;
    else
      detail = "quotient is a generalized hexagon of order (" + std::to_string(want.s) + ", " +
               std::to_string(want.t) + ")";
    rep.add("family:quotient-hexagon", qord && *qord == want && hex.ok, detail);
  }
  {
    std::string msg;
    try {
      if (spread_from_quads(g, quads).line_ids != sp.line_ids)
        msg = "lines lying in two quads differ from the given spread";
    } catch (const Error& e) {
      msg = e.what();
    }
    rep.add("family:spread-vs-quads", msg.empty(),
            msg.empty() ? "lines lying in at least two quads are exactly the spread" : msg);
  }
  if (prm.tp == 1) {
    const std::string side = std::to_string(prm.s + 1);
    const GeometryOrder want{uint32_t(prm.s), 1};
    std::string msg;
    for (size_t qi = 0; qi < quads.size() && msg.empty(); ++qi)
      if (!(quads[qi].order == want) || quads[qi].points.size() != (prm.s + 1) * (prm.s + 1))
        msg = "quad " + std::to_string(qi) + " is not a " + side + "x" + side + " grid";
    rep.add("family:grid-quads", msg.empty(),
            msg.empty() ? "every quad is a " + side + "x" + side + " grid" : msg);
  }
  return rep;
}

Geometry fano_flag_geometry() {
  static const uint16_t kFano[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                       {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  std::vector<std::pair<uint16_t, uint16_t>> flags;  // (point, line), lexicographic
  for (uint16_t p = 0; p < 7; ++p)
    for (uint16_t l = 0; l < 7; ++l)
      if (std::count(std::begin(kFano[l]), std::end(kFano[l]), p)) flags.push_back({p, l});

  std::vector<std::vector<uint16_t>> lines;
  for (uint16_t p = 0; p < 7; ++p) {
    std::vector<uint16_t> pencil;
    for (uint16_t f = 0; f < flags.size(); ++f)
      if (flags[f].first == p) pencil.push_back(f);
    lines.push_back(std::move(pencil));
  }
  for (uint16_t l = 0; l < 7; ++l) {
    std::vector<uint16_t> pencil;
    for (uint16_t f = 0; f < flags.size(); ++f)
      if (flags[f].second == l) pencil.push_back(f);
    lines.push_back(std::move(pencil));
  }
  return Geometry(uint32_t(flags.size()), std::move(lines));
}

std::pair<Geometry, Spread> build_product(const Geometry& h, uint32_t line_size) {
  std::string why;
  const auto ord = order_of(h, &why);
  require(ord.has_value(), "factor has no uniform order: ", why);
  require(line_size == ord->s + 1, "line size ", line_size, " does not match the factor order (",
          ord->s, ", ", ord->t, "); expected ", ord->s + 1);
  const GenPolygonCheck gp = verify_generalized_polygon(h, 6);
  require(gp.ok, "factor is not a generalized hexagon: ", gp.detail);

  const uint32_t hp = h.num_points(), levels = line_size;
  require(uint64_t(hp) * levels <= 0xffff, "product would exceed the 16-bit point range");

  std::vector<std::vector<uint16_t>> lines;
  for (uint32_t l = 0; l < h.num_lines(); ++l)
    for (uint32_t k = 0; k < levels; ++k) {
      std::vector<uint16_t> pts;
      for (uint16_t p : h.line(l)) pts.push_back(uint16_t(p * levels + k));
      lines.push_back(std::move(pts));
    }
  Spread sp;
  for (uint32_t p = 0; p < hp; ++p) {
    std::vector<uint16_t> fiber;
    for (uint32_t k = 0; k < levels; ++k) fiber.push_back(uint16_t(p * levels + k));
    sp.line_ids.push_back(uint32_t(lines.size()));
    lines.push_back(std::move(fiber));
  }
  return {Geometry(hp * levels, std::move(lines)), sp};
}

ProductDecomposition recognize_product(const Geometry& g, const Spread& sp) {
  ProductDecomposition out;
  if (!check_family(g, sp, 1).all_pass()) {
    out.detail = "the t'=1 axioms do not hold; product recognition is not applicable";
    return out;
  }

  const auto& lstar = g.line(sp.line_ids[0]);
  const uint32_t levels = uint32_t(lstar.size());
  const uint32_t n = g.num_points();

  out.level.assign(n, 0);
  for (uint32_t y = 0; y < n; ++y) {
    int best = INT_MAX, hits = 0, arg = 0;
    for (uint32_t k = 0; k < levels; ++k) {
      int d = g.dist(uint16_t(y), lstar[k]);
      if (d < best) {
        best = d;
        hits = 1;
        arg = int(k);
      } else if (d == best) {
        ++hits;
      }
    }
    require(hits == 1, "point ", y, " has ", hits, " nearest points on the reference spread line");
    out.level[y] = uint16_t(arg);
  }

  // each level class must be a subspace: a line with two points at one level
  // lies entirely at that level
  for (uint32_t l = 0; l < g.num_lines(); ++l) {
    const auto& pts = g.line(l);
    bool constant = true, distinct = true;
    std::vector<char> seen(levels, 0);
    for (uint16_t p : pts) {
      constant &= out.level[p] == out.level[pts[0]];
      if (seen[out.level[p]]) distinct = false;
      seen[out.level[p]] = 1;
    }
    require(constant || distinct, "level classes are not subspaces: line ", l,
            " meets one twice without lying inside it");
  }

  // the hexagon copy at level 0
  std::vector<uint16_t> h0;
  std::vector<int32_t> hx_index(n, -1);
  for (uint32_t y = 0; y < n; ++y)
    if (out.level[y] == 0) {
      hx_index[y] = int32_t(h0.size());
      h0.push_back(uint16_t(y));
    }
  std::vector<std::vector<uint16_t>> hex_lines;
  for (uint32_t l = 0; l < g.num_lines(); ++l) {
    const auto& pts = g.line(l);
    if (std::all_of(pts.begin(), pts.end(), [&](uint16_t p) { return out.level[p] == 0; })) {
      std::vector<uint16_t> mapped;
      for (uint16_t p : pts) mapped.push_back(uint16_t(hx_index[p]));
      hex_lines.push_back(std::move(mapped));
    }
  }
  Geometry hex(uint32_t(h0.size()), std::move(hex_lines));

  const auto gord = order_of(g, nullptr);
  std::string why;
  const auto hord = order_of(hex, &why);
  require(hord.has_value(), "level-0 copy has no uniform order: ", why);
  require(hord->s == gord->s && hord->t + 1 == gord->t, "level-0 copy has order (", hord->s, ", ",
          hord->t, "), expected (", gord->s, ", ", gord->t - 1, ")");
  const GenPolygonCheck gp = verify_generalized_polygon(hex, 6);
  require(gp.ok, "level-0 copy is not a generalized hexagon: ", gp.detail);

  std::vector<uint32_t> spread_of(n, 0);
  for (uint32_t lid : sp.line_ids)
    for (uint16_t p : g.line(lid)) spread_of[p] = lid;

  out.shadow.assign(n, 0);
  std::vector<char> seen_cell(size_t(h0.size()) * levels, 0);
  for (uint32_t y = 0; y < n; ++y) {
    int32_t sh = -1;
    for (uint16_t p : g.line(spread_of[y]))
      if (out.level[p] == 0) {
        require(sh < 0, "spread line ", spread_of[y], " meets the level-0 copy twice");
        sh = hx_index[p];
      }
    require(sh >= 0, "spread line ", spread_of[y], " misses the level-0 copy");
    out.shadow[y] = uint16_t(sh);
    char& cell = seen_cell[size_t(sh) * levels + out.level[y]];
    require(!cell, "two points share shadow ", sh, " and level ", out.level[y]);
    cell = 1;
  }
  require(size_t(h0.size()) * levels == n, "shadow-level grid does not cover the point set");

  // every line is either a spread fiber or a hexagon line at one level
  for (uint32_t l = 0; l < g.num_lines(); ++l) {
    const auto& pts = g.line(l);
    bool level_const = true;
    for (uint16_t p : pts) level_const &= out.level[p] == out.level[pts[0]];
    if (level_const) {
      std::vector<uint16_t> sh;
      for (uint16_t p : pts) sh.push_back(out.shadow[p]);
      std::sort(sh.begin(), sh.end());
      int32_t hl = hex.line_of_pair(sh[0], sh[1]);
      require(hl >= 0 && hex.line(uint32_t(hl)) == sh, "line ", l,
              " does not project onto a hexagon line");
    } else {
      bool shadow_const = true;
      for (uint16_t p : pts) shadow_const &= out.shadow[p] == out.shadow[pts[0]];
      require(shadow_const, "line ", l, " crosses levels without following a spread fiber");
      require(std::binary_search(sp.line_ids.begin(), sp.line_ids.end(), l), "line ", l,
              " follows a fiber but is not a spread line");
    }
  }

  out.ok = true;
  out.detail = "product of a generalized hexagon of order (" + std::to_string(hord->s) + ", " +
               std::to_string(hord->t) + ") with a line of size " + std::to_string(levels) + "; " +
               std::to_string(levels) + " hexagon copies of " + std::to_string(h0.size()) +
               " points";
  out.hexagon.emplace(std::move(hex));
  return out;
}

}  // namespace octalab
