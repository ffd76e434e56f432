#include "octalab/pg24.hpp"

#include <algorithm>
#include <map>

namespace octalab {

namespace {

std::vector<Vec3> normalized_triples() {
  std::vector<Vec3> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        Vec3 v{Gf4(a), Gf4(b), Gf4(c)};
        if (vec_is_zero(v)) continue;
        if (normalize(v) == v) out.push_back(v);
      }
  return out;  // already in lexicographic order by construction
}

}  // namespace

ProjectivePlane::ProjectivePlane() {
  points_ = normalized_triples();
  lines_ = points_;  // same normalized coordinate set, read as line coordinates
  require(points_.size() == 21, "PG(2,4) must have 21 points, got ", points_.size());

  const size_t np = points_.size(), nl = lines_.size();
  lines_through_.assign(np, {});
  points_on_.assign(nl, {});
  for (uint16_t p = 0; p < np; ++p)
    for (uint16_t l = 0; l < nl; ++l)
      if (incident(p, l)) {
        lines_through_[p].push_back(l);
        points_on_[l].push_back(p);
      }
  for (auto& v : lines_through_) require(v.size() == 5, "every point must lie on 5 lines");
  for (auto& v : points_on_) require(v.size() == 5, "every line must carry 5 points");

  line_of_pair_.assign(np, std::vector<int16_t>(np, -1));
  for (uint16_t l = 0; l < nl; ++l)
    for (uint16_t a : points_on_[l])
      for (uint16_t b : points_on_[l])
        if (a != b) {
          require(line_of_pair_[a][b] == -1, "two points on two common lines");
          line_of_pair_[a][b] = int16_t(l);
        }

  for (uint16_t p = 0; p < np; ++p)
    for (uint16_t l : lines_through_[p]) flags_.push_back({p, l});
  std::sort(flags_.begin(), flags_.end());
  require(flags_.size() == 105, "PG(2,4) must have 105 flags");

  // Arc extension: grow index-increasing point sets keeping every line
  // load <= 2 chosen points; a completed 6-set is a hyperoval.
  std::vector<uint8_t> line_load(nl, 0);
  std::array<uint16_t, 6> cur{};
  auto extend = [&](auto&& self, int depth, uint16_t start) -> void {
    if (depth == 6) {
      hyperovals_.push_back(cur);
      return;
    }
    for (uint16_t p = start; p < np; ++p) {
      bool ok = true;
      for (uint16_t l : lines_through_[p])
        if (line_load[l] >= 2) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (uint16_t l : lines_through_[p]) ++line_load[l];
      cur[depth] = p;
      self(self, depth + 1, uint16_t(p + 1));
      for (uint16_t l : lines_through_[p]) --line_load[l];
    }
  };
  extend(extend, 0, 0);
  require(hyperovals_.size() == 168, "PG(2,4) must have 168 hyperovals, got ",
          hyperovals_.size());
}

const ProjectivePlane& ProjectivePlane::pg24() {
  static const ProjectivePlane plane;
  return plane;
}

uint16_t ProjectivePlane::point_index(const Vec3& v) const {
  Vec3 n = normalize(v);
  auto it = std::lower_bound(points_.begin(), points_.end(), n);
  require(it != points_.end() && *it == n, "coordinates not in the plane: ", vec_str(v));
  return uint16_t(it - points_.begin());
}

uint16_t ProjectivePlane::line_index(const Vec3& v) const { return point_index(v); }

uint16_t ProjectivePlane::line_through(uint16_t p, uint16_t q) const {
  require(p != q, "line_through needs two distinct points");
  int16_t l = line_of_pair_[p][q];
  require(l >= 0, "no line through the given pair");
  return uint16_t(l);
}

}  // namespace octalab
