#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octalab/gf4.hpp"

// The projective plane PG(2,4): 21 points and 21 lines, both represented by
// normalized homogeneous coordinate triples over GF(4) (first nonzero entry 1).
// A point x lies on a line y iff dot(x, y) == 0.

namespace octalab {

struct Flag {
  uint16_t point;
  uint16_t line;
  auto operator<=>(const Flag&) const = default;
};

class ProjectivePlane {
 public:
  ProjectivePlane();

  static const ProjectivePlane& pg24();

  const std::vector<Vec3>& points() const { return points_; }
  const std::vector<Vec3>& lines() const { return lines_; }
  size_t num_points() const { return points_.size(); }
  size_t num_lines() const { return lines_.size(); }

  // Index lookups normalize first; out-of-plane coordinates are a hard error.
  uint16_t point_index(const Vec3& v) const;
  uint16_t line_index(const Vec3& v) const;

  bool incident(uint16_t p, uint16_t l) const { return dot(points_[p], lines_[l]) == 0; }
  const std::vector<uint16_t>& lines_through(uint16_t p) const { return lines_through_[p]; }
  const std::vector<uint16_t>& points_on(uint16_t l) const { return points_on_[l]; }

  const std::vector<Flag>& flags() const { return flags_; }

  // Line through two distinct points, as a line index.
  uint16_t line_through(uint16_t p, uint16_t q) const;

  // Hyperovals: 6-point sets with no 3 collinear, enumerated by ordered arc
  // extension; each is sorted, and the list is lexicographically sorted.
  const std::vector<std::array<uint16_t, 6>>& hyperovals() const { return hyperovals_; }

  std::string point_label(uint16_t p) const { return "P" + vec_str(points_[p]); }
  std::string line_label(uint16_t l) const { return "L" + vec_str(lines_[l]); }

 private:
  std::vector<Vec3> points_, lines_;
  std::vector<std::vector<uint16_t>> lines_through_, points_on_;
  std::vector<std::vector<int16_t>> line_of_pair_;
  std::vector<Flag> flags_;
  std::vector<std::array<uint16_t, 6>> hyperovals_;
};

}  // namespace octalab
