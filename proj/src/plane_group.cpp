#include "octalab/plane_group.hpp"

#include <set>

namespace octalab {

SemilinearMap semilinear_compose(const SemilinearMap& a, const SemilinearMap& b) {
  SemilinearMap r;
  Mat3 a_after_tau = b.frobenius ? mat_frob(a.matrix) : a.matrix;
  // If a lands on the line side, b acts there through (B^T)^-1 instead of B.
  Mat3 b_effective = a.dual ? mat_inverse(mat_transpose(b.matrix)) : b.matrix;
  r.matrix = mat_mul(b_effective, a_after_tau);
  r.frobenius = a.frobenius != b.frobenius;
  r.dual = a.dual != b.dual;
  return r;
}

Perm semilinear_to_perm(const ProjectivePlane& plane, const SemilinearMap& m) {
  require(mat_det(m.matrix) == GF1, "semilinear datum needs determinant 1");
  const size_t np = plane.num_points();
  const Mat3 line_matrix = mat_inverse(mat_transpose(m.matrix));
  std::vector<uint16_t> img(np + plane.num_lines());

  for (uint16_t p = 0; p < np; ++p) {
    Vec3 v = plane.points()[p];
    if (m.frobenius) v = frob(v);
    v = mat_apply(m.matrix, v);
    img[p] = m.dual ? uint16_t(np + plane.line_index(v)) : plane.point_index(v);
  }
  for (uint16_t l = 0; l < plane.num_lines(); ++l) {
    Vec3 v = plane.lines()[l];
    if (m.frobenius) v = frob(v);
    v = mat_apply(line_matrix, v);
    img[np + l] = m.dual ? plane.point_index(v) : uint16_t(np + plane.line_index(v));
  }
  return Perm::from_images(std::move(img));
}

std::shared_ptr<const Domain> plane_domain(const ProjectivePlane& plane) {
  auto d = std::make_shared<Domain>();
  for (uint16_t p = 0; p < plane.num_points(); ++p) d->labels.push_back(plane.point_label(p));
  for (uint16_t l = 0; l < plane.num_lines(); ++l) d->labels.push_back(plane.line_label(l));
  return d;
}

std::vector<Perm> transvection_generators(const ProjectivePlane& plane) {
  std::vector<Perm> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (Gf4 lambda : {GF1, GFW}) {
        Mat3 m = mat_identity();
        m[i][j] = lambda;
        gens.push_back(semilinear_to_perm(plane, SemilinearMap{m, false, false}));
      }
    }
  return gens;
}

PermGroup build_group_l34(const ProjectivePlane& plane, uint64_t budget) {
  return PermGroup::closure(plane_domain(plane), transvection_generators(plane), budget);
}

std::vector<Perm> full_group_generators(const ProjectivePlane& plane) {
  std::vector<Perm> gens = transvection_generators(plane);
  gens.push_back(semilinear_to_perm(plane, SemilinearMap{mat_identity(), true, false}));
  gens.push_back(semilinear_to_perm(plane, SemilinearMap{mat_identity(), false, true}));
  return gens;
}

PermGroup build_group_g(const ProjectivePlane& plane, uint64_t budget) {
  return PermGroup::closure(plane_domain(plane), full_group_generators(plane), budget);
}

Flag elation_center_axis(const ProjectivePlane& plane, const Perm& g) {
  const size_t np = plane.num_points();
  require(g.degree() == np + plane.num_lines(), "permutation does not act on the plane");

  std::optional<uint16_t> center, axis;
  for (uint16_t p = 0; p < np; ++p) {
    bool linewise = true;
    for (uint16_t l : plane.lines_through(p))
      if (g[np + l] != np + l) {
        linewise = false;
        break;
      }
    if (linewise) {
      require(!center, "more than one point fixed linewise; not an elation");
      center = p;
    }
  }
  for (uint16_t l = 0; l < plane.num_lines(); ++l) {
    bool pointwise = true;
    for (uint16_t p : plane.points_on(l))
      if (g[p] != p) {
        pointwise = false;
        break;
      }
    if (pointwise) {
      require(!axis, "more than one line fixed pointwise; not an elation");
      axis = l;
    }
  }
  require(center && axis, "no center/axis pair; not an elation");
  require(plane.incident(*center, *axis), "center not on axis; central collineation is a homology");
  return Flag{*center, *axis};
}

size_t flag_orbit_size(const ProjectivePlane& plane, const PermGroup& grp, Flag start) {
  const uint16_t np = uint16_t(plane.num_points());
  auto apply = [&](Flag f, const Perm& g) -> Flag {
    uint16_t a = g[f.point];
    uint16_t b = g[np + f.line];
    // A correlation swaps the two sides; either way the image pair is a flag.
    if (a >= np) return Flag{uint16_t(b), uint16_t(a - np)};
    return Flag{a, uint16_t(b - np)};
  };
  std::set<Flag> seen{start};
  std::vector<Flag> queue{start};
  for (size_t head = 0; head < queue.size(); ++head)
    for (const Perm& g : grp.generators()) {
      Flag f = apply(queue[head], g);
      if (seen.insert(f).second) queue.push_back(f);
    }
  return seen.size();
}

}  // namespace octalab
