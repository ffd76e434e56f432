#pragma once

#include <optional>

#include "octalab/perm_group.hpp"
#include "octalab/pg24.hpp"

// Semilinear symmetries of PG(2,4) acting on the 42-element domain whose
// labels are the 21 points followed by the 21 lines.
//
//   collineation (dual == false): point x -> A x^tau,  line y -> (A^T)^-1 y^tau
//   correlation  (dual == true):  point x -> the LINE with coords A x^tau,
//                                 line y  -> the POINT with coords (A^T)^-1 y^tau
//
// A must have determinant 1; tau applies the Frobenius map entrywise first.

namespace octalab {

struct SemilinearMap {
  Mat3 matrix = mat_identity();
  bool frobenius = false;
  bool dual = false;
};

// Composition "apply a, then b" in the same datum form.
SemilinearMap semilinear_compose(const SemilinearMap& a, const SemilinearMap& b);

Perm semilinear_to_perm(const ProjectivePlane& plane, const SemilinearMap& m);

std::shared_ptr<const Domain> plane_domain(const ProjectivePlane& plane);

// Matrix generators: all elementary transvections I + lambda*E_ij
// (i != j, lambda in {1, w}).
std::vector<Perm> transvection_generators(const ProjectivePlane& plane);

// The transvections plus the Frobenius collineation and the standard duality
// (the generator list behind build_group_g).
std::vector<Perm> full_group_generators(const ProjectivePlane& plane);

// L3(4) = PSL3(4) as permutations of points+lines; order 20160.
PermGroup build_group_l34(const ProjectivePlane& plane,
                          uint64_t budget = PermGroup::kDefaultBudget);

// The full group L3(4):2^2 (adds the Frobenius collineation and the standard
// duality); order 80640.
PermGroup build_group_g(const ProjectivePlane& plane,
                        uint64_t budget = PermGroup::kDefaultBudget);

// Center/axis of a nontrivial elation: the unique point fixed linewise and
// the unique line fixed pointwise. Fails if the fixed structure has any
// other shape.
Flag elation_center_axis(const ProjectivePlane& plane, const Perm& g);

// Orbit of a flag under the group's induced flag action (for transitivity checks).
size_t flag_orbit_size(const ProjectivePlane& plane, const PermGroup& grp, Flag start);

}  // namespace octalab
