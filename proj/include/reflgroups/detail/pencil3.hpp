#pragma once

// Pencils of unoriented directions in R^3 sharing a common perpendicular axis.
// Great circles (by pole) and lines through the origin (by direction) both
// compose pairwise as R_m o R_l = rotation about l x m by twice the gap, so
// the sphere and SO(3) modules share these helpers.

#include "reflgroups/numerics.hpp"

namespace reflgroups::detail {

bool parallel_directions(const Vec3& a, const Vec3& b, const Tolerance& tol);

/// Signed gap from direction a to direction b about `axis`, in (-pi/2, pi/2].
double direction_gap(const Vec3& a, const Vec3& b, const Vec3& axis);

/// m2 with (l, m) ~ (l2, m2) in their common pencil. Throws NotConcurrent if l2
/// is not perpendicular to the pencil axis of l and m.
Vec3 coaxial_completion(const Vec3& l, const Vec3& m, const Vec3& l2, const Tolerance& tol);

/// True iff all four directions are perpendicular to one axis and the gaps
/// l->m, l2->m2 and l->l2, m->m2 agree modulo pi.
bool coaxial_relation(const Vec3& l, const Vec3& m, const Vec3& l2, const Vec3& m2, const Tolerance& tol);

/// The deterministic probe: normalized projection onto axis^perp of the first
/// of e1, e2, e3 whose projection is longer than eps_coincide.
Vec3 probe_perpendicular(const Vec3& axis, const Tolerance& tol);

}  // namespace reflgroups::detail
