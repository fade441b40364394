#include "reflgroups/detail/pencil3.hpp"

#include <array>

namespace reflgroups::detail {

bool parallel_directions(const Vec3& a, const Vec3& b, const Tolerance& tol) {
    return a.cross(b).norm() <= tol.eps_coincide;
}

double direction_gap(const Vec3& a, const Vec3& b, const Vec3& axis) {
    return wrap_half_angle(signed_angle_about(a, b, axis));
}

Vec3 coaxial_completion(const Vec3& l, const Vec3& m, const Vec3& l2, const Tolerance& tol) {
    if (parallel_directions(l, m, tol)) {
        return l2;
    }
    const Vec3 axis = l.cross(m).normalized();
    if (std::abs(axis.dot(l2)) > tol.eps_coincide) {
        throw Error(ErrorKind::NotConcurrent, "mirrors do not belong to one pencil");
    }
    return rotate_about(l2, axis, signed_angle_about(l, m, axis));
}

bool coaxial_relation(const Vec3& l, const Vec3& m, const Vec3& l2, const Vec3& m2, const Tolerance& tol) {
    const std::array<const Vec3*, 4> dirs{&l, &m, &l2, &m2};
    Vec3 axis = Vec3::Zero();
    for (std::size_t i = 0; i < 4 && axis.isZero(); ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (!parallel_directions(*dirs[i], *dirs[j], tol)) {
                axis = dirs[i]->cross(*dirs[j]).normalized();
                break;
            }
        }
    }
    if (axis.isZero()) {
        return true;
    }
    for (const Vec3* d : dirs) {
        if (std::abs(axis.dot(*d)) > tol.eps_coincide) {
            return false;
        }
    }
    return std::abs(wrap_half_angle(direction_gap(l, m, axis) - direction_gap(l2, m2, axis))) <= tol.eps_coincide &&
           std::abs(wrap_half_angle(direction_gap(l, l2, axis) - direction_gap(m, m2, axis))) <= tol.eps_coincide;
}

Vec3 probe_perpendicular(const Vec3& axis, const Tolerance& tol) {
    for (int i = 0; i < 3; ++i) {
        const Vec3 e = Vec3::Unit(i);
        const Vec3 projected = e - axis.dot(e) * axis;
        if (projected.norm() > tol.eps_coincide) {
            return projected.normalized();
        }
    }
    throw Error(ErrorKind::DegenerateInput, "axis must be a unit vector");
}

}  // namespace reflgroups::detail
