#include "reflgroups/so3.hpp"

#include "reflgroups/detail/pencil3.hpp"

#include <Eigen/Geometry>

namespace reflgroups {

AxisLine::AxisLine(const Vec3& direction) : direction_(canonical_unit(direction)) {}

Rotation3::Rotation3(const Vec3& axis, double angle) {
    const Vec3 a = unit(axis);
    if (angle == 0.0) {
        return;
    }
    // Sign of the stored axis is canonical; the angle follows it.
    const bool flip = detail::first_significant_sign(a, kDefaultTolerance.eps_coincide) < 0;
    axis_ = flip ? Vec3(-a) : a;
    angle_ = wrap_angle(flip ? -angle : angle);
    if (angle_ == 0.0) {
        axis_ = Vec3::UnitZ();
    }
}

Mat3 Rotation3::matrix() const { return Eigen::AngleAxisd(angle_, axis_).toRotationMatrix(); }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Mat3 Quaternion::matrix() const {
    Mat3 m;
    m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
         2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return m;
}

double rotation_distance(const Quaternion& a, const Quaternion& b) {
    const Quaternion d = a.conjugate() * b;
    return 2.0 * std::atan2(d.vec().norm(), std::abs(d.w));
}

Quaternion to_quaternion(const Rotation3& r) {
    const double s = std::sin(r.angle() / 2);
    return {std::cos(r.angle() / 2), s * r.axis().x(), s * r.axis().y(), s * r.axis().z()};
}

Rotation3 to_rotation(const Quaternion& q) {
    const double n = q.norm();
    const double sign = q.w < 0 ? -1.0 : 1.0;
    const Vec3 v = sign * q.vec() / n;
    const double vn = v.norm();
    if (vn == 0.0) {
        return Rotation3::identity();
    }
    return {v / vn, 2.0 * std::atan2(vn, sign * q.w / n)};
}

Rotation3 rotation_from_matrix(const Mat3& m) {
    const Eigen::Quaterniond q(m);
    return to_rotation({q.w(), q.x(), q.y(), q.z()});
}

Mat3 line_reflection_matrix(const AxisLine& a) {
    const Vec3& d = a.direction();
    return 2.0 * d * d.transpose() - Mat3::Identity();
}

Mat3 word_matrix_so3(const LineWord& w) {
    Mat3 result = Mat3::Identity();
    for (const auto& a : w) {
        result = line_reflection_matrix(a) * result;
    }
    return result;
}

Quaternion word_quaternion_so3(const LineWord& w) {
    // A half-turn about d is the pure quaternion d.
    Quaternion result;
    for (const auto& a : w) {
        const Vec3& d = a.direction();
        result = Quaternion{0.0, d.x(), d.y(), d.z()} * result;
    }
    return result;
}

bool same_axis_line(const AxisLine& a, const AxisLine& b, const Tolerance& tol) {
    return detail::parallel_directions(a.direction(), b.direction(), tol);
}

Rotation3 compose_line_reflections(const AxisLine& a, const AxisLine& b, const Tolerance& tol) {
    if (same_axis_line(a, b, tol)) {
        return Rotation3::identity();
    }
    const Vec3 axis = a.direction().cross(b.direction()).normalized();
    return {axis, 2.0 * signed_angle_about(a.direction(), b.direction(), axis)};
}

std::pair<AxisLine, AxisLine> rotation_to_line_pair(const Rotation3& r, const Tolerance& tol) {
    if (r.is_identity()) {
        throw Error(ErrorKind::IdentityInput, "the identity is the empty word");
    }
    const Vec3 first = detail::probe_perpendicular(r.axis(), tol);
    return {AxisLine(first), AxisLine(rotate_about(first, r.axis(), r.angle() / 2))};
}

std::pair<AxisLine, AxisLine> split_reflection(const AxisLine& k, const Vec3& plane_normal, const Tolerance& tol) {
    const Vec3 normal = unit(plane_normal, tol.eps_coincide);
    const Vec3 across = normal.cross(k.direction());
    // When the plane is k^perp every line of it is perpendicular to k.
    const Vec3 b = across.norm() > tol.eps_coincide ? Vec3(across.normalized()) : detail::probe_perpendicular(normal, tol);
    return {AxisLine(b), AxisLine(k.direction().cross(b))};
}

namespace {

void strip_involutions(Rewriter<AxisLine>& rw, const Tolerance& tol) {
    std::size_t i = 0;
    while (i + 1 < rw.size()) {
        if (same_axis_line(rw[i], rw[i + 1], tol)) {
            rw.cancel(i);
            i = i > 0 ? i - 1 : 0;
        } else {
            ++i;
        }
    }
}

void reduce_three_at(Rewriter<AxisLine>& rw, std::size_t pos, const Tolerance& tol) {
    for (std::size_t i = 0; i < 2; ++i) {
        if (same_axis_line(rw[pos + i], rw[pos + i + 1], tol)) {
            rw.cancel(pos + i);
            return;
        }
    }
    const AxisLine k = rw[pos], l = rw[pos + 1], m = rw[pos + 2];
    const Vec3 normal = l.direction().cross(m.direction()).normalized();
    const auto [b, c] = split_reflection(k, normal, tol);
    // R_k = R_b o R_c as well, which puts b (in the plane of l, m) next to l.
    rw.split(pos, c, b);
    const Vec3 moved = rotate_about(b.direction(), normal, signed_angle_about(l.direction(), m.direction(), normal));
    rw.pencil(pos + 1, AxisLine(moved), m);
    rw.cancel(pos + 2);
}

}  // namespace

LineWord reduce_three(const AxisLine& k, const AxisLine& l, const AxisLine& m, const Tolerance& tol,
                      Trace<AxisLine>* trace) {
    Rewriter<AxisLine> rw({k, l, m}, trace);
    reduce_three_at(rw, 0, tol);
    return rw.release();
}

LineWord normalize_so3(const LineWord& w, const Tolerance& tol, Trace<AxisLine>* trace) {
    Rewriter<AxisLine> rw(w, trace);
    strip_involutions(rw, tol);
    while (rw.size() >= 3) {
        reduce_three_at(rw, 0, tol);
        strip_involutions(rw, tol);
    }
    return rw.release();
}

Mat3 projective_representative(const Mat3& m, const Tolerance& tol) {
    if ((m.transpose() * m - Mat3::Identity()).norm() > tol.eps_verify) {
        throw Error(ErrorKind::NotOrthogonal, "matrix is not orthogonal");
    }
    return m.determinant() > 0 ? m : Mat3(-m);
}

bool verify_pencil_relation_so3(const AxisLine& a, const AxisLine& b, const AxisLine& c, const AxisLine& d,
                                const Tolerance& tol) {
    return detail::coaxial_relation(a.direction(), b.direction(), c.direction(), d.direction(), tol);
}

bool is_valid_step_so3(const RewriteStep<AxisLine>& step, const Tolerance& tol) {
    switch (step.relation) {
        case Relation::Involution:
            return step.removed.size() == 2 && step.inserted.empty() &&
                   same_axis_line(step.removed[0], step.removed[1], tol);
        case Relation::Pencil:
            return step.removed.size() == 2 && step.inserted.size() == 2 &&
                   verify_pencil_relation_so3(step.removed[0], step.removed[1], step.inserted[0], step.inserted[1], tol);
        case Relation::PolarFrame: {
            if (step.removed.size() != 1 || step.inserted.size() != 2) {
                return false;
            }
            const Vec3& k = step.removed[0].direction();
            const Vec3& b = step.inserted[0].direction();
            const Vec3& c = step.inserted[1].direction();
            return std::abs(k.dot(b)) <= tol.eps_coincide && std::abs(k.dot(c)) <= tol.eps_coincide &&
                   std::abs(b.dot(c)) <= tol.eps_coincide;
        }
    }
    return false;
}

}  // namespace reflgroups
