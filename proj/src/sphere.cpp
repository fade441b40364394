#include "reflgroups/sphere.hpp"

#include "reflgroups/detail/pencil3.hpp"
#include "reflgroups/so3.hpp"

namespace reflgroups {

GreatCircle::GreatCircle(const Vec3& pole) : pole_(canonical_unit(pole)) {}

namespace {

// Applies to `x` the rotation about `axis` that carries circle `from` onto circle `to`.
GreatCircle move_about(const GreatCircle& x, const GreatCircle& from, const GreatCircle& to, const Vec3& axis) {
    return GreatCircle(rotate_about(x.pole(), axis, detail::direction_gap(from.pole(), to.pole(), axis)));
}

void strip_involutions(Rewriter<GreatCircle>& rw, const Tolerance& tol) {
    std::size_t i = 0;
    while (i + 1 < rw.size()) {
        if (same_circle(rw[i], rw[i + 1], tol)) {
            rw.cancel(i);
            i = i > 0 ? i - 1 : 0;
        } else {
            ++i;
        }
    }
}

// Any two distinct great circles meet, so only the doubly transverse case of
// the planar argument remains: swing both pairs onto the circle through their
// two intersection pairs and cancel.
void reduce_four_at(Rewriter<GreatCircle>& rw, std::size_t pos, const Tolerance& tol) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (same_circle(rw[pos + i], rw[pos + i + 1], tol)) {
            rw.cancel(pos + i);
            return;
        }
    }
    const GreatCircle k = rw[pos], l = rw[pos + 1], m = rw[pos + 2], n = rw[pos + 3];
    const Vec3 p = k.pole().cross(l.pole()).normalized();
    const Vec3 q = m.pole().cross(n.pole()).normalized();
    const Vec3 pq = p.cross(q);
    if (pq.norm() <= tol.eps_coincide) {
        rw.pencil(pos + 2, l, move_about(n, m, l, q));
        rw.cancel(pos + 1);
        return;
    }
    const GreatCircle connecting(pq);
    rw.pencil(pos, move_about(k, l, connecting, p), connecting);
    rw.pencil(pos + 2, connecting, move_about(n, m, connecting, q));
    rw.cancel(pos + 1);
}

}  // namespace

bool same_circle(const GreatCircle& l, const GreatCircle& m, const Tolerance& tol) {
    return detail::parallel_directions(l.pole(), m.pole(), tol);
}

Vec3 reflect_sphere(const GreatCircle& c, const Vec3& p) { return p - 2.0 * c.pole().dot(p) * c.pole(); }

Mat3 circle_reflection_matrix(const GreatCircle& c) {
    return Mat3::Identity() - 2.0 * c.pole() * c.pole().transpose();
}

Mat3 word_matrix_sphere(const SphereWord& w) {
    Mat3 result = Mat3::Identity();
    for (const auto& c : w) {
        result = circle_reflection_matrix(c) * result;
    }
    return result;
}

ClassS2 compose_two_sphere(const GreatCircle& l, const GreatCircle& m, const Tolerance& tol) {
    if (same_circle(l, m, tol)) {
        return class_s2::Identity{};
    }
    const Vec3 axis = l.pole().cross(m.pole()).normalized();
    const Rotation3 r(axis, 2.0 * signed_angle_about(l.pole(), m.pole(), axis));
    return class_s2::Rotation{r.axis(), r.angle()};
}

GreatCircle pencil_completion_sphere(const GreatCircle& l, const GreatCircle& m, const GreatCircle& l2,
                                     const Tolerance& tol) {
    return GreatCircle(detail::coaxial_completion(l.pole(), m.pole(), l2.pole(), tol));
}

bool verify_pencil_relation_sphere(const GreatCircle& l, const GreatCircle& m, const GreatCircle& l2,
                                   const GreatCircle& m2, const Tolerance& tol) {
    return detail::coaxial_relation(l.pole(), m.pole(), l2.pole(), m2.pole(), tol);
}

SphereWord reduce_four_sphere(const GreatCircle& k, const GreatCircle& l, const GreatCircle& m, const GreatCircle& n,
                              const Tolerance& tol, Trace<GreatCircle>* trace) {
    Rewriter<GreatCircle> rw({k, l, m, n}, trace);
    reduce_four_at(rw, 0, tol);
    return rw.release();
}

SphereWord normalize_sphere(const SphereWord& w, const Tolerance& tol, Trace<GreatCircle>* trace) {
    Rewriter<GreatCircle> rw(w, trace);
    strip_involutions(rw, tol);
    while (rw.size() >= 4) {
        reduce_four_at(rw, 0, tol);
        strip_involutions(rw, tol);
    }
    return rw.release();
}

ClassS2 classify_sphere(const SphereWord& w, const Tolerance& tol) {
    const SphereWord normal = normalize_sphere(w, tol);
    switch (normal.size()) {
        case 0: return class_s2::Identity{};
        case 1: return class_s2::Reflection{normal[0]};
        case 2: return compose_two_sphere(normal[0], normal[1], tol);
        default: break;
    }
    // M = -Rot(a, t) = Rot(a, t + pi) o Refl(a^perp).
    const Mat3 m = word_matrix_sphere(normal);
    const Rotation3 r = rotation_from_matrix(-m);
    const double angle = wrap_angle(r.angle() + kPi);
    if (std::abs(angle) <= tol.eps_verify) {
        return class_s2::Reflection{GreatCircle(r.axis())};
    }
    return class_s2::Glide{r.axis(), angle};
}

bool is_valid_step_sphere(const RewriteStep<GreatCircle>& step, const Tolerance& tol) {
    switch (step.relation) {
        case Relation::Involution:
            return step.removed.size() == 2 && step.inserted.empty() && same_circle(step.removed[0], step.removed[1], tol);
        case Relation::Pencil:
            return step.removed.size() == 2 && step.inserted.size() == 2 &&
                   verify_pencil_relation_sphere(step.removed[0], step.removed[1], step.inserted[0], step.inserted[1],
                                                 tol);
        case Relation::PolarFrame:
            return false;
    }
    return false;
}

}  // namespace reflgroups
