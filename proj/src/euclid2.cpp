#include "reflgroups/euclid2.hpp"

#include <algorithm>
#include <array>

namespace reflgroups {

Line2::Line2(const Vec2& normal, double offset) {
    const double norm = normal.norm();
    if (!(norm > kDefaultTolerance.eps_coincide) || !std::isfinite(norm) || !std::isfinite(offset)) {
        throw Error(ErrorKind::DegenerateInput, "line normal must be a nonzero finite vector");
    }
    const double scale = detail::unit_scale(norm);
    normal_ = normal / scale;
    offset_ = offset / scale;
    if (detail::first_significant_sign(normal_, kDefaultTolerance.eps_coincide) < 0) {
        normal_ = -normal_;
        offset_ = -offset_;
    }
}

namespace {

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double scale_of(double x) { return std::max(1.0, std::abs(x)); }

// Offset of `l` measured along the reference normal `ref` (l must be parallel to ref).
double oriented_offset(const Line2& l, const Vec2& ref) {
    return l.normal().dot(ref) >= 0 ? l.offset() : -l.offset();
}

Line2 translate_line(const Line2& l, const Vec2& v) { return {l.normal(), l.offset() + l.normal().dot(v)}; }

Line2 line_through(const Vec2& point, const Vec2& normal) { return {normal, normal.dot(point)}; }

bool passes_through(const Line2& l, const Vec2& p, const Tolerance& tol) {
    return std::abs(l.normal().dot(p) - l.offset()) <= tol.eps_coincide * std::max(1.0, p.norm());
}

// Signed angle from the unoriented direction of a to that of b, in (-pi/2, pi/2].
double line_gap(const Line2& a, const Line2& b) {
    return wrap_half_angle(std::atan2(cross2(a.normal(), b.normal()), a.normal().dot(b.normal())));
}

// Translates `x` by the motion of a parallel pencil carrying `from` onto `to`.
Line2 slide_in_pencil(const Line2& x, const Line2& from, const Line2& to) {
    return translate_line(x, (oriented_offset(to, from.normal()) - from.offset()) * from.normal());
}

// Mirror of R_to o R_from o R_x for concurrent x, from, to, read off the affine product.
Line2 turn_in_pencil(const Line2& x, const Line2& from, const Line2& to) {
    Mat2 linear = Mat2::Identity();
    Vec2 shift = Vec2::Zero();
    for (const Line2* l : {&x, &from, &to}) {
        const Mat2 r = Mat2::Identity() - 2.0 * l->normal() * l->normal().transpose();
        linear = r * linear;
        shift = r * shift + 2.0 * l->offset() * l->normal();
    }
    const Mat2 projector = (Mat2::Identity() - linear) / 2.0;
    const Eigen::Index col = projector(0, 0) >= projector(1, 1) ? 0 : 1;
    const Vec2 n = projector.col(col).normalized();
    return {n, n.dot(shift) / 2.0};
}

void strip_involutions(Rewriter<Line2>& rw, const Tolerance& tol) {
    std::size_t i = 0;
    while (i + 1 < rw.size()) {
        if (same_line(rw[i], rw[i + 1], tol)) {
            rw.cancel(i);
            i = i > 0 ? i - 1 : 0;
        } else {
            ++i;
        }
    }
}

// Both pairs (k, l) and (m, n) are transverse.
void reduce_transverse_pairs(Rewriter<Line2>& rw, std::size_t pos, const Tolerance& tol) {
    const Line2 k = rw[pos], l = rw[pos + 1], m = rw[pos + 2], n = rw[pos + 3];
    const Vec2 p = intersect(k, l);
    const Vec2 q = intersect(m, n);
    const Vec2 pq = q - p;
    if (pq.norm() <= tol.eps_coincide * std::max({1.0, p.norm(), q.norm()})) {
        // Shared center: swing (m, n) about it until m' = l.
        rw.pencil(pos + 2, l, turn_in_pencil(n, m, l));
        rw.cancel(pos + 1);
        return;
    }
    const Line2 connecting = line_through(p.norm() <= q.norm() ? p : q, Vec2(-pq.y(), pq.x()));
    rw.pencil(pos, turn_in_pencil(k, l, connecting), connecting);
    rw.pencil(pos + 2, connecting, turn_in_pencil(n, m, connecting));
    rw.cancel(pos + 1);
}

}  // namespace

bool parallel_lines(const Line2& l, const Line2& m, const Tolerance& tol) {
    return std::abs(cross2(l.normal(), m.normal())) <= tol.eps_coincide;
}

bool same_line(const Line2& l, const Line2& m, const Tolerance& tol) {
    if (!parallel_lines(l, m, tol)) {
        return false;
    }
    const double c = oriented_offset(m, l.normal());
    return std::abs(l.offset() - c) <= tol.eps_coincide * std::max(scale_of(l.offset()), scale_of(c));
}

Vec2 intersect(const Line2& l, const Line2& m) {
    Mat2 a;
    a << l.normal().transpose(), m.normal().transpose();
    const double det = a.determinant();
    // Cramer's rule on the 2x2 system.
    return Vec2((l.offset() * a(1, 1) - m.offset() * a(0, 1)) / det,
                (a(0, 0) * m.offset() - a(1, 0) * l.offset()) / det);
}

Vec2 reflect_point2(const Line2& l, const Vec2& p) {
    return p - 2.0 * (l.normal().dot(p) - l.offset()) * l.normal();
}

Isometry2 reflection_isometry2(const Line2& l) {
    const Vec2& n = l.normal();
    return {Mat2::Identity() - 2.0 * n * n.transpose(), 2.0 * l.offset() * n};
}

Isometry2 word_to_isometry2(const Word2& w) {
    Isometry2 result;
    for (const auto& l : w) {
        result = result.then(reflection_isometry2(l));
    }
    return result;
}

double isometry_residual2(const Isometry2& a, const Isometry2& b) {
    return (a.linear - b.linear).norm() + (a.translation - b.translation).norm();
}

Class2 compose_two2(const Line2& l, const Line2& m, const Tolerance& tol) {
    if (same_line(l, m, tol)) {
        return class2::Identity{};
    }
    if (parallel_lines(l, m, tol)) {
        const double gap = oriented_offset(m, l.normal()) - l.offset();
        return class2::Translation{2.0 * gap * l.normal()};
    }
    const double twice = 2.0 * std::atan2(cross2(l.normal(), m.normal()), l.normal().dot(m.normal()));
    return class2::Rotation{intersect(l, m), wrap_angle(twice)};
}

Pencil2 pencil_of2(const Line2& l, const Line2& m, const Tolerance& tol) {
    if (parallel_lines(l, m, tol)) {
        return ParallelPencil{canonical_unit(l.direction(), tol.eps_coincide)};
    }
    return ConcurrentPencil{intersect(l, m)};
}

Line2 pencil_completion2(const Line2& l, const Line2& m, const Line2& l2, const Tolerance& tol) {
    if (same_line(l, m, tol)) {
        return l2;
    }
    if (parallel_lines(l, m, tol)) {
        if (!parallel_lines(l, l2, tol)) {
            throw Error(ErrorKind::NotConcurrent, "lines do not belong to one pencil");
        }
        const double gap = oriented_offset(m, l.normal()) - l.offset();
        return translate_line(l2, gap * l.normal());
    }
    const Vec2 center = intersect(l, m);
    if (!passes_through(l2, center, tol)) {
        throw Error(ErrorKind::NotConcurrent, "lines do not belong to one pencil");
    }
    return turn_in_pencil(l2, l, m);
}

bool verify_pencil_relation2(const Line2& l, const Line2& m, const Line2& l2, const Line2& m2, const Tolerance& tol) {
    const std::array<const Line2*, 4> lines{&l, &m, &l2, &m2};
    const Line2* a = nullptr;
    const Line2* b = nullptr;
    for (std::size_t i = 0; i < 4 && b == nullptr; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (!same_line(*lines[i], *lines[j], tol)) {
                a = lines[i];
                b = lines[j];
                break;
            }
        }
    }
    if (b == nullptr) {
        return true;
    }
    auto close = [&](double x, double y) {
        return std::abs(x - y) <= tol.eps_coincide * std::max(scale_of(x), scale_of(y));
    };
    if (parallel_lines(*a, *b, tol)) {
        const Vec2 ref = a->normal();
        for (const Line2* x : lines) {
            if (!parallel_lines(*a, *x, tol)) {
                return false;
            }
        }
        const double ol = oriented_offset(l, ref), om = oriented_offset(m, ref);
        const double ol2 = oriented_offset(l2, ref), om2 = oriented_offset(m2, ref);
        return close(om - ol, om2 - ol2) && close(ol2 - ol, om2 - om);
    }
    const Vec2 center = intersect(*a, *b);
    for (const Line2* x : lines) {
        if (!passes_through(*x, center, tol)) {
            return false;
        }
    }
    return std::abs(wrap_half_angle(line_gap(l, m) - line_gap(l2, m2))) <= tol.eps_coincide &&
           std::abs(wrap_half_angle(line_gap(l, l2) - line_gap(m, m2))) <= tol.eps_coincide;
}

bool is_valid_step2(const RewriteStep<Line2>& step, const Tolerance& tol) {
    switch (step.relation) {
        case Relation::Involution:
            return step.removed.size() == 2 && step.inserted.empty() && same_line(step.removed[0], step.removed[1], tol);
        case Relation::Pencil:
            return step.removed.size() == 2 && step.inserted.size() == 2 &&
                   verify_pencil_relation2(step.removed[0], step.removed[1], step.inserted[0], step.inserted[1], tol);
        case Relation::PolarFrame:
            return false;
    }
    return false;
}

namespace detail {

void reduce_four_at(Rewriter<Line2>& rw, std::size_t pos, const Tolerance& tol) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (same_line(rw[pos + i], rw[pos + i + 1], tol)) {
            rw.cancel(pos + i);
            return;
        }
    }
    const Line2 k = rw[pos], l = rw[pos + 1], m = rw[pos + 2], n = rw[pos + 3];
    const bool kl_parallel = parallel_lines(k, l, tol);
    const bool mn_parallel = parallel_lines(m, n, tol);

    if (!kl_parallel && !mn_parallel) {
        reduce_transverse_pairs(rw, pos, tol);
        return;
    }
    if (kl_parallel && !mn_parallel) {
        // Slide (k, l) until l' passes through the meet of m and n, then swing (m, n) onto l'.
        const Vec2 q = intersect(m, n);
        const Line2 target = line_through(q, l.normal());
        rw.pencil(pos, slide_in_pencil(k, l, target), target);
        rw.pencil(pos + 2, target, turn_in_pencil(n, m, target));
        rw.cancel(pos + 1);
        return;
    }
    if (!kl_parallel && mn_parallel) {
        const Vec2 p = intersect(k, l);
        const Line2 target = line_through(p, m.normal());
        rw.pencil(pos, turn_in_pencil(k, l, target), target);
        rw.pencil(pos + 2, target, slide_in_pencil(n, m, target));
        rw.cancel(pos + 1);
        return;
    }
    if (parallel_lines(l, m, tol)) {
        // All four parallel: slide (k, l) so that l' = m.
        rw.pencil(pos, slide_in_pencil(k, l, m), m);
        rw.cancel(pos + 1);
        return;
    }
    // k || l and m || n with l, m transverse: turn the middle pair by a right angle.
    const Line2 turned = line_through(intersect(l, m), Vec2(-l.normal().y(), l.normal().x()));
    rw.pencil(pos + 1, turned, turn_in_pencil(m, l, turned));
    reduce_transverse_pairs(rw, pos, tol);
}

}  // namespace detail

Word2 reduce_four2(const Line2& k, const Line2& l, const Line2& m, const Line2& n, const Tolerance& tol,
                   Trace<Line2>* trace) {
    Rewriter<Line2> rw({k, l, m, n}, trace);
    detail::reduce_four_at(rw, 0, tol);
    return rw.release();
}

Word2 normalize2(const Word2& w, const Tolerance& tol, Trace<Line2>* trace) {
    Rewriter<Line2> rw(w, trace);
    strip_involutions(rw, tol);
    while (rw.size() >= 4) {
        detail::reduce_four_at(rw, 0, tol);
        strip_involutions(rw, tol);
    }
    return rw.release();
}

Class2 classify2(const Word2& w, const Tolerance& tol) {
    const Word2 normal = normalize2(w, tol);
    switch (normal.size()) {
        case 0: return class2::Identity{};
        case 1: return class2::Reflection{normal[0]};
        case 2: return compose_two2(normal[0], normal[1], tol);
        default: break;
    }
    // Orientation reversing: linear part is I - 2 a a^T for the axis normal a.
    const Isometry2 iso = word_to_isometry2(normal);
    const Mat2 projector = (Mat2::Identity() - iso.linear) / 2.0;
    const Eigen::Index col = projector.col(0).norm() >= projector.col(1).norm() ? 0 : 1;
    const Vec2 a = canonical_unit(projector.col(col), tol.eps_coincide);
    const double along_normal = a.dot(iso.translation);
    const Line2 axis(a, along_normal / 2.0);
    const Vec2 glide = iso.translation - along_normal * a;
    if (glide.norm() <= tol.eps_verify) {
        return class2::Reflection{axis};
    }
    return class2::Glide{axis, glide};
}

}  // namespace reflgroups
