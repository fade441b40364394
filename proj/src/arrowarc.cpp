#include "reflgroups/arrowarc.hpp"

#include "reflgroups/detail/pencil3.hpp"

#include <cstdio>
#include <sstream>

namespace reflgroups {

namespace {

// An antipodal pair encodes a full turn; fold it back onto the identity arc.
ArrowArc close_arc(const Vec3& tail, const Vec3& head, const Tolerance& tol) {
    if ((tail + head).norm() <= tol.eps_coincide) {
        return {tail, tail, tol};
    }
    return {tail, head, tol};
}

}  // namespace

ArrowArc::ArrowArc(const Vec3& tail, const Vec3& head, const Tolerance& tol)
    : tail_(unit(tail, tol.eps_coincide)), head_(unit(head, tol.eps_coincide)) {
    if ((tail_ + head_).norm() <= tol.eps_coincide) {
        throw Error(ErrorKind::DegenerateArc, "arc endpoints must not be antipodal");
    }
}

bool ArrowArc::is_identity(const Tolerance& tol) const { return (tail_ - head_).norm() <= tol.eps_coincide; }

Vec3 ArrowArc::axis() const { return canonical_unit(tail_.cross(head_)); }

double ArrowArc::length() const { return std::atan2(tail_.cross(head_).norm(), tail_.dot(head_)); }

Rotation3 arc_to_rotation(const ArrowArc& arc, const Tolerance& tol) {
    if (arc.is_identity(tol)) {
        return Rotation3::identity();
    }
    const Vec3 axis = arc.tail().cross(arc.head()).normalized();
    return {axis, 2.0 * arc.length()};
}

ArrowArc rotation_to_arc(const Rotation3& r, const std::optional<Vec3>& seed, const Tolerance& tol) {
    if (r.is_identity()) {
        const Vec3 anchor = seed.value_or(Vec3::UnitX());
        return {anchor, anchor, tol};
    }
    const Vec3 tail = detail::probe_perpendicular(r.axis(), tol);
    return {tail, rotate_about(tail, r.axis(), r.angle() / 2), tol};
}

ArrowArc slide(const ArrowArc& arc, double delta, const Tolerance& tol) {
    if (arc.is_identity(tol)) {
        return arc;
    }
    const Vec3 axis = arc.axis();
    return close_arc(rotate_about(arc.tail(), axis, delta), rotate_about(arc.head(), axis, delta), tol);
}

ArrowArc antipode_head(const ArrowArc& arc, const Tolerance& tol) {
    if (arc.is_identity(tol)) {
        throw Error(ErrorKind::DegenerateArc, "the identity arc has no antipodal partner");
    }
    return {arc.tail(), -arc.head(), tol};
}

ArrowArc triangle_compose(const ArrowArc& u, const ArrowArc& v, const Tolerance& tol) {
    if (u.is_identity(tol)) {
        return v;
    }
    if (v.is_identity(tol)) {
        return u;
    }
    const Vec3 axis_u = u.axis();
    const Vec3 axis_v = v.axis();
    const Vec3 meet = axis_u.cross(axis_v);
    if (meet.norm() <= tol.eps_coincide) {
        // Shared great circle: carry v's tail onto u's head.
        const ArrowArc moved = slide(v, signed_angle_about(v.tail(), u.head(), axis_v), tol);
        return close_arc(u.tail(), moved.head(), tol);
    }
    const Vec3 p = canonical_unit(meet, tol.eps_coincide);
    const ArrowArc first = slide(u, signed_angle_about(u.head(), p, axis_u), tol);
    const ArrowArc second = slide(v, signed_angle_about(v.tail(), p, axis_v), tol);
    return close_arc(first.tail(), second.head(), tol);
}

std::string arcs_to_svg(const std::vector<ArrowArc>& arcs) {
    constexpr double size = 400.0;
    constexpr double radius = 180.0;
    constexpr int samples = 48;
    auto project = [&](const Vec3& p) { return Vec2(size / 2 + radius * p.x(), size / 2 - radius * p.y()); };
    std::ostringstream out;
    char buf[128];
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" "
           "viewBox=\"0 0 400 400\">\n"
        << "  <defs>\n"
        << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\" "
           "markerHeight=\"8\" orient=\"auto\">\n"
        << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/>\n"
        << "    </marker>\n"
        << "  </defs>\n"
        << "  <circle cx=\"200\" cy=\"200\" r=\"180\" fill=\"none\" stroke=\"gray\"/>\n";
    for (const auto& arc : arcs) {
        const double len = arc.length();
        const Vec3 axis = len > 0 ? Vec3(arc.tail().cross(arc.head()).normalized()) : Vec3::UnitZ();
        out << "  <path d=\"";
        for (int i = 0; i <= samples; ++i) {
            const Vec2 xy = project(rotate_about(arc.tail(), axis, len * i / samples));
            std::snprintf(buf, sizeof buf, "%s%.3f %.3f", i == 0 ? "M " : " L ", xy.x(), xy.y());
            out << buf;
        }
        out << "\" fill=\"none\" stroke=\"" << (arc.tail().z() >= 0 ? "black" : "gray")
            << "\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace reflgroups
