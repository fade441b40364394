#include "reflgroups/numerics.hpp"
#include "reflgroups/rewrite.hpp"

#include <algorithm>

namespace reflgroups {

void Tolerance::validate() const {
    if (!(eps_coincide > 0.0 && eps_coincide < eps_verify && eps_verify < 1e-3)) {
        throw Error(ErrorKind::DegenerateInput, "tolerances must satisfy 0 < eps_coincide < eps_verify < 1e-3");
    }
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::NotConcurrent: return "NotConcurrent";
        case ErrorKind::IdentityInput: return "IdentityInput";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::DegenerateArc: return "DegenerateArc";
        case ErrorKind::NotCoplanarNormals: return "NotCoplanarNormals";
        case ErrorKind::WrongLength: return "WrongLength";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    }
    return "Unknown";
}

double wrap_angle(double angle) {
    double a = std::remainder(angle, 2.0 * kPi);
    if (a <= -kPi) {
        a += 2.0 * kPi;
    }
    return a;
}

double wrap_half_angle(double angle) {
    double a = std::remainder(angle, kPi);
    if (a <= -kPi / 2) {
        a += kPi;
    }
    return a;
}

double signed_angle_about(const Vec3& x, const Vec3& y, const Vec3& axis) {
    return std::atan2(axis.dot(x.cross(y)), x.dot(y));
}

Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c));
}

VecN rotate_in_plane(const VecN& v, const VecN& e1, const VecN& e2, double angle) {
    const double a = e1.dot(v);
    const double b = e2.dot(v);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return v + e1 * (a * c - b * s - a) + e2 * (a * s + b * c - b);
}

double rotation_distance(const Mat3& a, const Mat3& b) {
    const double chord = (a * b.transpose() - Mat3::Identity()).norm() / (2.0 * std::sqrt(2.0));
    return 2.0 * std::asin(std::min(1.0, chord));
}

const char* to_string(Relation relation) {
    switch (relation) {
        case Relation::Involution: return "involution";
        case Relation::Pencil: return "pencil";
        case Relation::PolarFrame: return "polar_frame";
    }
    return "unknown";
}

}  // namespace reflgroups
