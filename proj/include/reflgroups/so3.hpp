#pragma once

// SO(3) generated by reflections in lines through the origin (half-turns).

#include "reflgroups/numerics.hpp"
#include "reflgroups/rewrite.hpp"

#include <utility>
#include <vector>

namespace reflgroups {

/// A line through the origin, stored by its canonically signed unit direction.
class AxisLine {
  public:
    explicit AxisLine(const Vec3& direction);
    AxisLine(double x, double y, double z) : AxisLine(Vec3(x, y, z)) {}

    const Vec3& direction() const { return direction_; }

    bool operator==(const AxisLine&) const = default;

  private:
    Vec3 direction_;
};

using LineWord = std::vector<AxisLine>;

/// Rotation by `angle` in (-pi, pi] about a canonically signed unit axis.
/// The identity is stored with axis (0, 0, 1) and angle 0.
class Rotation3 {
  public:
    Rotation3() = default;
    /// Canonicalizes (axis, angle) ~ (-axis, -angle). Throws DegenerateInput for a zero axis.
    Rotation3(const Vec3& axis, double angle);

    static Rotation3 identity() { return {}; }

    const Vec3& axis() const { return axis_; }
    double angle() const { return angle_; }
    bool is_identity() const { return angle_ == 0.0; }
    Mat3 matrix() const;

    bool operator==(const Rotation3&) const = default;

  private:
    Vec3 axis_ = Vec3::UnitZ();
    double angle_ = 0.0;
};

/// Unit quaternion w + xi + yj + zk; q and -q are the same rotation.
struct Quaternion {
    double w = 1.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 vec() const { return {x, y, z}; }
    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    Mat3 matrix() const;

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
};

/// Angle of the rotation a^-1 b, insensitive to the sign of either quaternion.
double rotation_distance(const Quaternion& a, const Quaternion& b);

Quaternion to_quaternion(const Rotation3& r);
Rotation3 to_rotation(const Quaternion& q);
Rotation3 rotation_from_matrix(const Mat3& m);

Mat3 line_reflection_matrix(const AxisLine& a);
/// Product of line reflections in word order (first acts first).
Mat3 word_matrix_so3(const LineWord& w);
Quaternion word_quaternion_so3(const LineWord& w);

bool same_axis_line(const AxisLine& a, const AxisLine& b, const Tolerance& tol = kDefaultTolerance);

/// R_b o R_a.
Rotation3 compose_line_reflections(const AxisLine& a, const AxisLine& b, const Tolerance& tol = kDefaultTolerance);

/// Lines (a, b) perpendicular to the axis with R_b o R_a = r. Throws IdentityInput for the identity.
std::pair<AxisLine, AxisLine> rotation_to_line_pair(const Rotation3& r, const Tolerance& tol = kDefaultTolerance);

/// Splits R_k into R_c o R_b where b lies in the plane with unit normal
/// `plane_normal`, b is perpendicular to k and c completes the frame.
std::pair<AxisLine, AxisLine> split_reflection(const AxisLine& k, const Vec3& plane_normal,
                                               const Tolerance& tol = kDefaultTolerance);

/// Rewrites [k, l, m] into at most two line reflections using polar frame,
/// pencil and involution moves.
LineWord reduce_three(const AxisLine& k, const AxisLine& l, const AxisLine& m,
                      const Tolerance& tol = kDefaultTolerance, Trace<AxisLine>* trace = nullptr);

/// Length <= 2 normal form; the identity is the empty word.
LineWord normalize_so3(const LineWord& w, const Tolerance& tol = kDefaultTolerance, Trace<AxisLine>* trace = nullptr);

/// Orientation preserving lift of the projective class of an orthogonal matrix:
/// `m` if det m = +1, otherwise -m. Throws NotOrthogonal.
Mat3 projective_representative(const Mat3& m, const Tolerance& tol = kDefaultTolerance);

/// Pencil relation among coplanar lines: R_b o R_a = R_d o R_c.
bool verify_pencil_relation_so3(const AxisLine& a, const AxisLine& b, const AxisLine& c, const AxisLine& d,
                                const Tolerance& tol = kDefaultTolerance);

bool is_valid_step_so3(const RewriteStep<AxisLine>& step, const Tolerance& tol = kDefaultTolerance);

}  // namespace reflgroups
