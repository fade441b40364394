#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace reflgroups {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using VecN = Eigen::VectorXd;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using MatN = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;

/// Two-tier tolerance policy. `eps_coincide` decides geometric predicates
/// (parallel? same mirror?), `eps_verify` bounds oracle residuals.
struct Tolerance {
    double eps_coincide = 1e-9;
    double eps_verify = 1e-8;

    /// Throws DegenerateInput unless 0 < eps_coincide < eps_verify < 1e-3.
    void validate() const;
};

inline constexpr Tolerance kDefaultTolerance{};

enum class ErrorKind {
    DegenerateInput,
    NotConcurrent,
    IdentityInput,
    NotOrthogonal,
    DegenerateArc,
    NotCoplanarNormals,
    WrongLength,
    SyntaxError,
    DimensionMismatch,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

namespace detail {

// Norms this close to 1 are treated as exactly 1, so that re-normalizing an
// already unit vector is bit-exact.
inline double unit_scale(double norm) {
    return std::abs(norm - 1.0) <= 8.0 * std::numeric_limits<double>::epsilon() ? 1.0 : norm;
}

template <class Derived>
int first_significant_sign(const Eigen::MatrixBase<Derived>& v, double eps) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > eps) {
            return v[i] > 0 ? 1 : -1;
        }
    }
    return 1;
}

}  // namespace detail

/// Normalizes `v` and fixes its sign so that the first component with
/// magnitude above `eps` is positive. Throws DegenerateInput for |v| <= eps.
template <class Derived>
auto canonical_unit(const Eigen::MatrixBase<Derived>& v, double eps = kDefaultTolerance.eps_coincide)
    -> Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1> {
    using Out = Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1>;
    const double norm = v.norm();
    if (!(norm > eps) || !std::isfinite(norm)) {
        throw Error(ErrorKind::DegenerateInput, "cannot normalize a zero or non-finite vector");
    }
    Out u = v / detail::unit_scale(norm);
    if (detail::first_significant_sign(u, eps) < 0) {
        u = -u;
    }
    return u;
}

/// Plain normalization without the sign convention.
template <class Derived>
auto unit(const Eigen::MatrixBase<Derived>& v, double eps = kDefaultTolerance.eps_coincide)
    -> Eigen::Matrix<typename Derived::Scalar, Derived::RowsAtCompileTime, 1> {
    const double norm = v.norm();
    if (!(norm > eps) || !std::isfinite(norm)) {
        throw Error(ErrorKind::DegenerateInput, "cannot normalize a zero or non-finite vector");
    }
    return v / detail::unit_scale(norm);
}

/// Unsigned angle in [0, pi/2] between the unoriented lines spanned by `u` and `v`.
template <class A, class B>
double angle_between_directions(const Eigen::MatrixBase<A>& u, const Eigen::MatrixBase<B>& v) {
    const double c = std::abs(u.dot(v));
    const double s = (u - u.dot(v) * v).norm();
    return std::atan2(s, c);
}

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

/// Wraps an angle into (-pi/2, pi/2]; used for gaps between unoriented lines.
double wrap_half_angle(double angle);

/// Signed angle from `x` to `y` measured about `axis` (right-hand rule).
/// `x` and `y` are expected to be orthogonal to `axis`.
double signed_angle_about(const Vec3& x, const Vec3& y, const Vec3& axis);

/// Rodrigues rotation of `v` about unit `axis` by `angle`.
Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle);

/// Rotation of the plane spanned by orthonormal `e1`, `e2` by `angle`
/// (taking e1 toward e2), identity on the orthogonal complement.
VecN rotate_in_plane(const VecN& v, const VecN& e1, const VecN& e2, double angle);

/// Angle of the rotation `a * b^T` for rotation matrices, accurate for small angles.
double rotation_distance(const Mat3& a, const Mat3& b);

}  // namespace reflgroups
