#pragma once

// The isometry group of S^2 (that is, O(3)) as words of reflections in great circles.

#include "reflgroups/numerics.hpp"
#include "reflgroups/rewrite.hpp"

#include <variant>
#include <vector>

namespace reflgroups {

/// The great circle {x in S^2 : pole . x = 0}; pole and -pole are the same circle.
class GreatCircle {
  public:
    explicit GreatCircle(const Vec3& pole);
    GreatCircle(double x, double y, double z) : GreatCircle(Vec3(x, y, z)) {}

    const Vec3& pole() const { return pole_; }

    bool operator==(const GreatCircle&) const = default;

  private:
    Vec3 pole_;
};

using SphereWord = std::vector<GreatCircle>;

namespace class_s2 {
struct Identity {};
struct Reflection {
    GreatCircle circle;
};
/// Right-hand rotation about a canonically signed axis, angle in (-pi, pi], nonzero.
struct Rotation {
    Vec3 axis;
    double angle;
};
/// Rotation about `axis` by `angle` composed with the reflection in the circle polar to `axis`.
struct Glide {
    Vec3 axis;
    double angle;
};
}  // namespace class_s2

using ClassS2 = std::variant<class_s2::Identity, class_s2::Reflection, class_s2::Rotation, class_s2::Glide>;

bool same_circle(const GreatCircle& l, const GreatCircle& m, const Tolerance& tol = kDefaultTolerance);

Vec3 reflect_sphere(const GreatCircle& c, const Vec3& p);
Mat3 circle_reflection_matrix(const GreatCircle& c);
/// Product of the reflections in word order (first acts first).
Mat3 word_matrix_sphere(const SphereWord& w);

/// Classifies R_m o R_l.
ClassS2 compose_two_sphere(const GreatCircle& l, const GreatCircle& m, const Tolerance& tol = kDefaultTolerance);

/// m2 through the intersection pair of l and m with R_m o R_l = R_m2 o R_l2.
/// Throws NotConcurrent when the three poles are not coplanar.
GreatCircle pencil_completion_sphere(const GreatCircle& l, const GreatCircle& m, const GreatCircle& l2,
                                     const Tolerance& tol = kDefaultTolerance);

bool verify_pencil_relation_sphere(const GreatCircle& l, const GreatCircle& m, const GreatCircle& l2,
                                   const GreatCircle& m2, const Tolerance& tol = kDefaultTolerance);

SphereWord reduce_four_sphere(const GreatCircle& k, const GreatCircle& l, const GreatCircle& m, const GreatCircle& n,
                              const Tolerance& tol = kDefaultTolerance, Trace<GreatCircle>* trace = nullptr);

/// Length <= 3 word equal to `w`, built from pencil and involution moves.
SphereWord normalize_sphere(const SphereWord& w, const Tolerance& tol = kDefaultTolerance,
                            Trace<GreatCircle>* trace = nullptr);

ClassS2 classify_sphere(const SphereWord& w, const Tolerance& tol = kDefaultTolerance);

bool is_valid_step_sphere(const RewriteStep<GreatCircle>& step, const Tolerance& tol = kDefaultTolerance);

}  // namespace reflgroups
