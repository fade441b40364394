#pragma once

// Arrow-arcs: a rotation R_b o R_a encoded as a directed great-circle arc from
// a point of line a to a point of line b. The arc is half as long as the
// rotation angle and may slide freely along its great circle.

#include "reflgroups/numerics.hpp"
#include "reflgroups/so3.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reflgroups {

class ArrowArc {
  public:
    /// Both endpoints are normalized. Throws DegenerateArc for antipodal endpoints.
    ArrowArc(const Vec3& tail, const Vec3& head, const Tolerance& tol = kDefaultTolerance);

    const Vec3& tail() const { return tail_; }
    const Vec3& head() const { return head_; }

    /// True for the degenerate arc tail == head, which encodes the identity.
    bool is_identity(const Tolerance& tol = kDefaultTolerance) const;
    /// Canonical unit normal of the arc's great circle; requires a non-identity arc.
    Vec3 axis() const;
    /// Angular length in [0, pi).
    double length() const;

    bool operator==(const ArrowArc&) const = default;

  private:
    Vec3 tail_;
    Vec3 head_;
};

Rotation3 arc_to_rotation(const ArrowArc& arc, const Tolerance& tol = kDefaultTolerance);

/// Arc on the circle polar to r's axis with tail at the probe point. The
/// identity maps to the degenerate arc at `seed`, or (1, 0, 0).
ArrowArc rotation_to_arc(const Rotation3& r, const std::optional<Vec3>& seed = std::nullopt,
                         const Tolerance& tol = kDefaultTolerance);

/// Rotates both endpoints by `delta` about the arc's axis.
ArrowArc slide(const ArrowArc& arc, double delta, const Tolerance& tol = kDefaultTolerance);

/// Replaces the head by its antipode. Throws DegenerateArc for identity arcs.
ArrowArc antipode_head(const ArrowArc& arc, const Tolerance& tol = kDefaultTolerance);

/// Arc of V o U for arcs u (of U) and v (of V): slide until u's head meets
/// v's tail and close the triangle.
ArrowArc triangle_compose(const ArrowArc& u, const ArrowArc& v, const Tolerance& tol = kDefaultTolerance);

/// Orthographic SVG drawing of the unit sphere with the given arcs.
std::string arcs_to_svg(const std::vector<ArrowArc>& arcs);

}  // namespace reflgroups
