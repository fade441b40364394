#pragma once

// Isometries of the Euclidean plane as words of line reflections.
//
// Words apply left to right: element 0 acts first, so the operator
// composition R_n o R_m o R_l o R_k is stored as [k, l, m, n].

#include "reflgroups/numerics.hpp"
#include "reflgroups/rewrite.hpp"

#include <variant>
#include <vector>

namespace reflgroups {

/// The line {x : normal . x = offset} with a unit, canonically signed normal.
class Line2 {
  public:
    /// Throws DegenerateInput for a zero normal.
    Line2(const Vec2& normal, double offset);
    Line2(double nx, double ny, double offset) : Line2(Vec2(nx, ny), offset) {}

    const Vec2& normal() const { return normal_; }
    double offset() const { return offset_; }
    /// Unit vector along the line.
    Vec2 direction() const { return {-normal_.y(), normal_.x()}; }

    bool operator==(const Line2&) const = default;

  private:
    Vec2 normal_;
    double offset_;
};

using Word2 = std::vector<Line2>;

struct ParallelPencil {
    Vec2 direction;
};
struct ConcurrentPencil {
    Vec2 point;
};
using Pencil2 = std::variant<ParallelPencil, ConcurrentPencil>;

/// The affine map p -> linear * p + translation.
struct Isometry2 {
    Mat2 linear = Mat2::Identity();
    Vec2 translation = Vec2::Zero();

    Vec2 apply(const Vec2& p) const { return linear * p + translation; }
    /// `after` applied on top of `*this`.
    Isometry2 then(const Isometry2& after) const {
        return {after.linear * linear, after.linear * translation + after.translation};
    }
};

namespace class2 {
struct Identity {};
struct Reflection {
    Line2 axis;
};
struct Translation {
    Vec2 vector;
};
struct Rotation {
    Vec2 center;
    double angle;  ///< counterclockwise, in (-pi, pi]
};
struct Glide {
    Line2 axis;
    Vec2 vector;  ///< nonzero, parallel to the axis
};
}  // namespace class2

using Class2 = std::variant<class2::Identity, class2::Reflection, class2::Translation, class2::Rotation, class2::Glide>;

bool parallel_lines(const Line2& l, const Line2& m, const Tolerance& tol = kDefaultTolerance);
bool same_line(const Line2& l, const Line2& m, const Tolerance& tol = kDefaultTolerance);
/// Intersection of two non-parallel lines.
Vec2 intersect(const Line2& l, const Line2& m);

Vec2 reflect_point2(const Line2& l, const Vec2& p);
Isometry2 reflection_isometry2(const Line2& l);
Isometry2 word_to_isometry2(const Word2& w);
/// Frobenius norm of the linear difference plus Euclidean norm of the translation difference.
double isometry_residual2(const Isometry2& a, const Isometry2& b);

/// Classifies R_m o R_l (l acts first).
Class2 compose_two2(const Line2& l, const Line2& m, const Tolerance& tol = kDefaultTolerance);

Pencil2 pencil_of2(const Line2& l, const Line2& m, const Tolerance& tol = kDefaultTolerance);

/// The unique m2 in the pencil of l, m, l2 with R_m o R_l = R_m2 o R_l2.
/// Throws NotConcurrent when the three lines share no pencil.
Line2 pencil_completion2(const Line2& l, const Line2& m, const Line2& l2, const Tolerance& tol = kDefaultTolerance);

/// Rewrites the 4-word [k, l, m, n] into at most two mirrors.
Word2 reduce_four2(const Line2& k, const Line2& l, const Line2& m, const Line2& n,
                   const Tolerance& tol = kDefaultTolerance, Trace<Line2>* trace = nullptr);

/// Rewrites `w` into an equal word of length <= 3 using pencil and involution moves only.
Word2 normalize2(const Word2& w, const Tolerance& tol = kDefaultTolerance, Trace<Line2>* trace = nullptr);

Class2 classify2(const Word2& w, const Tolerance& tol = kDefaultTolerance);

/// True iff the four lines share a pencil and the oriented gaps l->m, l2->m2
/// (and l->l2, m->m2) agree, which is exactly R_m o R_l = R_m2 o R_l2.
bool verify_pencil_relation2(const Line2& l, const Line2& m, const Line2& l2, const Line2& m2,
                             const Tolerance& tol = kDefaultTolerance);

/// Checks that a recorded step is a single valid involution or pencil move.
bool is_valid_step2(const RewriteStep<Line2>& step, const Tolerance& tol = kDefaultTolerance);

namespace detail {
void reduce_four_at(Rewriter<Line2>& rw, std::size_t pos, const Tolerance& tol);
}

}  // namespace reflgroups
