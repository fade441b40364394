#pragma once

// O(n) as words of reflections in hyperplanes through the origin.

#include "reflgroups/numerics.hpp"
#include "reflgroups/rewrite.hpp"

#include <variant>
#include <vector>

namespace reflgroups {

/// The hyperplane {x : normal . x = 0}, stored by its canonically signed unit normal.
class Hyperplane {
  public:
    explicit Hyperplane(const VecN& normal);

    const VecN& normal() const { return normal_; }
    int dimension() const { return static_cast<int>(normal_.size()); }

    bool operator==(const Hyperplane& other) const {
        return normal_.size() == other.normal_.size() && normal_ == other.normal_;
    }

  private:
    VecN normal_;
};

struct WordN {
    int dimension = 2;
    std::vector<Hyperplane> mirrors;

    /// Throws DimensionMismatch if n < 2 or a mirror lives in another dimension.
    void validate() const;
};

namespace blocks {
/// Subspace fixed pointwise, by orthonormal basis columns.
struct Fixed {
    MatN basis;
};
/// Line negated by the map.
struct NegatedLine {
    VecN direction;
};
/// Plane rotated by `angle` in (0, pi], taking `first` toward `second`.
struct RotationPlane {
    VecN first;
    VecN second;
    double angle;
};
}  // namespace blocks

using SpectralBlock = std::variant<blocks::Fixed, blocks::NegatedLine, blocks::RotationPlane>;

struct SpectralSplit {
    int dimension = 0;
    std::vector<SpectralBlock> blocks;

    /// Reassembles the orthogonal map from the blocks.
    MatN matrix() const;
};

MatN householder(const Hyperplane& h);
/// Product of Householders in word order (first acts first).
MatN word_matrix_n(const WordN& w);

bool same_hyperplane(const Hyperplane& a, const Hyperplane& b, const Tolerance& tol = kDefaultTolerance);

/// Throws NotOrthogonal unless m is square and m^T m = I within eps_verify.
void require_orthogonal(const MatN& m, const Tolerance& tol = kDefaultTolerance);

SpectralSplit spectral_split(const MatN& m, const Tolerance& tol = kDefaultTolerance);

/// At most n mirrors whose product is m: one per negated line, two per rotation plane.
WordN decompose(const MatN& m, const Tolerance& tol = kDefaultTolerance);

/// m2 with H(m) H(l) = H(m2) H(l2); the normals must span a common 2-plane
/// (NotCoplanarNormals otherwise).
Hyperplane pencil_completion_n(const Hyperplane& l, const Hyperplane& m, const Hyperplane& l2,
                               const Tolerance& tol = kDefaultTolerance);

bool verify_pencil_relation_n(const Hyperplane& l, const Hyperplane& m, const Hyperplane& l2, const Hyperplane& m2,
                              const Tolerance& tol = kDefaultTolerance);

/// Rewrites a word of exactly n+1 mirrors into at most n-1 mirrors by single
/// pencil and involution moves. Throws WrongLength.
WordN reduce_n_plus_one(const WordN& w, const Tolerance& tol = kDefaultTolerance,
                        Trace<Hyperplane>* trace = nullptr);

/// Length <= n word equal to `w`, same length parity.
WordN normalize_n(const WordN& w, const Tolerance& tol = kDefaultTolerance, Trace<Hyperplane>* trace = nullptr);

bool is_valid_step_n(const RewriteStep<Hyperplane>& step, const Tolerance& tol = kDefaultTolerance);

}  // namespace reflgroups
