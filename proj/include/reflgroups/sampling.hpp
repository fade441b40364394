#pragma once

// Seeded random mirrors and words: normals are normalized Gaussian vectors,
// planar offsets are uniform in [-10, 10].

#include "reflgroups/euclid2.hpp"
#include "reflgroups/orthon.hpp"
#include "reflgroups/so3.hpp"
#include "reflgroups/sphere.hpp"

#include <random>

namespace reflgroups {

using Rng = std::mt19937_64;

VecN random_unit(Rng& rng, int dimension);

Line2 random_line2(Rng& rng);
GreatCircle random_circle(Rng& rng);
AxisLine random_axis_line(Rng& rng);
Hyperplane random_hyperplane(Rng& rng, int dimension);

Word2 random_word2(Rng& rng, std::size_t length);
SphereWord random_sphere_word(Rng& rng, std::size_t length);
LineWord random_line_word(Rng& rng, std::size_t length);
WordN random_word_n(Rng& rng, int dimension, std::size_t length);

/// Random rotation with a uniformly distributed axis and angle in (-pi, pi].
Rotation3 random_rotation(Rng& rng);

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix, sign-corrected).
MatN random_orthogonal(Rng& rng, int dimension);

}  // namespace reflgroups
