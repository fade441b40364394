#include "reflgroups/sampling.hpp"

namespace reflgroups {

VecN random_unit(Rng& rng, int dimension) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    VecN v(dimension);
    do {
        for (int i = 0; i < dimension; ++i) {
            v[i] = gauss(rng);
        }
    } while (v.norm() < 1e-6);
    return v.normalized();
}

Line2 random_line2(Rng& rng) {
    const VecN n = random_unit(rng, 2);
    std::uniform_real_distribution<double> offset(-10.0, 10.0);
    return {Vec2(n[0], n[1]), offset(rng)};
}

GreatCircle random_circle(Rng& rng) {
    const VecN v = random_unit(rng, 3);
    return GreatCircle(Vec3(v[0], v[1], v[2]));
}

AxisLine random_axis_line(Rng& rng) {
    const VecN v = random_unit(rng, 3);
    return AxisLine(Vec3(v[0], v[1], v[2]));
}

Hyperplane random_hyperplane(Rng& rng, int dimension) { return Hyperplane(random_unit(rng, dimension)); }

Word2 random_word2(Rng& rng, std::size_t length) {
    Word2 w;
    for (std::size_t i = 0; i < length; ++i) {
        w.push_back(random_line2(rng));
    }
    return w;
}

SphereWord random_sphere_word(Rng& rng, std::size_t length) {
    SphereWord w;
    for (std::size_t i = 0; i < length; ++i) {
        w.push_back(random_circle(rng));
    }
    return w;
}

LineWord random_line_word(Rng& rng, std::size_t length) {
    LineWord w;
    for (std::size_t i = 0; i < length; ++i) {
        w.push_back(random_axis_line(rng));
    }
    return w;
}

WordN random_word_n(Rng& rng, int dimension, std::size_t length) {
    WordN w{dimension, {}};
    for (std::size_t i = 0; i < length; ++i) {
        w.mirrors.push_back(random_hyperplane(rng, dimension));
    }
    return w;
}

Rotation3 random_rotation(Rng& rng) {
    const VecN v = random_unit(rng, 3);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    return {Vec3(v[0], v[1], v[2]), angle(rng)};
}

MatN random_orthogonal(Rng& rng, int dimension) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatN g(dimension, dimension);
    for (int i = 0; i < dimension; ++i) {
        for (int j = 0; j < dimension; ++j) {
            g(i, j) = gauss(rng);
        }
    }
    const Eigen::HouseholderQR<MatN> qr(g);
    MatN q = qr.householderQ();
    const MatN r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dimension; ++j) {
        if (r(j, j) < 0) {
            q.col(j) = -q.col(j);
        }
    }
    return q;
}

}  // namespace reflgroups
