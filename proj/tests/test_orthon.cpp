#include <doctest.h>

#include "oracles.hpp"
#include "reflgroups/sampling.hpp"

using namespace reflgroups;

namespace {

VecN vec(std::initializer_list<double> xs) {
    VecN v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) {
        v[i++] = x;
    }
    return v;
}

Hyperplane planar(int n, double degrees) {
    const double a = degrees * kPi / 180.0;
    VecN v = VecN::Zero(n);
    v[0] = std::cos(a);
    v[1] = std::sin(a);
    return Hyperplane(v);
}

double angle_in_plane(const Hyperplane& h) {
    return wrap_half_angle(std::atan2(h.normal()[1], h.normal()[0]));
}

MatN rotation2(double angle) {
    MatN m(2, 2);
    m << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    return m;
}

}  // namespace

TEST_CASE("householder") {
    CHECK((householder(Hyperplane(vec({1, 0}))) - vec({-1, 1}).asDiagonal().toDenseMatrix()).norm() < 1e-15);
    CHECK((householder(Hyperplane(vec({0, 0, 1}))) - vec({1, 1, -1}).asDiagonal().toDenseMatrix()).norm() < 1e-15);
    const MatN expected = MatN::Identity(4, 4) - 0.5 * MatN::Ones(4, 4);
    CHECK((householder(Hyperplane(vec({1, 1, 1, 1}))) - expected).norm() < 1e-15);
}

TEST_CASE("WordN validation") {
    CHECK_THROWS_AS((WordN{3, {Hyperplane(vec({1, 0}))}}.validate()), Error);
    CHECK_THROWS_AS((WordN{1, {}}.validate()), Error);
    CHECK_THROWS_AS(Hyperplane(vec({0, 0, 0})), Error);
}

TEST_CASE("spectral_split") {
    const SpectralSplit id = spectral_split(MatN::Identity(4, 4));
    REQUIRE(id.blocks.size() == 1);
    CHECK(std::get<blocks::Fixed>(id.blocks[0]).basis.cols() == 4);

    const SpectralSplit neg = spectral_split(-MatN::Identity(3, 3));
    int negated = 0;
    for (const auto& b : neg.blocks) {
        negated += std::holds_alternative<blocks::NegatedLine>(b) ? 1 : 0;
    }
    CHECK(negated == 3);

    const SpectralSplit rot = spectral_split(rotation2(kPi / 2));
    REQUIRE(rot.blocks.size() == 1);
    CHECK(std::get<blocks::RotationPlane>(rot.blocks[0]).angle == doctest::Approx(kPi / 2));

    CHECK_THROWS_AS(spectral_split(MatN::Ones(3, 3)), Error);
}

TEST_CASE("spectral_split reassembles") {
    Rng rng(3);
    for (int n = 2; n <= 8; ++n) {
        for (int i = 0; i < 30; ++i) {
            const MatN m = random_orthogonal(rng, n);
            CHECK((spectral_split(m).matrix() - m).norm() < 1e-8 * std::sqrt(n));
        }
    }
}

TEST_CASE("decompose") {
    CHECK(decompose(MatN::Identity(3, 3)).mirrors.empty());
    const WordN neg = decompose(-MatN::Identity(3, 3));
    CHECK(neg.mirrors.size() == 3);
    CHECK((oracle::orthogonal_matrix(neg) + MatN::Identity(3, 3)).norm() < 1e-12);
    const WordN quarter = decompose(rotation2(kPi / 2));
    REQUIRE(quarter.mirrors.size() == 2);
    const double gap = std::abs(wrap_half_angle(angle_in_plane(quarter.mirrors[1]) - angle_in_plane(quarter.mirrors[0])));
    CHECK(gap == doctest::Approx(kPi / 4));
    CHECK((oracle::orthogonal_matrix(quarter) - rotation2(kPi / 2)).norm() < 1e-12);
}

TEST_CASE("pencil_completion_n") {
    const Hyperplane m2 = pencil_completion_n(planar(3, 0), planar(3, 45), planar(3, 90));
    CHECK(same_hyperplane(m2, planar(3, 135)));
    const Hyperplane same = pencil_completion_n(planar(3, 10), planar(3, 10), Hyperplane(vec({0, 0, 1})));
    CHECK(same == Hyperplane(vec({0, 0, 1})));
    CHECK(same_hyperplane(pencil_completion_n(planar(4, 0), planar(4, 30), planar(4, 45)), planar(4, 75)));
    CHECK_THROWS_AS(pencil_completion_n(planar(3, 0), planar(3, 30), Hyperplane(vec({0, 0, 1}))), Error);
    CHECK_THROWS_AS(pencil_completion_n(planar(3, 0), planar(4, 30), planar(3, 45)), Error);
}

TEST_CASE("verify_pencil_relation_n") {
    CHECK(verify_pencil_relation_n(planar(5, 0), planar(5, 30), planar(5, 45), planar(5, 75)));
    CHECK_FALSE(verify_pencil_relation_n(planar(5, 0), planar(5, 30), planar(5, 75), planar(5, 45)));
}

TEST_CASE("reduce_n_plus_one") {
    const WordN three{2, {planar(2, 0), planar(2, 30), planar(2, 90)}};
    const WordN one = reduce_n_plus_one(three);
    CHECK(one.mirrors.size() == 1);
    CHECK((oracle::orthogonal_matrix(one) - oracle::orthogonal_matrix(three)).norm() < 1e-12);

    const WordN cancel = reduce_n_plus_one({2, {planar(2, 0), planar(2, 0), planar(2, 45)}});
    REQUIRE(cancel.mirrors.size() == 1);
    CHECK(same_hyperplane(cancel.mirrors[0], planar(2, 45)));

    CHECK_THROWS_AS(reduce_n_plus_one({3, {planar(3, 0), planar(3, 30)}}), Error);

    Rng rng(17);
    for (int n = 2; n <= 6; ++n) {
        for (int i = 0; i < 50; ++i) {
            const WordN w = random_word_n(rng, n, static_cast<std::size_t>(n + 1));
            Trace<Hyperplane> trace;
            const WordN out = reduce_n_plus_one(w, kDefaultTolerance, &trace);
            CHECK(out.mirrors.size() <= static_cast<std::size_t>(n - 1));
            CHECK((oracle::orthogonal_matrix(out) - oracle::orthogonal_matrix(w)).norm() < 1e-8);
            CHECK(replay(w.mirrors, trace) == out.mirrors);
            std::size_t length = w.mirrors.size();
            for (const auto& step : trace) {
                CHECK(step.relation != Relation::PolarFrame);
                CHECK(is_valid_step_n(step));
                length = length - step.removed.size() + step.inserted.size();
                CHECK(length <= w.mirrors.size());
            }
        }
    }
}

TEST_CASE("reduce_n_plus_one with dependent normals early in the word") {
    const Hyperplane a = planar(4, 0), b = planar(4, 50), c = planar(4, 110);
    const WordN w{4, {a, b, c, Hyperplane(vec({0, 0, 1, 0})), Hyperplane(vec({0, 0.2, 0.3, 1}))}};
    Trace<Hyperplane> trace;
    const WordN out = reduce_n_plus_one(w, kDefaultTolerance, &trace);
    CHECK(out.mirrors.size() <= 3);
    CHECK((oracle::orthogonal_matrix(out) - oracle::orthogonal_matrix(w)).norm() < 1e-10);
    for (const auto& step : trace) {
        CHECK(is_valid_step_n(step));
    }
}

TEST_CASE("normalize_n") {
    CHECK(normalize_n({3, {}}).mirrors.empty());
    const Hyperplane h(vec({1, 2, 3}));
    CHECK(normalize_n({3, {h, h}}).mirrors.empty());

    Rng rng(19);
    for (int i = 0; i < 50; ++i) {
        const WordN w = random_word_n(rng, 4, 9);
        const WordN out = normalize_n(w);
        CHECK(out.mirrors.size() <= 3);
        CHECK(out.mirrors.size() % 2 == 1);
        CHECK((oracle::orthogonal_matrix(out) - oracle::orthogonal_matrix(w)).norm() < 1e-8);
    }
}
