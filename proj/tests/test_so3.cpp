#include <doctest.h>

#include "oracles.hpp"
#include "reflgroups/sampling.hpp"

using namespace reflgroups;

namespace {

const AxisLine x_line(1, 0, 0);
const AxisLine y_line(0, 1, 0);
const AxisLine z_line(0, 0, 1);

bool same_rotation(const Rotation3& a, const Rotation3& b, double eps = 1e-12) {
    return oracle::quaternion_distance(oracle::quaternion_of(a), oracle::quaternion_of(b)) <= eps;
}

double residual(const LineWord& a, const LineWord& b) {
    return oracle::quaternion_distance(oracle::line_word_quaternion(a), oracle::line_word_quaternion(b));
}

}  // namespace

TEST_CASE("line_reflection_matrix") {
    CHECK((line_reflection_matrix(z_line) - Vec3(-1, -1, 1).asDiagonal().toDenseMatrix()).norm() < 1e-15);
    CHECK((line_reflection_matrix(x_line) - Vec3(1, -1, -1).asDiagonal().toDenseMatrix()).norm() < 1e-15);
    Mat3 swap;
    swap << 0, 1, 0, 1, 0, 0, 0, 0, -1;
    CHECK((line_reflection_matrix(AxisLine(1, 1, 0)) - swap).norm() < 1e-15);
}

TEST_CASE("Rotation3 canonical form") {
    const Rotation3 a(Vec3(0, 0, -2), 0.5);
    CHECK((a.axis() - Vec3(0, 0, 1)).norm() < 1e-15);
    CHECK(a.angle() == doctest::Approx(-0.5));
    CHECK(Rotation3(Vec3(1, 0, 0), 2 * kPi).is_identity());
    CHECK(Rotation3(Vec3(1, 0, 0), -kPi).angle() == doctest::Approx(kPi));
    CHECK_THROWS_AS(Rotation3(Vec3(0, 0, 0), 1.0), Error);
}

TEST_CASE("quaternion bridge") {
    const Quaternion id = to_quaternion(Rotation3::identity());
    CHECK(id.w == 1.0);
    CHECK(id.vec().norm() == 0.0);
    const Quaternion half = to_quaternion(Rotation3(Vec3(0, 0, 1), kPi));
    CHECK(std::abs(half.w) < 1e-15);
    CHECK(std::abs(std::abs(half.z) - 1.0) < 1e-15);
    const Quaternion q = to_quaternion(Rotation3(Vec3(1, -1, 1), 2 * kPi / 3));
    const double s = q.w < 0 ? -1.0 : 1.0;
    CHECK(s * q.w == doctest::Approx(0.5));
    CHECK(s * q.x == doctest::Approx(0.5));
    CHECK(s * q.y == doctest::Approx(-0.5));
    CHECK(s * q.z == doctest::Approx(0.5));

    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        const Rotation3 r = random_rotation(rng);
        CHECK(same_rotation(to_rotation(to_quaternion(r)), r));
        CHECK((to_quaternion(r).matrix() - r.matrix()).norm() < 1e-12);
        CHECK(same_rotation(rotation_from_matrix(r.matrix()), r, 1e-10));
    }
}

TEST_CASE("compose_line_reflections") {
    CHECK(compose_line_reflections(x_line, x_line).is_identity());
    CHECK(same_rotation(compose_line_reflections(x_line, y_line), Rotation3(Vec3(0, 0, 1), kPi)));
    CHECK(same_rotation(compose_line_reflections(x_line, AxisLine(1, 1, 0)), Rotation3(Vec3(0, 0, 1), kPi / 2)));
}

TEST_CASE("rotation_to_line_pair") {
    const auto [a, b] = rotation_to_line_pair(Rotation3(Vec3(0, 0, 1), kPi));
    CHECK(same_axis_line(a, x_line));
    CHECK(same_axis_line(b, y_line));
    const auto [c, d] = rotation_to_line_pair(Rotation3(Vec3(0, 0, 1), kPi / 2));
    CHECK(same_axis_line(c, x_line));
    CHECK(same_axis_line(d, AxisLine(1, 1, 0)));
    CHECK_THROWS_AS(rotation_to_line_pair(Rotation3::identity()), Error);

    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
        const Rotation3 r = random_rotation(rng);
        const auto [p, q] = rotation_to_line_pair(r);
        CHECK(same_rotation(compose_line_reflections(p, q), r, 1e-10));
    }
}

TEST_CASE("split_reflection") {
    const auto [b1, c1] = split_reflection(x_line, Vec3(0, 0, 1));
    CHECK(same_axis_line(b1, y_line));
    CHECK(same_axis_line(c1, z_line));
    const auto [b2, c2] = split_reflection(z_line, Vec3(0, 0, 1));
    CHECK(same_axis_line(b2, x_line));
    CHECK(same_axis_line(c2, y_line));
    const auto [b3, c3] = split_reflection(z_line, Vec3(0, 1, 0));
    CHECK(same_axis_line(b3, x_line));
    CHECK(same_axis_line(c3, y_line));
    CHECK((word_matrix_so3({b3, c3}) - line_reflection_matrix(z_line)).norm() < 1e-15);
}

TEST_CASE("reduce_three") {
    const LineWord frame = reduce_three(x_line, y_line, z_line);
    CHECK(frame.size() <= 2);
    CHECK(residual(frame, {}) < 1e-12);
    const LineWord one = reduce_three(x_line, x_line, AxisLine(1, 2, 3));
    CHECK(one.size() == 1);
    CHECK(one[0] == AxisLine(1, 2, 3));

    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        const LineWord w = random_line_word(rng, 3);
        Trace<AxisLine> trace;
        const LineWord out = reduce_three(w[0], w[1], w[2], kDefaultTolerance, &trace);
        CHECK(out.size() <= 2);
        CHECK(residual(w, out) < 1e-10);
        CHECK(replay(w, trace) == out);
        for (const auto& step : trace) {
            CHECK(is_valid_step_so3(step));
        }
    }
}

TEST_CASE("normalize_so3") {
    CHECK(normalize_so3({}).empty());
    CHECK(normalize_so3({x_line, x_line}).empty());
    Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        const LineWord w = random_line_word(rng, 6);
        const LineWord out = normalize_so3(w);
        CHECK(out.size() <= 2);
        CHECK(residual(w, out) < 1e-8);
    }
}

TEST_CASE("polar frame identity") {
    CHECK((word_matrix_so3({x_line, y_line, z_line}) - Mat3::Identity()).norm() < 1e-15);
    CHECK(is_valid_step_so3({Relation::PolarFrame, 0, {z_line}, {x_line, y_line}}));
    CHECK_FALSE(is_valid_step_so3({Relation::PolarFrame, 0, {z_line}, {x_line, AxisLine(1, 1, 0)}}));
}

TEST_CASE("projective_representative") {
    CHECK((projective_representative(Mat3::Identity()) - Mat3::Identity()).norm() < 1e-15);
    CHECK((projective_representative(-Mat3::Identity()) - Mat3::Identity()).norm() < 1e-15);
    const Mat3 plane = Vec3(1, 1, -1).asDiagonal();
    CHECK((projective_representative(plane) - line_reflection_matrix(z_line)).norm() < 1e-15);
    Mat3 skewed = Mat3::Identity();
    skewed(0, 1) = 0.1;
    CHECK_THROWS_AS(projective_representative(skewed), Error);
}

TEST_CASE("verify_pencil_relation_so3") {
    const AxisLine a(1, 0, 0), b(1, 1, 0), c(0, 1, 0), d(-1, 1, 0);
    CHECK(verify_pencil_relation_so3(a, b, c, d));
    CHECK_FALSE(verify_pencil_relation_so3(a, b, d, c));
    CHECK_FALSE(verify_pencil_relation_so3(a, b, c, AxisLine(0, 0, 1)));
}
