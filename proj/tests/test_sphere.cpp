#include <doctest.h>

#include "oracles.hpp"
#include "reflgroups/sampling.hpp"

using namespace reflgroups;

namespace {

const GreatCircle equator(0, 0, 1);

GreatCircle longitude(double degrees) {
    const double a = degrees * kPi / 180.0;
    return {-std::sin(a), std::cos(a), 0.0};
}

double residual(const SphereWord& a, const SphereWord& b) {
    return (oracle::sphere_matrix(a) - oracle::sphere_matrix(b)).norm();
}

}  // namespace

TEST_CASE("reflect_sphere") {
    CHECK((reflect_sphere(equator, Vec3(0, 0, 1)) - Vec3(0, 0, -1)).norm() < 1e-15);
    CHECK((reflect_sphere(equator, Vec3(1, 0, 0)) - Vec3(1, 0, 0)).norm() < 1e-15);
    const double h = std::sqrt(0.5);
    CHECK((reflect_sphere(GreatCircle(1, 0, 0), Vec3(h, h, 0)) - Vec3(-h, h, 0)).norm() < 1e-15);
}

TEST_CASE("GreatCircle identifies a pole with its antipode") {
    CHECK(GreatCircle(0, 0, -3) == equator);
    CHECK(same_circle(GreatCircle(1, 1e-12, 0), GreatCircle(-1, 0, 0)));
    CHECK_THROWS_AS(GreatCircle(0, 0, 0), Error);
}

TEST_CASE("compose_two_sphere") {
    CHECK(std::holds_alternative<class_s2::Identity>(compose_two_sphere(equator, equator)));
    const auto r = std::get<class_s2::Rotation>(compose_two_sphere(equator, GreatCircle(1, 0, 0)));
    CHECK(std::abs(std::abs(r.axis.y()) - 1.0) < 1e-12);
    CHECK(std::abs(r.angle) == doctest::Approx(kPi));
    const auto q = std::get<class_s2::Rotation>(compose_two_sphere(longitude(0), longitude(45)));
    CHECK((q.axis - Vec3(0, 0, 1)).norm() < 1e-12);
    CHECK(q.angle == doctest::Approx(kPi / 2));
}

TEST_CASE("pencil_completion_sphere") {
    CHECK(same_circle(pencil_completion_sphere(longitude(0), longitude(30), longitude(45)), longitude(75)));
    CHECK(same_circle(pencil_completion_sphere(longitude(0), longitude(90), longitude(10)), longitude(100)));
    CHECK(pencil_completion_sphere(equator, equator, longitude(20)) == longitude(20));
    CHECK_THROWS_AS(pencil_completion_sphere(longitude(0), longitude(30), equator), Error);
}

TEST_CASE("verify_pencil_relation_sphere") {
    CHECK(verify_pencil_relation_sphere(longitude(0), longitude(45), longitude(10), longitude(55)));
    CHECK_FALSE(verify_pencil_relation_sphere(longitude(0), longitude(45), longitude(10), longitude(50)));
    CHECK_FALSE(verify_pencil_relation_sphere(longitude(0), longitude(45), longitude(55), longitude(10)));
}

TEST_CASE("reduce_four_sphere") {
    const GreatCircle m(0.3, 0.1, 0.9), n(0.5, -0.5, 0.2);
    const SphereWord cancelled = reduce_four_sphere(equator, equator, m, n);
    REQUIRE(cancelled.size() == 2);
    CHECK(cancelled[0] == m);
    CHECK(cancelled[1] == n);

    const SphereWord r = reduce_four_sphere(longitude(0), longitude(30), longitude(60), longitude(90));
    CHECK(r.size() == 2);
    const Mat3 expected = Eigen::AngleAxisd(2 * kPi / 3, Vec3::UnitZ()).toRotationMatrix();
    CHECK((oracle::sphere_matrix(r) - expected).norm() < 1e-12);

    const SphereWord identity = reduce_four_sphere(equator, equator, m, m);
    CHECK(identity.size() <= 2);
    CHECK((oracle::sphere_matrix(identity) - Mat3::Identity()).norm() < 1e-12);
}

TEST_CASE("reduce_four_sphere steps replay and validate") {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        const SphereWord w = random_sphere_word(rng, 4);
        Trace<GreatCircle> trace;
        const SphereWord out = reduce_four_sphere(w[0], w[1], w[2], w[3], kDefaultTolerance, &trace);
        CHECK(out.size() <= 2);
        CHECK(residual(w, out) < 1e-10);
        CHECK(replay(w, trace) == out);
        for (const auto& step : trace) {
            CHECK(is_valid_step_sphere(step));
        }
    }
}

TEST_CASE("normalize_sphere") {
    CHECK(normalize_sphere({}).empty());
    const GreatCircle c(1, 2, 3), d(-1, 0.5, 0);
    const SphereWord one = normalize_sphere({c, c, d});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == d);

    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const SphereWord w = random_sphere_word(rng, 7);
        const SphereWord out = normalize_sphere(w);
        CHECK(out.size() <= 3);
        CHECK(out.size() % 2 == 1);
        CHECK(residual(w, out) < 1e-8);
    }
}

TEST_CASE("classify_sphere") {
    const auto r = std::get<class_s2::Reflection>(classify_sphere({equator}));
    CHECK(same_circle(r.circle, equator));
    const auto q = std::get<class_s2::Rotation>(classify_sphere({longitude(0), longitude(45)}));
    CHECK((q.axis - Vec3(0, 0, 1)).norm() < 1e-12);
    CHECK(q.angle == doctest::Approx(kPi / 2));
    const auto g = std::get<class_s2::Glide>(classify_sphere({GreatCircle(1, 0, 0), GreatCircle(0, 1, 0), equator}));
    CHECK(std::abs(g.angle) == doctest::Approx(kPi));
}

TEST_CASE("classify_sphere agrees with the matrix oracle") {
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        const SphereWord w = random_sphere_word(rng, static_cast<std::size_t>(i % 6));
        const Mat3 m = oracle::sphere_matrix(w);
        const ClassS2 c = classify_sphere(w);
        Mat3 rebuilt = Mat3::Identity();
        std::string name;
        if (std::holds_alternative<class_s2::Identity>(c)) {
            name = "identity";
        } else if (const auto* r = std::get_if<class_s2::Reflection>(&c)) {
            name = "reflection";
            rebuilt = oracle::plane_reflection(r->circle.pole());
        } else if (const auto* r = std::get_if<class_s2::Rotation>(&c)) {
            name = "rotation";
            rebuilt = Eigen::AngleAxisd(r->angle, r->axis).toRotationMatrix();
        } else {
            const auto& gl = std::get<class_s2::Glide>(c);
            name = "glide";
            rebuilt = Eigen::AngleAxisd(gl.angle, gl.axis).toRotationMatrix() * oracle::plane_reflection(gl.axis);
        }
        CHECK(name == oracle::sphere_class(m));
        CHECK((rebuilt - m).norm() < 1e-8);
    }
}
