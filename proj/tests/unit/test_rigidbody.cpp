#include <doctest.h>

#include "ch2geo/errors.hpp"
#include "ch2geo/rigidbody.hpp"

using namespace ch2geo::rigidbody;

namespace {

State generic() {
    State s;
    s.inertia = {1.0, 2.0, 3.0};
    s.omega = {1.0, 1.0, 1.0};
    return s;
}

}  // namespace

TEST_CASE("hat map is the cross product") {
    const Vec3 a{1.0, -2.0, 0.5};
    const Vec3 b{0.3, 0.7, -1.1};
    CHECK((hat(a) * b - a.cross(b)).norm() < 1e-15);
    CHECK((hat(a) + hat(a).transpose()).norm() == 0.0);
}

TEST_CASE("Euler equation") {
    State s = generic();
    // Oracle: I1 w1' = (I2 - I3) w2 w3, cyclically.
    const Vec3 expected{(2.0 - 3.0) / 1.0, (3.0 - 1.0) / 2.0, (1.0 - 2.0) / 3.0};
    CHECK((euler_rhs(s) - expected).norm() < 1e-15);
    s.omega = {0.0, 0.0, 2.0};
    CHECK(euler_rhs(s).norm() == 0.0);
    s.inertia = {2.0, 2.0, 2.0};
    s.omega = {0.3, -1.0, 0.4};
    CHECK(euler_rhs(s).norm() < 1e-15);
}

TEST_CASE("spherical body rotates steadily about a fixed axis") {
    State s;
    s.inertia = {2.0, 2.0, 2.0};
    s.omega = {0.0, 0.0, 1.0};
    const auto traj = evolve_rigidbody(s, 1e-2, 1.0);
    const auto& last = traj.back();
    CHECK((last.omega - s.omega).norm() < 1e-14);
    CHECK(last.R(0, 0) == doctest::Approx(std::cos(1.0)).epsilon(1e-10));
    CHECK(last.R(1, 0) == doctest::Approx(std::sin(1.0)).epsilon(1e-10));
    CHECK(ad_star_check(traj) < 1e-10);
}

TEST_CASE("conservation and orthonormality on a generic run") {
    const auto traj = evolve_rigidbody(generic(), 1e-3, 10.0, 100);
    CHECK(traj.size() == 101);
    const auto& first = traj.front();
    for (const auto& s : traj) {
        CHECK((s.spatial_momentum - first.spatial_momentum).norm() < 1e-8);
        CHECK(std::abs(s.energy - first.energy) < 1e-8);
        CHECK(std::abs(s.body_momentum.squaredNorm() - first.body_momentum.squaredNorm()) < 1e-8);
        CHECK((s.R.transpose() * s.R - Mat3::Identity()).norm() < 1e-9);
        CHECK(s.R.determinant() == doctest::Approx(1.0));
    }
    CHECK(ad_star_check(traj) < 1e-8);
}

TEST_CASE("zero angular velocity stays at rest") {
    State s;
    s.inertia = {1.0, 2.0, 3.0};
    const auto traj = evolve_rigidbody(s, 0.1, 1.0);
    CHECK(ad_star_check(traj) == 0.0);
    CHECK((traj.back().R - Mat3::Identity()).norm() == 0.0);
}

TEST_CASE("reorthonormalization returns the nearest rotation") {
    Mat3 m = Mat3::Identity();
    m(0, 1) = 1e-3;
    const auto r = reorthonormalize(m);
    CHECK((r.transpose() * r - Mat3::Identity()).norm() < 1e-14);
    CHECK(r.determinant() == doctest::Approx(1.0));
    CHECK((r - m).norm() < 1e-3);
}

TEST_CASE("RK4 order on the angular velocity") {
    auto omega_at = [](double dt) { return evolve_rigidbody(generic(), dt, 2.0, 1000000).back().omega; };
    const auto a = omega_at(0.1);
    const auto b = omega_at(0.05);
    const auto c = omega_at(0.025);
    const double ratio = (a - b).norm() / (b - c).norm();
    CHECK(ratio > 14.0);
    CHECK(ratio < 18.0);
}

TEST_CASE("invalid arguments") {
    State s = generic();
    CHECK_THROWS_AS(evolve_rigidbody(s, 0.0, 1.0), ch2geo::InvalidArgument);
    s.inertia(1) = -1.0;
    CHECK_THROWS_AS(evolve_rigidbody(s, 0.1, 1.0), ch2geo::InvalidArgument);
}
