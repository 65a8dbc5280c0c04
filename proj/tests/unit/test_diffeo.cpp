#include <doctest.h>

#include "ch2geo/diffeo.hpp"
#include "ch2geo/errors.hpp"
#include "support.hpp"

using namespace ch2geo;
using test::two_pi;

namespace {

// phi(x) = x + eps sin(2 pi x) / (2 pi), phi_x = 1 + eps cos(2 pi x).
Diffeo wiggle(int n, double eps) {
    return Diffeo(test::sampled(n, [eps](double x) { return eps * std::sin(two_pi * x) / two_pi; }));
}

}  // namespace

TEST_CASE("identity and shift") {
    const Grid g(32);
    const auto id = Diffeo::identity(g);
    CHECK(id.displacement().max_abs() == 0.0);
    CHECK(id.jacobian().min() == doctest::Approx(1.0));
    const auto s = Diffeo::shift(g, 0.25);
    CHECK(s.image()[4] == doctest::Approx(4.0 / 32 + 0.25));
}

TEST_CASE("non-monotone maps are rejected") {
    CHECK_THROWS_AS(wiggle(32, 1.5), JacobianDegenerate);
}

TEST_CASE("composition with a field evaluates off the grid") {
    const auto phi = wiggle(64, 0.4);
    const auto f = test::sampled(64, [](double x) { return std::cos(two_pi * 2 * x); });
    const auto composed = compose(f, phi);
    const auto image = phi.image();
    for (int j = 0; j < 64; j += 5) CHECK(composed[j] == doctest::Approx(std::cos(two_pi * 2 * image[j])).epsilon(1e-12));
}

TEST_CASE("inverse round-trips") {
    const auto phi = wiggle(64, 0.6);
    const auto inv = invert_diffeo(phi);
    const auto back = compose(phi, inv);
    CHECK(back.displacement().max_abs() < 1e-12);
    // Oracle: x = y + eps sin(2 pi y)/(2 pi) solved by bisection.
    const auto image = inv.image();
    for (int j = 0; j < 64; j += 9) {
        const double x = j / 64.0;
        double lo = x - 0.2;
        double hi = x + 0.2;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (mid + 0.6 * std::sin(two_pi * mid) / two_pi < x ? lo : hi) = mid;
        }
        CHECK(image[j] == doctest::Approx(lo).epsilon(1e-12));
    }
}

TEST_CASE("composition of shifts adds offsets") {
    const Grid g(32);
    const auto c = compose(Diffeo::shift(g, 0.1), Diffeo::shift(g, 0.2));
    CHECK(c.displacement().min() == doctest::Approx(0.3));
    CHECK(c.displacement().max() == doctest::Approx(0.3));
}
