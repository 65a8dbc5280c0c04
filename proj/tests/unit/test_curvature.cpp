#include <doctest.h>

#include "ch2geo/curvature.hpp"
#include "ch2geo/errors.hpp"
#include "support.hpp"

using namespace ch2geo;
using test::two_pi;

namespace {

double cosine(int m, double x) { return std::cos(two_pi * m * x); }

// Independent quadrature oracle for the density-coupling integrals, written
// from their definitions as integrals of products of cosines with the
// Helmholtz multiplier applied per resonant mode.
double resolvent(int m) { return 1.0 / (1.0 + std::pow(two_pi * m, 2)); }

}  // namespace

TEST_CASE("S_CH closed form against direct CH curvature") {
    const Grid g(64);
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            if (k == l) continue;
            const auto u = test::sampled(64, [=](double x) { return cosine(k, x); });
            const auto v = test::sampled(64, [=](double x) { return cosine(l, x); });
            const auto guv = gamma0_ch(u, v);
            const auto guu = gamma0_ch(u, u);
            const auto gvv = gamma0_ch(v, v);
            const double s = inner_H1(guv, guv) - inner_H1(guu, gvv);
            CHECK(closedform_S_CH(k, l) == doctest::Approx(s).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(closedform_S_CH(2, 2), InvalidArgument);
}

TEST_CASE("I1 and I2 against quadrature") {
    // For u = (0, cos k x), v = (0, cos l x): Gamma(u,v) = (-1/2 A^{-1}(cos k cos l)_x, 0),
    // Gamma(u,u) = (-1/2 A^{-1}(cos^2 k)_x, 0). S = I1 + I2 evaluated by quadrature.
    for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
            if (k == l) continue;
            // cos k cos l = (cos(k-l) + cos(k+l)) / 2; A^{-1} d/dx acts per mode.
            auto gamma_uv = [&](double x) {
                double s = 0.0;
                for (int m : {std::abs(k - l), k + l})
                    s += -0.5 * 0.5 * resolvent(m) * (-two_pi * m) * std::sin(two_pi * m * x);
                return s;
            };
            auto gamma_uv_x = [&](double x) { return test::fd_derivative(gamma_uv, x); };
            auto gamma_sq = [&](int a) {
                return [=](double x) { return -0.5 * 0.5 * resolvent(2 * a) * (-two_pi * 2 * a) * std::sin(two_pi * 2 * a * x); };
            };
            auto guu = gamma_sq(k);
            auto gvv = gamma_sq(l);
            const double h1_uv = test::integrate([&](double x) { return gamma_uv(x) * gamma_uv(x) + gamma_uv_x(x) * gamma_uv_x(x); });
            const double h1_uu_vv = test::integrate([&](double x) {
                return guu(x) * gvv(x) + test::fd_derivative(guu, x) * test::fd_derivative(gvv, x);
            });
            const CosineDirectionPair dir{0, k, 0, l, true};
            const auto terms = closedform_I(dir);
            CHECK(terms.I1 + terms.I2 == doctest::Approx(h1_uv - h1_uu_vv).epsilon(1e-8));
            CHECK(terms.I3 == doctest::Approx(0.0));
            CHECK(terms.I4 == doctest::Approx(0.0));
            CHECK(closedform_S(dir) == doctest::Approx(h1_uv - h1_uu_vv).epsilon(1e-8));
        }
    }
}

TEST_CASE("numeric S matches the closed form on mixed tuples") {
    const Grid g(64);
    for (const CosineDirectionPair dir : {CosineDirectionPair{1, 2, 3, 1, false}, CosineDirectionPair{2, 2, 2, 3, false},
                                          CosineDirectionPair{1, 3, 2, 1, false}, CosineDirectionPair{3, 1, 1, 2, false}}) {
        const double s = curvature_S(dir.u(g), dir.v(g));
        CHECK(s == doctest::Approx(closedform_S(dir)).epsilon(1e-10));
        CHECK(s > 0.0);
    }
}

TEST_CASE("S is symmetric and vanishes on a repeated direction") {
    const Grid g(64);
    const CosineDirectionPair dir{1, 2, 3, 1, false};
    CHECK(curvature_S(dir.u(g), dir.v(g)) == doctest::Approx(curvature_S(dir.v(g), dir.u(g))).epsilon(1e-12));
    CHECK(std::abs(curvature_S(dir.u(g), dir.u(g))) < 1e-10);
}

TEST_CASE("first-slot-zero family: Gram 1/4 and Sec at least 1/8") {
    const Grid g(64);
    for (int k = 1; k <= 3; ++k) {
        for (int l = k + 1; l <= 3; ++l) {
            const CosineDirectionPair dir{0, k, 0, l, true};
            CHECK(gram_determinant(dir.u(g), dir.v(g)) == doctest::Approx(0.25).epsilon(1e-13));
            CHECK(sectional(dir.u(g), dir.v(g)) >= 0.125 - 1e-12);
        }
    }
}

TEST_CASE("degenerate planes and invalid directions") {
    const Grid g(32);
    const CosineDirectionPair dir{1, 2, 1, 3, false};
    CHECK_THROWS_AS(sectional(dir.u(g), 2.0 * dir.u(g)), DegeneratePlane);
    CHECK_THROWS_AS((CosineDirectionPair{1, 1, 1, 1, false}.validate()), InvalidArgument);
    CHECK_THROWS_AS((CosineDirectionPair{0, 1, 1, 1, false}.validate()), InvalidArgument);
    CHECK_THROWS_AS((CosineDirectionPair{0, 2, 0, 2, true}.validate()), InvalidArgument);
}

TEST_CASE("positivity scan enumerates unordered pairs") {
    const auto scan = positivity_scan(3);
    CHECK(scan.grid_n == 48);
    CHECK(scan.rows.size() == 36 + 3);
    CHECK(scan.skipped.size() == 9 + 3);
    for (const auto& row : scan.rows) {
        CHECK(row.s_numeric > 0.0);
        CHECK(row.s_numeric == doctest::Approx(row.s_closed).epsilon(1e-9));
    }
    CHECK_THROWS_AS(positivity_scan(3, 32), InvalidArgument);
    CHECK_THROWS_AS(positivity_scan(1), InvalidArgument);
}

TEST_CASE("negative curvature search is reproducible") {
    const auto a = search_negative_curvature(32, 3, 50, 42);
    const auto b = search_negative_curvature(32, 3, 50, 42);
    CHECK(a.trials == 50);
    CHECK(a.min_sec == b.min_sec);
    CHECK(std::isfinite(a.min_sec));
}
