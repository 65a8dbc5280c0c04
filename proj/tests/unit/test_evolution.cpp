#include <doctest.h>

#include <random>

#include "ch2geo/errors.hpp"
#include "ch2geo/evolution.hpp"
#include "ch2geo/initial_data.hpp"
#include "support.hpp"

using namespace ch2geo;
using test::two_pi;

namespace {

EvolutionConfig config_for(ModelId model, int n, double dt, double t_end, int stride = 10) {
    EvolutionConfig c;
    c.model = model;
    c.grid_n = n;
    c.dt = dt;
    c.t_end = t_end;
    c.diagnostics_stride = stride;
    return c;
}

constexpr ModelId all_models[] = {ModelId::CH, ModelId::DP, ModelId::CH2, ModelId::DP2};

}  // namespace

TEST_CASE("config validation") {
    auto c = config_for(ModelId::CH2, 64, 0.1, 1.0);
    CHECK_NOTHROW(c.validate());
    CHECK(c.step_count() == 10);
    c.dt = 0.3;
    CHECK(c.step_count() == 4);
    c.dt = 2.0;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = config_for(ModelId::CH2, 63, 0.1, 1.0);
    CHECK_THROWS_WITH(c.validate(), doctest::Contains("even"));
    c = config_for(ModelId::CH2, 64, 0.1, 1.0);
    c.blowup_slope_threshold = 1.0;
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("constants are fixed points") {
    const Grid g(32);
    const VelocityPair c{PeriodicField::constant(g, 0.7), PeriodicField::constant(g, 0.2)};
    for (ModelId m : all_models) {
        CHECK(max_abs_diff(rhs(m, c).u, PeriodicField(g)) < 1e-14);
        CHECK(max_abs_diff(step_rk4(m, c, 0.1).u, c.u) < 1e-14);
    }
    CHECK(max_abs_diff(step_rk4(ModelId::CH2, c, 0.1), c) < 1e-14);
    CHECK(max_abs_diff(step_rk4(ModelId::CH2, VelocityPair::zero(g), 0.1), VelocityPair::zero(g)) == 0.0);
}

TEST_CASE("single-component models leave the density slot at zero") {
    std::mt19937_64 rng(2);
    const auto s = random_pair(Grid(64), 8, rng);
    CHECK(rhs(ModelId::CH, s).rho.max_abs() == 0.0);
    CHECK(rhs(ModelId::DP, s).rho.max_abs() == 0.0);
}

TEST_CASE("weak form equals transport plus Christoffel map and the strong m-form") {
    std::mt19937_64 rng(99);
    const Grid g(64);
    for (ModelId m : all_models) {
        for (int trial = 0; trial < 5; ++trial) {
            auto s = random_pair(g, 8, rng);
            if (!is_two_component(m)) s.rho = PeriodicField(g);
            const auto weak = rhs(m, s);
            const VelocityPair transport{s.u * derivative(s.u), s.u * derivative(s.rho)};
            CHECK(max_abs_diff(weak, christoffel(m, s, s) - transport) < 1e-10);
            const auto strong = rhs_strong_m_form(m, s);
            CHECK(max_abs_diff(apply_A(weak.u), strong.u) < 1e-9);
            CHECK(max_abs_diff(weak.rho, strong.rho) < 1e-10);
        }
    }
}

TEST_CASE("strong 2CH form matches the printed equation term by term") {
    // Oracle built directly from m_t = -u m_x - 2 m u_x - rho rho_x, rho_t = -(rho u)_x.
    const Grid g(64);
    const auto u = test::sampled(64, [](double x) { return 0.4 * std::cos(two_pi * x) + 0.1 * std::sin(two_pi * 3 * x); });
    const auto rho = test::sampled(64, [](double x) { return 1.0 + 0.2 * std::sin(two_pi * 2 * x); });
    const auto m = apply_A(u);
    const auto mt = -1.0 * (u * derivative(m)) - 2.0 * (m * derivative(u)) - rho * derivative(rho);
    const auto rt = -1.0 * derivative(rho * u);
    const auto strong = rhs_strong_m_form(ModelId::CH2, {u, rho});
    CHECK(max_abs_diff(strong.u, mt) < 1e-9);
    CHECK(max_abs_diff(strong.rho, rt) < 1e-12);
}

TEST_CASE("conserved energy of a cosine") {
    const auto c = test::sampled(32, [](double x) { return std::cos(two_pi * x); });
    CHECK(conserved_energy(VelocityPair(c)) == doctest::Approx((1.0 + two_pi * two_pi) / 2.0));
    CHECK(conserved_energy(VelocityPair::zero(Grid(16))) == 0.0);
}

TEST_CASE("zero data stays zero") {
    const auto r = evolve(config_for(ModelId::CH2, 32, 0.01, 0.1), VelocityPair::zero(Grid(32)));
    CHECK(r.status.completed());
    for (const auto& snap : r.trajectory) CHECK(max_abs_diff(snap.state, VelocityPair::zero(Grid(32))) == 0.0);
    CHECK(r.trajectory.front().t == 0.0);
    CHECK(r.trajectory.back().t == doctest::Approx(0.1));
    CHECK(r.diagnostics.size() == r.trajectory.size());
}

TEST_CASE("two-component runs with zero density reduce to the scalar models") {
    const Grid g(64);
    const VelocityPair initial(test::sampled(64, [](double x) { return std::cos(two_pi * x); }));
    for (auto [two, one] : {std::pair{ModelId::CH2, ModelId::CH}, std::pair{ModelId::DP2, ModelId::DP}}) {
        const auto a = evolve(config_for(two, 64, 1e-3, 0.05), initial);
        const auto b = evolve(config_for(one, 64, 1e-3, 0.05), initial);
        CHECK(max_abs_diff(a.trajectory.back().state.u, b.trajectory.back().state.u) < 1e-10);
        CHECK(a.trajectory.back().state.rho.max_abs() == 0.0);
    }
}

TEST_CASE("2CH invariants along a smooth trajectory") {
    const auto r = evolve(config_for(ModelId::CH2, 64, 1e-3, 0.5, 50), make_initial("pair:1:0.1:2:0.1", Grid(64)));
    REQUIRE(r.status.completed());
    const auto& first = r.diagnostics.front();
    for (const auto& d : r.diagnostics) {
        CHECK(std::abs(d.energy - first.energy) / first.energy < 1e-8);
        CHECK(std::abs(d.mean_rho - first.mean_rho) < 1e-10);
        CHECK(std::abs(d.mean_m - first.mean_m) < 1e-10);
    }
    const auto [m, rho] = mean_invariants(r.trajectory.back().state, ModelId::CH2);
    CHECK(m == doctest::Approx(r.diagnostics.back().mean_m));
    CHECK(rho == doctest::Approx(r.diagnostics.back().mean_rho));
}

TEST_CASE("diagnostics record the blow-up functionals") {
    const auto s = make_initial("pair:1:0.5:2:0.25", Grid(64));
    const auto d = diagnose(0.0, s, ModelId::CH2);
    CHECK(d.min_ux == doctest::Approx(-0.5 * two_pi).epsilon(1e-12));
    CHECK(d.max_abs_rhox == doctest::Approx(0.25 * 2 * two_pi).epsilon(1e-12));
    CHECK(d.mean_rho == doctest::Approx(0.0));
}

TEST_CASE("threshold detector fires only on a crossing") {
    auto c = config_for(ModelId::CH2, 64, 1e-3, 0.1);
    c.blowup_slope_threshold = -5.0;
    c.blowup_rhox_threshold = 5.0;
    DiagnosticsRecord d;
    d.min_ux = -4.9;
    d.max_abs_rhox = 4.9;
    CHECK_FALSE(check_thresholds(d, c));
    d.min_ux = -5.1;
    CHECK(check_thresholds(d, c) == BlowupReason::min_ux);
    d.min_ux = 0.0;
    d.max_abs_rhox = 5.1;
    CHECK(check_thresholds(d, c) == BlowupReason::max_abs_rhox);

    // Initial slope -2 pi * 1 crosses -5 right away; the record at the blow-up time is kept.
    const auto r = evolve(c, make_initial("cosmode:1:1", Grid(64)));
    REQUIRE(r.status.blowup);
    CHECK(r.status.blowup->reason == BlowupReason::min_ux);
    CHECK(r.status.blowup->t == 0.0);

    c.blowup_slope_threshold = -1e6;
    const auto rho_run = evolve(c, make_initial("pair:1:0:1:1", Grid(64)));
    REQUIRE(rho_run.status.blowup);
    CHECK(rho_run.status.blowup->reason == BlowupReason::max_abs_rhox);
    CHECK(to_string(BlowupReason::max_abs_rhox) == "max_abs_rhox");
}

TEST_CASE("RK4 global error drops sixteenfold under step halving") {
    const auto initial = make_initial("pair:1:0.3:1:0.2", Grid(32));
    auto final_state = [&](double dt) {
        return evolve(config_for(ModelId::CH2, 32, dt, 0.4, 1000), initial).trajectory.back().state;
    };
    const auto a = final_state(0.02);
    const auto b = final_state(0.01);
    const auto c = final_state(0.005);
    const double ratio = max_abs_diff(a, b) / max_abs_diff(b, c);
    CHECK(ratio > 14.0);
    CHECK(ratio < 18.0);
}
