#include "ch2geo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "ch2geo/curvature.hpp"
#include "ch2geo/errors.hpp"
#include "ch2geo/evolution.hpp"
#include "ch2geo/flowmap.hpp"
#include "ch2geo/initial_data.hpp"
#include "ch2geo/rigidbody.hpp"

namespace ch2geo::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double x) {
    std::ostringstream s;
    s << std::setprecision(3) << std::scientific << x;
    return s.str();
}

std::string fixed(double x, int digits = 2) {
    std::ostringstream s;
    s << std::setprecision(digits) << std::fixed << x;
    return s.str();
}

struct Outcome {
    bool passed = false;
    std::string detail;
};

// Shared fixtures for criteria 6, 7, 8 and 12: the smooth conservation runs.
constexpr int smooth_n = 256;
constexpr double smooth_dt = 1e-4;
constexpr double smooth_t_end = 1.0;
constexpr int smooth_stride = 125;  // snapshot spacing h = 0.0125
constexpr const char* smooth_ic = "pair:1:0.1:1:0.1";

struct SmoothRun {
    FlowmapResult run;
    double seconds = 0.0;
};

class Fixtures {
public:
    const SmoothRun& smooth(ModelId model) {
        auto it = runs_.find(model);
        if (it != runs_.end()) return it->second;
        EvolutionConfig config;
        config.model = model;
        config.grid_n = smooth_n;
        config.dt = smooth_dt;
        config.t_end = smooth_t_end;
        config.diagnostics_stride = smooth_stride;
        const Grid grid(smooth_n);
        const auto start = Clock::now();
        SmoothRun r{evolve_flowmap(config, make_initial(smooth_ic, grid)), 0.0};
        r.seconds = seconds_since(start);
        return runs_.emplace(model, std::move(r)).first->second;
    }

private:
    std::map<ModelId, SmoothRun> runs_;
};

double relative_error(double numeric, double exact) {
    return std::abs(numeric - exact) / std::max(std::abs(exact), 1e-300);
}

// 1. Numeric S against the closed forms over all cosine tuples with modes <= 4.
Outcome curvature_oracle() {
    const auto start = Clock::now();
    const auto scan = positivity_scan(4, 128);
    double worst = 0.0;
    std::string worst_label;
    for (const auto& row : scan.rows) {
        const double err = relative_error(row.s_numeric, row.s_closed);
        if (err > worst) {
            worst = err;
            worst_label = row.dir.label();
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << scan.rows.size() << " tuples on n=128, max rel err " << sci(worst);
    if (!worst_label.empty()) d << " at " << worst_label;
    d << ", " << fixed(elapsed) << " s (limit 10 s)";
    return {worst <= 1e-8 && elapsed < 10.0, d.str()};
}

// 2. Every tuple of the criterion-1 scan has S > 0.
Outcome positivity() {
    // positivity_scan throws on the first non-positive S, naming the tuple.
    const auto scan = positivity_scan(4, 128);
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& row : scan.rows) smallest = std::min(smallest, row.s_numeric);
    const bool ok = smallest > 0.0;
    return {ok, std::to_string(scan.rows.size()) + " tuples, min S = " + sci(smallest)};
}

// 3. (0, cos k x)/(0, cos l x): Gram = 1/4 and Sec >= 1/8.
Outcome bound_reproduction() {
    const Grid grid(128);
    double gram_err = 0.0;
    double min_sec = std::numeric_limits<double>::infinity();
    int count = 0;
    for (int k = 1; k <= 6; ++k) {
        for (int l = k + 1; l <= 6; ++l) {
            const CosineDirectionPair dir{0, k, 0, l, true};
            const auto u = dir.u(grid);
            const auto v = dir.v(grid);
            gram_err = std::max(gram_err, std::abs(gram_determinant(u, v) - 0.25));
            min_sec = std::min(min_sec, sectional(u, v));
            ++count;
        }
    }
    const bool ok = gram_err <= 1e-12 && min_sec >= 0.125 - 1e-12;
    return {ok, std::to_string(count) + " planes, max |Gram - 1/4| = " + sci(gram_err) +
                    ", min Sec = " + fixed(min_sec, 6)};
}

// 4. S((u1,0),(v1,0)) equals the CH closed form and the CH-only numeric value.
Outcome ch_reduction() {
    const Grid grid(128);
    double worst_closed = 0.0;
    double worst_numeric = 0.0;
    for (int k = 1; k <= 4; ++k) {
        for (int l = 1; l <= 4; ++l) {
            if (k == l) continue;
            const CosineDirectionPair dir{k, 1, l, 1, false};
            const VelocityPair u(dir.u(grid).u);
            const VelocityPair v(dir.v(grid).u);
            const double s = curvature_S(u, v);

            const auto g_uv = gamma0_ch(u.u, v.u);
            const auto g_uu = gamma0_ch(u.u, u.u);
            const auto g_vv = gamma0_ch(v.u, v.u);
            const double s_ch_numeric = inner_H1(g_uv, g_uv) - inner_H1(g_uu, g_vv);

            worst_closed = std::max(worst_closed, std::abs(s - closedform_S_CH(k, l)));
            worst_numeric = std::max(worst_numeric, std::abs(s - s_ch_numeric));
        }
    }
    const bool ok = worst_closed <= 1e-9 && worst_numeric <= 1e-9;
    return {ok, "max |S - S_CH closed| = " + sci(worst_closed) + ", max |S - S_CH numeric| = " +
                    sci(worst_numeric)};
}

// 5. Weak form = Christoffel form = A^{-1}(strong m-form), 20 random states per model.
Outcome rhs_equivalence(std::uint64_t seed) {
    const Grid grid(64);
    std::mt19937_64 rng(seed);
    std::ostringstream d;
    bool ok = true;
    for (ModelId model : {ModelId::CH, ModelId::DP, ModelId::CH2, ModelId::DP2}) {
        double gamma_err = 0.0;
        double strong_err = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            auto s = random_pair(grid, 8, rng);
            if (!is_two_component(model)) s.rho = PeriodicField(grid);
            const auto weak = rhs(model, s);

            const auto gamma = christoffel(model, s, s);
            const VelocityPair transport{product(s.u, derivative(s.u)), product(s.u, derivative(s.rho))};
            gamma_err = std::max(gamma_err, max_abs_diff(weak, gamma - transport));

            const auto strong = rhs_strong_m_form(model, s);
            strong_err = std::max(strong_err, max_abs_diff(weak.u, apply_Ainv(strong.u)));
            strong_err = std::max(strong_err, max_abs_diff(weak.rho, strong.rho));
        }
        ok = ok && gamma_err <= 1e-9 && strong_err <= 1e-9;
        d << to_string(model) << ": gamma " << sci(gamma_err) << ", strong " << sci(strong_err) << "; ";
    }
    auto text = d.str();
    text.resize(text.size() - 2);
    return {ok, text};
}

double relative_energy_drift(const FlowmapResult& run) {
    const double e0 = run.diagnostics.front().energy;
    double drift = 0.0;
    for (const auto& rec : run.diagnostics) drift = std::max(drift, std::abs(rec.energy - e0) / std::abs(e0));
    return drift;
}

// 6. 2CH energy conservation; 2DP drift recorded only.
Outcome energy_conservation(Fixtures& fx) {
    const auto& ch = fx.smooth(ModelId::CH2);
    const auto& dp = fx.smooth(ModelId::DP2);
    const double elapsed = ch.seconds + dp.seconds;
    const double drift = relative_energy_drift(ch.run);
    const bool ok = ch.run.status.completed() && drift <= 1e-7 && elapsed < 60.0;
    return {ok, "2ch rel drift " + sci(drift) + " (" + fixed(ch.seconds) + " s); 2dp rel drift " +
                    sci(relative_energy_drift(dp.run)) + " recorded only (" + fixed(dp.seconds) +
                    " s); limit 60 s"};
}

// 7. Transported density and the Ad*-pair along the same runs.
Outcome momentum_conservation(Fixtures& fx) {
    std::ostringstream d;
    bool ok = true;
    for (ModelId model : {ModelId::CH2, ModelId::DP2}) {
        const auto& run = fx.smooth(model).run;
        const auto& first = run.trajectory.front().state;
        const double rho_scale = first.rho.max_abs();
        const double m_scale = std::max(apply_A(first.u).max_abs(), rho_scale);
        double density = 0.0;
        std::optional<double> body;
        for (const auto& drift : momentum_drift(model, run)) {
            density = std::max(density, drift.density / rho_scale);
            if (drift.body_momentum) body = std::max(body.value_or(0.0), *drift.body_momentum / m_scale);
        }
        ok = ok && run.status.completed() && density <= 1e-6 && (!body || *body <= 1e-6);
        d << to_string(model) << ": density " << sci(density);
        if (body) d << ", Ad* pair " << sci(*body);
        d << "; ";
    }
    auto text = d.str();
    text.resize(text.size() - 2);
    return {ok, text};
}

// 8. phi_t o phi^{-1} against Eulerian u; quadrature f against the co-integrated f.
Outcome eulerian_lagrangian(Fixtures& fx) {
    std::ostringstream d;
    bool ok = true;
    for (ModelId model : {ModelId::CH2, ModelId::DP2}) {
        const auto& run = fx.smooth(model).run;
        double velocity_err = 0.0;
        for (std::size_t i = 0; i < run.trajectory.size(); ++i) {
            const auto& snap = run.trajectory[i];
            const auto spatial = spatial_velocity(snap.g, material_velocity(run, i));
            velocity_err = std::max(velocity_err, max_abs_diff(spatial.u, snap.state.u));
        }

        // Quadrature over every 5th, 10th and 20th snapshot (h = 1/16, 1/8, 1/4).
        const auto& rho0 = run.trajectory.front().state.rho;
        const auto& f_final = run.trajectory.back().g.f;
        std::vector<double> errors;
        for (std::size_t every : {5u, 10u, 20u}) {
            std::vector<Diffeo> history;
            for (std::size_t i = 0; i < run.trajectory.size(); i += every) history.push_back(run.trajectory[i].g.phi);
            const double h = run.trajectory[every].t - run.trajectory[0].t;
            errors.push_back(max_abs_diff(reconstruct_f(model, rho0, history, h), f_final));
        }
        const double ratio = errors[1] / errors[0];
        const double coarse_ratio = errors[2] / errors[1];
        ok = ok && run.status.completed() && velocity_err <= 1e-6 && ratio >= 12.0 && ratio <= 20.0;
        d << to_string(model) << ": |u_spatial - u| " << sci(velocity_err) << ", f err " << sci(errors[0])
          << ", ratio " << fixed(ratio) << " (coarser " << fixed(coarse_ratio) << "); ";
    }
    auto text = d.str();
    text.resize(text.size() - 2);
    return {ok, text};
}

// 9. <B(a,b), c> = <a, [b,c]> on random triples.
Outcome b_operator_identity(std::uint64_t seed) {
    const Grid grid(64);
    std::mt19937_64 rng(seed + 9);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_pair(grid, 8, rng);
        const auto b = random_pair(grid, 8, rng);
        const auto c = random_pair(grid, 8, rng);
        worst = std::max(worst, std::abs(metric(bilinear_B(a, b), c) - metric(a, bracket(b, c))));
    }
    return {worst <= 1e-9, "50 triples, max |<B(a,b),c> - <a,[b,c]>| = " + sci(worst)};
}

// 10. Rigid body: spatial momentum, energy and |Pi|^2 conserved.
Outcome rigid_body() {
    const auto start = Clock::now();
    rigidbody::State s;
    s.inertia = {1.0, 2.0, 3.0};
    s.omega = {1.0, 1.0, 1.0};
    const auto traj = rigidbody::evolve_rigidbody(s, 1e-3, 10.0);
    const auto& first = traj.front();
    double pi_drift = 0.0;
    double energy_drift = 0.0;
    double casimir_drift = 0.0;
    for (const auto& sample : traj) {
        pi_drift = std::max(pi_drift, (sample.spatial_momentum - first.spatial_momentum).norm());
        energy_drift = std::max(energy_drift, std::abs(sample.energy - first.energy));
        casimir_drift = std::max(casimir_drift,
                                 std::abs(sample.body_momentum.squaredNorm() - first.body_momentum.squaredNorm()));
    }
    const double ad_star = rigidbody::ad_star_check(traj);
    const double elapsed = seconds_since(start);
    const bool ok = pi_drift <= 1e-8 && energy_drift <= 1e-8 && casimir_drift <= 1e-8 && elapsed < 5.0;
    return {ok, "|pi drift| " + sci(pi_drift) + ", energy " + sci(energy_drift) + ", |Pi|^2 " +
                    sci(casimir_drift) + ", Ad* " + sci(ad_star) + ", " + fixed(elapsed) + " s (limit 5 s)"};
}

double richardson_ratio(double coarse_mid, double mid_fine) { return coarse_mid / mid_fine; }

VelocityPair pde_final(ModelId model, const VelocityPair& initial, double dt, double t_end) {
    EvolutionConfig config;
    config.model = model;
    config.grid_n = initial.grid().size();
    config.dt = dt;
    config.t_end = t_end;
    config.diagnostics_stride = 1 << 30;
    auto result = evolve(config, initial);
    if (!result.status.completed()) throw Error("order run did not complete");
    return result.trajectory.back().state;
}

// 11. Global-error halving ratios for both PDE models and the rigid body.
Outcome rk4_order() {
    std::ostringstream d;
    bool ok = true;
    const Grid grid(64);
    const auto initial = make_initial("pair:1:0.3:1:0.2", grid);
    for (ModelId model : {ModelId::CH2, ModelId::DP2}) {
        const double t_end = 0.5;
        const auto a = pde_final(model, initial, 0.01, t_end);
        const auto b = pde_final(model, initial, 0.005, t_end);
        const auto c = pde_final(model, initial, 0.0025, t_end);
        const double ratio = richardson_ratio(max_abs_diff(a, b), max_abs_diff(b, c));
        ok = ok && ratio >= 14.0 && ratio <= 18.0;
        d << to_string(model) << " " << fixed(ratio) << "; ";
    }

    rigidbody::State s;
    s.inertia = {1.0, 2.0, 3.0};
    s.omega = {1.0, 1.0, 1.0};
    auto omega_at = [&](double dt) { return rigidbody::evolve_rigidbody(s, dt, 2.0, 1 << 30).back().omega; };
    const auto a = omega_at(0.1);
    const auto b = omega_at(0.05);
    const auto c = omega_at(0.025);
    const double ratio = richardson_ratio((a - b).norm(), (b - c).norm());
    ok = ok && ratio >= 14.0 && ratio <= 18.0;
    d << "rigid body " << fixed(ratio);
    return {ok, d.str()};
}

// 12. Steep 2CH data trips the slope detector; the smooth runs never do.
Outcome blowup_detector(Fixtures& fx) {
    EvolutionConfig config;
    config.model = ModelId::CH2;
    config.grid_n = 256;
    config.dt = 1e-4;
    config.t_end = 1.0;
    config.blowup_slope_threshold = -50.0;
    config.blowup_rhox_threshold = 50.0;
    config.diagnostics_stride = 1000;
    const Grid grid(config.grid_n);
    const auto result = evolve(config, make_initial("cosmode:1:2", grid));

    std::ostringstream d;
    bool ok = result.status.blowup.has_value() && result.status.blowup->reason == BlowupReason::min_ux;
    if (result.status.blowup)
        d << "steep run: blowup_detected at t = " << fixed(result.status.blowup->t, 4) << " ("
          << to_string(result.status.blowup->reason) << ")";
    else
        d << "steep run completed without detection";

    // The detector must stay silent on the smooth runs even at the tight thresholds.
    for (ModelId model : {ModelId::CH2, ModelId::DP2}) {
        const auto& run = fx.smooth(model).run;
        bool silent = run.status.completed();
        for (const auto& rec : run.diagnostics) silent = silent && !check_thresholds(rec, config);
        ok = ok && silent;
        d << "; " << to_string(model) << " smooth run " << (silent ? "silent" : "FIRED");
    }
    return {ok, d.str()};
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result) {
    Fixtures fixtures;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"curvature oracle equivalence", [] { return curvature_oracle(); }},
        {"positivity of S", [] { return positivity(); }},
        {"bound reproduction", [] { return bound_reproduction(); }},
        {"CH reduction identity", [] { return ch_reduction(); }},
        {"RHS equivalence", [&] { return rhs_equivalence(options.seed); }},
        {"2CH energy conservation", [&] { return energy_conservation(fixtures); }},
        {"momentum conservation", [&] { return momentum_conservation(fixtures); }},
        {"Eulerian/Lagrangian consistency", [&] { return eulerian_lagrangian(fixtures); }},
        {"B-operator identity", [&] { return b_operator_identity(options.seed); }},
        {"rigid body conservation", [] { return rigid_body(); }},
        {"RK4 order", [] { return rk4_order(); }},
        {"blow-up detector", [&] { return blowup_detector(fixtures); }},
    };

    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        CriterionResult r;
        r.id = static_cast<int>(i + 1);
        r.name = criteria[i].first;
        const auto start = Clock::now();
        try {
            const auto outcome = criteria[i].second();
            r.passed = outcome.passed;
            r.detail = outcome.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = seconds_since(start);
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string format(const CriterionResult& r) {
    std::ostringstream s;
    s << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ' ' << r.name << " ("
      << fixed(r.seconds) << " s): " << r.detail;
    return s.str();
}

}  // namespace ch2geo::verify
