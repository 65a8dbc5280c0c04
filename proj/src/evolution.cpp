#include "ch2geo/evolution.hpp"

#include <cmath>
#include <tuple>

#include "ch2geo/errors.hpp"

namespace ch2geo {

void EvolutionConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("dt must be positive");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidArgument("t_end must be positive");
    if (!(dt < t_end)) throw InvalidArgument("dt must be smaller than t_end");
    if (grid_n % 2 != 0) throw InvalidArgument("grid size must be even");
    if (grid_n < 16) throw InvalidArgument("grid size must be at least 16");
    if (!std::isfinite(blowup_slope_threshold) || !(blowup_slope_threshold < 0.0))
        throw InvalidArgument("slope threshold must be negative and finite");
    if (!std::isfinite(blowup_rhox_threshold) || !(blowup_rhox_threshold > 0.0))
        throw InvalidArgument("rho_x threshold must be positive and finite");
    if (diagnostics_stride < 1) throw InvalidArgument("diagnostics stride must be positive");
}

long EvolutionConfig::step_count() const {
    return static_cast<long>(std::ceil(t_end / dt - 1e-9));
}

std::string_view to_string(BlowupReason reason) {
    switch (reason) {
        case BlowupReason::min_ux: return "min_ux";
        case BlowupReason::max_abs_rhox: return "max_abs_rhox";
        case BlowupReason::nonfinite: return "nonfinite";
        case BlowupReason::jacobian: return "jacobian";
    }
    return "?";
}

VelocityPair rhs(ModelId model, const VelocityPair& state) {
    const Grid& grid = state.grid();
    if (!is_two_component(model)) {
        const ModelId lifted = model == ModelId::CH ? ModelId::CH2 : ModelId::DP2;
        return {rhs(lifted, VelocityPair(state.u)).u, PeriodicField(grid)};
    }

    const auto& u = state.u;
    const auto& rho = state.rho;
    const auto ux = derivative(u);
    const auto rhox = derivative(rho);
    const auto transport = dealias(u * ux);
    if (model == ModelId::CH2) {
        const auto pressure = dealias(u * u + 0.5 * (ux * ux) + 0.5 * (rho * rho));
        auto ut = transport + apply_Ainv(derivative(pressure));
        auto rhot = dealias(u * rhox + rho * ux);
        return {dealias(-ut), -rhot};
    }
    const auto flux = dealias(1.5 * (u * u) - rho * rho);
    auto ut = transport + apply_Ainv(derivative(flux) + dealias(rho * ux));
    auto rhot = dealias(u * rhox + 2.0 * (rho * ux));
    return {dealias(-ut), -rhot};
}

VelocityPair rhs_strong_m_form(ModelId model, const VelocityPair& state) {
    const auto& u = state.u;
    const auto ux = derivative(u);
    const auto m = apply_A(u);
    const auto mx = derivative(m);
    const Grid& grid = state.grid();
    const bool two = is_two_component(model);
    const auto rho = two ? state.rho : PeriodicField(grid);
    const auto rhox = derivative(rho);

    const bool ch_family = model == ModelId::CH || model == ModelId::CH2;
    if (ch_family) {
        auto mt = dealias(u * mx + 2.0 * (m * ux) + rho * rhox);
        auto rhot = derivative(product(rho, u));
        return {-mt, two ? -rhot : PeriodicField(grid)};
    }
    auto mt = dealias(3.0 * (m * ux) + mx * u + rho * ux - 2.0 * (rho * rhox));
    auto rhot = dealias(2.0 * (rho * ux) + rhox * u);
    return {-mt, two ? -rhot : PeriodicField(grid)};
}

namespace {

bool finite(const VelocityPair& s) { return s.u.all_finite() && s.rho.all_finite(); }

VelocityPair checked_rhs(ModelId model, const VelocityPair& s) {
    auto k = rhs(model, s);
    if (!finite(k)) throw BlowupError("non-finite right-hand side in RK4 stage", 0.0);
    return k;
}

}  // namespace

VelocityPair step_rk4(ModelId model, const VelocityPair& state, double dt) {
    const auto k1 = checked_rhs(model, state);
    const auto k2 = checked_rhs(model, state + (0.5 * dt) * k1);
    const auto k3 = checked_rhs(model, state + (0.5 * dt) * k2);
    const auto k4 = checked_rhs(model, state + dt * k3);
    auto next = state + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    VelocityPair out{dealias(next.u), dealias(next.rho)};
    if (!finite(out)) throw BlowupError("non-finite state after RK4 step", 0.0);
    return out;
}

double conserved_energy(const VelocityPair& state) { return metric(state, state); }

std::pair<double, double> mean_invariants(const VelocityPair& state, ModelId model) {
    const double rho_mass = is_two_component(model) ? state.rho.mean() : 0.0;
    return {apply_A(state.u).mean(), rho_mass};
}

DiagnosticsRecord diagnose(double t, const VelocityPair& state, ModelId model) {
    DiagnosticsRecord r;
    r.t = t;
    r.energy = conserved_energy(state);
    r.min_ux = derivative(state.u).min();
    r.max_abs_rhox = derivative(state.rho).max_abs();
    std::tie(r.mean_m, r.mean_rho) = mean_invariants(state, model);
    return r;
}

std::optional<BlowupReason> check_thresholds(const DiagnosticsRecord& record,
                                             const EvolutionConfig& config) {
    if (!std::isfinite(record.min_ux) || !std::isfinite(record.max_abs_rhox))
        return BlowupReason::nonfinite;
    if (record.min_ux < config.blowup_slope_threshold) return BlowupReason::min_ux;
    if (record.max_abs_rhox > config.blowup_rhox_threshold) return BlowupReason::max_abs_rhox;
    return std::nullopt;
}

EvolutionResult evolve(const EvolutionConfig& config, const VelocityPair& initial) {
    config.validate();
    if (initial.grid().size() != config.grid_n) throw GridMismatch(initial.grid().size(), config.grid_n);

    EvolutionResult result;
    VelocityPair state = initial;
    if (!is_two_component(config.model)) state.rho = PeriodicField(state.grid());

    auto record = [&](double t, const DiagnosticsRecord& d) {
        result.trajectory.push_back({t, state});
        result.diagnostics.push_back(d);
    };

    double t = 0.0;
    auto diag = diagnose(t, state, config.model);
    record(t, diag);
    if (auto reason = check_thresholds(diag, config)) {
        result.status.blowup = BlowupInfo{t, *reason};
        return result;
    }

    const long steps = config.step_count();
    for (long step = 1; step <= steps; ++step) {
        const double t_next = step == steps ? config.t_end : static_cast<double>(step) * config.dt;
        try {
            state = step_rk4(config.model, state, t_next - t);
        } catch (const BlowupError&) {
            result.status.blowup = BlowupInfo{t_next, BlowupReason::nonfinite};
            return result;
        }
        t = t_next;

        DiagnosticsRecord probe;
        probe.t = t;
        probe.min_ux = derivative(state.u).min();
        probe.max_abs_rhox = derivative(state.rho).max_abs();
        if (auto reason = check_thresholds(probe, config)) {
            record(t, diagnose(t, state, config.model));
            result.status.blowup = BlowupInfo{t, *reason};
            return result;
        }
        if (step % config.diagnostics_stride == 0 || step == steps)
            record(t, diagnose(t, state, config.model));
    }
    return result;
}

}  // namespace ch2geo
