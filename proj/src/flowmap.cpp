#include "ch2geo/flowmap.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ch2geo/errors.hpp"

namespace ch2geo {

GroupElement GroupElement::identity(const Grid& grid) {
    return {Diffeo::identity(grid), PeriodicField(grid)};
}

GroupElement group_product(const GroupElement& a, const GroupElement& b) {
    return {compose(a.phi, b.phi), b.f + compose(a.f, b.phi)};
}

GroupElement group_inverse(const GroupElement& g) {
    auto inv = invert_diffeo(g.phi);
    auto f = -compose(g.f, inv);
    return {std::move(inv), std::move(f)};
}

double max_abs_diff(const GroupElement& a, const GroupElement& b) {
    return std::max(max_abs_diff(a.phi.displacement(), b.phi.displacement()), max_abs_diff(a.f, b.f));
}

namespace {

bool ch_family(ModelId model) { return model == ModelId::CH || model == ModelId::CH2; }

struct FlowState {
    VelocityPair eulerian;
    PeriodicField psi;
    PeriodicField f;

    FlowState& axpy(double h, const FlowState& k) {
        eulerian += h * k.eulerian;
        psi += h * k.psi;
        f += h * k.f;
        return *this;
    }
};

FlowState flow_rhs(ModelId model, const FlowState& s) {
    const Diffeo phi(s.psi);
    return {rhs(model, s.eulerian), compose(s.eulerian.u, phi), compose(s.eulerian.rho, phi)};
}

FlowState flow_step(ModelId model, const FlowState& s, double dt) {
    const auto k1 = flow_rhs(model, s);
    const auto k2 = flow_rhs(model, FlowState(s).axpy(0.5 * dt, k1));
    const auto k3 = flow_rhs(model, FlowState(s).axpy(0.5 * dt, k2));
    const auto k4 = flow_rhs(model, FlowState(s).axpy(dt, k3));
    FlowState next = s;
    next.axpy(dt / 6.0, k1).axpy(dt / 3.0, k2).axpy(dt / 3.0, k3).axpy(dt / 6.0, k4);
    next.eulerian = VelocityPair(dealias(next.eulerian.u), dealias(next.eulerian.rho));
    return next;
}

bool finite(const FlowState& s) {
    return s.eulerian.u.all_finite() && s.eulerian.rho.all_finite() && s.psi.all_finite() &&
           s.f.all_finite();
}

}  // namespace

FlowmapResult evolve_flowmap(const EvolutionConfig& config, const VelocityPair& initial,
                             double jacobian_floor) {
    config.validate();
    if (initial.grid().size() != config.grid_n) throw GridMismatch(initial.grid().size(), config.grid_n);
    const Grid& grid = initial.grid();

    FlowmapResult result;
    result.model = config.model;
    FlowState state{initial, PeriodicField(grid), PeriodicField(grid)};
    if (!is_two_component(config.model)) state.eulerian.rho = PeriodicField(grid);

    auto record = [&](double t) {
        result.trajectory.push_back({t, GroupElement{Diffeo(state.psi), state.f}, state.eulerian});
        result.diagnostics.push_back(diagnose(t, state.eulerian, config.model));
    };

    double t = 0.0;
    record(t);
    if (auto reason = check_thresholds(result.diagnostics.back(), config)) {
        result.status.blowup = BlowupInfo{t, *reason};
        return result;
    }

    const long steps = config.step_count();
    for (long step = 1; step <= steps; ++step) {
        const double t_next = step == steps ? config.t_end : static_cast<double>(step) * config.dt;
        try {
            state = flow_step(config.model, state, t_next - t);
        } catch (const JacobianDegenerate&) {
            result.status.blowup = BlowupInfo{t_next, BlowupReason::jacobian};
            return result;
        }
        t = t_next;
        if (!finite(state)) {
            result.status.blowup = BlowupInfo{t, BlowupReason::nonfinite};
            return result;
        }
        if ((derivative(state.psi).min() + 1.0) <= jacobian_floor) {
            result.status.blowup = BlowupInfo{t, BlowupReason::jacobian};
            return result;
        }

        DiagnosticsRecord probe;
        probe.t = t;
        probe.min_ux = derivative(state.eulerian.u).min();
        probe.max_abs_rhox = derivative(state.eulerian.rho).max_abs();
        if (auto reason = check_thresholds(probe, config)) {
            record(t);
            result.status.blowup = BlowupInfo{t, *reason};
            return result;
        }
        if (step % config.diagnostics_stride == 0 || step == steps) record(t);
    }
    return result;
}

PeriodicField reconstruct_f(ModelId model, const PeriodicField& rho0, std::span<const Diffeo> history,
                            double spacing) {
    const Grid& grid = rho0.grid();
    PeriodicField f(grid);
    if (history.size() < 2) return f;

    const bool squared = !ch_family(model);
    std::vector<PeriodicField> integrand;
    integrand.reserve(history.size());
    for (const auto& phi : history) {
        require_same_grid(grid, phi.grid());
        const auto& jac = phi.jacobian();
        if (!(jac.min() > 0.0)) throw JacobianDegenerate("phi_x is not positive in the history");
        integrand.push_back(squared ? rho0 / (jac * jac) : rho0 / jac);
    }

    const std::size_t intervals = history.size() - 1;
    auto accumulate = [&](std::size_t i, double w) { f += w * integrand[i]; };
    if (intervals == 1) {
        accumulate(0, 0.5 * spacing);
        accumulate(1, 0.5 * spacing);
        return f;
    }
    // Composite Simpson over an even prefix, Simpson 3/8 over the last three intervals if odd.
    const std::size_t even = intervals % 2 == 0 ? intervals : intervals - 3;
    for (std::size_t i = 0; i + 2 <= even; i += 2) {
        accumulate(i, spacing / 3.0);
        accumulate(i + 1, 4.0 * spacing / 3.0);
        accumulate(i + 2, spacing / 3.0);
    }
    if (even != intervals) {
        const std::size_t i = even;
        const double w = 3.0 * spacing / 8.0;
        accumulate(i, w);
        accumulate(i + 1, 3.0 * w);
        accumulate(i + 2, 3.0 * w);
        accumulate(i + 3, w);
    }
    return f;
}

MaterialVelocity material_velocity(const FlowmapResult& run, std::size_t index) {
    const auto& traj = run.trajectory;
    const std::size_t count = traj.size();
    if (count < 5) throw InvalidArgument("material_velocity needs at least five snapshots");
    if (index >= count) throw InvalidArgument("snapshot index out of range");
    const double h = traj[1].t - traj[0].t;
    for (std::size_t i = 1; i < count; ++i) {
        if (std::abs((traj[i].t - traj[i - 1].t) - h) > 1e-9 * h)
            throw InvalidArgument("material_velocity needs uniformly spaced snapshots");
    }

    // Fourth-order stencils: central in the interior, one-sided at the ends.
    std::size_t first = 0;
    std::array<double, 5> w{};
    if (index >= 2 && index + 2 < count) {
        first = index - 2;
        w = {1.0, -8.0, 0.0, 8.0, -1.0};
    } else if (index == 0) {
        w = {-25.0, 48.0, -36.0, 16.0, -3.0};
    } else if (index == 1) {
        w = {-3.0, -10.0, 18.0, -6.0, 1.0};
    } else if (index == count - 1) {
        first = count - 5;
        w = {3.0, -16.0, 36.0, -48.0, 25.0};
    } else {
        first = count - 5;
        w = {-1.0, 6.0, -18.0, 10.0, 3.0};
    }
    const Grid& grid = traj[index].g.grid();
    PeriodicField phi_t(grid);
    PeriodicField f_t(grid);
    for (std::size_t s = 0; s < 5; ++s) {
        if (w[s] == 0.0) continue;
        const double c = w[s] / (12.0 * h);
        phi_t += c * traj[first + s].g.phi.displacement();
        f_t += c * traj[first + s].g.f;
    }
    return {std::move(phi_t), std::move(f_t)};
}

VelocityPair spatial_velocity(const GroupElement& g, const MaterialVelocity& material) {
    const auto inv = invert_diffeo(g.phi);
    return {compose(material.phi_t, inv), compose(material.f_t, inv)};
}

VelocityPair body_velocity(const GroupElement& g, const MaterialVelocity& material) {
    const auto& jac = g.phi.jacobian();
    auto u1 = material.phi_t / jac;
    auto u2 = material.f_t - derivative(g.f) * u1;
    return {std::move(u1), std::move(u2)};
}

VelocityPair adjoint_action(const GroupElement& g, const VelocityPair& v) {
    const auto inv = invert_diffeo(g.phi);
    return {compose(g.phi.jacobian() * v.u, inv), compose(derivative(g.f) * v.u + v.rho, inv)};
}

BodyMomentum coadjoint_action(const GroupElement& g, const PeriodicField& m, const PeriodicField& rho) {
    const auto& jac = g.phi.jacobian();
    const auto rho_phi = compose(rho, g.phi) * jac;
    auto m0 = compose(m, g.phi) * jac * jac + rho_phi * derivative(g.f);
    return {std::move(m0), rho_phi};
}

std::vector<MomentumDrift> momentum_drift(ModelId model, const FlowmapResult& run) {
    std::vector<MomentumDrift> out;
    if (run.trajectory.empty()) return out;
    const auto& start = run.trajectory.front();
    const auto& rho_initial = start.state.rho;
    const auto m_initial = apply_A(start.state.u);
    const bool ch = ch_family(model);

    for (const auto& snap : run.trajectory) {
        MomentumDrift d;
        d.t = snap.t;
        const auto& jac = snap.g.phi.jacobian();
        auto transported = compose(snap.state.rho, snap.g.phi) * jac;
        if (!ch) transported = transported * jac;
        d.density = max_abs_diff(transported, rho_initial);
        if (ch) {
            const auto body = coadjoint_action(snap.g, apply_A(snap.state.u), snap.state.rho);
            d.body_momentum = std::max(max_abs_diff(body.m0, m_initial), max_abs_diff(body.rho0, rho_initial));
        }
        out.push_back(d);
    }
    return out;
}

}  // namespace ch2geo
