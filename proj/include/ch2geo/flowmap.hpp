#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ch2geo/diffeo.hpp"
#include "ch2geo/evolution.hpp"

namespace ch2geo {

/// Element (phi, f) of the semidirect product Diff(S^1) x F(S^1).
struct GroupElement {
    Diffeo phi;
    PeriodicField f;

    static GroupElement identity(const Grid& grid);
    const Grid& grid() const noexcept { return phi.grid(); }
};

/// (phi_a, f_a)(phi_b, f_b) = (phi_a o phi_b, f_b + f_a o phi_b).
GroupElement group_product(const GroupElement& a, const GroupElement& b);
/// (phi^{-1}, -f o phi^{-1}).
GroupElement group_inverse(const GroupElement& g);
/// Max-norm distance between displacements and between f components.
double max_abs_diff(const GroupElement& a, const GroupElement& b);

/// Time derivative (phi_t, f_t) of a curve in the group.
struct MaterialVelocity {
    PeriodicField phi_t;
    PeriodicField f_t;
};

/// Body-frame momentum (m0, rho0) = Ad*_g (m, rho).
struct BodyMomentum {
    PeriodicField m0;
    PeriodicField rho0;
};

struct FlowSnapshot {
    double t = 0.0;
    GroupElement g;
    VelocityPair state;
};

struct FlowmapResult {
    ModelId model = ModelId::CH2;
    std::vector<FlowSnapshot> trajectory;
    std::vector<DiagnosticsRecord> diagnostics;
    /// BlowupReason::jacobian marks loss of orientation of phi, distinct from
    /// the Eulerian slope and density criteria.
    RunStatus status;
};

/// Co-integrates (u, rho) with the transport system phi_t = u o phi,
/// f_t = rho o phi from (id, 0). phi is advanced through its periodic
/// displacement. Snapshots follow the same schedule as evolve(). The run
/// stops when min phi_x <= jacobian_floor.
FlowmapResult evolve_flowmap(const EvolutionConfig& config, const VelocityPair& initial,
                             double jacobian_floor = 1e-8);

/// f(t) from the label-wise quadrature rho0 * int_0^t ds / phi_x(s) (2CH, CH)
/// or rho0 * int_0^t ds / phi_x(s)^2 (2DP, DP), by composite Simpson over a
/// uniformly spaced history (Simpson 3/8 closes an odd interval count).
/// Throws JacobianDegenerate if some phi_x is non-positive.
PeriodicField reconstruct_f(ModelId model, const PeriodicField& rho0, std::span<const Diffeo> history,
                            double spacing);

/// (phi_t, f_t) at snapshot `index`, by fourth-order finite differences in
/// time over the stored snapshots. Requires at least five uniformly spaced
/// snapshots.
MaterialVelocity material_velocity(const FlowmapResult& run, std::size_t index);

/// Right translation to the algebra: (phi_t o phi^{-1}, f_t o phi^{-1}).
VelocityPair spatial_velocity(const GroupElement& g, const MaterialVelocity& material);
/// Left translation to the algebra: (phi_t / phi_x, f_t - (f_x / phi_x) phi_t).
VelocityPair body_velocity(const GroupElement& g, const MaterialVelocity& material);

/// Ad_g (v, tau) = ((phi_x v) o phi^{-1}, (f_x v + tau) o phi^{-1}).
VelocityPair adjoint_action(const GroupElement& g, const VelocityPair& v);
/// Ad*_g (m, rho) = ((m o phi) phi_x^2 + (rho o phi) f_x phi_x, (rho o phi) phi_x).
BodyMomentum coadjoint_action(const GroupElement& g, const PeriodicField& m, const PeriodicField& rho);

struct MomentumDrift {
    double t = 0.0;
    /// max |(rho o phi) phi_x - rho_0| (CH family) or
    /// max |(rho o phi) phi_x^2 - rho_0| (DP family).
    double density = 0.0;
    /// max-norm drift of Ad*_(phi, f)(m, rho) over both slots; CH family only.
    std::optional<double> body_momentum;
};

/// Deviation of each conserved quantity from its t = 0 value at every snapshot.
std::vector<MomentumDrift> momentum_drift(ModelId model, const FlowmapResult& run);

}  // namespace ch2geo
