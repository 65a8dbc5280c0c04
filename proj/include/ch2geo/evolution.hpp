#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ch2geo/connection.hpp"

namespace ch2geo {

struct EvolutionConfig {
    ModelId model = ModelId::CH2;
    double dt = 1e-4;
    double t_end = 1.0;
    int grid_n = 256;
    double blowup_slope_threshold = -1e6;
    double blowup_rhox_threshold = 1e6;
    int diagnostics_stride = 100;

    /// Throws InvalidArgument on a violated invariant.
    void validate() const;
    /// Number of fixed steps; the last one is shortened to land on t_end.
    long step_count() const;
};

struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;
    double min_ux = 0.0;
    double max_abs_rhox = 0.0;
    double mean_m = 0.0;
    double mean_rho = 0.0;
};

enum class BlowupReason { min_ux, max_abs_rhox, nonfinite, jacobian };

std::string_view to_string(BlowupReason reason);

struct BlowupInfo {
    double t = 0.0;
    BlowupReason reason = BlowupReason::min_ux;
};

/// Outcome of a run: completed, or the first threshold crossing.
struct RunStatus {
    std::optional<BlowupInfo> blowup;

    bool completed() const noexcept { return !blowup.has_value(); }
};

struct Snapshot {
    double t = 0.0;
    VelocityPair state;
};

struct EvolutionResult {
    std::vector<Snapshot> trajectory;
    std::vector<DiagnosticsRecord> diagnostics;
    RunStatus status;
};

/// (u_t, rho_t) of the weak (non-local) Cauchy form.
///
/// 2CH: u_t = -u u_x - A^{-1} d/dx (u^2 + u_x^2/2 + rho^2/2),  rho_t = -u rho_x - rho u_x.
/// 2DP: u_t = -u u_x - A^{-1}((3/2 u^2 - rho^2)_x + rho u_x),   rho_t = -u rho_x - 2 rho u_x.
/// CH/DP: the same with rho = 0; the density slot of the result is zero.
VelocityPair rhs(ModelId model, const VelocityPair& state);

/// (m_t, rho_t) in momentum variables m = A u. Cross-check only.
VelocityPair rhs_strong_m_form(ModelId model, const VelocityPair& state);

/// One classical RK4 step. Throws BlowupError if a stage goes non-finite.
VelocityPair step_rk4(ModelId model, const VelocityPair& state, double dt);

double conserved_energy(const VelocityPair& state);

/// (integral of m = A u, integral of rho).
std::pair<double, double> mean_invariants(const VelocityPair& state, ModelId model);

DiagnosticsRecord diagnose(double t, const VelocityPair& state, ModelId model);

/// Integrates to t_end or to the first threshold crossing. A snapshot and a
/// diagnostics record are stored at t = 0, every `diagnostics_stride` steps,
/// at the final time, and at the blow-up time.
EvolutionResult evolve(const EvolutionConfig& config, const VelocityPair& initial);

/// Checks the blow-up functionals of a state against the thresholds.
std::optional<BlowupReason> check_thresholds(const DiagnosticsRecord& record,
                                             const EvolutionConfig& config);

}  // namespace ch2geo
