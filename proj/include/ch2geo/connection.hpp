#pragma once

#include <string>
#include <string_view>

#include "ch2geo/field.hpp"

namespace ch2geo {

/// Element (u, rho) of the algebra F(S^1) x F(S^1): velocity and density.
struct VelocityPair {
    PeriodicField u;
    PeriodicField rho;

    VelocityPair(PeriodicField u_, PeriodicField rho_);
    /// (u, 0).
    explicit VelocityPair(PeriodicField u_);

    static VelocityPair zero(const Grid& grid);

    const Grid& grid() const noexcept { return u.grid(); }

    VelocityPair& operator+=(const VelocityPair& o);
    VelocityPair& operator-=(const VelocityPair& o);
    VelocityPair& operator*=(double s);
    friend VelocityPair operator+(VelocityPair a, const VelocityPair& b) { return a += b; }
    friend VelocityPair operator-(VelocityPair a, const VelocityPair& b) { return a -= b; }
    friend VelocityPair operator*(double s, VelocityPair a) { return a *= s; }
    friend VelocityPair operator*(VelocityPair a, double s) { return a *= s; }
};

/// Max-norm distance over both components.
double max_abs_diff(const VelocityPair& a, const VelocityPair& b);

enum class ModelId { CH, DP, CH2, DP2 };

std::string_view to_string(ModelId model);
/// Accepts "ch", "dp", "2ch", "2dp" (case-insensitive).
ModelId parse_model(std::string_view name);
bool is_two_component(ModelId model);

/// CH Christoffel operator -A^{-1} d/dx (u v + u_x v_x / 2).
PeriodicField gamma0_ch(const PeriodicField& u, const PeriodicField& v);
/// DP Christoffel operator -(3/2) A^{-1} d/dx (u v).
PeriodicField gamma0_dp(const PeriodicField& u, const PeriodicField& v);

/// Two-component CH Christoffel map at the identity:
/// (gamma0_ch(u, v) - A^{-1}(rho tau)_x / 2, -(u_x tau + v_x rho) / 2).
VelocityPair gamma_2ch(const VelocityPair& a, const VelocityPair& b);

/// Two-component DP Christoffel map at the identity:
/// (gamma0_dp(u, v) - A^{-1}(u_x tau + v_x rho) / 2 + A^{-1}(rho tau)_x, -(u_x tau + v_x rho)).
VelocityPair gamma_2dp(const VelocityPair& a, const VelocityPair& b);

/// B(a, b) = (-A^{-1}(2 b1_x A a1 + b1 A a1_x + a2 b2_x), -(a2 b1)_x).
///
/// Adjoint of the bracket with respect to the metric:
/// metric(B(a, b), c) == metric(a, bracket(b, c)).
VelocityPair bilinear_B(const VelocityPair& a, const VelocityPair& b);

/// Algebra bracket [a, b] = (b1_x a1 - a1_x b1, b2_x a1 - a2_x b1).
VelocityPair bracket(const VelocityPair& a, const VelocityPair& b);

/// Right-invariant metric at the identity: <u, v>_{H^1} + <rho, tau>_{L^2}.
double metric(const VelocityPair& a, const VelocityPair& b);

/// Christoffel map of the selected model. Single-component models ignore the
/// density slots and return (gamma0(u, v), 0).
VelocityPair christoffel(ModelId model, const VelocityPair& a, const VelocityPair& b);

}  // namespace ch2geo
