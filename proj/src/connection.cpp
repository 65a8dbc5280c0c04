#include "ch2geo/connection.hpp"

#include <algorithm>
#include <cctype>

#include "ch2geo/errors.hpp"

namespace ch2geo {

VelocityPair::VelocityPair(PeriodicField u_, PeriodicField rho_) : u(std::move(u_)), rho(std::move(rho_)) {
    require_same_grid(u.grid(), rho.grid());
}

VelocityPair::VelocityPair(PeriodicField u_) : u(std::move(u_)), rho(u.grid()) {}

VelocityPair VelocityPair::zero(const Grid& grid) { return {PeriodicField(grid), PeriodicField(grid)}; }

VelocityPair& VelocityPair::operator+=(const VelocityPair& o) {
    u += o.u;
    rho += o.rho;
    return *this;
}

VelocityPair& VelocityPair::operator-=(const VelocityPair& o) {
    u -= o.u;
    rho -= o.rho;
    return *this;
}

VelocityPair& VelocityPair::operator*=(double s) {
    u *= s;
    rho *= s;
    return *this;
}

double max_abs_diff(const VelocityPair& a, const VelocityPair& b) {
    return std::max(max_abs_diff(a.u, b.u), max_abs_diff(a.rho, b.rho));
}

std::string_view to_string(ModelId model) {
    switch (model) {
        case ModelId::CH: return "ch";
        case ModelId::DP: return "dp";
        case ModelId::CH2: return "2ch";
        case ModelId::DP2: return "2dp";
    }
    return "?";
}

ModelId parse_model(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "ch") return ModelId::CH;
    if (lower == "dp") return ModelId::DP;
    if (lower == "2ch" || lower == "ch2") return ModelId::CH2;
    if (lower == "2dp" || lower == "dp2") return ModelId::DP2;
    throw InvalidArgument("unknown model '" + std::string(name) + "' (expected ch, dp, 2ch or 2dp)");
}

bool is_two_component(ModelId model) { return model == ModelId::CH2 || model == ModelId::DP2; }

namespace {

// Undealiased operator bodies; every public entry point dealiases exactly once.
PeriodicField gamma0_ch_raw(const PeriodicField& u, const PeriodicField& v) {
    const auto ux = derivative(u);
    const auto vx = derivative(v);
    const auto flux = dealias(u * v + 0.5 * (ux * vx));
    return -apply_Ainv(derivative(flux));
}

PeriodicField gamma0_dp_raw(const PeriodicField& u, const PeriodicField& v) {
    return -1.5 * apply_Ainv(derivative(product(u, v)));
}

}  // namespace

PeriodicField gamma0_ch(const PeriodicField& u, const PeriodicField& v) {
    return dealias(gamma0_ch_raw(u, v));
}

PeriodicField gamma0_dp(const PeriodicField& u, const PeriodicField& v) {
    return dealias(gamma0_dp_raw(u, v));
}

VelocityPair gamma_2ch(const VelocityPair& a, const VelocityPair& b) {
    const auto ux = derivative(a.u);
    const auto vx = derivative(b.u);
    auto first = gamma0_ch_raw(a.u, b.u) - 0.5 * apply_Ainv(derivative(product(a.rho, b.rho)));
    auto second = -0.5 * (ux * b.rho + vx * a.rho);
    return {dealias(first), dealias(second)};
}

VelocityPair gamma_2dp(const VelocityPair& a, const VelocityPair& b) {
    const auto ux = derivative(a.u);
    const auto vx = derivative(b.u);
    const auto cross = dealias(ux * b.rho + vx * a.rho);
    auto first = gamma0_dp_raw(a.u, b.u) - 0.5 * apply_Ainv(cross) +
                 apply_Ainv(derivative(product(a.rho, b.rho)));
    return {dealias(first), -cross};
}

VelocityPair bilinear_B(const VelocityPair& a, const VelocityPair& b) {
    const auto m = apply_A(a.u);
    const auto mx = derivative(m);
    const auto b1x = derivative(b.u);
    const auto b2x = derivative(b.rho);
    const auto inner = dealias(2.0 * (b1x * m) + b.u * mx + a.rho * b2x);
    return {dealias(-apply_Ainv(inner)), dealias(-derivative(product(a.rho, b.u)))};
}

VelocityPair bracket(const VelocityPair& a, const VelocityPair& b) {
    const auto a1x = derivative(a.u);
    const auto b1x = derivative(b.u);
    const auto a2x = derivative(a.rho);
    const auto b2x = derivative(b.rho);
    return {dealias(b1x * a.u - a1x * b.u), dealias(b2x * a.u - a2x * b.u)};
}

double metric(const VelocityPair& a, const VelocityPair& b) {
    return inner_H1(a.u, b.u) + inner_L2(a.rho, b.rho);
}

VelocityPair christoffel(ModelId model, const VelocityPair& a, const VelocityPair& b) {
    switch (model) {
        case ModelId::CH: return VelocityPair(gamma0_ch(a.u, b.u));
        case ModelId::DP: return VelocityPair(gamma0_dp(a.u, b.u));
        case ModelId::CH2: return gamma_2ch(a, b);
        case ModelId::DP2: return gamma_2dp(a, b);
    }
    throw InvalidArgument("unknown model");
}

}  // namespace ch2geo
