#include "ch2geo/rigidbody.hpp"

#include <algorithm>
#include <cmath>

#include "ch2geo/errors.hpp"

namespace ch2geo::rigidbody {

Mat3 hat(const Vec3& x) {
    Mat3 m;
    m << 0.0, -x(2), x(1),
         x(2), 0.0, -x(0),
         -x(1), x(0), 0.0;
    return m;
}

Vec3 euler_rhs(const State& state) {
    const Vec3 momentum = state.inertia.cwiseProduct(state.omega);
    return momentum.cross(state.omega).cwiseQuotient(state.inertia);
}

namespace {

struct Derivative {
    Vec3 omega_dot;
    Mat3 R_dot;
};

Derivative derivative_of(const State& s) { return {euler_rhs(s), s.R * hat(s.omega)}; }

State advanced(const State& s, double h, const Derivative& d) {
    return {s.R + h * d.R_dot, s.omega + h * d.omega_dot, s.inertia};
}

}  // namespace

Mat3 reorthonormalize(const Mat3& m) {
    Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 u = svd.matrixU();
    const Mat3& v = svd.matrixV();
    if ((u * v.transpose()).determinant() < 0.0) u.col(2) *= -1.0;
    return u * v.transpose();
}

State step_rk4(const State& state, double dt) {
    const auto k1 = derivative_of(state);
    const auto k2 = derivative_of(advanced(state, 0.5 * dt, k1));
    const auto k3 = derivative_of(advanced(state, 0.5 * dt, k2));
    const auto k4 = derivative_of(advanced(state, dt, k3));
    State next = state;
    next.omega += dt / 6.0 * (k1.omega_dot + 2.0 * k2.omega_dot + 2.0 * k3.omega_dot + k4.omega_dot);
    next.R += dt / 6.0 * (k1.R_dot + 2.0 * k2.R_dot + 2.0 * k3.R_dot + k4.R_dot);
    next.R = reorthonormalize(next.R);
    return next;
}

Sample sample(double t, const State& state) {
    Sample s;
    s.t = t;
    s.omega = state.omega;
    s.R = state.R;
    s.body_momentum = state.inertia.cwiseProduct(state.omega);
    s.spatial_momentum = state.R * s.body_momentum;
    s.energy = state.omega.dot(s.body_momentum);
    return s;
}

std::vector<Sample> evolve_rigidbody(const State& initial, double dt, double t_end, int stride) {
    if (!(dt > 0.0) || !(t_end > 0.0)) throw InvalidArgument("dt and t_end must be positive");
    if (stride < 1) throw InvalidArgument("stride must be positive");
    if ((initial.inertia.array() <= 0.0).any()) throw InvalidArgument("moments of inertia must be positive");

    const long steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));
    std::vector<Sample> out;
    out.reserve(static_cast<std::size_t>(steps / stride + 2));
    State state = initial;
    double t = 0.0;
    out.push_back(sample(t, state));
    for (long step = 1; step <= steps; ++step) {
        const double t_next = step == steps ? t_end : static_cast<double>(step) * dt;
        state = step_rk4(state, t_next - t);
        t = t_next;
        if (step % stride == 0 || step == steps) out.push_back(sample(t, state));
    }
    return out;
}

double ad_star_check(const std::vector<Sample>& trajectory) {
    if (trajectory.empty()) return 0.0;
    const Vec3 pi0 = trajectory.front().spatial_momentum;
    double drift = 0.0;
    for (const auto& s : trajectory)
        drift = std::max(drift, (s.body_momentum - s.R.transpose() * pi0).norm());
    return drift;
}

}  // namespace ch2geo::rigidbody
