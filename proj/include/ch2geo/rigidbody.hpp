#pragma once

#include <vector>

#include <Eigen/Dense>

namespace ch2geo::rigidbody {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Attitude R, body angular velocity Omega and principal moments of inertia.
struct State {
    Mat3 R = Mat3::Identity();
    Vec3 omega = Vec3::Zero();
    Vec3 inertia = Vec3::Ones();
};

/// x -> antisymmetric matrix with hat(x) * y = x.cross(y).
Mat3 hat(const Vec3& x);

/// Euler's equation solved for Omega_dot: I^{-1}((I Omega) x Omega).
Vec3 euler_rhs(const State& state);

struct Sample {
    double t = 0.0;
    Vec3 omega;
    Mat3 R;
    Vec3 body_momentum;     // Pi = I Omega
    Vec3 spatial_momentum;  // pi = R Pi
    double energy = 0.0;    // Omega . I Omega
};

/// One RK4 step of the coupled system Omega_dot = euler_rhs, R_dot = R hat(Omega),
/// followed by projection of R back onto SO(3).
State step_rk4(const State& state, double dt);

/// Nearest rotation to M (polar factor via SVD, det forced to +1).
Mat3 reorthonormalize(const Mat3& m);

/// RK4 trajectory sampled at t = 0 and every `stride` steps (plus the final time).
std::vector<Sample> evolve_rigidbody(const State& initial, double dt, double t_end, int stride = 1);

Sample sample(double t, const State& state);

/// max_t |Pi(t) - R(t)^T pi(0)|: body momentum against the coadjoint image of
/// the initial spatial momentum.
double ad_star_check(const std::vector<Sample>& trajectory);

}  // namespace ch2geo::rigidbody
