#pragma once

#include "ch2geo/field.hpp"

namespace ch2geo {

/// Orientation-preserving circle diffeomorphism phi(x) = x + psi(x).
///
/// The displacement psi is periodic, so phi(x + 1) = phi(x) + 1 holds by
/// construction. The Jacobian phi_x = 1 + psi_x is cached at construction.
class Diffeo {
public:
    /// Throws JacobianDegenerate if min phi_x <= 0.
    explicit Diffeo(PeriodicField displacement);

    static Diffeo identity(const Grid& grid);
    static Diffeo shift(const Grid& grid, double offset);

    const Grid& grid() const noexcept { return displacement_.grid(); }
    const PeriodicField& displacement() const noexcept { return displacement_; }
    const PeriodicField& jacobian() const noexcept { return jacobian_; }

    /// phi(x_j) for every grid point (not reduced mod 1).
    std::vector<double> image() const;

private:
    PeriodicField displacement_;
    PeriodicField jacobian_;
};

/// x_j -> field(phi(x_j)), summing the truncated Fourier series of `field`
/// at the off-grid points phi(x_j).
PeriodicField compose(const PeriodicField& field, const Diffeo& phi);

/// Diffeo psi with phi(psi(x_j)) = x_j to within 1e-13.
///
/// Newton's method per grid point, started from the monotone piecewise-linear
/// interpolant of the samples (x_j, phi(x_j)). Throws InversionError if any
/// point fails to converge in 50 iterations.
Diffeo invert_diffeo(const Diffeo& phi);

/// phi o psi, i.e. displacement psi_psi + psi_phi o psi.
Diffeo compose(const Diffeo& phi, const Diffeo& psi);

}  // namespace ch2geo
