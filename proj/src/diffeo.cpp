#include "ch2geo/diffeo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ch2geo/errors.hpp"

namespace ch2geo {

namespace {

PeriodicField jacobian_of(const PeriodicField& displacement) {
    auto jac = derivative(displacement);
    jac += PeriodicField::constant(displacement.grid(), 1.0);
    return jac;
}

constexpr int max_newton_iterations = 50;

}  // namespace

Diffeo::Diffeo(PeriodicField displacement)
    : displacement_(std::move(displacement)), jacobian_(jacobian_of(displacement_)) {
    const double min_jac = jacobian_.min();
    if (!(min_jac > 0.0)) {
        std::ostringstream msg;
        msg << "diffeomorphism is not orientation preserving: min phi_x = " << min_jac;
        throw JacobianDegenerate(msg.str());
    }
}

Diffeo Diffeo::identity(const Grid& grid) { return Diffeo(PeriodicField(grid)); }

Diffeo Diffeo::shift(const Grid& grid, double offset) {
    return Diffeo(PeriodicField::constant(grid, offset));
}

std::vector<double> Diffeo::image() const {
    std::vector<double> y(grid().size());
    for (int j = 0; j < grid().size(); ++j) y[j] = grid().point(j) + displacement_[j];
    return y;
}

PeriodicField compose(const PeriodicField& field, const Diffeo& phi) {
    require_same_grid(field.grid(), phi.grid());
    return PeriodicField(field.grid(), evaluate_at(field, phi.image()));
}

Diffeo compose(const Diffeo& phi, const Diffeo& psi) {
    return Diffeo(psi.displacement() + compose(phi.displacement(), psi));
}

Diffeo invert_diffeo(const Diffeo& phi) {
    const Grid& grid = phi.grid();
    const int n = grid.size();
    const FourierSeries psi(phi.displacement());

    // Samples of phi over one period, closed by phi(x_0 + 1) = phi(x_0) + 1.
    std::vector<double> nodes(n + 1);
    std::vector<double> images(n + 1);
    const auto img = phi.image();
    for (int j = 0; j < n; ++j) {
        nodes[j] = grid.point(j);
        images[j] = img[j];
    }
    nodes[n] = 1.0;
    images[n] = img[0] + 1.0;

    std::vector<double> inverse_disp(n);
    for (int j = 0; j < n; ++j) {
        const double target = grid.point(j);
        // Reduce the target into [phi(0), phi(0) + 1).
        const double wraps = std::floor(target - images[0]);
        const double t = target - wraps;

        const auto it = std::upper_bound(images.begin(), images.end(), t);
        const int i = std::clamp(static_cast<int>(it - images.begin()) - 1, 0, n - 1);
        double lo = nodes[i];
        double hi = nodes[i + 1];
        const double span = images[i + 1] - images[i];
        double s = span > 0.0 ? lo + (t - images[i]) / span * (hi - lo) : lo;

        bool converged = false;
        for (int iter = 0; iter < max_newton_iterations; ++iter) {
            const auto [value, slope] = psi.value_and_slope(s);
            const double residual = s + value - t;
            if (std::abs(residual) < 1e-14) {
                converged = true;
                break;
            }
            if (residual > 0.0)
                hi = std::min(hi, s);
            else
                lo = std::max(lo, s);
            const double jac = 1.0 + slope;
            double next = jac > 0.0 ? s - residual / jac : 0.5 * (lo + hi);
            // Safeguard: stay inside the bracket, bisect otherwise.
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (std::abs(next - s) < 1e-16) {
                s = next;
                converged = true;
                break;
            }
            s = next;
        }
        if (!converged) {
            std::ostringstream msg;
            msg << "diffeomorphism inversion did not converge at x = " << target
                << " (near-degenerate phi_x)";
            throw InversionError(msg.str());
        }
        inverse_disp[j] = s + wraps - target;
    }
    return Diffeo(PeriodicField(grid, std::move(inverse_disp)));
}

}  // namespace ch2geo
