#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gravheun/heun_gravity.hpp"

namespace gravheun {

double shooting_oracle(double b, double K, double c, const ShootingOptions& opt) {
    if (!(b > 0.0)) throw std::invalid_argument("shooting_oracle: b must be > 0");
    const double patch = std::min(opt.patch, 0.25 * b);
    const double match = 0.5 * b;

    auto rhs = [&](double s, const OdeState<2>& y) -> OdeState<2> {
        return {y[1], -(c + K / s - (s - b) * (s - b)) * y[0]};
    };

    OdeState<2> left{0.0, 1.0};
    OdeState<2> right{0.0, 1.0};
    try {
        left = integrate_dopri5<2>(rhs, -b, left, -patch, opt.ode);

        // Carry the left solution across s = 0 in the local Frobenius basis.
        const GravityBasis basis(b, c, K, patch, opt.ctl);
        const double a11 = basis.psi_first(-patch), a12 = basis.psi_second(-patch);
        const double a21 = basis.psi_first_derivative(-patch), a22 = basis.psi_second_derivative(-patch);
        const double w = a11 * a22 - a12 * a21;
        const double alpha = (left[0] * a22 - a12 * left[1]) / w;
        const double beta = (a11 * left[1] - a21 * left[0]) / w;
        left = {alpha * basis.psi_first(patch) + beta * basis.psi_second(patch),
                alpha * basis.psi_first_derivative(patch) + beta * basis.psi_second_derivative(patch)};

        left = integrate_dopri5<2>(rhs, patch, left, match, opt.ode);
        right = integrate_dopri5<2>(rhs, b, right, match, opt.ode);
    } catch (const StepUnderflow& e) {
        throw StepUnderflow(std::string(e.what()) + "; try a larger series patch around s = 0", e.where());
    }

    const double wronskian = left[0] * right[1] - left[1] * right[0];
    const double scale = std::abs(left[0] * right[1]) + std::abs(left[1] * right[0]);
    return scale == 0.0 ? 0.0 : wronskian / scale;
}

}  // namespace gravheun
