#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravheun/errors.hpp"
#include "gravheun/specfun.hpp"

namespace gravheun {

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);
const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);
}  // namespace

cplx pcf_d(cplx nu, cplx z, const SeriesControl& ctl) {
    const cplx half_z2 = 0.5 * z * z;
    const cplx even_weight = rgamma(0.5 * (1.0 - nu));
    const cplx odd_weight = rgamma(-0.5 * nu);
    cplx bracket = 0.0;
    if (even_weight != 0.0) bracket += kSqrtPi * even_weight * kummer_m(-0.5 * nu, 0.5, half_z2, ctl);
    if (odd_weight != 0.0) {
        bracket -= kSqrt2Pi * z * odd_weight * kummer_m(0.5 * (1.0 - nu), 1.5, half_z2, ctl);
    }
    return std::pow(cplx(2.0), 0.5 * nu) * std::exp(-0.25 * z * z) * bracket;
}

double hermite_h(double nu, double x, const SeriesControl& ctl) {
    const double x2 = x * x;
    const double even_weight = rgamma(0.5 * (1.0 - nu));
    const double odd_weight = rgamma(-0.5 * nu);
    double bracket = 0.0;
    if (even_weight != 0.0) bracket += kSqrtPi * even_weight * kummer_m(-0.5 * nu, 0.5, x2, ctl).real();
    if (odd_weight != 0.0) {
        bracket -= 2.0 * kSqrtPi * x * odd_weight * kummer_m(0.5 * (1.0 - nu), 1.5, x2, ctl).real();
    }
    return std::pow(2.0, nu) * bracket;
}

double laguerre_l(double nu, double lam, double x, const SeriesControl& ctl) {
    if (!(lam > -1.0)) throw std::invalid_argument("laguerre_l: requires lam > -1");
    if (is_nonpositive_integer(nu + lam + 1.0)) throw PoleError("laguerre_l: nu + lam + 1 is a pole");
    const double scale = gamma(nu + lam + 1.0) * rgamma(nu + 1.0) * rgamma(lam + 1.0);
    if (scale == 0.0) return 0.0;
    return scale * kummer_m(-nu, lam + 1.0, x, ctl).real();
}

}  // namespace gravheun
