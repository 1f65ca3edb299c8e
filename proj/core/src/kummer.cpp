#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gravheun/errors.hpp"
#include "gravheun/specfun.hpp"

namespace gravheun {

void SeriesControl::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("SeriesControl: tol must be > 0");
    if (max_terms < 10) throw std::invalid_argument("SeriesControl: max_terms must be >= 10");
}

cplx kummer_m_direct(cplx a, cplx b, cplx z, const SeriesControl& ctl) {
    ctl.validate();
    if (is_nonpositive_integer(b)) throw PoleError("kummer_m: b is a non-positive integer");

    cplx term = 1.0;
    cplx sum = 1.0;
    double largest = 1.0;
    int small_run = 0;
    // Terms are monotone once n exceeds |z| + |a|; only then trust a small term.
    const double settle = std::abs(z) + std::abs(a);
    for (int n = 0; n < ctl.max_terms; ++n) {
        term *= (a + static_cast<double>(n)) * z / ((b + static_cast<double>(n)) * (n + 1.0));
        if (term == 0.0) return sum;  // terminating (a is a non-positive integer)
        sum += term;
        const double mag = std::abs(term);
        largest = std::max(largest, mag);
        const bool small = mag <= ctl.tol * std::abs(sum) || mag <= 1e-17 * largest;
        small_run = (small && n + 1 > settle) ? small_run + 1 : 0;
        if (small_run >= 2) return sum;
    }
    throw ConvergenceError("kummer_m", ctl.max_terms);
}

cplx kummer_m(cplx a, cplx b, cplx z, const SeriesControl& ctl) {
    if (z.real() < 0.0 && !is_nonpositive_integer(a)) {
        return std::exp(z) * kummer_m_direct(b - a, b, -z, ctl);
    }
    return kummer_m_direct(a, b, z, ctl);
}

}  // namespace gravheun
