#include "gravheun/fd_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gravheun {

namespace {

// Number of eigenvalues of the symmetric tridiagonal (diag, off) below x.
int sturm_count(const std::vector<double>& diag, double off2, double x) {
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        d = diag[i] - x - (i == 0 ? 0.0 : off2 / d);
        if (d == 0.0) d = -std::numeric_limits<double>::epsilon() * (std::abs(diag[i]) + std::abs(x) + 1.0);
        if (d < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> fd_dirichlet_eigenvalues(const std::function<double(double)>& potential, double lo, double hi,
                                             int intervals, int count) {
    if (!(hi > lo) || intervals < 4 || count < 1 || count >= intervals) {
        throw std::invalid_argument("fd_dirichlet_eigenvalues: bad grid");
    }
    const double h = (hi - lo) / intervals;
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> diag(static_cast<std::size_t>(intervals - 1));
    double v_min = std::numeric_limits<double>::infinity();
    double v_max = -v_min;
    for (int i = 1; i < intervals; ++i) {
        const double v = potential(lo + h * i);
        diag[static_cast<std::size_t>(i - 1)] = 2.0 * inv_h2 + v;
        v_min = std::min(v_min, v);
        v_max = std::max(v_max, v);
    }
    const double off2 = inv_h2 * inv_h2;
    // Gershgorin bounds
    const double lower = v_min;
    const double upper = v_max + 4.0 * inv_h2;

    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        double a = lower, b = upper;
        for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, std::abs(b)); ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(diag, off2, mid) > k) b = mid;
            else a = mid;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

std::vector<double> fd_dirichlet_eigenvalues_extrapolated(const std::function<double(double)>& potential, double lo,
                                                          double hi, int intervals, int count) {
    const auto coarse = fd_dirichlet_eigenvalues(potential, lo, hi, intervals, count);
    const auto fine = fd_dirichlet_eigenvalues(potential, lo, hi, 2 * intervals, count);
    std::vector<double> out(coarse.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return out;
}

}  // namespace gravheun
