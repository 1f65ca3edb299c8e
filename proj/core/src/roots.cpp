#include "gravheun/roots.hpp"

#include <cmath>
#include <stdexcept>

#include "gravheun/parallel.hpp"

namespace gravheun {

BracketedRoot bisect(const ScalarFunction& f, double lo, double hi, double f_lo, double f_hi, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("bisect: tol must be > 0");
    if (f_lo * f_hi > 0.0) throw std::invalid_argument("bisect: interval does not bracket a root");
    BracketedRoot r;
    if (f_lo == 0.0) return {lo, lo, lo, 0.0, 0};
    if (f_hi == 0.0) return {hi, hi, hi, 0.0, 0};
    int it = 0;
    while (hi - lo > tol && it < 200) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = f(mid);
        ++it;
        if (f_mid == 0.0) return {mid, mid, mid, 0.0, it};
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    r.lo = lo;
    r.hi = hi;
    r.x = 0.5 * (lo + hi);
    r.value = std::abs(f_lo) < std::abs(f_hi) ? f_lo : f_hi;
    r.iterations = it;
    return r;
}

std::vector<BracketedRoot> scan_roots(const ScalarFunction& f, double lo, double hi, double step, double tol) {
    if (!(hi > lo)) throw std::invalid_argument("scan_roots: requires lo < hi");
    if (!(step > 0.0)) throw std::invalid_argument("scan_roots: step must be > 0");
    const auto intervals = static_cast<std::size_t>(std::ceil((hi - lo) / step - 1e-9));
    const double h = (hi - lo) / static_cast<double>(intervals);
    auto node = [&](std::size_t i) { return i == intervals ? hi : lo + h * static_cast<double>(i); };
    const std::vector<double> values = parallel_map(intervals + 1, [&](std::size_t i) { return f(node(i)); });

    std::vector<BracketedRoot> roots;
    for (std::size_t i = 0; i <= intervals; ++i) {
        if (std::isnan(values[i])) throw std::runtime_error("scan_roots: function returned NaN");
        if (values[i] == 0.0) {
            roots.push_back({node(i), node(i), node(i), 0.0, 0});
            continue;
        }
        if (i == intervals || values[i + 1] == 0.0) continue;
        if ((values[i] < 0.0) != (values[i + 1] < 0.0)) {
            roots.push_back(bisect(f, node(i), node(i + 1), values[i], values[i + 1], tol));
        }
    }
    return roots;
}

}  // namespace gravheun
