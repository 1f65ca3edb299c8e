#pragma once

#include <functional>
#include <vector>

namespace gravheun {

using ScalarFunction = std::function<double(double)>;

// A root of a real function located by sign change on a uniform scan grid
// and refined by bisection.
struct BracketedRoot {
    double x = 0.0;
    double lo = 0.0;  // final bracket
    double hi = 0.0;
    double value = 0.0;
    int iterations = 0;
};

// Bisection on [lo, hi] given f(lo) * f(hi) <= 0, until hi - lo <= tol.
BracketedRoot bisect(const ScalarFunction& f, double lo, double hi, double f_lo, double f_hi, double tol);

// Samples f on lo, lo + step, ..., hi (grid evaluated in parallel, see
// parallel_map), then bisects every sign change. Exact zeros on the grid are
// reported as roots. Results are sorted ascending.
std::vector<BracketedRoot> scan_roots(const ScalarFunction& f, double lo, double hi, double step, double tol);

}  // namespace gravheun
