#pragma once

#include <functional>
#include <vector>

namespace gravheun {

// Dirichlet eigenvalues of -u'' + V(x) u = c u on (lo, hi) from the standard
// three-point discretization with `intervals` cells, computed by Sturm-sequence
// bisection on the tridiagonal matrix. Returns the lowest `count` values.
std::vector<double> fd_dirichlet_eigenvalues(const std::function<double(double)>& potential, double lo, double hi,
                                             int intervals, int count);

// Same, with one Richardson step (intervals and 2*intervals, O(h^4) error).
std::vector<double> fd_dirichlet_eigenvalues_extrapolated(const std::function<double(double)>& potential, double lo,
                                                          double hi, int intervals, int count);

}  // namespace gravheun
