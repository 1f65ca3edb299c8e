#include "gravheun/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gravheun/eigen_record.hpp"

namespace gravheun {

PhysicalSystem PhysicalSystem::equal_masses(double m, double k, double a, double G, double hbar) {
    return PhysicalSystem{m, m, k, a, G, hbar};
}

double ReducedProblem::length_scale() const { return std::sqrt(hbar / (mu * omega)); }

ReducedProblem reduce_system(const PhysicalSystem& sys) {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    auto non_negative = [](double v) { return std::isfinite(v) && v >= 0.0; };
    if (!positive(sys.m1) || !positive(sys.m2)) throw std::invalid_argument("masses must be > 0");
    if (sys.m1 != sys.m2) throw std::invalid_argument("unequal masses are not supported (m1 != m2)");
    if (!positive(sys.k)) throw std::invalid_argument("spring constant k must be > 0");
    if (!positive(sys.hbar)) throw std::invalid_argument("hbar must be > 0");
    if (!non_negative(sys.a)) throw std::invalid_argument("natural length a must be >= 0");
    if (!non_negative(sys.G)) throw std::invalid_argument("gravitational constant G must be >= 0");

    const double m = sys.m1;
    ReducedProblem rp;
    rp.hbar = sys.hbar;
    rp.M = sys.m1 + sys.m2;
    rp.mu = sys.m1 * sys.m2 / rp.M;
    rp.l = 0.75 * sys.k;
    rp.omega = std::sqrt(2.0 * rp.l / rp.mu);
    rp.b = sys.a * std::sqrt(rp.mu * rp.omega / sys.hbar);
    rp.K = sys.G * m * m * m * std::sqrt(sys.hbar / (rp.mu * rp.omega)) / (sys.hbar * sys.hbar);
    return rp;
}

CoordinateMap::CoordinateMap(const ReducedProblem& rp) : length_(rp.length_scale()), b_(rp.b) {}

CoordinateMap coordinate_maps(const ReducedProblem& rp) { return CoordinateMap(rp); }

std::string_view to_string(EigenMethod m) {
    switch (m) {
        case EigenMethod::exact_formula: return "exact_formula";
        case EigenMethod::determinant_root: return "determinant_root";
        case EigenMethod::fd_oracle: return "fd_oracle";
        case EigenMethod::hermite_quantization: return "hermite_quantization";
    }
    return "unknown";
}

bool EigenRecord::has_tag(std::string_view tag) const {
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

EigenRecord make_record(double c, double b, int index, double residual, EigenMethod method) {
    EigenRecord r;
    r.c = c;
    r.lambda = c + 3.0 * b * b;
    r.E_over_hbar_omega = 0.5 * r.lambda;
    r.index = index;
    r.residual = residual;
    r.method = method;
    return r;
}

}  // namespace gravheun
