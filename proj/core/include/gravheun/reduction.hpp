#pragma once

#include <string>

namespace gravheun {

// Two equal masses joined to each other and to two walls by three identical
// springs, with an optional Newtonian attraction between the masses.
// SI-like quantities live only here; everything downstream is dimensionless.
struct PhysicalSystem {
    double m1 = 1.0;
    double m2 = 1.0;
    double k = 1.0;     // spring constant (all three springs)
    double a = 0.0;     // natural spring length
    double G = 0.0;     // gravitational constant
    double hbar = 1.0;

    // Equal-mass convenience constructor.
    static PhysicalSystem equal_masses(double m, double k, double a, double G, double hbar);
};

struct ReducedProblem {
    double M = 0.0;      // total mass
    double mu = 0.0;     // reduced mass
    double l = 0.0;      // effective spring constant, 3k/4
    double omega = 0.0;  // sqrt(2 l / mu)
    double b = 0.0;      // a * sqrt(mu omega / hbar)
    double K = 0.0;      // G m^3 sqrt(hbar / (mu omega)) / hbar^2
    double hbar = 1.0;

    double length_scale() const;  // sqrt(hbar / (mu omega))

    double c_from_lambda(double lambda) const { return lambda - 3.0 * b * b; }
    double lambda_from_c(double c) const { return c + 3.0 * b * b; }
    double energy_from_lambda(double lambda) const { return 0.5 * lambda * hbar * omega; }
};

// Throws std::invalid_argument for m1 != m2, non-positive m, k, hbar, or
// negative a, G.
ReducedProblem reduce_system(const PhysicalSystem& sys);

// r <-> s <-> q maps: r = L s with L = sqrt(hbar/(mu omega)), q = s - b.
class CoordinateMap {
public:
    explicit CoordinateMap(const ReducedProblem& rp);

    double r_to_s(double r) const { return r / length_; }
    double s_to_r(double s) const { return s * length_; }
    double s_to_q(double s) const { return s - b_; }
    double q_to_s(double q) const { return q + b_; }
    double r_to_q(double r) const { return s_to_q(r_to_s(r)); }
    double q_to_r(double q) const { return s_to_r(q_to_s(q)); }

private:
    double length_;
    double b_;
};

CoordinateMap coordinate_maps(const ReducedProblem& rp);

}  // namespace gravheun
