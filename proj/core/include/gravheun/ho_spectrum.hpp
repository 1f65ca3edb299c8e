#pragma once

#include <functional>
#include <vector>

#include "gravheun/eigen_record.hpp"
#include "gravheun/specfun.hpp"

namespace gravheun {

// Orders of the two parabolic-cylinder solutions of psi'' + (c - q^2) psi = 0:
// 2 nu = c - 1, 2 rho = -c - 1, so nu + rho = -1.
struct PCFOrderPair {
    cplx nu;
    cplx rho;

    static PCFOrderPair from_c(double c);
    static PCFOrderPair from_nu(cplx nu);
    cplx c() const { return 2.0 * nu + 1.0; }
};

// Boundaries psi(q = 0) = 0 and psi(q = -2b) = 0; z = -2 sqrt(2) b is the
// D-function argument at the second boundary.
struct BoundaryData {
    double b = 0.0;
    double z = 0.0;

    static BoundaryData from_b(double b);
};

// psi(q) = c1 D_nu(sqrt2 q) + c2 D_rho(i sqrt2 q)
struct ModeFunction {
    cplx c1;
    cplx c2;
    PCFOrderPair order;
    SeriesControl ctl{};

    cplx operator()(double q) const;
};

ModeFunction general_solution(const PCFOrderPair& order, cplx c1, cplx c2, const SeriesControl& ctl = {});

// D_nu(0) D_rho(iz) - D_rho(0) D_nu(z)
cplx boundary_determinant(const PCFOrderPair& order, const BoundaryData& bd, const SeriesControl& ctl = {});

// The determinant with its phase e^{i pi rho/2} removed. For real c this is
// real (up to rounding) and changes sign exactly at the eigenvalues.
cplx rotated_determinant(double c, const BoundaryData& bd, const SeriesControl& ctl = {});

// (c1, c2) = (D_rho(0), -D_nu(0)): satisfies psi(0) = 0 identically and
// psi(-2b) = -det.
ModeFunction boundary_mode(const PCFOrderPair& order, const SeriesControl& ctl = {});

// The closed-form lattice lambda = 1 + 3b^2 + 4m for m in [m_lo, m_hi];
// residual = |boundary_determinant| at nu = 2m. Negative m with c < 1 are
// tagged "below_ground".
std::vector<EigenRecord> exact_eigenvalues(double b, int m_lo, int m_hi, const SeriesControl& ctl = {});

struct NumericSpectrumOptions {
    double grid_step = 0.05;
    double imag_tol = 1e-8;  // relative to the size of the determinant's terms
    SeriesControl ctl{};
};

// Roots of the boundary determinant in c in [c_lo, c_hi], refined to tol.
// Roots not explained by sin(pi nu/2) = 0 are tagged "anomalous"; c < 1 is
// tagged "below_ground".
std::vector<EigenRecord> numeric_eigenvalues(double b, double c_lo, double c_hi, double tol,
                                             const NumericSpectrumOptions& opt = {});

// Independent finite-difference Dirichlet spectrum of -psi'' + q^2 psi on
// q in [-2b, 0]; returns eigenvalues c in [c_lo, c_hi].
std::vector<EigenRecord> fd_oracle_eigenvalues(double b, double c_lo, double c_hi, int intervals = 2000);

}  // namespace gravheun
