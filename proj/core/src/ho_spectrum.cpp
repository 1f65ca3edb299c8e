#include "gravheun/ho_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravheun/fd_spectrum.hpp"
#include "gravheun/roots.hpp"

namespace gravheun {

namespace {
const cplx kI{0.0, 1.0};
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

PCFOrderPair PCFOrderPair::from_c(double c) { return {0.5 * (c - 1.0), -0.5 * (c + 1.0)}; }

PCFOrderPair PCFOrderPair::from_nu(cplx nu) { return {nu, -nu - 1.0}; }

BoundaryData BoundaryData::from_b(double b) {
    if (!(b >= 0.0)) throw std::invalid_argument("BoundaryData: b must be >= 0");
    return {b, -2.0 * kSqrt2 * b};
}

cplx ModeFunction::operator()(double q) const {
    cplx out = 0.0;
    if (c1 != 0.0) out += c1 * pcf_d(order.nu, kSqrt2 * q, ctl);
    if (c2 != 0.0) out += c2 * pcf_d(order.rho, kI * kSqrt2 * q, ctl);
    return out;
}

ModeFunction general_solution(const PCFOrderPair& order, cplx c1, cplx c2, const SeriesControl& ctl) {
    return {c1, c2, order, ctl};
}

cplx boundary_determinant(const PCFOrderPair& order, const BoundaryData& bd, const SeriesControl& ctl) {
    const cplx z = bd.z;
    return pcf_d(order.nu, 0.0, ctl) * pcf_d(order.rho, kI * z, ctl) -
           pcf_d(order.rho, 0.0, ctl) * pcf_d(order.nu, z, ctl);
}

cplx rotated_determinant(double c, const BoundaryData& bd, const SeriesControl& ctl) {
    const auto order = PCFOrderPair::from_c(c);
    const double rho = order.rho.real();
    const cplx unphase{cospi(0.5 * rho), -sinpi(0.5 * rho)};
    return boundary_determinant(order, bd, ctl) * unphase;
}

ModeFunction boundary_mode(const PCFOrderPair& order, const SeriesControl& ctl) {
    return {pcf_d(order.rho, 0.0, ctl), -pcf_d(order.nu, 0.0, ctl), order, ctl};
}

std::vector<EigenRecord> exact_eigenvalues(double b, int m_lo, int m_hi, const SeriesControl& ctl) {
    if (!(b >= 0.0)) throw std::invalid_argument("exact_eigenvalues: b must be >= 0");
    if (m_hi < m_lo) throw std::invalid_argument("exact_eigenvalues: empty m range");
    const auto bd = BoundaryData::from_b(b);
    std::vector<EigenRecord> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        const double c = 1.0 + 4.0 * m;
        const double residual = std::abs(boundary_determinant(PCFOrderPair::from_nu(2.0 * m), bd, ctl));
        auto rec = make_record(c, b, m, residual, EigenMethod::exact_formula);
        if (c < 1.0) rec.tags.emplace_back("below_ground");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<EigenRecord> numeric_eigenvalues(double b, double c_lo, double c_hi, double tol,
                                             const NumericSpectrumOptions& opt) {
    if (!(b > 0.0)) throw std::invalid_argument("numeric_eigenvalues: b must be > 0");
    if (!(c_lo < c_hi)) throw std::invalid_argument("numeric_eigenvalues: requires c_lo < c_hi");
    if (!(tol > 0.0)) throw std::invalid_argument("numeric_eigenvalues: tol must be > 0");
    const auto bd = BoundaryData::from_b(b);
    const double step = std::min(opt.grid_step, 0.05);
    auto real_part = [&](double c) { return rotated_determinant(c, bd, opt.ctl).real(); };

    std::vector<EigenRecord> out;
    for (const auto& root : scan_roots(real_part, c_lo, c_hi, step, tol)) {
        const auto order = PCFOrderPair::from_c(root.x);
        const cplx rotated = rotated_determinant(root.x, bd, opt.ctl);
        // Size of the two products in the determinant, for a relative imag check.
        const double scale = std::abs(pcf_d(order.nu, 0.0, opt.ctl) * pcf_d(order.rho, kI * bd.z, opt.ctl)) +
                             std::abs(pcf_d(order.rho, 0.0, opt.ctl) * pcf_d(order.nu, bd.z, opt.ctl));
        if (std::abs(rotated.imag()) > opt.imag_tol * std::max(1.0, scale)) continue;
        auto rec = make_record(root.x, b, static_cast<int>(out.size()), std::abs(rotated), EigenMethod::determinant_root);
        if (std::abs(sinpi(0.5 * order.nu.real())) > 1e-6) rec.tags.emplace_back("anomalous");
        if (root.x < 1.0) rec.tags.emplace_back("below_ground");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<EigenRecord> fd_oracle_eigenvalues(double b, double c_lo, double c_hi, int intervals) {
    if (!(b > 0.0)) throw std::invalid_argument("fd_oracle_eigenvalues: b must be > 0");
    auto potential = [](double q) { return q * q; };
    std::vector<EigenRecord> out;
    // Grow the requested count until the spectrum passes c_hi.
    for (int count = 4;; count *= 2) {
        count = std::min(count, intervals / 4);
        const auto values = fd_dirichlet_eigenvalues_extrapolated(potential, -2.0 * b, 0.0, intervals, count);
        if (values.back() > c_hi || count >= intervals / 4) {
            for (double c : values) {
                if (c < c_lo || c > c_hi) continue;
                out.push_back(make_record(c, b, static_cast<int>(out.size()), 0.0, EigenMethod::fd_oracle));
            }
            return out;
        }
    }
}

}  // namespace gravheun
