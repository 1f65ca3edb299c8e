#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "gravheun/heun_gravity.hpp"
#include "gravheun/roots.hpp"

namespace gravheun {

BranchParams map_params(double b, double c, double K) {
    return {HeunBParams{-K, c - 1.0, 0.0, 2.0 * b, -2.0}, HeunBParams{-K - 2.0 * b, c - 3.0, 2.0, 2.0 * b, -2.0}};
}

GravityBasis::GravityBasis(double b, double c, double K, double radius, const SeriesControl& ctl)
    : b_(b),
      params_(map_params(b, c, K)),
      first_(params_.first, radius, ctl),
      second_factor_(params_.second, 0, radius, ctl) {}

double GravityBasis::psi_first(double s) const { return std::exp(b_ * s - 0.5 * s * s) * first(s); }

double GravityBasis::psi_first_derivative(double s) const {
    return std::exp(b_ * s - 0.5 * s * s) * ((b_ - s) * first(s) + first_derivative(s));
}

double GravityBasis::psi_second(double s) const { return std::exp(b_ * s - 0.5 * s * s) * second(s); }

double GravityBasis::psi_second_derivative(double s) const {
    return std::exp(b_ * s - 0.5 * s * s) * ((b_ - s) * second(s) + second_derivative(s));
}

std::function<double(double)> phi_general(double b, double c, double K, double b1, double b2,
                                          const SeriesControl& ctl) {
    // Radius grows with |s| on demand; start with the natural interval.
    auto basis = std::make_shared<GravityBasis>(b, c, K, std::max(std::abs(b), 1.0), ctl);
    const double radius = std::max(std::abs(b), 1.0);
    return [=](double s) {
        if (std::abs(s) > radius) {
            const GravityBasis wide(b, c, K, std::abs(s), ctl);
            return b1 * wide.first(s) + b2 * wide.second(s);
        }
        return b1 * basis->first(s) + b2 * basis->second(s);
    };
}

double gravity_determinant(double b, double c, double K, const SeriesControl& ctl) {
    if (!(b > 0.0)) throw std::invalid_argument("gravity_determinant: b must be > 0");
    const GravityBasis basis(b, c, K, b, ctl);
    return basis.first(-b) * basis.second_factor(b) + basis.first(b) * basis.second_factor(-b);
}

std::vector<GravityEigen> eigen_gravity(double b, double K, double c_lo, double c_hi, double tol,
                                        const GravityScanOptions& opt) {
    if (!(b > 0.0)) throw std::invalid_argument("eigen_gravity: b must be > 0");
    if (!(K >= 0.0)) throw std::invalid_argument("eigen_gravity: K must be >= 0");
    if (!(c_lo < c_hi)) throw std::invalid_argument("eigen_gravity: requires c_lo < c_hi");
    auto det = [&](double c) { return gravity_determinant(b, c, K, opt.ctl); };

    std::vector<GravityEigen> out;
    for (const auto& root : scan_roots(det, c_lo, c_hi, opt.grid_step, tol)) {
        GravityEigen e;
        e.K = K;
        e.record = make_record(root.x, b, static_cast<int>(out.size()), std::abs(det(root.x)),
                               EigenMethod::determinant_root);
        if (root.x < 1.0) e.record.tags.emplace_back("below_ground");
        if (opt.cross_check) e.residual_shoot = std::abs(shooting_oracle(b, K, root.x, opt.shooting));
        out.push_back(std::move(e));
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].record.c - out[i - 1].record.c < 0.5) {
            out[i - 1].record.tags.emplace_back("close_spacing");
            out[i].record.tags.emplace_back("close_spacing");
        }
    }
    return out;
}

std::vector<double> shooting_eigenvalues(double b, double K, double c_lo, double c_hi, double tol,
                                         const GravityScanOptions& opt) {
    auto mismatch = [&](double c) { return shooting_oracle(b, K, c, opt.shooting); };
    std::vector<double> out;
    for (const auto& root : scan_roots(mismatch, c_lo, c_hi, opt.grid_step, tol)) out.push_back(root.x);
    return out;
}

}  // namespace gravheun
