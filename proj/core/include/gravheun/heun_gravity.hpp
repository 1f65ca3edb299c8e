#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "gravheun/eigen_record.hpp"
#include "gravheun/ode.hpp"
#include "gravheun/specfun.hpp"

namespace gravheun {

// Parameters of the biconfluent Heun equation
//   x y'' + (gamma + delta x + epsilon x^2) y' + (alpha x - q_acc) y = 0.
struct HeunBParams {
    double q_acc = 0.0;
    double alpha = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;

    bool operator==(const HeunBParams&) const = default;
};

// Left-hand side of the HeunB equation for given y, y', y''.
double heunb_operator(const HeunBParams& p, double x, double y, double dy, double d2y);

// Frobenius solution x^sigma * sum a_k x^k about x = 0 with a_0 = 1, from
//   (k+s)(k+s-1+gamma) a_k + (delta (k+s-1) - q_acc) a_{k-1} + (epsilon (k+s-2) + alpha) a_{k-2} = 0.
// sigma = 1 is an indicial root only when gamma = 0. At a resonant index
// (k = 1 - gamma for sigma = 0) the equation must be consistent; otherwise
// construction throws ResonanceError with the obstruction value.
class FrobeniusSolution {
public:
    // Coefficients are generated until terms are below ctl.tol on |x| <= radius.
    FrobeniusSolution(const HeunBParams& p, int sigma, double radius, const SeriesControl& ctl = {});

    // Fixed truncation after n_terms coefficients (for truncation studies).
    static FrobeniusSolution truncated(const HeunBParams& p, int sigma, int n_terms);

    double value(double x) const;
    double derivative(double x) const;
    double second_derivative(double x) const;

    const HeunBParams& params() const { return params_; }
    int sigma() const { return sigma_; }
    std::span<const double> coeffs() const { return coeffs_; }
    int n_terms() const { return static_cast<int>(coeffs_.size()); }
    // Always false for a constructed object: a needed log term throws instead.
    bool log_term_needed() const { return false; }

    // The value left over at the resonant index when a_{k} is dropped, or 0
    // when the parameters are not resonant for sigma = 0.
    static double resonance_obstruction(const HeunBParams& p);

private:
    friend class LogFrobeniusSolution;
    FrobeniusSolution(const HeunBParams& p, int sigma, std::vector<double> coeffs)
        : params_(p), sigma_(sigma), coeffs_(std::move(coeffs)) {}

    HeunBParams params_;
    int sigma_;
    std::vector<double> coeffs_;
};

// y(x) for the Frobenius solution with exponent sigma.
double heunb_eval(const HeunBParams& p, int sigma, double x, const SeriesControl& ctl = {});

struct HeunBValue {
    double value = 0.0;
    int terms = 0;
};
HeunBValue heunb_eval_detailed(const HeunBParams& p, int sigma, double x, const SeriesControl& ctl = {});

// Second solution for gamma = 0 when the sigma = 0 series is obstructed:
//   y(x) = kappa * Y(x) ln|x| + sum_k d_k x^k,  d_0 = 1, d_1 = 0, kappa = q_acc,
// with Y = x * sum a_k x^k the sigma = 1 solution. Reduces to the sigma = 0
// series when q_acc = 0.
class LogFrobeniusSolution {
public:
    LogFrobeniusSolution(const HeunBParams& p, double radius, const SeriesControl& ctl = {});

    double value(double x) const;
    double derivative(double x) const;
    double second_derivative(double x) const;

    double kappa() const { return kappa_; }
    const FrobeniusSolution& regular() const { return regular_; }
    std::span<const double> analytic_coeffs() const { return d_; }

private:
    HeunBParams params_;
    FrobeniusSolution regular_;
    double kappa_;
    std::vector<double> d_;
};

// ---------------------------------------------------------------------------
// The gravitational problem psi'' + (c + K/s - (s-b)^2) psi = 0, s in [-b, b].

struct BranchParams {
    HeunBParams first;   // (-K, c-1, 0, 2b, -2)
    HeunBParams second;  // (-K-2b, c-3, 2, 2b, -2), enters as s * HeunB(second, s)
};

BranchParams map_params(double b, double c, double K);

// Residual operators of the transformation chain psi = e^{-s^2/2} chi,
// chi = e^{bs} phi, with derivatives by central differences (step h).
struct TransformRecord {
    double b = 0.0;
    double c = 0.0;
    double K = 0.0;
    double h = 1e-4;

    using Fn = std::function<double(double)>;

    // psi'' + (c + K/s - (s-b)^2) psi; std::invalid_argument at s = 0.
    double residual_psi(const Fn& psi, double s) const;
    // s chi'' - 2 s^2 chi' + (K + (c-1-b^2) s + 2 b s^2) chi
    double residual_chi(const Fn& chi, double s) const;
    // s phi'' + 2 s (b - s) phi' + (K + (c-1) s) phi
    double residual_phi(const Fn& phi, double s) const;

    Fn psi_from_phi(Fn phi) const;  // e^{bs - s^2/2} phi
    Fn chi_from_phi(Fn phi) const;  // e^{bs} phi
};

TransformRecord transform_chain(double b, double c, double K);

// Basis of the phi-equation about s = 0 for one (b, c, K): the (possibly
// logarithmic) branch-1 solution and s * HeunB(branch 2, s).
class GravityBasis {
public:
    GravityBasis(double b, double c, double K, double radius, const SeriesControl& ctl = {});

    double first(double s) const { return first_.value(s); }
    double first_derivative(double s) const { return first_.derivative(s); }
    double second(double s) const { return s * second_factor_.value(s); }
    double second_derivative(double s) const { return second_factor_.value(s) + s * second_factor_.derivative(s); }
    // HeunB(branch 2, s) itself.
    double second_factor(double s) const { return second_factor_.value(s); }

    // psi-basis: e^{bs - s^2/2} times the phi-basis, with derivatives.
    double psi_first(double s) const;
    double psi_first_derivative(double s) const;
    double psi_second(double s) const;
    double psi_second_derivative(double s) const;

    const BranchParams& params() const { return params_; }
    double kappa() const { return first_.kappa(); }

private:
    double b_;
    BranchParams params_;
    LogFrobeniusSolution first_;
    FrobeniusSolution second_factor_;
};

// phi(s) = b1 * branch1(s) + b2 * s * HeunB(branch 2, s)
std::function<double(double)> phi_general(double b, double c, double K, double b1, double b2,
                                          const SeriesControl& ctl = {});

// HeunB_1(-b) HeunB_2(b) + HeunB_1(b) HeunB_2(-b); zero iff a combination
// of the basis vanishes at both s = -b and s = b.
double gravity_determinant(double b, double c, double K, const SeriesControl& ctl = {});

struct ShootingOptions {
    double patch = 0.05;  // half-width of the series patch around s = 0
    OdeTolerance ode{1e-12, 1e-14, 1e-13, 1000000};
    SeriesControl ctl{};
};

// Integrates psi from s = -b (psi = 0, psi' = 1) rightwards, crossing s = 0
// through the local Frobenius basis, and from s = +b leftwards, then returns
// the Wronskian mismatch at s = b/2 normalized by |psiL psiR'| + |psiL' psiR|.
double shooting_oracle(double b, double K, double c, const ShootingOptions& opt = {});

struct GravityEigen {
    EigenRecord record;
    double K = 0.0;
    double residual_shoot = std::numeric_limits<double>::quiet_NaN();
};

struct GravityScanOptions {
    double grid_step = 0.1;
    bool cross_check = false;  // evaluate shooting_oracle at every root
    SeriesControl ctl{};
    ShootingOptions shooting{};
};

std::vector<GravityEigen> eigen_gravity(double b, double K, double c_lo, double c_hi, double tol,
                                        const GravityScanOptions& opt = {});

// Roots in c of shooting_oracle, for oracle comparison.
std::vector<double> shooting_eigenvalues(double b, double K, double c_lo, double c_hi, double tol,
                                         const GravityScanOptions& opt = {});

}  // namespace gravheun
