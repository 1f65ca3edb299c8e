#pragma once

#include <utility>
#include <vector>

#include "gravheun/heun_gravity.hpp"

namespace gravheun {

// y(x) = sum_n c_n H_{alpha0 + n}(t0 (x + x0)) for the HeunB equation with
// epsilon < 0, t0 = sqrt(-epsilon/2), x0 = 0. The coefficients follow the
// four-term recurrence
//   2 delta t0 a_n a_{n-1} c_n + (alpha - 2 a_{n-1}) a_{n-1} c_{n-1}
//     + t0 (delta a_{n-2} - q) c_{n-2} + (alpha - 2 a_{n-3}) c_{n-3} / 2 = 0,
// a_n = alpha0 + n, with c_1 forced to zero (its equation is balanced by the
// discarded negative-index tail) and c_n, n >= 2, solved forward.
struct HermiteExpansion {
    double t0 = 1.0;
    double x0 = 0.0;
    double alpha0 = 0.0;
    std::vector<double> coeffs;  // c_0 .. c_N
    int N = 0;
    // Equation n = 1 evaluated with c_1 = 0 and c_{-1} = c_{-2} = 0, i.e.
    // (alpha - 2 alpha0) alpha0 c_0: what the negative-index tail must absorb.
    double dropped_balance = 0.0;

    double alpha_n(int n) const { return alpha0 + n; }
};

// Builds the expansion for an explicit alpha0. Throws RecurrenceBreakdown
// when a_n a_{n-1} = 0 for some 2 <= n <= N.
HermiteExpansion recurrence_coeffs(const HeunBParams& p, double alpha0, double c0, int N);

// The gravitational choice alpha0 = -K/(2b), which makes delta alpha0 - q vanish.
HermiteExpansion recurrence_coeffs(const HeunBParams& p, double b, double K, double c0, int N);

// The closed forms for c_3, c_4, c_5 written out from the recurrence with
// c_1 = c_2 = 0 (t0 = 1 folded in where the forms allow).
struct ClosedForms {
    double c3, c4, c5;
};
ClosedForms closed_form_coeffs(const HeunBParams& p, double alpha0, double c0);

struct ExpansionValue {
    double value = 0.0;
    bool non_convergent = false;
    double tail_ratio = 0.0;  // |c_N H_{a_N}| / |partial sum|
};

// Sum truncated at h.N, with a tail monitor: if |c_n u_n| / |partial sum| is
// not decreasing over the last 10 terms the result is flagged non_convergent.
ExpansionValue expansion_eval_detailed(const HermiteExpansion& h, double x, const SeriesControl& ctl = {});
double expansion_eval(const HermiteExpansion& h, double x, const SeriesControl& ctl = {});

// max |x y'' + (gamma + delta x + eps x^2) y' + (alpha x - q) y| over the grid,
// with y the truncated expansion and derivatives by central differences.
double expansion_residual(const HermiteExpansion& h, const HeunBParams& p, const std::vector<double>& x_grid,
                          double fd_step = 1e-3, const SeriesControl& ctl = {});

// 2b |n - 2m|
double quantized_K(double b, int n, int m);

// One term 2^{(nu+1)/2} Gamma((nu+1)/2) sin(pi nu/2) L_{(nu-1)/2}^{1/2}(x), in the
// pole-free form -2^{(nu+3)/2} sqrt(pi) M((1-nu)/2; 3/2; x) / Gamma(-nu/2).
double laguerre_condition_term(double nu, double x, const SeriesControl& ctl = {});
// The same term as the literal product (poles propagate as errors).
double laguerre_condition_term_literal(double nu, double x, const SeriesControl& ctl = {});

// sum_n c_n * term(alpha_n, t0^2 b^2)
double laguerre_sum_condition(const HermiteExpansion& h, double b, const SeriesControl& ctl = {});

struct BoundarySums {
    double left = 0.0;   // sum c_n H_{a_n}(-t0 b)
    double right = 0.0;  // sum c_n H_{a_n}(+t0 b)
    // e^{w^2/4} sum c_n 2^{a_n/2} D_{a_n}(-+w), w = sqrt2 t0 b
    double left_via_pcf = 0.0;
    double right_via_pcf = 0.0;
};
BoundarySums boundary_sums(const HermiteExpansion& h, double b, const SeriesControl& ctl = {});

// Both sides of the termwise reflection: sum c_n D_{a_n}(-w) - sum c_n D_{a_n}(w)
// and -w e^{-w^2/4} sum c_n term(a_n, w^2/2).
std::pair<double, double> reflection_decomposition(const HermiteExpansion& h, double b,
                                                   const SeriesControl& ctl = {});

}  // namespace gravheun
