#include "gravheun/hermite_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gravheun/errors.hpp"

namespace gravheun {

namespace {

double t0_of(const HeunBParams& p) {
    if (!(p.epsilon < 0.0)) throw std::invalid_argument("Hermite expansion: requires epsilon < 0");
    return std::sqrt(-0.5 * p.epsilon);
}

}  // namespace

HermiteExpansion recurrence_coeffs(const HeunBParams& p, double alpha0, double c0, int N) {
    if (N < 0) throw std::invalid_argument("recurrence_coeffs: N must be >= 0");
    if (p.delta == 0.0) throw std::invalid_argument("recurrence_coeffs: requires delta != 0");
    if (!std::isfinite(alpha0)) throw std::invalid_argument("recurrence_coeffs: alpha0 must be finite");

    HermiteExpansion h;
    h.t0 = t0_of(p);
    h.x0 = 0.0;
    h.alpha0 = alpha0;
    h.N = N;
    h.coeffs.assign(static_cast<std::size_t>(N) + 1, 0.0);
    h.coeffs[0] = c0;
    h.dropped_balance = (p.alpha - 2.0 * alpha0) * alpha0 * c0;

    auto c = [&](int n) { return n < 0 ? 0.0 : h.coeffs[static_cast<std::size_t>(n)]; };
    auto a = [&](int n) { return alpha0 + n; };
    for (int n = 2; n <= N; ++n) {
        const double pivot = 2.0 * p.delta * h.t0 * a(n) * a(n - 1);
        if (std::abs(a(n)) < 1e-12 || std::abs(a(n - 1)) < 1e-12) throw RecurrenceBreakdown(n);
        const double rest = (p.alpha - 2.0 * a(n - 1)) * a(n - 1) * c(n - 1) +
                            h.t0 * (p.delta * a(n - 2) - p.q_acc) * c(n - 2) +
                            0.5 * (p.alpha - 2.0 * a(n - 3)) * c(n - 3);
        h.coeffs[static_cast<std::size_t>(n)] = -rest / pivot;
    }
    return h;
}

HermiteExpansion recurrence_coeffs(const HeunBParams& p, double b, double K, double c0, int N) {
    if (!(b > 0.0)) throw std::invalid_argument("recurrence_coeffs: b must be > 0");
    return recurrence_coeffs(p, -K / (2.0 * b), c0, N);
}

ClosedForms closed_form_coeffs(const HeunBParams& p, double alpha0, double c0) {
    const double t0 = t0_of(p);
    const double d = p.delta;
    auto a = [&](int n) { return alpha0 + n; };
    ClosedForms f{};
    f.c3 = -c0 * (p.alpha - 2.0 * alpha0) / (4.0 * d * t0 * a(3) * a(2));
    f.c4 = -f.c3 * (p.alpha - 2.0 * a(3)) / (2.0 * d * t0 * a(4));
    f.c5 = -f.c4 * (p.alpha - 2.0 * a(4)) / (2.0 * d * t0 * a(5)) - f.c3 * (d * a(3) - p.q_acc) / (2.0 * d * a(4) * a(5));
    return f;
}

ExpansionValue expansion_eval_detailed(const HermiteExpansion& h, double x, const SeriesControl& ctl) {
    ExpansionValue out;
    std::vector<double> ratio;
    ratio.reserve(h.coeffs.size());
    const double arg = h.t0 * (x + h.x0);
    for (std::size_t n = 0; n < h.coeffs.size(); ++n) {
        const double cn = h.coeffs[n];
        const double term = cn == 0.0 ? 0.0 : cn * hermite_h(h.alpha0 + static_cast<double>(n), arg, ctl);
        out.value += term;
        ratio.push_back(out.value == 0.0 ? (term == 0.0 ? 0.0 : INFINITY) : std::abs(term / out.value));
    }
    out.tail_ratio = ratio.back();
    if (ratio.size() > 10) {
        out.non_convergent = !(ratio.back() < ratio[ratio.size() - 11]);
    }
    if (out.tail_ratio > 1.0) out.non_convergent = true;
    return out;
}

double expansion_eval(const HermiteExpansion& h, double x, const SeriesControl& ctl) {
    return expansion_eval_detailed(h, x, ctl).value;
}

double expansion_residual(const HermiteExpansion& h, const HeunBParams& p, const std::vector<double>& x_grid,
                          double fd_step, const SeriesControl& ctl) {
    double worst = 0.0;
    bool all_zero = true;
    for (double cn : h.coeffs) all_zero = all_zero && cn == 0.0;
    if (all_zero) return 0.0;
    for (double x : x_grid) {
        const double yp = expansion_eval(h, x + fd_step, ctl);
        const double y0 = expansion_eval(h, x, ctl);
        const double ym = expansion_eval(h, x - fd_step, ctl);
        const double d1 = (yp - ym) / (2.0 * fd_step);
        const double d2 = (yp - 2.0 * y0 + ym) / (fd_step * fd_step);
        worst = std::max(worst, std::abs(heunb_operator(p, x, y0, d1, d2)));
    }
    return worst;
}

double quantized_K(double b, int n, int m) {
    if (!(b > 0.0)) throw std::invalid_argument("quantized_K: b must be > 0");
    if (n < 0) throw std::invalid_argument("quantized_K: n must be >= 0");
    return 2.0 * b * std::abs(static_cast<double>(n) - 2.0 * m);
}

double laguerre_condition_term(double nu, double x, const SeriesControl& ctl) {
    const double weight = rgamma(-0.5 * nu);
    if (weight == 0.0) return 0.0;
    return -std::pow(2.0, 0.5 * (nu + 3.0)) * std::sqrt(std::numbers::pi) * weight *
           kummer_m(0.5 * (1.0 - nu), 1.5, x, ctl).real();
}

double laguerre_condition_term_literal(double nu, double x, const SeriesControl& ctl) {
    return std::pow(2.0, 0.5 * (nu + 1.0)) * gamma(0.5 * (nu + 1.0)) * sinpi(0.5 * nu) *
           laguerre_l(0.5 * (nu - 1.0), 0.5, x, ctl);
}

double laguerre_sum_condition(const HermiteExpansion& h, double b, const SeriesControl& ctl) {
    const double x = h.t0 * h.t0 * b * b;
    double sum = 0.0;
    for (std::size_t n = 0; n < h.coeffs.size(); ++n) {
        if (h.coeffs[n] == 0.0) continue;
        sum += h.coeffs[n] * laguerre_condition_term(h.alpha0 + static_cast<double>(n), x, ctl);
    }
    return sum;
}

BoundarySums boundary_sums(const HermiteExpansion& h, double b, const SeriesControl& ctl) {
    BoundarySums out;
    const double x = h.t0 * b;
    const double w = std::sqrt(2.0) * x;
    const double growth = std::exp(0.5 * x * x);
    for (std::size_t n = 0; n < h.coeffs.size(); ++n) {
        const double cn = h.coeffs[n];
        if (cn == 0.0) continue;
        const double nu = h.alpha0 + static_cast<double>(n);
        out.left += cn * hermite_h(nu, -x, ctl);
        out.right += cn * hermite_h(nu, x, ctl);
        const double weight = std::pow(2.0, 0.5 * nu);
        out.left_via_pcf += cn * weight * pcf_d(nu, -w, ctl).real();
        out.right_via_pcf += cn * weight * pcf_d(nu, w, ctl).real();
    }
    out.left_via_pcf *= growth;
    out.right_via_pcf *= growth;
    return out;
}

std::pair<double, double> reflection_decomposition(const HermiteExpansion& h, double b, const SeriesControl& ctl) {
    const double w = std::sqrt(2.0) * h.t0 * b;
    double lhs = 0.0;
    double sum = 0.0;
    for (std::size_t n = 0; n < h.coeffs.size(); ++n) {
        const double cn = h.coeffs[n];
        if (cn == 0.0) continue;
        const double nu = h.alpha0 + static_cast<double>(n);
        lhs += cn * (pcf_d(nu, -w, ctl).real() - pcf_d(nu, w, ctl).real());
        sum += cn * laguerre_condition_term(nu, 0.5 * w * w, ctl);
    }
    return {lhs, -w * std::exp(-0.25 * w * w) * sum};
}

}  // namespace gravheun
