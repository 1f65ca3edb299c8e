#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gravheun/errors.hpp"
#include "gravheun/heun_gravity.hpp"

namespace gravheun {

namespace {

void check_sigma(const HeunBParams& p, int sigma) {
    if (sigma != 0 && sigma != 1) throw std::invalid_argument("HeunB Frobenius: sigma must be 0 or 1");
    if (sigma == 1 && p.gamma != 0.0) {
        throw std::invalid_argument("HeunB Frobenius: sigma = 1 is an indicial root only for gamma = 0");
    }
}

// Tracks |a_k| R^k against the largest term seen, in log space so large
// radii do not overflow.
class TailMonitor {
public:
    TailMonitor(double radius, double tol) : log_r_(radius > 0 ? std::log(radius) : -INFINITY), tol_(tol) {}

    // Returns true once `run` consecutive terms have been negligible.
    bool push(int k, double coeff, int run = 4) {
        double log_term = -INFINITY;
        if (coeff != 0.0 && log_r_ != -INFINITY) log_term = std::log(std::abs(coeff)) + k * log_r_;
        if (k == 0 && coeff != 0.0) log_term = std::log(std::abs(coeff));
        log_max_ = std::max(log_max_, log_term);
        const bool small = log_term <= std::log(tol_) + log_max_;
        small_run_ = small ? small_run_ + 1 : 0;
        return small_run_ >= run && k > run;
    }

private:
    double log_r_;
    double tol_;
    double log_max_ = -INFINITY;
    int small_run_ = 0;
};

struct StepResult {
    double value;
    bool resonant;
    double obstruction;
};

// One step of the three-term recurrence; a_{k-1}, a_{k-2} given.
StepResult recurrence_step(const HeunBParams& p, int sigma, int k, double a1, double a2) {
    const double ks = k + sigma;
    const double denom = ks * (ks - 1.0 + p.gamma);
    const double t1 = (p.delta * (ks - 1.0) - p.q_acc) * a1;
    const double t2 = (p.epsilon * (ks - 2.0) + p.alpha) * a2;
    const double rest = t1 + t2;
    if (denom == 0.0) {
        const double scale = std::abs(t1) + std::abs(t2);
        const bool consistent = std::abs(rest) <= 1e-13 * scale || rest == 0.0;
        return {0.0, true, consistent ? 0.0 : rest};
    }
    return {-rest / denom, false, 0.0};
}

double power_sum(std::span<const double> a, double x, int shift, int derivative) {
    // sum_k a_k * d^derivative/dx^derivative x^{k + shift}
    double out = 0.0;
    for (std::size_t k = a.size(); k-- > 0;) {
        const double e = static_cast<double>(k) + shift;
        double factor = 1.0;
        for (int d = 0; d < derivative; ++d) factor *= (e - d);
        if (factor == 0.0 || a[k] == 0.0) continue;
        out += a[k] * factor * std::pow(x, e - derivative);
    }
    return out;
}

}  // namespace

double heunb_operator(const HeunBParams& p, double x, double y, double dy, double d2y) {
    return x * d2y + (p.gamma + p.delta * x + p.epsilon * x * x) * dy + (p.alpha * x - p.q_acc) * y;
}

double FrobeniusSolution::resonance_obstruction(const HeunBParams& p) {
    if (!(p.gamma <= 0.0 && p.gamma == std::floor(p.gamma))) return 0.0;
    const int k_res = static_cast<int>(1.0 - p.gamma);
    double a1 = 1.0, a2 = 0.0;
    for (int k = 1; k <= k_res; ++k) {
        const auto st = recurrence_step(p, 0, k, a1, a2);
        if (st.resonant) return st.obstruction;
        a2 = a1;
        a1 = st.value;
    }
    return 0.0;
}

FrobeniusSolution::FrobeniusSolution(const HeunBParams& p, int sigma, double radius, const SeriesControl& ctl)
    : params_(p), sigma_(sigma) {
    check_sigma(p, sigma);
    ctl.validate();
    if (!(radius >= 0.0) || !std::isfinite(radius)) throw std::invalid_argument("FrobeniusSolution: bad radius");
    coeffs_.push_back(1.0);
    TailMonitor tail(radius, ctl.tol);
    tail.push(0, 1.0);
    for (int k = 1;; ++k) {
        if (k >= ctl.max_terms) throw ConvergenceError("HeunB Frobenius series", ctl.max_terms);
        const double a2 = k >= 2 ? coeffs_[static_cast<std::size_t>(k - 2)] : 0.0;
        const auto st = recurrence_step(p, sigma, k, coeffs_.back(), a2);
        if (st.resonant && st.obstruction != 0.0) throw ResonanceError(k, st.obstruction);
        coeffs_.push_back(st.value);
        if (tail.push(k, st.value)) break;
    }
}

FrobeniusSolution FrobeniusSolution::truncated(const HeunBParams& p, int sigma, int n_terms) {
    check_sigma(p, sigma);
    if (n_terms < 1) throw std::invalid_argument("FrobeniusSolution::truncated: n_terms must be >= 1");
    std::vector<double> a{1.0};
    for (int k = 1; k < n_terms; ++k) {
        const double a2 = k >= 2 ? a[static_cast<std::size_t>(k - 2)] : 0.0;
        const auto st = recurrence_step(p, sigma, k, a.back(), a2);
        if (st.resonant && st.obstruction != 0.0) throw ResonanceError(k, st.obstruction);
        a.push_back(st.value);
    }
    return FrobeniusSolution(p, sigma, std::move(a));
}

double FrobeniusSolution::value(double x) const {
    double sum = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) sum = sum * x + coeffs_[k];
    return sigma_ == 1 ? x * sum : sum;
}

double FrobeniusSolution::derivative(double x) const { return power_sum(coeffs_, x, sigma_, 1); }

double FrobeniusSolution::second_derivative(double x) const { return power_sum(coeffs_, x, sigma_, 2); }

HeunBValue heunb_eval_detailed(const HeunBParams& p, int sigma, double x, const SeriesControl& ctl) {
    if (!std::isfinite(x)) throw std::invalid_argument("heunb_eval: x must be finite");
    const FrobeniusSolution sol(p, sigma, std::abs(x), ctl);
    return {sol.value(x), sol.n_terms()};
}

double heunb_eval(const HeunBParams& p, int sigma, double x, const SeriesControl& ctl) {
    return heunb_eval_detailed(p, sigma, x, ctl).value;
}

LogFrobeniusSolution::LogFrobeniusSolution(const HeunBParams& p, double radius, const SeriesControl& ctl)
    : params_(p), regular_(p, 1, std::vector<double>{1.0}), kappa_(p.q_acc) {
    if (p.gamma != 0.0) throw std::invalid_argument("LogFrobeniusSolution: requires gamma = 0");
    ctl.validate();
    if (!(radius >= 0.0) || !std::isfinite(radius)) throw std::invalid_argument("LogFrobeniusSolution: bad radius");

    std::vector<double> a{1.0};
    d_ = {1.0, 0.0};
    auto at = [](const std::vector<double>& v, int i) {
        return i >= 0 && i < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i)] : 0.0;
    };
    TailMonitor tail_a(radius, ctl.tol);
    TailMonitor tail_d(radius, ctl.tol);
    tail_a.push(0, 1.0);
    tail_d.push(0, 1.0);
    tail_d.push(1, 0.0);
    bool a_done = false;
    bool d_done = false;
    for (int m = 1; !(a_done && d_done); ++m) {
        if (m >= ctl.max_terms) throw ConvergenceError("HeunB logarithmic Frobenius series", ctl.max_terms);
        // regular solution, exponent 1: (m+1) m a_m = -[(delta m - q) a_{m-1} + (eps (m-1) + alpha) a_{m-2}]
        a.push_back(recurrence_step(p, 1, m, a.back(), at(a, m - 2)).value);
        a_done = tail_a.push(m + 1, a.back()) || a_done;

        const double forcing =
            kappa_ * ((2.0 * m + 1.0) * at(a, m) + p.delta * at(a, m - 1) + p.epsilon * at(a, m - 2));
        const double next = (-forcing - (p.delta * m - p.q_acc) * at(d_, m) -
                             (p.epsilon * (m - 1.0) + p.alpha) * at(d_, m - 1)) /
                            (m * (m + 1.0));
        d_.push_back(next);
        d_done = tail_d.push(m + 1, next);
    }
    regular_ = FrobeniusSolution(p, 1, std::move(a));
}

double LogFrobeniusSolution::value(double x) const {
    double g = 0.0;
    for (std::size_t k = d_.size(); k-- > 0;) g = g * x + d_[k];
    if (kappa_ == 0.0 || x == 0.0) return g;
    return kappa_ * regular_.value(x) * std::log(std::abs(x)) + g;
}

double LogFrobeniusSolution::derivative(double x) const {
    const double g1 = power_sum(d_, x, 0, 1);
    if (kappa_ == 0.0) return g1;
    if (x == 0.0) return kappa_ > 0 ? -INFINITY : INFINITY;
    // Y/x = sum a_j x^j
    const double y_over_x = power_sum(regular_.coeffs(), x, 0, 0);
    return kappa_ * (regular_.derivative(x) * std::log(std::abs(x)) + y_over_x) + g1;
}

double LogFrobeniusSolution::second_derivative(double x) const {
    const double g2 = power_sum(d_, x, 0, 2);
    if (kappa_ == 0.0) return g2;
    if (x == 0.0) return NAN;
    const double y = regular_.value(x);
    const double dy = regular_.derivative(x);
    const double d2y = regular_.second_derivative(x);
    return kappa_ * (d2y * std::log(std::abs(x)) + 2.0 * dy / x - y / (x * x)) + g2;
}

}  // namespace gravheun
