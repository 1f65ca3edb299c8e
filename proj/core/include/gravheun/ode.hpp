#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "gravheun/errors.hpp"

namespace gravheun {

template <std::size_t N>
using OdeState = std::array<double, N>;

struct OdeTolerance {
    double rtol = 1e-12;
    double atol = 1e-14;
    double h_min = 1e-14;   // relative to the span length
    int max_steps = 1000000;
};

struct OdeStats {
    int accepted = 0;
    int rejected = 0;
};

// Adaptive Dormand-Prince 5(4) integration of y' = f(x, y) from x0 to x1
// (either direction). f has signature OdeState<N>(double, const OdeState<N>&).
template <std::size_t N, typename F>
OdeState<N> integrate_dopri5(F&& f, double x0, OdeState<N> y, double x1, const OdeTolerance& tol = {},
                             OdeStats* stats = nullptr) {
    using S = OdeState<N>;
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // 5th minus embedded 4th order weights
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                     e6 = 22.0 / 525, e7 = -1.0 / 40;

    OdeStats local;
    OdeStats& st = stats ? *stats : local;
    const double span = x1 - x0;
    if (span == 0.0) return y;
    const double dir = span > 0 ? 1.0 : -1.0;
    const double h_floor = tol.h_min * std::abs(span);
    double h = dir * std::min(std::abs(span), 1e-3 * std::abs(span) + 1e-6);
    double x = x0;

    auto axpy = [](const S& base, std::initializer_list<std::pair<double, const S*>> terms, double hh) {
        S out = base;
        for (std::size_t i = 0; i < N; ++i) {
            double acc = 0.0;
            for (const auto& [w, k] : terms) acc += w * (*k)[i];
            out[i] += hh * acc;
        }
        return out;
    };

    S k1 = f(x, y);
    for (int step = 0; step < tol.max_steps; ++step) {
        if ((x + h - x1) * dir > 0.0) h = x1 - x;
        const S k2 = f(x + c2 * h, axpy(y, {{a21, &k1}}, h));
        const S k3 = f(x + c3 * h, axpy(y, {{a31, &k1}, {a32, &k2}}, h));
        const S k4 = f(x + c4 * h, axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
        const S k5 = f(x + c5 * h, axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
        const S k6 = f(x + h, axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h));
        const S y_new = axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
        const S k7 = f(x + h, y_new);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = tol.atol + tol.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            err = std::max(err, std::abs(e) / sc);
        }

        if (err <= 1.0 || std::abs(h) <= h_floor) {
            if (err > 1.0) throw StepUnderflow("integrate_dopri5: step size underflow", x);
            x += h;
            y = y_new;
            k1 = k7;  // first-same-as-last
            ++st.accepted;
            if ((x - x1) * dir >= 0.0) return y;
        } else {
            ++st.rejected;
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
        if (std::abs(h) < h_floor) h = dir * h_floor;
    }
    throw StepUnderflow("integrate_dopri5: step budget exhausted", x);
}

}  // namespace gravheun
