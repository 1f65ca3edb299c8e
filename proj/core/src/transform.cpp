#include <cmath>
#include <stdexcept>

#include "gravheun/heun_gravity.hpp"

namespace gravheun {

namespace {

struct Derivs {
    double f, d1, d2;
};

Derivs central(const TransformRecord::Fn& f, double s, double h) {
    const double fp = f(s + h);
    const double f0 = f(s);
    const double fm = f(s - h);
    return {f0, (fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)};
}

}  // namespace

TransformRecord transform_chain(double b, double c, double K) {
    if (!std::isfinite(b) || !std::isfinite(c) || !std::isfinite(K)) {
        throw std::invalid_argument("transform_chain: parameters must be finite");
    }
    return TransformRecord{b, c, K};
}

double TransformRecord::residual_psi(const Fn& psi, double s) const {
    if (s == 0.0) throw std::invalid_argument("residual_psi: the K/s term is singular at s = 0");
    const auto d = central(psi, s, h);
    return d.d2 + (c + K / s - (s - b) * (s - b)) * d.f;
}

double TransformRecord::residual_chi(const Fn& chi, double s) const {
    const auto d = central(chi, s, h);
    return s * d.d2 - 2.0 * s * s * d.d1 + (K + (c - 1.0 - b * b) * s + 2.0 * b * s * s) * d.f;
}

double TransformRecord::residual_phi(const Fn& phi, double s) const {
    const auto d = central(phi, s, h);
    return s * d.d2 + 2.0 * s * (b - s) * d.d1 + (K + (c - 1.0) * s) * d.f;
}

TransformRecord::Fn TransformRecord::psi_from_phi(Fn phi) const {
    const double bb = b;
    return [bb, phi = std::move(phi)](double s) { return std::exp(bb * s - 0.5 * s * s) * phi(s); };
}

TransformRecord::Fn TransformRecord::chi_from_phi(Fn phi) const {
    const double bb = b;
    return [bb, phi = std::move(phi)](double s) { return std::exp(bb * s) * phi(s); };
}

}  // namespace gravheun
