#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gravheun/specfun.hpp"

namespace gravheun {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

constexpr std::array kAllIdentities = {
    Identity::connection,          Identity::gamma_ratio,       Identity::phase,
    Identity::reflection_laguerre, Identity::reflection_kummer, Identity::hermite_pcf,
    Identity::connection_shifted_phase,
};

std::string statement(Identity id) {
    switch (id) {
        case Identity::connection:
            return "D_rho(iz) = Gamma(-nu)/(i sqrt(2pi)) (e^{-i pi nu/2} D_nu(-z) - e^{i pi nu/2} D_nu(z))";
        case Identity::connection_shifted_phase:
            return "D_rho(iz) = Gamma(-nu)/(i sqrt(2pi)) e^{-i pi nu/2} (e^{-i pi nu} D_nu(-z) - D_nu(z))";
        case Identity::gamma_ratio:
            return "D_rho(0)/D_nu(0) = 2^{rho+1/2} Gamma((1-nu)/2)/Gamma((1-rho)/2) = sqrt(2/pi) Gamma(1+rho) cos(pi rho/2)";
        case Identity::phase:
            return "2 cos(pi rho/2) - i e^{-i pi (rho+1)/2} = e^{i pi rho/2}";
        case Identity::reflection_laguerre:
            return "D_nu(-z) = D_nu(z) - 2^{(nu+1)/2} z e^{-z^2/4} Gamma((nu+1)/2) sin(pi nu/2) L_{(nu-1)/2}^{1/2}(z^2/2)";
        case Identity::reflection_kummer:
            return "D_nu(-z) = D_nu(z) - 2^{(nu+1)/2} nu Gamma(nu/2) sin(pi nu/2)/sqrt(pi) z e^{-z^2/4} M((1-nu)/2;3/2;z^2/2)";
        case Identity::hermite_pcf:
            return "H_nu(z) = 2^{nu/2} e^{z^2/2} D_nu(sqrt(2) z)";
    }
    return {};
}

// Uniform double in [0, 1) from the top 53 bits; std::uniform_real_distribution
// is not portable across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::connection: return "connection";
        case Identity::connection_shifted_phase: return "connection_shifted_phase";
        case Identity::gamma_ratio: return "gamma_ratio";
        case Identity::phase: return "phase";
        case Identity::reflection_laguerre: return "reflection_laguerre";
        case Identity::reflection_kummer: return "reflection_kummer";
        case Identity::hermite_pcf: return "hermite_pcf";
    }
    return "unknown";
}

double mixed_residual(cplx got, cplx expected) {
    const double scale = std::max(1.0, std::abs(expected));
    return std::abs(got - expected) / scale;
}

double identity_residual(Identity id, double nu, double z, const SeriesControl& ctl) {
    const double rho = -nu - 1.0;
    switch (id) {
        case Identity::connection:
        case Identity::connection_shifted_phase: {
            const cplx lhs = pcf_d(rho, kI * z, ctl);
            const cplx pref = gamma(-nu) / (kI * std::sqrt(2.0 * kPi));
            const cplx d_minus = pcf_d(nu, -z, ctl);
            const cplx d_plus = pcf_d(nu, z, ctl);
            const cplx rhs =
                id == Identity::connection
                    ? pref * (std::exp(-kI * kPi * nu / 2.0) * d_minus - std::exp(kI * kPi * nu / 2.0) * d_plus)
                    : pref * std::exp(-kI * kPi * nu / 2.0) * (std::exp(-kI * kPi * nu) * d_minus - d_plus);
            return mixed_residual(lhs, rhs);
        }
        case Identity::gamma_ratio: {
            const cplx ratio = pcf_d(rho, 0.0, ctl) / pcf_d(nu, 0.0, ctl);
            const double via_gamma = std::pow(2.0, rho + 0.5) * gamma(0.5 * (1.0 - nu)) * rgamma(0.5 * (1.0 - rho));
            const double via_cos = std::sqrt(2.0 / kPi) * gamma(1.0 + rho) * cospi(0.5 * rho);
            return std::max(mixed_residual(ratio, via_cos), mixed_residual(via_gamma, via_cos));
        }
        case Identity::phase: {
            const cplx lhs = 2.0 * cospi(0.5 * rho) - kI * std::exp(-kI * kPi * (rho + 1.0) / 2.0);
            return mixed_residual(lhs, std::exp(kI * kPi * rho / 2.0));
        }
        case Identity::reflection_laguerre: {
            const double lhs = pcf_d(nu, -z, ctl).real();
            const double rhs = pcf_d(nu, z, ctl).real() - std::pow(2.0, 0.5 * (nu + 1.0)) * z *
                                                              std::exp(-0.25 * z * z) * gamma(0.5 * (nu + 1.0)) *
                                                              sinpi(0.5 * nu) *
                                                              laguerre_l(0.5 * (nu - 1.0), 0.5, 0.5 * z * z, ctl);
            return mixed_residual(lhs, rhs);
        }
        case Identity::reflection_kummer: {
            const double lhs = pcf_d(nu, -z, ctl).real();
            const double rhs = pcf_d(nu, z, ctl).real() -
                               std::pow(2.0, 0.5 * (nu + 1.0)) * nu * gamma(0.5 * nu) * sinpi(0.5 * nu) /
                                   std::sqrt(kPi) * z * std::exp(-0.25 * z * z) *
                                   kummer_m(0.5 * (1.0 - nu), 1.5, 0.5 * z * z, ctl).real();
            return mixed_residual(lhs, rhs);
        }
        case Identity::hermite_pcf: {
            const double lhs = hermite_h(nu, z, ctl);
            const double rhs =
                std::pow(2.0, 0.5 * nu) * std::exp(0.5 * z * z) * pcf_d(nu, std::sqrt(2.0) * z, ctl).real();
            return mixed_residual(lhs, rhs);
        }
    }
    throw std::invalid_argument("identity_residual: unknown identity");
}

const IdentityResult* IdentityReport::find(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

double IdentityReport::max_gated_residual() const {
    double worst = 0.0;
    for (const auto& r : results)
        if (r.gated) worst = std::max(worst, r.max_residual);
    return worst;
}

IdentityReport identity_battery(std::uint64_t seed, int trials, const SeriesControl& ctl) {
    if (trials < 1) throw std::invalid_argument("identity_battery: trials must be >= 1");
    IdentityReport report;
    report.seed = seed;
    report.trials = trials;
    for (Identity id : kAllIdentities) {
        IdentityResult r;
        r.name = identity_name(id);
        r.statement = statement(id);
        r.gated = id != Identity::connection_shifted_phase;
        report.results.push_back(r);
    }

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        double nu = 0.0;
        do {
            nu = -3.0 + 6.0 * unit(rng);
        } while (std::abs(nu - std::round(nu)) < 1e-3);
        const double z = -3.0 + 6.0 * unit(rng);
        for (std::size_t i = 0; i < kAllIdentities.size(); ++i) {
            const double res = identity_residual(kAllIdentities[i], nu, z, ctl);
            auto& r = report.results[i];
            if (!(res <= r.max_residual)) {  // also captures NaN
                r.max_residual = std::isnan(res) ? INFINITY : res;
                r.worst_nu = nu;
                r.worst_z = z;
            }
        }
    }
    return report;
}

}  // namespace gravheun
