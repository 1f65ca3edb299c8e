#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace gravheun {

using cplx = std::complex<double>;

// Truncation control shared by all series evaluations.
struct SeriesControl {
    double tol = 1e-13;
    int max_terms = 10000;

    // Throws std::invalid_argument unless tol > 0 and max_terms >= 10.
    void validate() const;
};

// ---------------------------------------------------------------------------
// Gamma family. Lanczos (g = 607/128, 15 terms) with reflection for Re z < 1/2.

cplx gamma(cplx z);                   // PoleError at z = 0, -1, -2, ...
double gamma(double x);               // PoleError at x = 0, -1, -2, ...
cplx rgamma(cplx z);                  // 1/Gamma(z); exactly 0 at the poles
double rgamma(double x);

bool is_nonpositive_integer(cplx z);
bool is_nonpositive_integer(double x);

// sin(pi x), cos(pi x) with exact zeros at the integers / half-integers.
double sinpi(double x);
double cospi(double x);
cplx sinpi(cplx z);

// ---------------------------------------------------------------------------
// Confluent hypergeometric and parabolic-cylinder family.

// Kummer M(a; b; z) = sum (a)_n z^n / ((b)_n n!). Uses M(a;b;z) = e^z M(b-a;b;-z)
// when Re z < 0 and the direct series would not terminate.
cplx kummer_m(cplx a, cplx b, cplx z, const SeriesControl& ctl = {});

// Plain Taylor sum with no transformation, used as an independent path in tests.
cplx kummer_m_direct(cplx a, cplx b, cplx z, const SeriesControl& ctl = {});

// Parabolic cylinder (Whittaker) D_nu(z) from the two-Kummer representation.
cplx pcf_d(cplx nu, cplx z, const SeriesControl& ctl = {});

// Hermite function of real order: H_nu(x) = 2^nu [ sqrt(pi)/Gamma((1-nu)/2) M(-nu/2;1/2;x^2)
//   - 2 sqrt(pi) x / Gamma(-nu/2) M((1-nu)/2;3/2;x^2) ], equal to 2^{nu/2} e^{x^2/2} D_nu(sqrt2 x).
double hermite_h(double nu, double x, const SeriesControl& ctl = {});

// Generalized Laguerre function L_nu^lam(x) = Gamma(nu+lam+1)/(Gamma(nu+1)Gamma(lam+1)) M(-nu; lam+1; x).
// std::invalid_argument for lam <= -1, PoleError when nu + lam + 1 is a pole.
double laguerre_l(double nu, double lam, double x, const SeriesControl& ctl = {});

// ---------------------------------------------------------------------------
// Identity battery.

struct IdentityResult {
    std::string name;        // "connection", "gamma_ratio", ...
    std::string statement;   // human-readable form of the identity
    double max_residual = 0.0;
    double worst_nu = 0.0;
    double worst_z = 0.0;
    bool gated = true;       // false for diagnostics that are reported but not required
};

struct IdentityReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<IdentityResult> results;

    const IdentityResult* find(const std::string& name) const;
    // Largest residual over the gated identities.
    double max_gated_residual() const;
};

enum class Identity {
    connection,          // D_rho(iz) in terms of D_nu(+-z), rho = -nu-1
    connection_shifted_phase,  // the connection with an extra e^{-i pi nu} on D_nu(-z) (diagnostic)
    gamma_ratio,         // D_rho(0)/D_nu(0) = sqrt(2/pi) Gamma(1+rho) cos(pi rho/2)
    phase,               // 2cos(pi rho/2) - i e^{-i pi (rho+1)/2} = e^{i pi rho/2}
    reflection_laguerre, // D_nu(-z) via the generalized Laguerre function
    reflection_kummer,   // D_nu(-z) via Kummer M((1-nu)/2; 3/2; z^2/2)
    hermite_pcf,         // H_nu(z) = 2^{nu/2} e^{z^2/2} D_nu(sqrt2 z)
};

// Short stable name, identical to the enumerator spelling.
std::string identity_name(Identity id);

// Residual of one identity at (nu, z); rho = -nu - 1.
double identity_residual(Identity id, double nu, double z, const SeriesControl& ctl = {});

// Residual scaling used by the battery: absolute when |expected| < 1, relative otherwise.
double mixed_residual(cplx got, cplx expected);

// Draws `trials` pairs nu in (-3,3) \ Z (at least 1e-3 from an integer) and
// z in (-3,3), and evaluates the connection, gamma-ratio, phase, reflection and
// Hermite identities. Deterministic for a given seed.
IdentityReport identity_battery(std::uint64_t seed, int trials, const SeriesControl& ctl = {});

}  // namespace gravheun
