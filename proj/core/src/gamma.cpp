#include <array>
#include <cmath>
#include <numbers>

#include "gravheun/errors.hpp"
#include "gravheun/specfun.hpp"

namespace gravheun {

namespace {

// Godfrey's g = 607/128 Lanczos coefficients.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,    -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,  .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5,
};

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

// Gamma(z) for Re z >= 1/2.
template <typename T>
T lanczos_gamma(T z) {
    const T x = z - 1.0;
    T series = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (x + static_cast<double>(k));
    const T t = x + kLanczosG + 0.5;
    using std::exp;
    using std::log;
    return kSqrt2Pi * series * exp((x + 0.5) * log(t) - t);
}

}  // namespace

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

bool is_nonpositive_integer(cplx z) { return z.imag() == 0.0 && is_nonpositive_integer(z.real()); }

double sinpi(double x) {
    double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
    if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

double cospi(double x) {
    double r = std::fmod(std::abs(x), 2.0);
    if (r > 1.0) r = 2.0 - r;  // r in [0, 1]
    if (r == 0.5) return 0.0;
    if (r < 0.25) return std::cos(std::numbers::pi * r);
    if (r > 0.75) return -std::cos(std::numbers::pi * (1.0 - r));
    return std::sin(std::numbers::pi * (0.5 - r));
}

cplx sinpi(cplx z) {
    const double y = std::numbers::pi * z.imag();
    return {sinpi(z.real()) * std::cosh(y), cospi(z.real()) * std::sinh(y)};
}

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at non-positive integer");
    if (z.real() < 0.5) return std::numbers::pi / (sinpi(z) * lanczos_gamma(1.0 - z));
    return lanczos_gamma(z);
}

double gamma(double x) {
    if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at non-positive integer");
    if (x < 0.5) return std::numbers::pi / (sinpi(x) * lanczos_gamma(1.0 - x));
    return lanczos_gamma(x);
}

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return sinpi(z) * lanczos_gamma(1.0 - z) / std::numbers::pi;
    return 1.0 / lanczos_gamma(z);
}

double rgamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x < 0.5) return sinpi(x) * lanczos_gamma(1.0 - x) / std::numbers::pi;
    return 1.0 / lanczos_gamma(x);
}

}  // namespace gravheun
