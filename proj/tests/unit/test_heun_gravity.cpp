#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gravheun/errors.hpp"
#include "gravheun/heun_gravity.hpp"
#include "gravheun/ho_spectrum.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace gravheun;
using testutil::uniform;

namespace {

template <typename Sol>
double operator_residual(const HeunBParams& p, const Sol& y, double x) {
    const double r = heunb_operator(p, x, y.value(x), y.derivative(x), y.second_derivative(x));
    const double scale = std::abs(x * y.second_derivative(x)) + std::abs(y.derivative(x)) + std::abs(y.value(x)) + 1e-300;
    return std::abs(r) / scale;
}

HeunBParams random_params(std::mt19937_64& rng, double gamma) {
    return {uniform(rng, -2.0, 2.0), uniform(rng, -3.0, 3.0), gamma, uniform(rng, 0.0, 4.0), -2.0};
}

}  // namespace

TEST_CASE("branch parameters") {
    const auto bp = map_params(1.0, 4.0, 0.5);
    CHECK(bp.first == HeunBParams{-0.5, 3.0, 0.0, 2.0, -2.0});
    CHECK(bp.second == HeunBParams{-2.5, 1.0, 2.0, 2.0, -2.0});
}

TEST_CASE("series values at simple points") {
    const HeunBParams trivial{0.0, 0.0, 0.0, 2.0, -2.0};
    CHECK(heunb_eval(trivial, 0, 0.0) == 1.0);
    CHECK(heunb_eval(trivial, 0, 3.7) == 1.0);
    CHECK(heunb_eval(trivial, 0, -1.2) == 1.0);
    const HeunBParams p{0.4, 1.3, 0.7, 1.0, -2.0};
    CHECK(heunb_eval(p, 0, 0.0) == 1.0);
    CHECK(heunb_eval(HeunBParams{0.4, 1.3, 0.0, 1.0, -2.0}, 1, 0.0) == 0.0);
    CHECK_THROWS_AS(heunb_eval(p, 0, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(heunb_eval(p, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(heunb_eval(p, 2, 0.5), std::invalid_argument);
}

TEST_CASE("obstructed series throws with the leftover value") {
    const HeunBParams p{-1.0, 3.0, 0.0, 2.0, -2.0};
    CHECK(FrobeniusSolution::resonance_obstruction(p) == 1.0);
    CHECK_THROWS_AS(heunb_eval(p, 0, 0.5), ResonanceError);
    try {
        FrobeniusSolution(p, 0, 1.0);
        FAIL("expected resonance");
    } catch (const ResonanceError& e) {
        CHECK(e.index() == 1);
        CHECK(e.obstruction() == 1.0);
    }
    // q = 0 is consistent
    CHECK(FrobeniusSolution::resonance_obstruction(HeunBParams{0.0, 3.0, 0.0, 2.0, -2.0}) == 0.0);
    CHECK_NOTHROW(FrobeniusSolution(HeunBParams{0.0, 3.0, 0.0, 2.0, -2.0}, 0, 1.0));
}

TEST_CASE("series solve the equation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const double gamma = trial % 2 == 0 ? 0.0 : uniform(rng, 0.3, 2.5);
        const auto p = random_params(rng, gamma);
        const int sigma = gamma == 0.0 ? 1 : 0;
        const FrobeniusSolution y(p, sigma, 1.5);
        for (double x : {-1.4, -0.6, 0.2, 0.9, 1.5}) {
            CAPTURE(trial);
            CAPTURE(x);
            CHECK(operator_residual(p, y, x) < 1e-8);
        }
        CHECK(y.value(0.0) == (sigma == 0 ? 1.0 : 0.0));
        CHECK_FALSE(y.log_term_needed());
    }
    CHECK_THROWS_AS(FrobeniusSolution(HeunBParams{}, 0, -1.0), std::invalid_argument);
}

TEST_CASE("truncation error shrinks with more terms") {
    const HeunBParams p{0.6, 2.1, 1.3, 2.0, -2.0};
    const double x = 0.8;
    const double full = FrobeniusSolution(p, 0, 1.0).value(x);
    double last = 1e300;
    for (int n : {4, 8, 16, 32}) {
        const double err = std::abs(FrobeniusSolution::truncated(p, 0, n).value(x) - full);
        CHECK(err < last);
        last = err;
    }
    CHECK(last < 1e-12);
    CHECK_THROWS_AS(FrobeniusSolution::truncated(p, 0, 0), std::invalid_argument);
}

TEST_CASE("logarithmic second solution") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_params(rng, 0.0);
        if (std::abs(p.q_acc) < 0.1) p.q_acc = 0.5;
        const LogFrobeniusSolution y(p, 1.5);
        CHECK(y.kappa() == p.q_acc);
        CHECK(y.value(0.0) == 1.0);
        for (double x : {-1.3, -0.4, 0.05, 0.7, 1.5}) {
            CAPTURE(trial);
            CAPTURE(x);
            CHECK(operator_residual(p, y, x) < 1e-8);
        }
    }
    // without the obstruction it is the ordinary series
    const HeunBParams p0{0.0, 1.7, 0.0, 1.5, -2.0};
    const LogFrobeniusSolution lg(p0, 1.0);
    const FrobeniusSolution plain(p0, 0, 1.0);
    CHECK(lg.kappa() == 0.0);
    for (double x : {-0.9, -0.2, 0.3, 1.0}) CHECK(std::abs(lg.value(x) - plain.value(x)) < 1e-14);
    CHECK_THROWS_AS(LogFrobeniusSolution(HeunBParams{0.0, 1.0, 0.5, 1.0, -2.0}, 1.0), std::invalid_argument);
}

TEST_CASE("second branch equals the exponent-one series of the first") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const double b = uniform(rng, 0.25, 2.0), c = uniform(rng, 0.0, 12.0), K = uniform(rng, 0.0, 2.0);
        const GravityBasis basis(b, c, K, b);
        const FrobeniusSolution y1(map_params(b, c, K).first, 1, b);
        for (double s : {-b, -0.5 * b, 0.1 * b, 0.8 * b, b}) {
            CAPTURE(trial);
            CHECK(std::abs(basis.second(s) - y1.value(s)) < 1e-9 * std::max(1.0, std::abs(y1.value(s))));
        }
    }
}

TEST_CASE("basis wronskian follows the Abel formula") {
    // phi'' + 2 (b - s) phi' + ... = 0, so W(s) = W(0) exp(s^2 - 2 b s), W(0) = 1
    for (auto [b, c, K] : {std::tuple{1.0, 4.0, 0.5}, std::tuple{2.0, 7.3, 1.2}, std::tuple{0.5, 2.0, 0.0}}) {
        const GravityBasis basis(b, c, K, b);
        for (double s : {-b, -0.3 * b, 0.2 * b, 0.9 * b}) {
            const double w = basis.first(s) * basis.second_derivative(s) - basis.first_derivative(s) * basis.second(s);
            const double expected = std::exp(s * s - 2.0 * b * s);
            CAPTURE(s);
            CHECK(std::abs(w - expected) < 1e-9 * expected);
        }
    }
}

TEST_CASE("transformation chain") {
    const double b = 1.0, c = 4.0, K = 0.5;
    const auto rec = transform_chain(b, c, K);
    CHECK(rec.b == b);
    CHECK(rec.K == K);
    const auto phi = phi_general(b, c, K, 0.7, -1.3);
    const auto psi = rec.psi_from_phi(phi);
    const auto chi = rec.chi_from_phi(phi);
    for (double s : {-0.9, -0.4, 0.3, 0.8}) {
        CAPTURE(s);
        CHECK(std::abs(rec.residual_phi(phi, s)) < 1e-6);
        CHECK(std::abs(rec.residual_chi(chi, s)) < 1e-6);
        CHECK(std::abs(rec.residual_psi(psi, s)) < 1e-6);
        CHECK(std::abs(psi(s) - std::exp(b * s - 0.5 * s * s) * phi(s)) < 1e-14);
    }
    CHECK_THROWS_AS(rec.residual_psi(psi, 0.0), std::invalid_argument);
    // a wrong function does not pass
    CHECK(std::abs(rec.residual_phi([](double s) { return std::cos(s); }, 0.5)) > 1e-2);

    const auto first = phi_general(b, c, K, 1.0, 0.0);
    const auto second = phi_general(b, c, K, 0.0, 1.0);
    CHECK(first(0.0) == 1.0);
    CHECK(second(0.0) == 0.0);
}

TEST_CASE("determinant and scanned gravity spectrum") {
    CHECK(std::abs(gravity_determinant(1.0, 2.0, 0.0)) > 1e-3);
    CHECK_THROWS_AS(gravity_determinant(0.0, 2.0, 0.0), std::invalid_argument);
    for (const auto& set : oracle::gravity_roots) {
        const auto found = eigen_gravity(set.b, set.K, 0.0, 10.0, 1e-12);
        CAPTURE(set.b);
        CAPTURE(set.K);
        REQUIRE(found.size() == set.roots.size());
        for (std::size_t i = 0; i < found.size(); ++i) {
            CHECK(std::abs(found[i].record.c - set.roots[i]) < 1e-8);
            CHECK(found[i].K == set.K);
            CHECK(std::isnan(found[i].residual_shoot));
            CHECK(found[i].record.lambda == found[i].record.c + 3.0 * set.b * set.b);
        }
    }
    CHECK_THROWS_AS(eigen_gravity(-1.0, 0.0, 0.0, 1.0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(eigen_gravity(1.0, -0.1, 0.0, 1.0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(eigen_gravity(1.0, 0.0, 2.0, 1.0, 1e-10), std::invalid_argument);
}

TEST_CASE("zero coupling recovers the oscillator spectrum") {
    for (double b : {1.0, 2.0}) {
        const auto grav = eigen_gravity(b, 0.0, 0.0, 10.0, 1e-12);
        const auto osc = numeric_eigenvalues(b, 0.0, 10.0, 1e-12);
        REQUIRE(grav.size() == osc.size());
        for (std::size_t i = 0; i < grav.size(); ++i) CHECK(std::abs(grav[i].record.c - osc[i].c) < 1e-9);
    }
}

TEST_CASE("eigenvalue shift is linear in small coupling") {
    const double c0 = eigen_gravity(1.0, 0.0, 2.0, 5.0, 1e-13).at(0).record.c;
    const double d3 = eigen_gravity(1.0, 1e-3, 2.0, 5.0, 1e-13).at(0).record.c - c0;
    const double d4 = eigen_gravity(1.0, 1e-4, 2.0, 5.0, 1e-13).at(0).record.c - c0;
    CHECK(d3 < 0.0);
    CHECK(d3 / d4 > 9.0);
    CHECK(d3 / d4 < 11.0);
}

TEST_CASE("shooting oracle") {
    const double root = oracle::gravity_roots[4].roots[0];  // b = 1, K = 0.5
    CHECK(std::abs(shooting_oracle(1.0, 0.5, root)) < 1e-6);
    CHECK(std::abs(shooting_oracle(1.0, 0.5, 2.0)) > 1e-2);
    CHECK_THROWS_AS(shooting_oracle(0.0, 0.5, 2.0), std::invalid_argument);

    GravityScanOptions opt;
    opt.cross_check = true;
    const auto found = eigen_gravity(1.0, 0.5, 0.0, 10.0, 1e-12, opt);
    REQUIRE(found.size() == 1);
    CHECK(found[0].residual_shoot < 1e-6);

    const auto shot = shooting_eigenvalues(1.0, 0.5, 0.0, 10.0, 1e-12);
    REQUIRE(shot.size() == 1);
    CHECK(std::abs(shot[0] - root) < 1e-8);
}
