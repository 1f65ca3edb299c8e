#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "gravheun/fd_spectrum.hpp"
#include "gravheun/ode.hpp"
#include "gravheun/parallel.hpp"
#include "gravheun/roots.hpp"

using namespace gravheun;

TEST_CASE("bisection") {
    const auto f = [](double x) { return x * x - 2.0; };
    const auto r = bisect(f, 0.0, 2.0, f(0.0), f(2.0), 1e-14);
    CHECK(std::abs(r.x - std::sqrt(2.0)) < 1e-13);
    CHECK(r.hi - r.lo <= 1e-14);
    CHECK(r.lo <= r.x);
    CHECK(r.x <= r.hi);
    CHECK_THROWS_AS(bisect(f, 2.0, 3.0, f(2.0), f(3.0), 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(bisect(f, 0.0, 2.0, f(0.0), f(2.0), 0.0), std::invalid_argument);
}

TEST_CASE("grid scan") {
    const auto roots = scan_roots([](double x) { return std::sin(x); }, 0.5, 10.0, 0.1, 1e-13);
    REQUIRE(roots.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(roots[k].x - (k + 1) * std::numbers::pi) < 1e-12);

    // grid hits the zero exactly
    const auto exact = scan_roots([](double x) { return x - 1.0; }, 0.0, 2.0, 0.5, 1e-12);
    REQUIRE(exact.size() == 1);
    CHECK(exact[0].x == 1.0);

    CHECK(scan_roots([](double x) { return x * x + 1.0; }, -2.0, 2.0, 0.1, 1e-12).empty());
    CHECK_THROWS_AS(scan_roots([](double x) { return x; }, 1.0, 0.0, 0.1, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(scan_roots([](double x) { return x; }, 0.0, 1.0, 0.0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(scan_roots([](double) { return std::nan(""); }, 0.0, 1.0, 0.1, 1e-12), std::runtime_error);
}

TEST_CASE("dopri5 on closed-form problems") {
    OdeStats st;
    const auto y = integrate_dopri5<1>([](double, const OdeState<1>& s) { return OdeState<1>{s[0]}; }, 0.0,
                                       OdeState<1>{1.0}, 2.0, {}, &st);
    CHECK(std::abs(y[0] - std::exp(2.0)) < 1e-10 * std::exp(2.0));
    CHECK(st.accepted > 0);

    // harmonic oscillator, backwards in x
    const auto osc = [](double, const OdeState<2>& s) { return OdeState<2>{s[1], -s[0]}; };
    const auto z = integrate_dopri5<2>(osc, 0.0, OdeState<2>{0.0, 1.0}, -3.0);
    CHECK(std::abs(z[0] - std::sin(-3.0)) < 1e-11);
    CHECK(std::abs(z[1] - std::cos(-3.0)) < 1e-11);

    const auto same = integrate_dopri5<2>(osc, 1.0, OdeState<2>{0.3, 0.4}, 1.0);
    CHECK(same == OdeState<2>{0.3, 0.4});
}

TEST_CASE("dopri5 reports blow-up") {
    // y' = y^2, y(0) = 1 blows up at x = 1
    const auto f = [](double, const OdeState<1>& s) { return OdeState<1>{s[0] * s[0]}; };
    CHECK_THROWS_AS(integrate_dopri5<1>(f, 0.0, OdeState<1>{1.0}, 2.0), StepUnderflow);
    try {
        integrate_dopri5<1>(f, 0.0, OdeState<1>{1.0}, 2.0);
    } catch (const StepUnderflow& e) {
        CHECK(e.where() == doctest::Approx(1.0).epsilon(1e-3));
    }
}

TEST_CASE("finite-difference Dirichlet spectra") {
    // harmonic oscillator on a wide box: 1, 3, 5
    const auto ho = fd_dirichlet_eigenvalues_extrapolated([](double x) { return x * x; }, -10.0, 10.0, 4000, 3);
    REQUIRE(ho.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(ho[k] - (2 * k + 1)) < 1e-7);

    // infinite well of width 1: (k pi)^2
    const auto well = fd_dirichlet_eigenvalues([](double) { return 0.0; }, 0.0, 1.0, 2000, 4);
    for (int k = 0; k < 4; ++k) {
        const double exact = std::pow((k + 1) * std::numbers::pi, 2);
        CHECK(std::abs(well[k] - exact) < 1e-5 * exact);
        if (k > 0) CHECK(well[k] > well[k - 1]);
    }
    CHECK_THROWS_AS(fd_dirichlet_eigenvalues([](double) { return 0.0; }, 1.0, 0.0, 100, 1), std::invalid_argument);
}

TEST_CASE("parallel map is ordered and deterministic") {
    const auto fn = [](std::size_t i) { return std::sin(0.37 * static_cast<double>(i)) / (1.0 + i); };
    const unsigned saved = thread_count();
    set_thread_count(1);
    const auto one = parallel_map(1000, fn);
    set_thread_count(7);
    const auto seven = parallel_map(1000, fn);
    set_thread_count(saved);
    REQUIRE(one.size() == 1000);
    CHECK(one == seven);
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == fn(i));
    CHECK(parallel_map(0, fn).empty());
}

TEST_CASE("parallel map rethrows worker failures") {
    std::atomic<int> calls{0};
    const auto bad = [&](std::size_t i) -> double {
        ++calls;
        if (i == 17) throw std::domain_error("worker 17");
        return 0.0;
    };
    CHECK_THROWS_AS(parallel_map(100, bad), std::domain_error);
    CHECK(calls.load() >= 1);
}
