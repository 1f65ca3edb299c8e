#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gravheun/ho_spectrum.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace gravheun;

namespace {

const oracle::RootSet& roots_for(double b) {
    for (const auto& r : oracle::oscillator_roots)
        if (r.b == b) return r;
    throw std::logic_error("no oracle roots");
}

}  // namespace

TEST_CASE("order pair and boundary data") {
    for (double c : {-3.0, 0.0, 1.0, 4.7, 13.0}) {
        const auto o = PCFOrderPair::from_c(c);
        CHECK(o.nu + o.rho == cplx(-1.0, 0.0));
        CHECK(2.0 * o.nu.real() == doctest::Approx(c - 1.0).epsilon(1e-15));
        CHECK(o.c().real() == doctest::Approx(c).epsilon(1e-15));
    }
    CHECK(BoundaryData::from_b(1.0).z == doctest::Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(BoundaryData::from_b(-1.0), std::invalid_argument);
}

TEST_CASE("general solution") {
    const auto ground = general_solution(PCFOrderPair::from_nu(0.0), 1.0, 0.0);
    CHECK(std::abs(ground(1.0) - std::exp(-0.5)) < 1e-15);
    const auto zero = general_solution(PCFOrderPair::from_nu(0.7), 0.0, 0.0);
    CHECK(zero(0.3) == cplx(0.0, 0.0));

    // psi'' + (c - q^2) psi = 0 by central differences
    const auto order = PCFOrderPair::from_nu(0.3);
    const double c = order.c().real();
    for (auto [c1, c2] : {std::pair{cplx(1.0), cplx(0.0)}, std::pair{cplx(0.0), cplx(1.0)}, std::pair{cplx(0.4, -1.0), cplx(2.0, 0.5)}}) {
        const auto psi = general_solution(order, c1, c2);
        const double q = 0.7, h = 1e-3;
        const cplx d2 = (-psi(q + 2 * h) + 16.0 * psi(q + h) - 30.0 * psi(q) + 16.0 * psi(q - h) - psi(q - 2 * h)) / (12 * h * h);
        CHECK(std::abs(d2 + (c - q * q) * psi(q)) < 1e-7);
    }
}

TEST_CASE("boundary determinant values") {
    // collapsed boundary
    for (double nu : {-0.4, 0.3, 2.0}) CHECK(std::abs(boundary_determinant(PCFOrderPair::from_nu(nu), BoundaryData::from_b(0.0))) < 1e-15);
    const auto bd = BoundaryData::from_b(1.0);
    CHECK(std::abs(boundary_determinant(PCFOrderPair::from_nu(1.0), bd)) > 1e-3);
    // even orders are not roots for b = 1
    CHECK(std::abs(boundary_determinant(PCFOrderPair::from_nu(2.0), bd)) > 1e-3);
    CHECK(std::abs(boundary_determinant(PCFOrderPair::from_nu(0.0), bd)) > 1e-3);
    // the located root is
    const double c_star = roots_for(1.0).roots[0];
    CHECK(std::abs(boundary_determinant(PCFOrderPair::from_c(c_star), bd)) < 1e-9);
}

TEST_CASE("rotated determinant is real for real c") {
    const auto bd = BoundaryData::from_b(1.0);
    for (double c = 0.1; c < 14.0; c += 0.37) {
        const cplx r = rotated_determinant(c, bd);
        const cplx d = boundary_determinant(PCFOrderPair::from_c(c), bd);
        CAPTURE(c);
        CHECK(std::abs(r.imag()) <= 1e-10 * std::max(1.0, std::abs(r)));
        CHECK(std::abs(std::abs(r) - std::abs(d)) <= 1e-12 * std::max(1.0, std::abs(d)));
    }
}

TEST_CASE("numeric eigenvalues equal the determinant zeros") {
    for (const auto& set : oracle::oscillator_roots) {
        const auto recs = numeric_eigenvalues(set.b, 0.0, 14.0, 1e-11);
        CAPTURE(set.b);
        REQUIRE(recs.size() == set.roots.size());
        for (std::size_t i = 0; i < recs.size(); ++i) {
            CHECK(std::abs(recs[i].c - set.roots[i]) < 1e-8);
            CHECK(recs[i].method == EigenMethod::determinant_root);
            CHECK(recs[i].has_tag("anomalous"));
            CHECK(recs[i].residual < 1e-8);
            CHECK(recs[i].lambda == recs[i].c + 3.0 * set.b * set.b);
            CHECK(recs[i].index == static_cast<int>(i));
        }
    }
}

TEST_CASE("numeric eigenvalues in narrow windows") {
    // b = 1 has a root at c = 3.5296... inside [2, 4]
    const auto window = numeric_eigenvalues(1.0, 2.0, 4.0, 1e-11);
    REQUIRE(window.size() == 1);
    CHECK(window[0].c == doctest::Approx(roots_for(1.0).roots[0]).epsilon(1e-10));
    CHECK(numeric_eigenvalues(0.5, 0.0, 6.0, 1e-10).empty());
    CHECK_THROWS_AS(numeric_eigenvalues(1.0, 4.0, 2.0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(numeric_eigenvalues(-1.0, 0.0, 2.0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(numeric_eigenvalues(1.0, 0.0, 2.0, 0.0), std::invalid_argument);
}

TEST_CASE("finite-difference spectrum agrees with the determinant") {
    for (double b : {0.5, 1.0, 2.0}) {
        const auto fd = fd_oracle_eigenvalues(b, 0.0, 14.0);
        const auto det = numeric_eigenvalues(b, 0.0, 14.0, 1e-11);
        CAPTURE(b);
        REQUIRE(fd.size() == det.size());
        for (std::size_t i = 0; i < fd.size(); ++i) {
            CHECK(std::abs(fd[i].c - det[i].c) < 1e-6);
            CHECK(fd[i].method == EigenMethod::fd_oracle);
        }
    }
}

TEST_CASE("mode built from the null space vanishes at both ends at a root") {
    for (const auto& set : oracle::oscillator_roots) {
        for (double c : set.roots) {
            const auto order = PCFOrderPair::from_c(c);
            const auto mode = boundary_mode(order);
            CAPTURE(c);
            CHECK(std::abs(mode(0.0)) < 1e-12);
            CHECK(std::abs(mode(-2.0 * set.b)) < 1e-9);
            // and is not the zero function
            CHECK(std::abs(mode(-set.b)) > 1e-3);
            // the reflection term vanishes there
            const double z = BoundaryData::from_b(set.b).z;
            CHECK(std::abs(pcf_d(order.nu, z) - pcf_d(order.nu, -z)) < 1e-9);
        }
    }
}

TEST_CASE("mode value at the far end is minus the determinant") {
    const auto order = PCFOrderPair::from_c(2.3);
    const auto mode = boundary_mode(order);
    const cplx det = boundary_determinant(order, BoundaryData::from_b(1.0));
    CHECK(std::abs(mode(-2.0) + det) < 1e-12 * std::max(1.0, std::abs(det)));
}

TEST_CASE("closed-form lattice") {
    CHECK(exact_eigenvalues(1.0, 0, 0).at(0).lambda == 4.0);
    CHECK(exact_eigenvalues(0.0, 0, 0).at(0).lambda == 1.0);
    const auto neg = exact_eigenvalues(2.0, -1, -1).at(0);
    CHECK(neg.lambda == 9.0);
    CHECK(neg.has_tag("below_ground"));
    const auto recs = exact_eigenvalues(1.0, 0, 3);
    REQUIRE(recs.size() == 4);
    for (int m = 0; m < 4; ++m) {
        CHECK(recs[m].c == 1.0 + 4.0 * m);
        CHECK(recs[m].lambda == 4.0 + 4.0 * m);
        CHECK(recs[m].method == EigenMethod::exact_formula);
        CHECK_FALSE(recs[m].has_tag("below_ground"));
        // residual is the determinant at the lattice point, which is not small
        CHECK(recs[m].residual > 1e-3);
    }
    CHECK_THROWS_AS(exact_eigenvalues(1.0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(exact_eigenvalues(-1.0, 0, 1), std::invalid_argument);
}
