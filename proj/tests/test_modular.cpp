#include <doctest.h>

#include <cmath>
#include <complex>

#include "theta_asym/errors.hpp"
#include "theta_asym/modular.hpp"

using namespace theta_asym;
using std::complex;

namespace {
const complex<double> I(0.0, 1.0);

double rel(complex<double> got, complex<double> want) {
    return std::abs(got - want) / std::abs(want);
}
} // namespace

TEST_CASE("eta against independently computed values") {
    // reference values from 30-digit arbitrary-precision evaluation of the
    // q-product q^{1/24} prod (1 - q^n)
    CHECK(rel(eval_eta(I), {0.76822542232605666, 0.0}) < 1e-14);
    CHECK(rel(eval_eta({0.1, 0.3}), {0.80665968464628241, -0.081688952150670251}) < 1e-14);
    CHECK(rel(eval_eta({-0.37, 0.215}), {1.1234280254700183, 0.0075017534179853693}) < 1e-14);
}

TEST_CASE("eta inversion eta(-1/tau) = sqrt(-i tau) eta(tau)") {
    for (complex<double> tau : {complex<double>(0.2, 0.8), complex<double>(-0.45, 0.09)}) {
        auto lhs = eval_eta(-1.0 / tau);
        auto rhs = std::sqrt(-I * tau) * eval_eta(tau);
        CHECK(rel(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("theta against independently computed values") {
    // reference values from arbitrary-precision evaluation; this library's
    // theta equals minus the classical first theta function at argument pi z
    CHECK(rel(eval_theta(0.13, {0.0, 0.3}), {-0.40674016042714356, 0.0}) < 1e-13);
    CHECK(rel(eval_theta({0.3, 0.1}, {0.1, 0.4}),
              {-1.0953852917858375, -0.42693791202759366}) < 1e-13);
}

TEST_CASE("theta is odd and 1-periodic up to sign") {
    complex<double> tau(0.12, 0.45);
    for (complex<double> z : {complex<double>(0.31, 0.0), complex<double>(0.2, 0.07)}) {
        CHECK(std::abs(eval_theta(-z, tau) + eval_theta(z, tau)) < 1e-12);
        CHECK(std::abs(eval_theta(z + 1.0, tau) + eval_theta(z, tau)) <
              1e-12 * std::abs(eval_theta(z, tau)));
    }
}

TEST_CASE("product and sum evaluations agree") {
    complex<double> tau(0.07, 0.22);
    complex<double> z(0.27, 0.03);
    auto p = eval_theta(z, tau, {}, ThetaMethod::product);
    auto s = eval_theta(z, tau, {}, ThetaMethod::sum);
    CHECK(rel(p, s) < 1e-12);
}

TEST_CASE("theta vanishes at lattice points") {
    complex<double> tau(0.0, 0.4);
    CHECK(std::abs(eval_theta(0.0, tau)) < 1e-14);
    CHECK(std::abs(eval_theta(1.0, tau)) < 1e-13);
    CHECK(std::abs(eval_theta(tau, tau)) < 1e-13);
}

TEST_CASE("quotient symmetry f(1 - z) = -f(z)") {
    auto E1 = make_E1();
    complex<double> tau(0.0, 0.3);
    for (double z : {0.13, 0.31, 0.42}) {
        auto a = eval_quotient(E1, 1.0 - z, tau);
        auto b = eval_quotient(E1, z, tau);
        CHECK(std::abs(a + b) < 1e-10 * std::abs(b));
    }
}

TEST_CASE("near-pole factorization at small imaginary tau") {
    // the quotient approaches its closed leading factor like
    // e^{-4 pi^2 M(z)/eps}; already at n = 100 the gap is below 1e-10
    auto E1 = make_E1();
    double z = 0.13;
    for (double n : {100.0, 400.0, 1600.0}) {
        double eps = pi * std::sqrt(2.0 / n);
        complex<double> tau = I * eps / (2.0 * pi);
        auto q = eval_quotient(E1, z, tau);
        auto lead = leading_factor(E1, z, eps).value();
        CHECK(rel(q, lead) < 1e-10);
    }
    CHECK(margin(E1, z) == doctest::Approx(0.74));
}

TEST_CASE("evaluating on a theta zero is rejected") {
    auto E1 = make_E1();
    CHECK_THROWS_AS((void)eval_quotient(E1, 0.5 + 1e-11, {0.0, 0.3}), PoleProximity);
}

TEST_CASE("spec validation") {
    QuotientSpec s = make_E1();
    CHECK_NOTHROW(s.validate());
    s.b = 1; // needs b^2 > c
    CHECK_THROWS_AS(s.validate(), InvalidSpec);
    s = make_E1();
    s.eta_factors = {{1, 1}}; // needs sum alpha/a < 0
    CHECK_THROWS_AS(s.validate(), InvalidSpec);
    s = make_E1();
    s.eta_factors.clear();
    CHECK_THROWS_AS(s.validate(), InvalidSpec);
}

TEST_CASE("lattice offsets") {
    auto E1 = make_E1();
    CHECK(E1.delta_q() == doctest::Approx(-1.0 / 24.0));
    auto E2 = make_E2();
    CHECK(E2.delta_q() == doctest::Approx((1.0 - 3.0) / 8.0 - 1.0 / 24.0));
}
