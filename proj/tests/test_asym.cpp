#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "theta_asym/asymptotics.hpp"
#include "theta_asym/errors.hpp"

using namespace theta_asym;
using std::complex;

namespace {
const complex<double> I(0.0, 1.0);
} // namespace

TEST_CASE("exact growth constants") {
    auto k1 = constants(make_E1());
    CHECK(k1.lambda2.num == 25);
    CHECK(k1.lambda2.den == 12);
    CHECK(k1.growth_base == doctest::Approx(13.0 / 12.0));
    CHECK(k1.window_ok);

    auto k2 = constants(make_E2());
    CHECK(k2.lambda2.num == 47);
    CHECK(k2.lambda2.den == 12);
    CHECK(k2.window_ok);

    auto k3 = constants(make_E3());
    CHECK(k3.lambda2.num == 25);
    CHECK(k3.lambda2.den == 12);
    CHECK(k3.growth_base == doctest::Approx(1.0 + 2.0 / 24.0));
    CHECK(k3.window_ok);
}

TEST_CASE("Bessel I against independently computed values") {
    // references from arbitrary-precision evaluation
    CHECK(bessel_I(0.0, 100.0).rel_diff(LogComplex::from({1.0737517071310738e42, 0.0})) < 1e-12);
    CHECK(bessel_I(2.0, 7.3).rel_diff(LogComplex::from({166.00354780555283, 0.0})) < 1e-13);
    CHECK(bessel_I(-1.5, 4.2).rel_diff(LogComplex::from({9.8869925805206957, 0.0})) < 1e-13);
    CHECK(bessel_I(3.0, 0.5).rel_diff(LogComplex::from({0.0026451119689902859, 0.0})) < 1e-13);
}

TEST_CASE("Bessel asymptotic closes in as x grows") {
    double d50 = bessel_I(0.0, 50.0).rel_diff(bessel_I(0.0, 50.0, BesselMode::asymptotic));
    double d200 = bessel_I(0.0, 200.0).rel_diff(bessel_I(0.0, 200.0, BesselMode::asymptotic));
    double d800 = bessel_I(0.0, 800.0).rel_diff(bessel_I(0.0, 800.0, BesselMode::asymptotic));
    CHECK(d50 > d200);
    CHECK(d200 > d800);
    CHECK(d800 < 1e-3);
}

TEST_CASE("erf reference agrees with the standard library on the real line") {
    for (double x : {-2.5, -0.3, 0.7, 1.9}) {
        CHECK(std::abs(erf_reference({x, 0.0}) - std::erf(x)) < 1e-13);
    }
}

TEST_CASE("erf parts recombine to the reference value") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int k = 0; k < 30; ++k) {
        complex<double> Y(u(rng), u(rng));
        auto p = erf_parts(Y);
        complex<double> got = double(p.s) - (p.tail.is_zero() ? 0.0 : p.tail.value());
        auto want = erf_reference(Y);
        CHECK(std::abs(got - want) < 1e-10 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("rotated erf asymptotic enforces its sector") {
    CHECK_THROWS_AS((void)erf_rotated_asymptotic({0.1, 0.05}), ArgOutOfSector);
    // admissible point: compare against the reference
    complex<double> z(6.0, 0.4);
    auto asym = erf_rotated_asymptotic(z);
    auto ref = LogComplex::from(erf_reference(I * z));
    CHECK(asym.rel_diff(ref) < 1.0 / std::norm(z));
}

TEST_CASE("Gaussian-sine closed form rejects growing Gaussians") {
    CHECK_THROWS_AS((void)gauss_sine_integral({0.3, -0.2}, {1.1, 0.4}, 1.7, -0.4, 2.3),
                    DomainError);
    CHECK_THROWS_AS((void)gauss_sine_integral({0.3, -0.2}, {0.0, 1.0}, 1.7, -0.4, 2.3),
                    DomainError);
}

TEST_CASE("Gaussian-sine closed form against an independent value") {
    // reference from 40-digit adaptive quadrature
    auto got = gauss_sine_integral({0.3, -0.2}, {-1.1, 0.4}, 1.7, -0.4, 2.3);
    auto want = LogComplex::from({-0.037196574298429427, -0.0024648489274785927});
    CHECK(got.rel_diff(want) < 1e-12);
}

TEST_CASE("Gaussian-sine closed form against in-house quadrature, random instances") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        complex<double> H1(2.0 * u(rng), 2.0 * u(rng));
        complex<double> H2(-0.3 - 2.0 * std::abs(u(rng)), u(rng));
        double m = 0.4 + 2.5 * std::abs(u(rng));
        double t = -1.5 + u(rng);
        double uu = t + 0.5 + 2.0 * std::abs(u(rng));
        auto closed = gauss_sine_integral(H1, H2, m, t, uu);
        auto quad = gauss_sine_reference(H1, H2, m, t, uu);
        CHECK(std::abs(closed.value() - quad) < 1e-9 * std::max(1e-3, std::abs(quad)));
    }
}

TEST_CASE("near-pole main term forms agree as m drops out") {
    auto E1 = make_E1();
    for (double n : {100.0, 900.0}) {
        complex<double> eps(pi * std::sqrt(2.0 / n), 0.0);
        auto simple = fm_near_pole_main(E1, eps);
        auto pre = fm_near_pole_presimplified(E1, eps, 3.0);
        CHECK(simple.rel_diff(pre) < 10.0 * std::sqrt(2.0 / n) * pi);
    }
}

TEST_CASE("closed major arc with asymptotic Bessel equals the theorem main term") {
    auto E1 = make_E1();
    for (double n : {400.0, 1600.0}) {
        auto a = major_arc(E1, 3.0, n, MajorArcMode::closed, PskMode::bessel_asymptotic);
        auto mt = main_term(E1, 3.0, n);
        CHECK(a.rel_diff(mt.value) < 1e-12);
    }
}

TEST_CASE("direct and closed major arcs differ by exactly 2 pi i lambda2") {
    // the closed form drops the change-of-variables constant of the
    // epsilon -> v substitution; measured and frozen here
    auto E1 = make_E1();
    double l2 = constants(E1).lambda2.value();
    auto direct = major_arc(E1, 1.0, 100.0, MajorArcMode::direct, PskMode::quadrature);
    auto closed = major_arc(E1, 1.0, 100.0, MajorArcMode::closed, PskMode::quadrature);
    auto ratio = direct.value() / closed.value();
    CHECK(std::abs(ratio - 2.0 * pi * l2 * I) < 1e-6 * 2.0 * pi * l2);
}

TEST_CASE("main term regression and m-independence") {
    auto E1 = make_E1();
    auto a = main_term(E1, 1.0, 400.0);
    CHECK(a.value.log_mag == doctest::Approx(241.197856395618).epsilon(1e-12));
    CHECK(a.value.phase == doctest::Approx(-pi / 2.0).epsilon(1e-12));
    auto b = main_term(E1, 7.0, 400.0);
    CHECK(a.value.log_mag == b.value.log_mag);
    CHECK(a.value.phase == b.value.phase);
}

TEST_CASE("error-arc bound is exponentially below the main term") {
    auto E1 = make_E1();
    for (double n : {400.0, 1600.0}) {
        auto mt = main_term(E1, 1.0, n);
        auto eb = error_arc_bound(E1, 1.0, n);
        CHECK(eb.log_E_bound < mt.value.log_mag);
    }
}

TEST_CASE("window violation surfaces when asymptotics are requested") {
    QuotientSpec s = make_E1();
    s.eta_factors = {{1, -30}}; // growth base 1 + 30/12 exceeds sqrt(lambda2)
    CHECK_NOTHROW((void)constants(s, false));
    CHECK_THROWS_AS((void)constants(s, true), WindowViolation);
    CHECK_THROWS_AS((void)main_term(s, 1.0, 400.0), WindowViolation);
}
