#include <doctest.h>

#include <cmath>
#include <complex>

#include "theta_asym/pv.hpp"

using namespace theta_asym;
using std::complex;

namespace {
const complex<double> I(0.0, 1.0);
const complex<double> tau03(0.0, 0.3);
} // namespace

TEST_CASE("pole locations inside (0,1)") {
    auto p1 = locate_poles(make_E1());
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].h == doctest::Approx(0.5));
    CHECK(p1[0].num == 1);
    CHECK(p1[0].den == 2);

    auto p2 = locate_poles(make_E2());
    REQUIRE(p2.size() == 3);
    CHECK(p2[0].h == doctest::Approx(0.25));
    CHECK(p2[1].h == doctest::Approx(0.5));
    CHECK(p2[2].h == doctest::Approx(0.75));
}

TEST_CASE("contour plan removes symmetric windows") {
    auto plan = make_contour_plan({0.25, 0.75}, 0.01);
    REQUIRE(plan.segments.size() == 3);
    CHECK(plan.segments[0].first == doctest::Approx(0.0));
    CHECK(plan.segments[0].second == doctest::Approx(0.24));
    CHECK(plan.segments[1].first == doctest::Approx(0.26));
    CHECK(plan.segments[2].second == doctest::Approx(1.0));
}

TEST_CASE("residue at the dominant pole against an independent value") {
    // reference from 40-digit arbitrary-precision evaluation of
    // theta(1/2)/(eta * 2 * theta'(1)) for the E1 quotient at tau = 0.3i
    auto r = residue_at_pole(make_E1(), 0, tau03);
    CHECK(std::abs(r - complex<double>(-0.42896429756180864521, 0.0)) < 1e-12);
}

TEST_CASE("residues inherit the z -> 1 - z antisymmetry") {
    // f(1-z) = -f(z) maps the pole at h to 1-h and flips the sign of dz,
    // so the residues at mirrored poles are equal
    auto E2 = make_E2();
    auto r0 = residue_at_pole(E2, 0, tau03);
    auto r2 = residue_at_pole(E2, 2, tau03);
    CHECK(std::abs(r0 - r2) < 1e-10 * std::abs(r0));
}

TEST_CASE("residue via symmetric difference Richardson") {
    auto E1 = make_E1();
    auto r = residue_at_pole(E1, 0, tau03);
    auto f = [&](double z) { return eval_quotient(E1, z, tau03); };
    auto est = [&](double d) { return 0.5 * (d * f(0.5 + d) + (-d) * f(0.5 - d)) / 1.0; };
    // (f(h+d)(d) + f(h-d)(-d))/2 -> Res with O(d^2) error; Richardson kills d^2
    auto rich = (4.0 * est(5e-4) - est(1e-3)) / 3.0;
    CHECK(std::abs(rich - r) < 1e-8 * std::abs(r));
}

TEST_CASE("principal value against an independent deleted-limit value") {
    // reference from 30-digit adaptive quadrature with symmetric deletion
    // radius 1e-10 around z = 1/2
    auto [v, err] = fm_pv(make_E1(), 1.0, tau03);
    CHECK(std::abs(v - complex<double>(0.0, -0.9920011363769396)) < 5e-9);
    CHECK(err < 1e-10);
}

TEST_CASE("sin-kernel transform is odd in m and vanishes at half-integers") {
    auto E1 = make_E1();
    auto [vp, ep] = fm_pv(E1, 2.0, tau03);
    auto [vm, em] = fm_pv(E1, -2.0, tau03);
    CHECK(std::abs(vp + vm) < 1e-12 * std::abs(vp));
    auto half = fm_pv_log(E1, 1.5, tau03, Kernel::sin_pv);
    // the integrand is antisymmetric about z = 1/2 at half-integer m
    CHECK((half.value.is_zero() || half.value.log_mag < std::log(std::abs(vp)) - 23.0));
}

TEST_CASE("pv by pole subtraction matches pv by window deletion") {
    auto E1 = make_E1();
    auto [v, err] = fm_pv(E1, 1.0, tau03);
    auto d2 = std::abs(fm_pv_deleted(E1, 1.0, tau03, 1e-2).value() - v);
    auto d3 = std::abs(fm_pv_deleted(E1, 1.0, tau03, 1e-3).value() - v);
    // window deletion converges at second order in the radius
    CHECK(d3 < d2);
    CHECK(d2 / d3 > 4.0);
    CHECK(d2 / d3 < 25.0);
    CHECK(d3 < 1e-2);
}

TEST_CASE("semicircle contributions cancel to first order in r") {
    auto E1 = make_E1();
    double m = 1.0;
    double prev = 1e300;
    for (double r : {1e-1, 1e-2, 1e-3}) {
        auto gp = semicircle_G(E1, 0, tau03, r, Side::above, m);
        auto gm = semicircle_G(E1, 0, tau03, r, Side::below, m);
        double s = std::abs(gp + gm);
        CHECK(s < prev / 5.0);
        prev = s;
    }
}

TEST_CASE("semicircle limit is -pi i Res e^{-2 pi i m h}") {
    // the one-sided value approaches the residue form at first order in r
    // with measured relative coefficient 4 m r, so the radius budget needs
    // m below 1/4 for a 1e-4 check at r = 1e-4
    auto E1 = make_E1();
    double m = 0.2, h = 0.5;
    auto res = residue_at_pole(E1, 0, tau03);
    auto want = -pi * I * res * std::exp(-2.0 * pi * I * m * h);
    auto gp = semicircle_G(E1, 0, tau03, 1e-4, Side::above, m);
    CHECK(std::abs(gp - want) < 1e-4 * std::abs(want));
}

TEST_CASE("kernel frequency schedule") {
    CHECK(m_schedule(2500.0, 0.05) == doctest::Approx(9.0));
    CHECK(m_schedule(900.0, 0.05) == doctest::Approx(5.0));
    CHECK(m_schedule(100.0, 0.05) >= 1.0);
}
