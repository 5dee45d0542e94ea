#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "theta_asym/log_complex.hpp"

using namespace theta_asym;
using std::complex;

TEST_CASE("round trip through the log representation") {
    for (complex<double> v : {complex<double>(3.5, -1.25), complex<double>(-2e-200, 4e-200),
                              complex<double>(1e250, -3e250)}) {
        auto lc = LogComplex::from(v);
        // exp(log(.)) costs about |log_mag| ulps at extreme magnitudes
        CHECK(std::abs(lc.value() - v) <= 1e-13 * std::abs(v));
    }
}

TEST_CASE("multiplication and division act on logs") {
    auto a = LogComplex::from({2.0, 1.0});
    auto b = LogComplex::from({-0.5, 3.0});
    auto prod = a * b;
    CHECK(std::abs(prod.value() - complex<double>(2.0, 1.0) * complex<double>(-0.5, 3.0)) < 1e-14);
    auto quot = a / b;
    CHECK(std::abs(quot.value() - complex<double>(2.0, 1.0) / complex<double>(-0.5, 3.0)) < 1e-14);
    CHECK((a * LogComplex::zero()).is_zero());
}

TEST_CASE("exp_log keeps huge exponents exact") {
    auto big = LogComplex::exp_log({5000.0, 0.25});
    CHECK(big.log_mag == doctest::Approx(5000.0));
    CHECK(big.phase == doctest::Approx(0.25));
    auto ratio = big / LogComplex::exp_log({4999.0, 0.25});
    CHECK(std::abs(ratio.value() - std::exp(1.0)) < 1e-12);
}

TEST_CASE("log_one_minus_exp across its three regimes") {
    // moderate argument: direct evaluation is trustworthy
    for (complex<double> x : {complex<double>(0.5, 0.3), complex<double>(-3.0, 1.0)}) {
        auto got = log_one_minus_exp(x);
        auto want = std::log(1.0 - std::exp(x));
        CHECK(std::abs(got - want) < 1e-13);
    }
    // large positive real part: 1 - e^x ~ -e^x, log is x + i pi + log(1 - e^{-x})
    {
        complex<double> x(100.0, 0.7);
        auto got = log_one_minus_exp(x);
        CHECK(got.real() == doctest::Approx(100.0).epsilon(1e-12));
        auto recon = std::exp(got - x); // should be -(1 - e^{-x}) ~ -1
        CHECK(std::abs(recon - complex<double>(-1.0, 0.0)) < 1e-10);
    }
    // far-negative real part: 1 - e^x collapses to 1.0 in doubles, so the
    // series branch must return log(1 - e^x) ~ -e^x itself
    {
        complex<double> x(-40.0, 0.3);
        auto got = log_one_minus_exp(x);
        auto want = -std::exp(x);
        CHECK(std::abs(got - want) < 1e-12 * std::abs(want));
    }
}

TEST_CASE("log_sum reproduces plain summation and survives scale") {
    std::vector<LogComplex> terms;
    complex<double> plain = 0.0;
    for (int k = 0; k < 17; ++k) {
        complex<double> v = std::polar(std::exp(std::sin(3.0 * k)), 0.41 * k);
        plain += v;
        terms.push_back(LogComplex::from(v));
    }
    auto got = log_sum(terms).value();
    CHECK(std::abs(got - plain) < 1e-13 * std::abs(plain));

    // same shape shifted up by e^{3000}: only representable in log form
    std::vector<LogComplex> shifted;
    for (auto& t : terms) shifted.push_back(t * LogComplex::exp_log({3000.0, 0.0}));
    auto big = log_sum(shifted);
    CHECK(big.log_mag - std::log(std::abs(plain)) == doctest::Approx(3000.0).epsilon(1e-12));
    CHECK(std::abs(big.phase - std::arg(plain)) < 1e-12);
}

TEST_CASE("pow and rel_diff behave") {
    auto a = LogComplex::from({1.3, -0.7});
    auto sq = a.pow(2.0);
    complex<double> want = complex<double>(1.3, -0.7) * complex<double>(1.3, -0.7);
    CHECK(std::abs(sq.value() - want) < 1e-13);
    CHECK(a.rel_diff(a) == doctest::Approx(0.0));
    auto b = LogComplex::from(complex<double>(1.3, -0.7) * 1.001);
    CHECK(a.rel_diff(b) == doctest::Approx(0.001).epsilon(1e-3));
}
