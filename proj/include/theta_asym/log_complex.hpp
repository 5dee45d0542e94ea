#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

namespace theta_asym {

inline constexpr double pi = 3.14159265358979323846;

// A nonzero complex number stored as (log magnitude, phase).  Used everywhere a
// value can leave double range (coefficients like e^{870} occur at desk scale).
// phase is kept wrapped to (-pi, pi].
struct LogComplex {
    double log_mag = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    static double wrap(double p) {
        double w = std::remainder(p, 2.0 * pi);
        return (w <= -pi) ? w + 2.0 * pi : w;
    }

    static LogComplex zero() { return {}; }

    static LogComplex from(std::complex<double> v) {
        if (v == std::complex<double>(0.0, 0.0)) return zero();
        return {std::log(std::abs(v)), std::arg(v)};
    }

    // exp of a plain complex exponent, exactly: log_mag = Re, phase = Im wrapped.
    static LogComplex exp_log(std::complex<double> log_value) {
        return {log_value.real(), wrap(log_value.imag())};
    }

    bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        return std::exp(log_mag) * std::complex<double>(std::cos(phase), std::sin(phase));
    }

    // principal complex log as a plain complex number
    std::complex<double> log_value() const { return {log_mag, phase}; }

    LogComplex operator*(const LogComplex& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return {log_mag + o.log_mag, wrap(phase + o.phase)};
    }
    LogComplex operator/(const LogComplex& o) const {
        return {log_mag - o.log_mag, wrap(phase - o.phase)};
    }
    LogComplex operator-() const { return {log_mag, wrap(phase + pi)}; }

    LogComplex pow(double e) const {
        if (is_zero()) return zero();
        return {e * log_mag, wrap(e * phase)};
    }

    // |this/o - 1|, meaningful even when both operands are astronomically large
    double rel_diff(const LogComplex& o) const {
        if (is_zero() && o.is_zero()) return 0.0;
        if (o.is_zero() || is_zero()) return std::numeric_limits<double>::infinity();
        std::complex<double> r = std::exp(std::complex<double>(log_mag - o.log_mag, wrap(phase - o.phase)));
        return std::abs(r - 1.0);
    }
};

// principal power of a plain complex base
inline LogComplex pow_principal(std::complex<double> base, double e) {
    if (base == std::complex<double>(0.0, 0.0)) return LogComplex::zero();
    return {e * std::log(std::abs(base)), LogComplex::wrap(e * std::arg(base))};
}

// log(1 - e^L) for complex L, stable in all three regimes of Re L.
std::complex<double> log_one_minus_exp(std::complex<double> L);

// Sum of terms in the given (deterministic) order, scaled by the largest magnitude.
LogComplex log_sum(std::span<const LogComplex> terms);
LogComplex log_sum(const std::vector<LogComplex>& terms);

} // namespace theta_asym
