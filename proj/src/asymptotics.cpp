#include "theta_asym/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "theta_asym/errors.hpp"
#include "theta_asym/quadrature.hpp"

namespace theta_asym {

namespace {

const std::complex<double> I(0.0, 1.0);

Rational reduce(long num, long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long g = std::gcd(std::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

Rational add(Rational a, Rational b) { return reduce(a.num * b.den + b.num * a.den, a.den * b.den); }

Rational lambda2_exact(const QuotientSpec& spec) {
    Rational r = reduce(4L * spec.b * spec.b - 4L * spec.b + 1L - spec.c, 4L * spec.c);
    for (const auto& f : spec.eta_factors) r = add(r, reduce(-(long)f.alpha, 12L * f.a));
    return r;
}

} // namespace

AsymptoticConstants constants(const QuotientSpec& spec, bool require_window) {
    spec.validate();
    AsymptoticConstants k;
    k.sum_alpha = spec.sum_alpha();
    k.lambda2 = lambda2_exact(spec);
    k.growth_base = spec.growth_base();
    k.window_ok = k.lambda2.value() > 0.0 && k.growth_base > 0.0 &&
                  k.growth_base < std::sqrt(k.lambda2.value());
    if (require_window && !k.window_ok)
        throw WindowViolation("growth window 0 < 1 - sum alpha/(12a) < sqrt(lambda2) violated");

    // (-1)^{3/2 + sum alpha} (2 pi)^{sum alpha / 2} c^{1/2} prod a^{-alpha/2}
    //   / (4 i pi^2 (2 b^2/c - 1 - b/c)), principal branches throughout
    double A = 2.0 * spec.b * spec.b / spec.c - 1.0 - double(spec.b) / spec.c;
    double lm = 0.5 * k.sum_alpha * std::log(2.0 * pi) + 0.5 * std::log(double(spec.c)) -
                std::log(4.0 * pi * pi * std::abs(A));
    for (const auto& f : spec.eta_factors) lm += -0.5 * f.alpha * std::log(double(f.a));
    double phase = pi * (1.5 + k.sum_alpha) - 0.5 * pi; // the 1/i contributes -pi/2
    if (A < 0.0) phase += pi;
    k.lambda1 = LogComplex{lm, LogComplex::wrap(phase)};
    return k;
}

LogComplex fm_near_pole_main(const QuotientSpec& spec, std::complex<double> eps) {
    if (!(eps.real() > 0.0)) throw DomainError("fm_near_pole_main needs Re eps > 0");
    AsymptoticConstants k = constants(spec, true);
    double sigma = 0.5 * k.sum_alpha;
    std::complex<double> L = (1.0 - sigma) * std::log(eps) +
                             2.0 * pi * pi * k.lambda2.value() / eps;
    return k.lambda1 * LogComplex::exp_log(L);
}

LogComplex fm_near_pole_presimplified(const QuotientSpec& spec, std::complex<double> eps,
                                      double m) {
    if (!(eps.real() > 0.0)) throw DomainError("fm_near_pole needs Re eps > 0");
    AsymptoticConstants k = constants(spec, true);
    double sigma = 0.5 * k.sum_alpha;
    // Omega(m, n), literal form
    std::complex<double> lomega =
        double(k.sum_alpha) * I * pi - sigma * std::log(eps / (2.0 * pi)) +
        0.5 * std::log(double(spec.c)) +
        2.0 * pi * pi / eps *
            (1.0 / (4.0 * spec.c) - 0.25 - spec.sum_alpha_over_12a());
    for (const auto& f : spec.eta_factors) lomega += -0.5 * f.alpha * std::log(double(f.a));
    double bb = double(spec.b) * spec.b / spec.c - double(spec.b) / spec.c;
    double A = 2.0 * spec.b * spec.b / spec.c - 1.0 - double(spec.b) / spec.c;
    std::complex<double> denom = 4.0 * I * pi * pi * A / eps - 4.0 * pi * m;
    return LogComplex::from(-I) * LogComplex::exp_log(lomega) *
           LogComplex::exp_log(2.0 * pi * pi / eps * bb) / LogComplex::from(denom);
}

// ---------------------------------------------------------------------------
// erf

std::complex<double> erf_reference(std::complex<double> z) {
    if (z == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
    double az = std::abs(z);
    if (az > 26.0) throw DomainError("erf_reference overflows past |z| = 26");
    int panels = std::max(8, (int)std::ceil(az * az / 2.0));
    std::complex<double> acc(0.0, 0.0);
    for_each_gl_node(0.0, 1.0, panels, 12, [&](double s, double w) {
        std::complex<double> t = s * z;
        acc += w * std::exp(-t * t);
    });
    return 2.0 / std::sqrt(pi) * z * acc;
}

LogComplex erf_rotated_asymptotic(std::complex<double> z) {
    std::complex<double> z2 = z * z;
    double az = std::abs(z);
    // the dropped erf constant must be subdominant: e^{Re z^2} >> |z|
    if (!(z2.real() > std::max(4.0, 3.0 * std::log(2.0 + az))))
        throw ArgOutOfSector("rotated erf asymptotic outside its sector");
    return LogComplex::from(I) * LogComplex::exp_log(z2) /
           LogComplex::from(std::sqrt(pi) * z);
}

ErfParts erf_parts(std::complex<double> Y) {
    ErfParts out;
    if (std::abs(Y) <= 6.0) {
        out.s = 0;
        out.tail = -LogComplex::from(erf_reference(Y));
        return out;
    }
    out.s = (Y.real() > 0.0) ? 1 : (Y.real() < 0.0 ? -1 : 0);
    // tail = e^{-Y^2} / (sqrt(pi) Y) * sum_k (-1)^k (2k-1)!! / (2 Y^2)^k
    std::complex<double> invY2 = 1.0 / (Y * Y);
    std::complex<double> term(1.0, 0.0), series(0.0, 0.0);
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 40; ++k) {
        double mag = std::abs(term);
        if (mag > best) break; // truncate at the smallest term
        best = mag;
        series += term;
        term *= -(2.0 * k + 1.0) * 0.5 * invY2;
    }
    out.tail = LogComplex::exp_log(-Y * Y) * LogComplex::from(series / (std::sqrt(pi) * Y));
    return out;
}

// ---------------------------------------------------------------------------
// Gaussian-sine closed form

LogComplex gauss_sine_integral(std::complex<double> H1, std::complex<double> H2, double m,
                               double t, double u) {
    // the four-erf form is derived for a decaying Gaussian; the erf branch
    // bookkeeping degrades as Re H2 approaches 0 from below and is wrong past it
    if (!(H2.real() < 0.0))
        throw DomainError("gauss_sine_integral needs Re H2 < 0");
    std::complex<double> root = std::sqrt(-H2);
    std::complex<double> wp = H1 + 2.0 * pi * I * m;  // the + frequency branch
    std::complex<double> wm = -H1 + 2.0 * pi * I * m; // the - frequency branch
    std::complex<double> Ap = -wp * wp / (4.0 * H2);
    std::complex<double> Am = -wm * wm / (4.0 * H2);
    auto Yp = [&](double x) { return (2.0 * H2 * x + wp) / (2.0 * root); };
    auto Ym = [&](double x) { return (-2.0 * H2 * x - H1 + 2.0 * pi * I * m) / (2.0 * root); };

    // e^A (erf(Ya) - erf(Yb)) with the erf constants cancelled analytically
    std::vector<LogComplex> terms;
    auto add_pair = [&](std::complex<double> A, std::complex<double> Ya,
                        std::complex<double> Yb) {
        LogComplex eA = LogComplex::exp_log(A);
        ErfParts a = erf_parts(Ya);
        ErfParts b = erf_parts(Yb);
        if (a.s != b.s) terms.push_back(eA * LogComplex::from(double(a.s - b.s)));
        terms.push_back(-(eA * a.tail));
        terms.push_back(eA * b.tail);
    };
    add_pair(Ap, Yp(t), Yp(u));
    add_pair(Am, Ym(t), Ym(u));
    LogComplex sum = log_sum(terms);
    // overall prefactor -(1/sqrt(-H2)) * (i sqrt(pi)/4); equals int_t^u
    return sum * LogComplex::from(-I * std::sqrt(pi) / (4.0 * root));
}

std::complex<double> gauss_sine_reference(std::complex<double> H1, std::complex<double> H2,
                                          double m, double t, double u) {
    auto pass = [&](int panels) {
        std::complex<double> acc(0.0, 0.0);
        for_each_gl_node(std::min(t, u), std::max(t, u), panels, 12, [&](double z, double w) {
            acc += w * std::exp(H1 * z + H2 * z * z) * std::sin(2.0 * pi * m * z);
        });
        return (u >= t) ? acc : -acc;
    };
    int panels = std::max(16, (int)std::ceil(4.0 * std::abs(m) * std::abs(u - t) +
                                             std::abs(H2) * (u * u + t * t)));
    std::complex<double> a = pass(panels), b = pass(2 * panels);
    if (std::abs(b - a) > 1e-10 * (1.0 + std::abs(b))) {
        std::complex<double> c = pass(4 * panels);
        if (std::abs(c - b) > 1e-9 * (1.0 + std::abs(c)))
            throw QuadratureDivergence("gauss_sine_reference failed to settle");
        return c;
    }
    return b;
}

// ---------------------------------------------------------------------------
// Bessel and the segment integral

LogComplex bessel_I(double ell, double x, BesselMode mode) {
    if (!(x > 0.0)) throw DomainError("bessel_I needs x > 0");
    if (mode == BesselMode::asymptotic) {
        if (x < 5.0) throw ArgOutOfSector("bessel asymptotic needs large x");
        return LogComplex{x - 0.5 * std::log(2.0 * pi * x), 0.0};
    }
    double lx = std::log(0.5 * x);
    std::vector<LogComplex> terms;
    double maxlog = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 20000; ++k) {
        double g2 = k + ell + 1.0;
        if (g2 <= 0.0 && std::abs(g2 - std::round(g2)) < 1e-12) continue; // 1/Gamma pole
        int sign = 1;
        double lg2;
        if (g2 > 0.0) {
            lg2 = std::lgamma(g2);
        } else {
            // reflection: Gamma(g2) = pi / (sin(pi g2) Gamma(1 - g2))
            double s = std::sin(pi * g2);
            lg2 = std::log(pi) - std::log(std::abs(s)) - std::lgamma(1.0 - g2);
            sign = (s < 0.0) ? -1 : 1;
        }
        double lt = (2.0 * k + ell) * lx - std::lgamma(k + 1.0) - lg2;
        terms.push_back(LogComplex{lt, sign < 0 ? pi : 0.0});
        maxlog = std::max(maxlog, lt);
        if (k > x && lt < maxlog - 45.0) break;
        if (k == 19999) throw NonConvergent("bessel series did not settle");
    }
    return log_sum(terms);
}

LogComplex P_sk(double s, double k, double n, double m, PskMode mode) {
    if (!(k > 0.0) || !(n > 0.0) || !(m > 0.0)) throw DomainError("P_sk needs k, n, m > 0");
    double x = pi * std::sqrt(2.0 * k * n / 3.0);
    if (mode == PskMode::bessel_series) return bessel_I(-s - 1.0, x, BesselMode::series);
    if (mode == PskMode::bessel_asymptotic)
        return bessel_I(-s - 1.0, x, BesselMode::asymptotic);
    // vertical segment through 1/sqrt(k/12), normalized by 1/(2 pi i)
    double x0 = std::sqrt(12.0 / k);
    double y0 = x0 * std::pow(m, -1.0 / 3.0);
    double amp = pi * std::sqrt(k * n / 6.0);
    int order = 12;
    int panels = std::max(16, (int)std::ceil(amp * y0 * (1.0 + k / 12.0) / order));
    std::vector<LogComplex> terms;
    for_each_gl_node(-1.0, 1.0, panels, order, [&](double t, double w) {
        std::complex<double> v(x0, y0 * t);
        std::complex<double> L = s * std::log(v) + amp * (v + 1.0 / v);
        terms.push_back(LogComplex::exp_log(L) * LogComplex::from(w * I * y0));
    });
    return log_sum(terms) / LogComplex::from(2.0 * pi * I);
}

LogComplex major_arc(const QuotientSpec& spec, double m, double n, MajorArcMode mode,
                     PskMode psk) {
    AsymptoticConstants k = constants(spec, true);
    if (!(m > 0.0) || !(n > 1.0)) throw DomainError("major_arc needs m > 0, n > 1");
    double beta = pi * std::sqrt(2.0 / n);
    double sigma = 0.5 * k.sum_alpha;
    double l2 = k.lambda2.value();
    if (mode == MajorArcMode::closed) {
        LogComplex pref = LogComplex::from(-I / (2.0 * pi)) * k.lambda1 *
                          LogComplex{(2.0 - sigma) * std::log(beta), 0.0} *
                          LogComplex{-sigma * 0.5 * std::log(l2), 0.0};
        return pref * P_sk(1.0 - sigma, 12.0 * l2, n, m, psk);
    }
    // direct integration of the near-pole main term over the major arc
    double minv = std::pow(m, -1.0 / 3.0);
    int order = 12;
    int panels = std::max(16, (int)std::ceil(beta * n * minv * (1.0 + l2) / order) + 8);
    std::vector<LogComplex> terms;
    for_each_gl_node(-1.0, 1.0, panels, order, [&](double xx, double w) {
        std::complex<double> eps = beta * std::complex<double>(1.0, xx * minv);
        std::complex<double> L = (1.0 - sigma) * std::log(eps) +
                                 2.0 * pi * pi * l2 / eps + eps * n;
        terms.push_back(LogComplex::exp_log(L) * LogComplex::from(w));
    });
    return k.lambda1 * log_sum(terms) * LogComplex::from(beta / (2.0 * pi * minv));
}

ArcBound error_arc_bound(const QuotientSpec& spec, double m, double n) {
    spec.validate();
    if (!(m > 0.0) || !(n > 1.0)) throw DomainError("error_arc_bound needs m > 0, n > 1");
    double beta = pi * std::sqrt(2.0 / n);
    double s = spec.b - 1.0;
    auto pos = spec.positive_part();
    auto neg = spec.negative_part();
    double mfac = 1.0 - 1.0 / std::sqrt(1.0 + std::pow(m, -2.0 / 3.0));

    ArcBound out;
    double dsum = 0.0;
    for (const auto& yk : neg) dsum += yk.alpha / 4.0;
    out.log_B = (0.25 - dsum) * std::log(n);
    for (const auto& xj : pos)
        out.log_B += 0.5 * xj.alpha * std::log(2.0 * pi / (xj.a * beta));

    double common = 0.0;
    for (const auto& yk : neg)
        common += 2.0 * pi * yk.alpha / (yk.a * beta) * (pi / 12.0 - mfac / (2.0 * pi));
    for (const auto& xj : pos) common -= pi * pi * xj.alpha / (6.0 * xj.a * beta);
    out.log_fm_bound = std::log(s + 1.0) + out.log_B + common;

    double drop = 0.0;
    for (const auto& yk : neg) drop += yk.alpha / (yk.a * beta) * mfac;
    out.log_E_bound = std::log((s + 1.0) / pi) + out.log_B +
                      pi * std::sqrt(2.0 * n) * spec.growth_base() - drop;
    return out;
}

double pq_bound_log(double n, double m) {
    if (!(n > 1.0) || !(m > 0.0)) throw DomainError("pq_bound_log needs n > 1, m > 0");
    double beta = pi * std::sqrt(2.0 / n);
    double mfac = 1.0 - 1.0 / std::sqrt(1.0 + std::pow(m, -2.0 / 3.0));
    return -0.25 * std::log(n) + 2.0 * pi / beta * (pi / 12.0 - mfac / (2.0 * pi));
}

CoefficientRecord main_term(const QuotientSpec& spec, double m, double n) {
    AsymptoticConstants k = constants(spec, true);
    if (!(n > 1.0)) throw DomainError("main_term needs n > 1");
    double beta = pi * std::sqrt(2.0 / n);
    double sigma = 0.5 * k.sum_alpha;
    double l2 = k.lambda2.value();
    LogComplex v = LogComplex::from(-I / (2.0 * pi)) * k.lambda1 *
                   LogComplex{(2.0 - sigma) * std::log(beta) - sigma * 0.5 * std::log(l2) +
                                  2.0 * pi * std::sqrt(2.0 * l2 * n) -
                                  std::log(2.0 * pi) - 0.25 * std::log(2.0 * l2 * n),
                              0.0};
    CoefficientRecord rec;
    rec.m = m;
    rec.nu = n;
    rec.beta = beta;
    rec.value = v;
    rec.err_estimate = beta; // the stated relative size of the first dropped term
    rec.provenance = "main_term";
    double kk = n - spec.delta_q();
    rec.off_lattice = std::abs(kk - std::round(kk)) > 1e-9;
    return rec;
}

} // namespace theta_asym
