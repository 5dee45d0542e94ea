#pragma once

#include <complex>

#include "theta_asym/log_complex.hpp"
#include "theta_asym/modular.hpp"
#include "theta_asym/pv.hpp"

namespace theta_asym {

struct Rational {
    long num = 0;
    long den = 1;
    double value() const { return double(num) / den; }
};

struct AsymptoticConstants {
    LogComplex lambda1;
    Rational lambda2;      // exact
    int sum_alpha = 0;
    double growth_base = 0.0; // 1 - sum alpha/(12 a)
    bool window_ok = false;   // growth_base < sqrt(lambda2)
};

AsymptoticConstants constants(const QuotientSpec& spec, bool require_window = false);

// f_m(i eps / (2 pi)) main term near the dominant pole, simplified form
LogComplex fm_near_pole_main(const QuotientSpec& spec, std::complex<double> eps);
// pre-simplified form, keeps the kernel frequency m in the denominator
LogComplex fm_near_pole_presimplified(const QuotientSpec& spec, std::complex<double> eps,
                                      double m);

// erf(Y) = s - tail with s in {-1, 0, +1}; exact cancellation bookkeeping for
// the four-term Gaussian-sine closed form
struct ErfParts {
    int s = 0;
    LogComplex tail;
};
ErfParts erf_parts(std::complex<double> Y);

std::complex<double> erf_reference(std::complex<double> z);
// leading rotated asymptotic erf(i z) ~ i e^{z^2} / (sqrt(pi) z); throws
// ArgOutOfSector unless Re(z^2) is large enough for the dropped constant
LogComplex erf_rotated_asymptotic(std::complex<double> z);

// closed form of int_t^u e^{H1 z + H2 z^2} sin(2 pi m z) dz (four erf terms)
LogComplex gauss_sine_integral(std::complex<double> H1, std::complex<double> H2, double m,
                               double t, double u);
// adaptive quadrature reference for the same integral
std::complex<double> gauss_sine_reference(std::complex<double> H1, std::complex<double> H2,
                                          double m, double t, double u);

enum class BesselMode { series, asymptotic };
// modified Bessel I_ell(x), x > 0, real (possibly negative, non-integer) order
LogComplex bessel_I(double ell, double x, BesselMode mode = BesselMode::series);

enum class PskMode { quadrature, bessel_series, bessel_asymptotic };
// vertical-segment integral P_{s,k} (normalized so that it matches I_{-s-1});
// quadrature mode integrates the segment directly
LogComplex P_sk(double s, double k, double n, double m, PskMode mode);

enum class MajorArcMode { closed, direct };
// major-arc contribution M; closed mode uses the P_{s,k} representation with
// the requested Psk mode, direct mode integrates the near-pole main term
LogComplex major_arc(const QuotientSpec& spec, double m, double n,
                     MajorArcMode mode = MajorArcMode::closed,
                     PskMode psk = PskMode::bessel_asymptotic);

struct ArcBound {
    double log_B = 0.0;        // log of the polynomial envelope B(m, n)
    double log_fm_bound = 0.0; // log bound on |f_m| away from the dominant pole
    double log_E_bound = 0.0;  // log bound on the error arc E
};
ArcBound error_arc_bound(const QuotientSpec& spec, double m, double n);

// log of the stated bound on |P(q)| at epsilon = beta(1 + i x m^{-1/3})
double pq_bound_log(double n, double m);

// theorem main term for c(m, n); value independent of m by construction
CoefficientRecord main_term(const QuotientSpec& spec, double m, double n);

} // namespace theta_asym
