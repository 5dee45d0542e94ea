#include "theta_asym/modular.hpp"

#include <algorithm>
#include <cmath>

namespace theta_asym {

namespace {
const std::complex<double> I(0.0, 1.0);
}

int QuotientSpec::sum_alpha() const {
    int s = 0;
    for (const auto& f : eta_factors) s += f.alpha;
    return s;
}

double QuotientSpec::sum_alpha_over_a() const {
    double s = 0.0;
    for (const auto& f : eta_factors) s += double(f.alpha) / f.a;
    return s;
}

double QuotientSpec::sum_alpha_over_12a() const { return sum_alpha_over_a() / 12.0; }

double QuotientSpec::delta_q() const {
    double s = 0.0;
    for (const auto& f : eta_factors) s += double(f.alpha) * f.a / 24.0;
    return (1.0 - c) / 8.0 + s;
}

std::vector<EtaFactor> QuotientSpec::positive_part() const {
    std::vector<EtaFactor> r;
    for (const auto& f : eta_factors)
        if (f.alpha > 0) r.push_back(f);
    return r;
}

std::vector<EtaFactor> QuotientSpec::negative_part() const {
    std::vector<EtaFactor> r;
    for (const auto& f : eta_factors)
        if (f.alpha < 0) r.push_back({f.a, -f.alpha});
    return r;
}

void QuotientSpec::validate() const {
    if (eta_factors.empty()) throw InvalidSpec("spec has no eta factors");
    for (const auto& f : eta_factors) {
        if (f.a < 1) throw InvalidSpec("eta factor needs a >= 1");
        if (f.alpha == 0) throw InvalidSpec("eta factor with zero exponent");
    }
    if (b < 1 || c < 1) throw InvalidSpec("b and c must be positive");
    if (static_cast<long>(b) * b <= c) throw InvalidSpec("requires b^2 > c");
    if (sum_alpha_over_a() >= 0.0) throw InvalidSpec("requires sum alpha_j/a_j < 0");
}

QuotientSpec make_E1() { return {{{1, -1}}, 2, 1, "E1"}; }
QuotientSpec make_E2() { return {{{1, -1}}, 4, 3, "E2"}; }
QuotientSpec make_E3() { return {{{2, -2}}, 2, 1, "E3"}; }

// ---------------------------------------------------------------------------
// eta

namespace {

// log eta(tau) as a straight q-product, no transformations
std::complex<double> log_eta_direct(std::complex<double> tau, const TruncationBudget& budget) {
    std::complex<double> logq = 2.0 * pi * I * tau;
    double decay = -logq.real(); // 2 pi Im tau > 0
    double logtol = std::log(budget.target_rel_err) - 3.0;
    int nmax = static_cast<int>(std::ceil(-logtol / decay)) + 2;
    if (nmax > budget.product_terms)
        throw NonConvergent("eta product needs " + std::to_string(nmax) + " factors");
    std::complex<double> L = logq / 24.0;
    for (int n = 1; n <= nmax; ++n) L += log_one_minus_exp(double(n) * logq);
    return L;
}

} // namespace

LogComplex log_eta(std::complex<double> tau, const TruncationBudget& budget) {
    if (!(tau.imag() > 0.0)) throw InvalidPoint("eta needs Im tau > 0");
    if (tau.imag() < 0.5) {
        // re-center (eta(tau+1) = e^{i pi/12} eta(tau)), then invert if that
        // actually improves convergence
        double k = std::round(tau.real());
        std::complex<double> t = tau - k;
        std::complex<double> t2 = -1.0 / t;
        if (t2.imag() > t.imag()) {
            // eta(t) = (-i t)^{-1/2} eta(-1/t)
            std::complex<double> L = I * pi * k / 12.0 - 0.5 * std::log(-I * t) +
                                     log_eta_direct(t2, budget);
            return LogComplex::exp_log(L);
        }
    }
    return LogComplex::exp_log(log_eta_direct(tau, budget));
}

std::complex<double> eval_eta(std::complex<double> tau, const TruncationBudget& budget) {
    return log_eta(tau, budget).value();
}

// ---------------------------------------------------------------------------
// theta

namespace {

// log theta(z; tau) via the triple product, no transformations.
// The zeta^{1/2} prefactor is e^{i pi z} (entire in z), not a principal sqrt.
std::complex<double> log_theta_direct(std::complex<double> z, std::complex<double> tau,
                                      const TruncationBudget& budget) {
    std::complex<double> logq = 2.0 * pi * I * tau;
    std::complex<double> logzeta = 2.0 * pi * I * z;
    double decay = -logq.real();
    double bump = std::abs(logzeta.real());
    double logtol = std::log(budget.target_rel_err) - 3.0;
    int nmax = static_cast<int>(std::ceil((bump - logtol) / decay)) + 2;
    if (nmax > budget.product_terms)
        throw NonConvergent("theta product needs " + std::to_string(nmax) + " factors");
    std::complex<double> L = I * pi / 2.0 + I * pi * z + logq / 8.0;
    for (int n = 1; n <= nmax; ++n) {
        std::complex<double> nq = double(n) * logq;
        L += log_one_minus_exp(nq);
        L += log_one_minus_exp(nq + logzeta);
        L += log_one_minus_exp(nq - logq - logzeta);
    }
    return L;
}

} // namespace

LogComplex log_theta(std::complex<double> z, std::complex<double> tau,
                     const TruncationBudget& budget) {
    if (!(tau.imag() > 0.0)) throw InvalidPoint("theta needs Im tau > 0");
    if (tau.imag() < 0.5) {
        std::complex<double> tau2 = -1.0 / tau;
        if (tau2.imag() > tau.imag()) {
            // theta(z; tau) = i (-i tau)^{-1/2} e^{-i pi z^2 / tau} theta(z/tau; -1/tau)
            std::complex<double> L = I * pi / 2.0 - 0.5 * std::log(-I * tau) -
                                     I * pi * z * z / tau +
                                     log_theta_direct(z / tau, tau2, budget);
            return LogComplex::exp_log(L);
        }
    }
    return LogComplex::exp_log(log_theta_direct(z, tau, budget));
}

std::complex<double> eval_theta(std::complex<double> z, std::complex<double> tau,
                                const TruncationBudget& budget, ThetaMethod method) {
    if (method == ThetaMethod::product) return log_theta(z, tau, budget).value();
    if (!(tau.imag() > 0.0)) throw InvalidPoint("theta needs Im tau > 0");
    // sum form: i q^{1/8} sum_n (-1)^n q^{(n^2+n)/2} e^{2 pi i (n+1/2) z}
    std::complex<double> logq = 2.0 * pi * I * tau;
    std::complex<double> logzeta = 2.0 * pi * I * z;
    std::complex<double> acc(0.0, 0.0);
    double max_mag = 0.0;
    int idle = 0;
    for (int n = 0;; ++n) {
        double tail = 0.0;
        for (int s : {n, -n - 1}) {
            double tri = 0.5 * (double(s) * s + s);
            std::complex<double> logterm = tri * logq + (s + 0.5) * logzeta;
            double mag = std::exp(logterm.real());
            std::complex<double> term =
                ((s % 2 == 0) ? 1.0 : -1.0) * mag *
                std::complex<double>(std::cos(logterm.imag()), std::sin(logterm.imag()));
            acc += term;
            tail = std::max(tail, mag);
        }
        max_mag = std::max(max_mag, tail);
        idle = (tail < budget.target_rel_err * max_mag) ? idle + 1 : 0;
        if (idle >= 3) break;
        if (n > budget.sum_radius) throw NonConvergent("theta sum radius exhausted");
    }
    return I * std::exp(logq / 8.0) * acc;
}

std::complex<double> theta_derivative(std::complex<double> w, std::complex<double> tau,
                                      const TruncationBudget& budget) {
    if (!(tau.imag() > 0.0)) throw InvalidPoint("theta needs Im tau > 0");
    std::complex<double> logq = 2.0 * pi * I * tau;
    std::complex<double> logzeta = 2.0 * pi * I * w;
    std::complex<double> acc(0.0, 0.0);
    double max_mag = 0.0;
    int idle = 0;
    for (int n = 0;; ++n) {
        double tail = 0.0;
        for (int s : {n, -n - 1}) {
            double tri = 0.5 * (double(s) * s + s);
            std::complex<double> logterm = tri * logq + (s + 0.5) * logzeta;
            double mag = std::exp(logterm.real()) * std::abs(2.0 * pi * (s + 0.5));
            std::complex<double> term =
                ((s % 2 == 0) ? 1.0 : -1.0) * std::exp(logterm) * 2.0 * pi * I * (s + 0.5);
            acc += term;
            tail = std::max(tail, mag);
        }
        max_mag = std::max(max_mag, tail);
        idle = (tail < budget.target_rel_err * max_mag) ? idle + 1 : 0;
        if (idle >= 3) break;
        if (n > budget.sum_radius) throw NonConvergent("theta sum radius exhausted");
    }
    return I * std::exp(logq / 8.0) * acc;
}

// ---------------------------------------------------------------------------
// quotient

LogComplex log_quotient(const QuotientSpec& spec, std::complex<double> z,
                        std::complex<double> tau, const TruncationBudget& budget,
                        bool allow_near_pole) {
    spec.validate();
    std::complex<double> bz = double(spec.b) * z;
    double dist = std::abs(bz - std::round(bz.real()));
    if (!allow_near_pole && dist < 1e-9)
        throw PoleProximity("z within 1e-9/b of a quotient pole");
    std::complex<double> L(0.0, 0.0);
    for (const auto& f : spec.eta_factors)
        L += double(f.alpha) * log_eta(double(f.a) * tau, budget).log_value();
    LogComplex num = log_theta(z, tau, budget);
    LogComplex den = log_theta(bz, double(spec.c) * tau, budget);
    return LogComplex::exp_log(L) * num / den;
}

std::complex<double> eval_quotient(const QuotientSpec& spec, std::complex<double> z,
                                   std::complex<double> tau, const TruncationBudget& budget) {
    LogComplex L = log_quotient(spec, z, tau, budget);
    if (L.log_mag > 700.0) throw ScaleExceeded("quotient value exceeds double range");
    return L.value();
}

// ---------------------------------------------------------------------------
// leading factor and margins

LogComplex leading_factor(const QuotientSpec& spec, double z, std::complex<double> eps) {
    spec.validate();
    if (!(eps.real() > 0.0)) throw DomainError("leading_factor needs Re eps > 0");
    if (!(z > 0.0 && z < 1.0)) throw DomainError("leading_factor needs 0 < z < 1");
    double bz = spec.b * z;
    if (std::abs(bz - std::round(bz)) < 1e-9)
        throw PoleProximity("leading_factor at a quotient pole");

    int sa = spec.sum_alpha();
    std::complex<double> L = (-0.5 * sa) * std::log(eps / (2.0 * pi));
    L += 0.5 * std::log(double(spec.c));
    for (const auto& f : spec.eta_factors) L += -0.5 * f.alpha * std::log(double(f.a));

    // sinh(2 pi^2 z / eps) / sinh(2 pi^2 b z / (c eps)), factored for stability
    std::complex<double> w = 2.0 * pi * pi * z / eps;
    double boc = double(spec.b) / spec.c;
    L += w * (1.0 - boc);
    L += log_one_minus_exp(-2.0 * w) - log_one_minus_exp(-2.0 * w * boc);

    double E = (4.0 * bz * bz + 1.0) / (4.0 * spec.c) - (4.0 * z * z + 1.0) / 4.0 -
               spec.sum_alpha_over_12a();
    L += 2.0 * pi * pi / eps * E;
    return LogComplex::exp_log(L);
}

double margin(const QuotientSpec& spec, double z) {
    spec.validate();
    if (!(z > 0.0 && z < 1.0)) throw DomainError("margin needs 0 < z < 1");
    double bz = spec.b * z;
    if (std::abs(bz - std::round(bz)) < 1e-9) throw PoleProximity("margin at a quotient pole");
    int kappa0 = std::max(1, static_cast<int>(std::ceil(bz)));
    double m = 1.0 - z;
    for (const auto& f : spec.eta_factors) m = std::min(m, 1.0 / f.a);
    m = std::min(m, 1.0 / spec.c);
    m = std::min(m, (kappa0 - bz) / spec.c);
    if (kappa0 != 1) m = std::min(m, (bz + 1.0 - kappa0) / spec.c);
    return m;
}

double margin_N(const QuotientSpec& spec, double z) { return std::min(z, margin(spec, z)); }

} // namespace theta_asym
