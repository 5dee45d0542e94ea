#pragma once

#include <complex>
#include <string>
#include <vector>

#include "theta_asym/errors.hpp"
#include "theta_asym/log_complex.hpp"

namespace theta_asym {

// One eta factor eta(a*tau)^alpha.
struct EtaFactor {
    int a = 1;
    int alpha = -1;
};

// Product of eta powers times theta(z;tau)/theta(b z; c tau).
struct QuotientSpec {
    std::vector<EtaFactor> eta_factors;
    int b = 2;
    int c = 1;
    std::string id; // optional label used in CSV output

    int sum_alpha() const;
    double sum_alpha_over_a() const;       // sum alpha_j / a_j
    double sum_alpha_over_12a() const;     // sum alpha_j / (12 a_j)
    double growth_base() const { return 1.0 - sum_alpha_over_12a(); }
    double delta_q() const;                // (1-c)/8 + sum alpha_j a_j / 24
    double delta_zeta() const { return (1.0 - b) / 2.0; }
    bool even_b() const { return b % 2 == 0; }

    // factors with alpha > 0 as (x_j, gamma_j) and alpha < 0 as (y_k, delta_k>0)
    std::vector<EtaFactor> positive_part() const;
    std::vector<EtaFactor> negative_part() const;

    // throws InvalidSpec when outside the admissible family
    void validate() const;
};

QuotientSpec make_E1();
QuotientSpec make_E2();
QuotientSpec make_E3();

struct TruncationBudget {
    int product_terms = 20000;   // max product factors per theta/eta evaluation
    int sum_radius = 2000;       // max |n| in the theta sum form
    double target_rel_err = 1e-13;
};

enum class ThetaMethod { product, sum };

// log of Dedekind eta(a tau) with modular acceleration when beneficial
LogComplex log_eta(std::complex<double> tau, const TruncationBudget& budget = {});
std::complex<double> eval_eta(std::complex<double> tau, const TruncationBudget& budget = {});

// log of the Jacobi theta(z; tau) (odd theta, zeta^{1/2} read as e^{i pi z})
LogComplex log_theta(std::complex<double> z, std::complex<double> tau,
                     const TruncationBudget& budget = {});
std::complex<double> eval_theta(std::complex<double> z, std::complex<double> tau,
                                const TruncationBudget& budget = {},
                                ThetaMethod method = ThetaMethod::product);

// d/dw theta(w; tau), via the sum form (usable at the zeros of theta)
std::complex<double> theta_derivative(std::complex<double> w, std::complex<double> tau,
                                      const TruncationBudget& budget = {});

// log f(z; tau).  Guards |b z - round(b Re z)| >= 1e-9 unless allow_near_pole.
LogComplex log_quotient(const QuotientSpec& spec, std::complex<double> z,
                        std::complex<double> tau, const TruncationBudget& budget = {},
                        bool allow_near_pole = false);
std::complex<double> eval_quotient(const QuotientSpec& spec, std::complex<double> z,
                                   std::complex<double> tau,
                                   const TruncationBudget& budget = {});

// Closed-form leading factor C(z, eps), tau = i eps / (2 pi), Re eps > 0,
// valid pointwise for 0 < z < 1 off the poles.
LogComplex leading_factor(const QuotientSpec& spec, double z, std::complex<double> eps);

// Error-term margin M(z) (and N(z) = min(z, M(z)) via the second function).
double margin(const QuotientSpec& spec, double z);
double margin_N(const QuotientSpec& spec, double z);

} // namespace theta_asym
