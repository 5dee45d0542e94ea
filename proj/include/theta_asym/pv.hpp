#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "theta_asym/log_complex.hpp"
#include "theta_asym/modular.hpp"

namespace theta_asym {

struct QuadratureConfig {
    int panels_per_segment = 24; // composite GL panels per pole-free segment
    int nodes_per_panel = 12;
    int theta_order = 12;                    // GL order on the q-circle
    std::vector<double> r_sequence{1e-2, 1e-3}; // deleted-window radii
    double window_drop = 80.0; // log cut for the circle core window
    bool estimate_error = true;
};

enum class Kernel {
    sin_pv,     // -i sin(2 pi m z)
    exp_fourier // e^{-2 pi i m z}
};

struct PoleInfo {
    double h;
    long num;
    long den;
};

// simple poles of z -> f(z; tau) in (0,1), certified against the theta zeros
std::vector<PoleInfo> locate_poles(const QuotientSpec& spec, const TruncationBudget& budget = {});

// deleted-window contour: [0,1] minus radius-r windows around each pole
struct ContourPlan {
    double r = 0.0;
    std::vector<std::pair<double, double>> segments;
};
ContourPlan make_contour_plan(const std::vector<double>& poles, double r);

LogComplex residue_log_at(const QuotientSpec& spec, double h, std::complex<double> tau,
                          const TruncationBudget& budget = {});
std::complex<double> residue_at_pole(const QuotientSpec& spec, int ell, std::complex<double> tau,
                                     const TruncationBudget& budget = {});

// What the PV/circle machinery needs from an integrand family at fixed tau.
struct FourierTarget {
    std::function<LogComplex(std::complex<double>)> log_f;
    std::vector<double> poles;                  // simple poles in (0,1)
    std::function<LogComplex(double)> residue_log;
    double growth = 0.0;                        // >= true circle growth constant
};

FourierTarget quotient_target(const QuotientSpec& spec, std::complex<double> tau,
                              const TruncationBudget& budget = {});
FourierTarget crank_target(std::complex<double> tau, const TruncationBudget& budget = {});

struct FmResult {
    LogComplex value;
    double err = 0.0; // relative: node-doubling delta plus cancellation floor
};

// PV integral of f(z) K(z) over [0,1] via pole subtraction
FmResult fm_for_target(const FourierTarget& target, Kernel kernel, double m,
                       const QuadratureConfig& quad = {});

// f_m(tau) = -i PV int_0^1 f(z; tau) sin(2 pi m z) dz, plain complex + rel err
std::pair<std::complex<double>, double> fm_pv(const QuotientSpec& spec, double m,
                                              std::complex<double> tau,
                                              const QuadratureConfig& quad = {},
                                              const TruncationBudget& budget = {});
FmResult fm_pv_log(const QuotientSpec& spec, double m, std::complex<double> tau,
                   Kernel kernel = Kernel::sin_pv, const QuadratureConfig& quad = {},
                   const TruncationBudget& budget = {});

// PV by symmetric window deletion at radius r (first-order in r; used by the
// r-refinement diagnostics)
LogComplex fm_pv_deleted(const QuotientSpec& spec, double m, std::complex<double> tau, double r,
                         Kernel kernel = Kernel::sin_pv, const QuadratureConfig& quad = {},
                         const TruncationBudget& budget = {});

enum class Side { above, below };

// small-semicircle contribution G around pole index ell, kernel e^{-2 pi i m z}
std::complex<double> semicircle_G(const QuotientSpec& spec, int ell, std::complex<double> tau,
                                  double r, Side side, double m,
                                  const QuadratureConfig& quad = {},
                                  const TruncationBudget& budget = {});

struct CoefficientRecord {
    double m = 0.0;
    double nu = 0.0;
    double beta = 0.0;
    LogComplex value;
    double err_estimate = 0.0;
    std::string provenance;
    bool off_lattice = false;
};

using TargetFactory = std::function<FourierTarget(std::complex<double> tau)>;

// c(m, nu) = (1/2pi) int_{-pi}^{pi} f_m((theta + i beta)/2pi) e^{(beta - i theta) nu} dtheta
CoefficientRecord cauchy_extract_general(const TargetFactory& factory, Kernel kernel, double m,
                                         double nu, double beta, double lattice_offset,
                                         const QuadratureConfig& quad = {});

CoefficientRecord cauchy_extract(const QuotientSpec& spec, double m, double nu, double beta,
                                 Kernel kernel = Kernel::sin_pv,
                                 const QuadratureConfig& quad = {},
                                 const TruncationBudget& budget = {});

// largest admissible kernel frequency at scale n for window exponent delta
double m_schedule(double n, double delta);

} // namespace theta_asym
