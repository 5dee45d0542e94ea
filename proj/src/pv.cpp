#include "theta_asym/pv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "theta_asym/errors.hpp"
#include "theta_asym/quadrature.hpp"

namespace theta_asym {

namespace {

const std::complex<double> I(0.0, 1.0);

std::complex<double> kernel_value(Kernel k, double m, std::complex<double> z) {
    if (k == Kernel::sin_pv) return -I * std::sin(2.0 * pi * m * z);
    return std::exp(-2.0 * pi * I * m * z);
}

double lambda2_of(const QuotientSpec& spec) {
    double b = spec.b, c = spec.c;
    return b * b / c - b / c + 1.0 / (4.0 * c) - 0.25 - spec.sum_alpha_over_12a();
}

} // namespace

std::vector<PoleInfo> locate_poles(const QuotientSpec& spec, const TruncationBudget& budget) {
    spec.validate();
    std::vector<PoleInfo> out;
    std::complex<double> taup(0.0, 0.3);
    for (int k = 1; k < spec.b; ++k) {
        long g = std::gcd((long)k, (long)spec.b);
        PoleInfo p{double(k) / spec.b, k / g, spec.b / g};
        // denominator theta vanishes at the integer b*h = k; certify the zero is simple
        std::complex<double> dden = theta_derivative(double(k), double(spec.c) * taup, budget);
        if (std::abs(dden) < 1e-12)
            throw DegeneratePole("theta zero at k=" + std::to_string(k) + " is not simple");
        LogComplex num = log_theta(p.h, taup, budget);
        if (num.is_zero() || num.log_mag < -60.0)
            throw DegeneratePole("numerator vanishes at candidate pole");
        out.push_back(p);
    }
    return out;
}

ContourPlan make_contour_plan(const std::vector<double>& poles, double r) {
    if (!(r > 0.0)) throw PolePlanInvalid("window radius must be positive");
    std::vector<double> hs = poles;
    std::sort(hs.begin(), hs.end());
    ContourPlan plan;
    plan.r = r;
    double cursor = 0.0;
    for (double h : hs) {
        if (h - r <= cursor) throw PolePlanInvalid("deleted windows overlap or leave [0,1]");
        plan.segments.emplace_back(cursor, h - r);
        cursor = h + r;
    }
    if (cursor >= 1.0) throw PolePlanInvalid("deleted windows overlap or leave [0,1]");
    plan.segments.emplace_back(cursor, 1.0);
    return plan;
}

LogComplex residue_log_at(const QuotientSpec& spec, double h, std::complex<double> tau,
                          const TruncationBudget& budget) {
    std::complex<double> etaL(0.0, 0.0);
    for (const auto& f : spec.eta_factors)
        etaL += double(f.alpha) * log_eta(double(f.a) * tau, budget).log_value();
    LogComplex num = log_theta(h, tau, budget);
    std::complex<double> dden =
        theta_derivative(std::round(spec.b * h), double(spec.c) * tau, budget);
    if (dden == std::complex<double>(0.0, 0.0))
        throw DegeneratePole("vanishing theta derivative in residue");
    return LogComplex::exp_log(etaL) * num / LogComplex::from(double(spec.b) * dden);
}

std::complex<double> residue_at_pole(const QuotientSpec& spec, int ell, std::complex<double> tau,
                                     const TruncationBudget& budget) {
    auto poles = locate_poles(spec, budget);
    if (ell < 0 || ell >= (int)poles.size()) throw DomainError("pole index out of range");
    LogComplex r = residue_log_at(spec, poles[ell].h, tau, budget);
    if (r.log_mag > 700.0) throw ScaleExceeded("residue exceeds double range");
    return r.value();
}

FourierTarget quotient_target(const QuotientSpec& spec, std::complex<double> tau,
                              const TruncationBudget& budget) {
    spec.validate();
    std::complex<double> etaL(0.0, 0.0);
    for (const auto& f : spec.eta_factors)
        etaL += double(f.alpha) * log_eta(double(f.a) * tau, budget).log_value();
    LogComplex eta_part = LogComplex::exp_log(etaL);
    FourierTarget t;
    for (const auto& p : locate_poles(spec, budget)) t.poles.push_back(p.h);
    int b = spec.b, c = spec.c;
    t.log_f = [eta_part, b, c, tau, budget](std::complex<double> z) {
        return eta_part * log_theta(z, tau, budget) /
               log_theta(double(b) * z, double(c) * tau, budget);
    };
    t.residue_log = [spec, tau, budget](double h) { return residue_log_at(spec, h, tau, budget); };
    t.growth = lambda2_of(spec); // safe overestimate of the true circle growth
    return t;
}

FourierTarget crank_target(std::complex<double> tau, const TruncationBudget& budget) {
    if (!(tau.imag() > 0.0)) throw InvalidPoint("crank target needs Im tau > 0");
    std::complex<double> pref =
        I * pi / 2.0 + 2.0 * pi * I * tau / 24.0 + 2.0 * log_eta(tau, budget).log_value();
    FourierTarget t;
    t.log_f = [pref, tau, budget](std::complex<double> z) {
        // i (zeta^{1/2} - zeta^{-1/2}) = i e^{i pi z} (1 - e^{-2 pi i z})
        std::complex<double> L = pref + I * pi * z + log_one_minus_exp(-2.0 * pi * I * z);
        return LogComplex::exp_log(L) / log_theta(z, tau, budget);
    };
    t.residue_log = [](double) -> LogComplex {
        throw DomainError("crank generating function has no poles in (0,1)");
    };
    t.growth = 1.0 / 12.0;
    return t;
}

namespace {

struct PassResult {
    LogComplex value;
    double max_term_log = -std::numeric_limits<double>::infinity();
    std::size_t n_terms = 0;
};

// precision floor from cancellation between large opposite terms
double cancellation_floor(const PassResult& p) {
    if (p.value.is_zero() || p.n_terms == 0) return 0.0;
    double cond = std::max(0.0, p.max_term_log - p.value.log_mag);
    if (cond > 80.0) return 1.0; // no significant digits survive
    return 1e-15 * std::sqrt(double(p.n_terms)) * std::exp(cond);
}

PassResult fm_single_pass(const FourierTarget& target, Kernel kernel, double m, int panels,
                          int order) {
    std::vector<double> hs = target.poles;
    std::sort(hs.begin(), hs.end());
    // window half-widths: keep clear of neighbours and interval ends
    std::vector<double> cuts{0.0};
    for (std::size_t i = 0; i + 1 < hs.size(); ++i) cuts.push_back(0.5 * (hs[i] + hs[i + 1]));
    cuts.push_back(1.0);
    std::vector<double> widths(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i)
        widths[i] = std::min(0.2, 0.45 * std::min(hs[i] - cuts[i], cuts[i + 1] - hs[i]));

    std::vector<LogComplex> terms;
    PassResult pr;
    auto push = [&](LogComplex t) {
        if (!t.is_zero()) pr.max_term_log = std::max(pr.max_term_log, t.log_mag);
        terms.push_back(t);
    };

    auto plain_segment = [&](double a, double b) {
        if (b - a < 1e-14) return;
        for_each_gl_node(a, b, panels, order, [&](double x, double w) {
            push(target.log_f(x) * LogComplex::from(kernel_value(kernel, m, x) * w));
        });
    };
    double cursor = 0.0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        plain_segment(cursor, hs[i] - widths[i]);
        cursor = hs[i] + widths[i];
    }
    plain_segment(cursor, 1.0);

    // windows: integrate f - R/(z-h) (regular), then add the analytic PV of R/(z-h)
    int wpanels = std::max(4, panels / 2);
    for (std::size_t i = 0; i < hs.size(); ++i) {
        double h = hs[i], w = widths[i];
        LogComplex R = target.residue_log(h);
        auto window_half = [&](double a, double b) {
            for_each_gl_node(a, b, wpanels, order, [&](double x, double wt) {
                std::complex<double> K = kernel_value(kernel, m, x);
                LogComplex direct = target.log_f(x) * LogComplex::from(K * wt);
                LogComplex sub = R * LogComplex::from(-K * wt / (x - h));
                push(log_sum(std::vector<LogComplex>{direct, sub}));
            });
        };
        window_half(h - w, h);
        window_half(h, h + w);
        // PV int_{|t|<w} K(h+t)/t dt = int_0^w (K(h+t)-K(h-t))/t dt; for both
        // kernels this reduces to a prefactor times int_0^w sin(2 pi m t)/t dt
        double S = 0.0;
        int spanels = std::max(4, (int)std::ceil(4.0 * std::abs(m) * w));
        for_each_gl_node(0.0, w, spanels, order,
                         [&](double t, double wt) { S += wt * std::sin(2.0 * pi * m * t) / t; });
        std::complex<double> J = (kernel == Kernel::sin_pv)
                                     ? -2.0 * I * std::cos(2.0 * pi * m * h) * S
                                     : -2.0 * I * std::exp(-2.0 * pi * I * m * h) * S;
        push(R * LogComplex::from(J));
    }

    pr.n_terms = terms.size();
    pr.value = log_sum(terms);
    if (!pr.value.is_zero() &&
        (!std::isfinite(pr.value.log_mag) || !std::isfinite(pr.value.phase)))
        throw QuadratureDivergence("non-finite PV integral");
    return pr;
}

} // namespace

FmResult fm_for_target(const FourierTarget& target, Kernel kernel, double m,
                       const QuadratureConfig& quad) {
    PassResult fine =
        fm_single_pass(target, kernel, m, quad.panels_per_segment, quad.nodes_per_panel);
    FmResult out{fine.value, cancellation_floor(fine)};
    if (quad.estimate_error) {
        PassResult finer = fm_single_pass(target, kernel, m, (quad.panels_per_segment * 3) / 2,
                                          quad.nodes_per_panel + 6);
        out.value = finer.value;
        out.err = finer.value.rel_diff(fine.value) + cancellation_floor(finer);
    }
    return out;
}

FmResult fm_pv_log(const QuotientSpec& spec, double m, std::complex<double> tau, Kernel kernel,
                   const QuadratureConfig& quad, const TruncationBudget& budget) {
    return fm_for_target(quotient_target(spec, tau, budget), kernel, m, quad);
}

std::pair<std::complex<double>, double> fm_pv(const QuotientSpec& spec, double m,
                                              std::complex<double> tau,
                                              const QuadratureConfig& quad,
                                              const TruncationBudget& budget) {
    FmResult r = fm_pv_log(spec, m, tau, Kernel::sin_pv, quad, budget);
    if (r.value.log_mag > 700.0) throw ScaleExceeded("f_m exceeds double range");
    return {r.value.value(), r.err};
}

LogComplex fm_pv_deleted(const QuotientSpec& spec, double m, std::complex<double> tau, double r,
                         Kernel kernel, const QuadratureConfig& quad,
                         const TruncationBudget& budget) {
    FourierTarget target = quotient_target(spec, tau, budget);
    ContourPlan plan = make_contour_plan(target.poles, r);
    std::vector<LogComplex> terms;
    for (const auto& [a, b] : plan.segments) {
        if (b - a < 1e-14) continue;
        for_each_gl_node(a, b, quad.panels_per_segment, quad.nodes_per_panel,
                         [&](double x, double w) {
                             terms.push_back(target.log_f(x) *
                                             LogComplex::from(kernel_value(kernel, m, x) * w));
                         });
    }
    return log_sum(terms);
}

std::complex<double> semicircle_G(const QuotientSpec& spec, int ell, std::complex<double> tau,
                                  double r, Side side, double m, const QuadratureConfig& quad,
                                  const TruncationBudget& budget) {
    FourierTarget target = quotient_target(spec, tau, budget);
    make_contour_plan(target.poles, r); // throws PolePlanInvalid when r does not fit
    if (ell < 0 || ell >= (int)target.poles.size()) throw DomainError("pole index out of range");
    double h = target.poles[ell];
    std::vector<LogComplex> terms;
    double t0 = (side == Side::above) ? 0.0 : pi;
    double t1 = (side == Side::above) ? pi : 2.0 * pi;
    for_each_gl_node(t0, t1, 8, quad.nodes_per_panel, [&](double th, double w) {
        std::complex<double> e = std::exp(I * th);
        std::complex<double> z = h + r * e;
        LogComplex jac = LogComplex::from(I * r * e * w * std::exp(-2.0 * pi * I * m * z));
        terms.push_back(target.log_f(z) * jac);
    });
    LogComplex total = log_sum(terms);
    // above: traversed pi -> 0, i.e. minus the [0, pi] orientation
    if (side == Side::above) total = -total;
    if (total.log_mag > 700.0) throw ScaleExceeded("semicircle value exceeds double range");
    return total.value();
}

namespace {

struct CirclePass {
    LogComplex value;
    double max_term_log = -std::numeric_limits<double>::infinity();
    std::size_t n_terms = 0;
};

CirclePass circle_pass(const TargetFactory& factory, Kernel kernel, double m, double nu,
                       double beta, double growth, const QuadratureConfig& fmq, int order) {
    double X = 2.0 * pi * pi * growth / beta;
    double drop = std::max(40.0, fmq.window_drop);
    double theta_core = pi;
    if (X > 2.0 * drop)
        theta_core = std::min(pi, 2.0 * beta * std::sqrt(drop / (X - drop)));
    double rate = nu + 2.0 * pi * pi * growth / (beta * beta);

    std::vector<LogComplex> terms;
    CirclePass cp;
    auto add_range = [&](double a, double b, int panels) {
        if (b - a < 1e-14) return;
        for_each_gl_node(a, b, panels, order, [&](double th, double w) {
            std::complex<double> tau(th / (2.0 * pi), beta / (2.0 * pi));
            FmResult fm = fm_for_target(factory(tau), kernel, m, fmq);
            LogComplex term =
                fm.value *
                LogComplex::exp_log(std::complex<double>(beta, -th) * nu) *
                LogComplex::from(w / (2.0 * pi));
            if (!term.is_zero()) cp.max_term_log = std::max(cp.max_term_log, term.log_mag);
            terms.push_back(term);
        });
    };
    int core_panels = std::max(8, (int)std::ceil(2.0 * theta_core * rate / order));
    add_range(-theta_core, theta_core, core_panels);
    if (theta_core < pi) {
        add_range(theta_core, pi, 16);
        add_range(-pi, -theta_core, 16);
    }
    cp.n_terms = terms.size();
    cp.value = log_sum(terms);
    return cp;
}

double circle_floor(const CirclePass& p) {
    if (p.value.is_zero() || p.n_terms == 0) return 0.0;
    double cond = std::max(0.0, p.max_term_log - p.value.log_mag);
    if (cond > 80.0) return 1.0;
    return 1e-15 * std::sqrt(double(p.n_terms)) * std::exp(cond);
}

} // namespace

CoefficientRecord cauchy_extract_general(const TargetFactory& factory, Kernel kernel, double m,
                                         double nu, double beta, double lattice_offset,
                                         const QuadratureConfig& quad) {
    if (!(beta > 0.0)) throw DomainError("cauchy_extract needs beta > 0");
    if (!(nu > 0.0)) throw DomainError("cauchy_extract needs nu > 0");
    double growth = factory(std::complex<double>(0.0, beta / (2.0 * pi))).growth;

    QuadratureConfig inner = quad;
    inner.estimate_error = false; // error controlled at the circle level
    CirclePass coarse = circle_pass(factory, kernel, m, nu, beta, growth, inner, quad.theta_order);

    QuadratureConfig finer = inner;
    finer.panels_per_segment = (inner.panels_per_segment * 3) / 2;
    finer.nodes_per_panel = inner.nodes_per_panel + 4;
    CirclePass fine = circle_pass(factory, kernel, m, nu, beta, growth, finer, quad.theta_order + 4);

    CoefficientRecord rec;
    rec.m = m;
    rec.nu = nu;
    rec.beta = beta;
    rec.value = fine.value;
    rec.err_estimate = fine.value.rel_diff(coarse.value) + circle_floor(fine);
    rec.provenance = "pv_cauchy";
    double k = nu - lattice_offset;
    rec.off_lattice = std::abs(k - std::round(k)) > 1e-9;
    return rec;
}

CoefficientRecord cauchy_extract(const QuotientSpec& spec, double m, double nu, double beta,
                                 Kernel kernel, const QuadratureConfig& quad,
                                 const TruncationBudget& budget) {
    TargetFactory factory = [spec, budget](std::complex<double> tau) {
        return quotient_target(spec, tau, budget);
    };
    return cauchy_extract_general(factory, kernel, m, nu, beta, spec.delta_q(), quad);
}

double m_schedule(double n, double delta) {
    if (!(n > 1.0)) throw DomainError("m_schedule needs n > 1");
    double beta = pi * std::sqrt(2.0 / n);
    return std::floor(std::pow(n, -delta) * std::log(n) / (6.0 * beta));
}

} // namespace theta_asym
