#include "theta_asym/log_complex.hpp"

namespace theta_asym {

std::complex<double> log_one_minus_exp(std::complex<double> L) {
    if (L.real() > 36.0) {
        // 1 - e^L = -e^L (1 - e^{-L}); second factor is 1 + O(e^{-36})
        std::complex<double> small = std::exp(-L);
        return L + std::complex<double>(0.0, pi) + std::log(1.0 - small);
    }
    if (L.real() < -36.0) {
        // log(1 - x) = -x - x^2/2 - ..., x = e^L below 2e-16
        std::complex<double> x = std::exp(L);
        return -x - 0.5 * x * x;
    }
    return std::log(1.0 - std::exp(L));
}

LogComplex log_sum(std::span<const LogComplex> terms) {
    double lmax = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms)
        if (t.log_mag > lmax) lmax = t.log_mag;
    if (std::isinf(lmax) && lmax < 0) return LogComplex::zero();
    std::complex<double> acc(0.0, 0.0);
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        acc += std::exp(t.log_mag - lmax) * std::complex<double>(std::cos(t.phase), std::sin(t.phase));
    }
    if (acc == std::complex<double>(0.0, 0.0)) return LogComplex::zero();
    return {lmax + std::log(std::abs(acc)), std::arg(acc)};
}

LogComplex log_sum(const std::vector<LogComplex>& terms) {
    return log_sum(std::span<const LogComplex>(terms.data(), terms.size()));
}

} // namespace theta_asym
