#include "theta_asym/crank.hpp"

#include <cmath>

#include "theta_asym/errors.hpp"

namespace theta_asym {

int crank_of_partition(const std::vector<int>& parts) {
    int ones = 0, largest = 0, above = 0;
    for (int p : parts) {
        if (p == 1) ++ones;
        largest = std::max(largest, p);
    }
    if (ones == 0) return largest;
    for (int p : parts) {
        if (p > ones) ++above;
    }
    return above - ones;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& stack,
               std::map<int, long>& counts) {
    if (remaining == 0) {
        ++counts[crank_of_partition(stack)];
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        enumerate(remaining - p, p, stack, counts);
        stack.pop_back();
    }
}

} // namespace

std::map<int, long> crank_oracle(int n) {
    if (n < 1) throw DomainError("crank_oracle needs n >= 1");
    std::map<int, long> counts;
    std::vector<int> stack;
    enumerate(n, n, stack, counts);
    return counts;
}

std::map<int, long> crank_counts_gf(int n) {
    if (n == 1) return {{-1, 1}, {0, -1}, {1, 1}};
    return crank_oracle(n);
}

long partition_count(int n) {
    if (n < 0) throw DomainError("partition_count needs n >= 0");
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k) {
        long s = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            int g2 = j * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            long sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= k) s += sign * p[k - g1];
            if (g2 <= k) s += sign * p[k - g2];
        }
        p[k] = s;
    }
    return p[n];
}

CoefficientRecord crank_extract(double m, int n, const QuadratureConfig& quad,
                                const TruncationBudget& budget) {
    if (n < 1) throw DomainError("crank_extract needs n >= 1");
    double beta = pi * std::sqrt(2.0 / n);
    TargetFactory factory = [budget](std::complex<double> tau) {
        return crank_target(tau, budget);
    };
    CoefficientRecord rec =
        cauchy_extract_general(factory, Kernel::exp_fourier, m, double(n), beta, 0.0, quad);
    rec.provenance = "pv_cauchy";
    return rec;
}

} // namespace theta_asym
