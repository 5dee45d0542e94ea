#include "theta_asym/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace theta_asym {

namespace {

GlRule compute_rule(int n) {
    GlRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[i] = -x;
        r.weights[i] = w;
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

std::map<int, GlRule> cache;
std::mutex cache_mutex;

} // namespace

const GlRule& gl_rule(int order) {
    if (order < 1) throw std::invalid_argument("gl_rule order must be >= 1");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

void for_each_gl_node(double a, double b, int panels, int order,
                      const std::function<void(double, double)>& fn) {
    const GlRule& r = gl_rule(order);
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double mid = a + (p + 0.5) * h;
        for (int i = 0; i < order; ++i) fn(mid + 0.5 * h * r.nodes[i], 0.5 * h * r.weights[i]);
    }
}

} // namespace theta_asym
