#pragma once

#include <functional>
#include <vector>

namespace theta_asym {

// Gauss-Legendre rule on [-1, 1]
struct GlRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// cached; thread-safe
const GlRule& gl_rule(int order);

// visit the nodes of a composite rule on [a, b] in ascending order
void for_each_gl_node(double a, double b, int panels, int order,
                      const std::function<void(double x, double w)>& fn);

} // namespace theta_asym
