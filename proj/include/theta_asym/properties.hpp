#pragma once

#include <string>
#include <vector>

#include "theta_asym/experiment.hpp"

namespace theta_asym {

struct PropertyResult {
    std::string id;
    std::string description;
    double tolerance = 0.0;
    double observed = 0.0;
    bool pass = false;
};

struct PropertyReport {
    std::vector<PropertyResult> results;
    bool all_pass() const;
    std::string text() const;
};

// runs the cross-module invariant checks; the config supplies the family spec
// and quadrature settings for the family-dependent properties
PropertyReport run_property_suite(const ExperimentConfig& config);

} // namespace theta_asym
