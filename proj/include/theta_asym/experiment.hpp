#pragma once

#include <string>
#include <vector>

#include "theta_asym/asymptotics.hpp"
#include "theta_asym/crank.hpp"
#include "theta_asym/modular.hpp"
#include "theta_asym/pv.hpp"

namespace theta_asym {

struct ExperimentConfig {
    std::string fixture = "quotient"; // "quotient" or "crank"
    QuotientSpec spec = make_E1();
    std::vector<double> n_grid;
    std::vector<double> m_values; // empty when schedule mode
    bool schedule = false;        // m = m_schedule(n, delta) per n
    double delta = 0.05;
    std::string kernel = "sin"; // "sin" or "exp"
    int threads = 1;
    QuadratureConfig quad;
    TruncationBudget truncation;
    std::string csv_path = "ratios.csv";
    std::string report_path = "report.txt";
};

// strict parser: unknown keys anywhere are rejected with ConfigError
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
QuotientSpec parse_spec_json(const std::string& json_text);

struct ResultRow {
    std::string spec_id;
    double m = 0.0;
    double nu = 0.0;
    double beta = 0.0;
    double log_abs_exact = 0.0;
    double phase_exact = 0.0;
    double log_abs_main = 0.0;
    double phase_main = 0.0;
    double abs_ratio = 0.0;
    double err_estimate = 0.0;
    double runtime_ms = 0.0;
    bool failed = false;
};

std::string rows_to_csv(const std::vector<ResultRow>& rows);
// CSV with the runtime_ms column removed; the run-determinism comparisons use
// this form because wall time is inherently non-deterministic
std::string rows_to_csv_no_runtime(const std::vector<ResultRow>& rows);

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::size_t failed_rows = 0;
};

// honors THETA_ASYM_THREADS over config.threads
ExperimentResult run_ratio_experiment(const ExperimentConfig& config);

int resolve_threads(int configured);

} // namespace theta_asym
