#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "theta_asym/asymptotics.hpp"
#include "theta_asym/crank.hpp"
#include "theta_asym/errors.hpp"
#include "theta_asym/experiment.hpp"
#include "theta_asym/properties.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitConfig = 2;

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw theta_asym::ConfigError("cannot open output file: " + path.string());
    }
    out << body;
}

int run_verify(const std::string& config_path, int threads_override, const std::string& out_dir) {
    auto config = theta_asym::load_config(config_path);
    if (threads_override > 0) {
        config.threads = threads_override;
    }

    std::filesystem::path dir = out_dir.empty() ? std::filesystem::path(".") : std::filesystem::path(out_dir);
    std::filesystem::create_directories(dir);

    auto result = theta_asym::run_ratio_experiment(config);
    const auto csv_path = dir / std::filesystem::path(config.csv_path).filename();
    write_file(csv_path, theta_asym::rows_to_csv(result.rows));

    std::string report;
    report += "rows: " + std::to_string(result.rows.size()) + "\n";
    report += "failed rows: " + std::to_string(result.failed_rows) + "\n";
    double worst = 0.0;
    for (const auto& row : result.rows) {
        if (!row.failed && std::isfinite(row.abs_ratio)) {
            worst = std::max(worst, std::abs(row.abs_ratio - 1.0));
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", worst);
    report += std::string("worst |abs_ratio - 1|: ") + buf + "\n";
    report += result.failed_rows == 0 ? "verdict: PASS\n" : "verdict: FAIL\n";
    const auto report_path = dir / std::filesystem::path(config.report_path).filename();
    write_file(report_path, report);

    std::cout << report;
    std::cout << "csv: " << csv_path.string() << "\n";
    return result.failed_rows == 0 ? kExitOk : kExitNumeric;
}

int run_extract(const std::string& spec_json, double m, double nu) {
    auto spec = theta_asym::parse_spec_json(spec_json);
    const double beta = theta_asym::pi * std::sqrt(2.0 / std::max(nu, 1.0));
    auto rec = theta_asym::cauchy_extract(spec, m, nu, beta);
    std::printf("spec_id=%s m=%.12g nu=%.12g beta=%.12g\n", spec.id.c_str(), rec.m, rec.nu,
                rec.beta);
    std::printf("log_abs=%.12g phase=%.12g err_estimate=%.3g off_lattice=%d\n",
                rec.value.log_mag, rec.value.phase, rec.err_estimate, rec.off_lattice ? 1 : 0);
    if (rec.value.is_zero() || !std::isfinite(rec.value.log_mag)) {
        return kExitNumeric;
    }
    return kExitOk;
}

int run_properties(const std::string& config_path) {
    auto config = theta_asym::load_config(config_path);
    auto report = theta_asym::run_property_suite(config);
    std::cout << report.text();
    return report.all_pass() ? kExitOk : kExitNumeric;
}

int run_crank(int n) {
    if (n < 0) {
        throw theta_asym::ConfigError("--n must be nonnegative");
    }
    auto counts = theta_asym::crank_counts_gf(n);
    long total = 0;
    for (const auto& [m, count] : counts) {
        std::printf("M(%d, %d) = %ld\n", m, n, count);
        total += count;
    }
    std::printf("sum = %ld, p(%d) = %ld\n", total, n, theta_asym::partition_count(n));
    return total == theta_asym::partition_count(n) ? kExitOk : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and asymptotic Fourier coefficients of eta-theta quotients"};
    app.require_subcommand(1);

    std::string config_path;
    int threads = 0;
    std::string out_dir;
    auto* verify = app.add_subcommand("verify", "run a ratio experiment from a JSON config");
    verify->add_option("--config", config_path, "JSON config path")->required();
    verify->add_option("--threads", threads, "worker thread count (overrides config)");
    verify->add_option("--out", out_dir, "output directory for CSV and report");

    std::string spec_json;
    double m_value = 0.0;
    double nu_value = 0.0;
    auto* extract = app.add_subcommand("extract", "extract one coefficient c(m, nu)");
    extract->add_option("--spec", spec_json, "inline JSON quotient spec")->required();
    extract->add_option("--m", m_value, "kernel frequency m")->required();
    extract->add_option("--nu", nu_value, "exponent nu")->required();

    std::string prop_config;
    auto* properties = app.add_subcommand("properties", "run the invariant check suite");
    properties->add_option("--config", prop_config, "JSON config path")->required();

    int crank_n = 0;
    auto* crank = app.add_subcommand("crank", "crank counts M(m, n) for one n");
    crank->add_option("--n", crank_n, "partition size n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (verify->parsed()) {
            return run_verify(config_path, threads, out_dir);
        }
        if (extract->parsed()) {
            return run_extract(spec_json, m_value, nu_value);
        }
        if (properties->parsed()) {
            return run_properties(prop_config);
        }
        if (crank->parsed()) {
            return run_crank(crank_n);
        }
    } catch (const theta_asym::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitConfig;
}
