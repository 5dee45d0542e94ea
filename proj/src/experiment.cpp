#include "theta_asym/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "theta_asym/errors.hpp"

namespace theta_asym {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
}

QuotientSpec parse_spec(const json& j) {
    if (!j.is_object()) throw ConfigError("spec must be an object");
    reject_unknown(j, {"id", "eta_factors", "b", "c"}, "spec");
    QuotientSpec s;
    s.eta_factors.clear();
    if (!j.contains("eta_factors")) throw ConfigError("spec needs eta_factors");
    for (const auto& f : j.at("eta_factors")) {
        if (!f.is_array() || f.size() != 2)
            throw ConfigError("eta_factors entries must be [a, alpha] pairs");
        s.eta_factors.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
    }
    s.b = j.value("b", 2);
    s.c = j.value("c", 1);
    s.id = j.value("id", std::string("spec"));
    s.validate();
    return s;
}

} // namespace

QuotientSpec parse_spec_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad spec JSON: ") + e.what());
    }
    return parse_spec(j);
}

ExperimentConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(j,
                   {"fixture", "spec", "n_grid", "m_values", "delta", "kernel", "threads",
                    "quad", "truncation", "outputs"},
                   "config");
    ExperimentConfig c;
    c.fixture = j.value("fixture", std::string("quotient"));
    if (c.fixture != "quotient" && c.fixture != "crank")
        throw ConfigError("fixture must be 'quotient' or 'crank'");
    if (j.contains("spec")) c.spec = parse_spec(j.at("spec"));
    if (!j.contains("n_grid")) throw ConfigError("config needs n_grid");
    for (const auto& n : j.at("n_grid")) c.n_grid.push_back(n.get<double>());
    if (j.contains("m_values")) {
        if (j.at("m_values").is_string()) {
            if (j.at("m_values").get<std::string>() != "schedule")
                throw ConfigError("m_values must be a list or 'schedule'");
            c.schedule = true;
        } else {
            for (const auto& m : j.at("m_values")) c.m_values.push_back(m.get<double>());
        }
    } else {
        c.schedule = true;
    }
    c.delta = j.value("delta", 0.05);
    c.kernel = j.value("kernel", std::string("sin"));
    if (c.kernel != "sin" && c.kernel != "exp")
        throw ConfigError("kernel must be 'sin' or 'exp'");
    c.threads = j.value("threads", 1);
    if (c.threads < 1) throw ConfigError("threads must be >= 1");
    if (j.contains("quad")) {
        const json& q = j.at("quad");
        reject_unknown(q,
                       {"panels_per_segment", "nodes_per_panel", "theta_order", "r_sequence",
                        "window_drop"},
                       "quad");
        c.quad.panels_per_segment = q.value("panels_per_segment", c.quad.panels_per_segment);
        c.quad.nodes_per_panel = q.value("nodes_per_panel", c.quad.nodes_per_panel);
        c.quad.theta_order = q.value("theta_order", c.quad.theta_order);
        c.quad.window_drop = q.value("window_drop", c.quad.window_drop);
        if (q.contains("r_sequence")) {
            c.quad.r_sequence.clear();
            for (const auto& r : q.at("r_sequence")) c.quad.r_sequence.push_back(r.get<double>());
        }
    }
    if (j.contains("truncation")) {
        const json& t = j.at("truncation");
        reject_unknown(t, {"product_terms", "sum_radius", "target_rel_err"}, "truncation");
        c.truncation.product_terms = t.value("product_terms", c.truncation.product_terms);
        c.truncation.sum_radius = t.value("sum_radius", c.truncation.sum_radius);
        c.truncation.target_rel_err = t.value("target_rel_err", c.truncation.target_rel_err);
    }
    if (j.contains("outputs")) {
        const json& o = j.at("outputs");
        reject_unknown(o, {"csv", "report"}, "outputs");
        c.csv_path = o.value("csv", c.csv_path);
        c.report_path = o.value("report", c.report_path);
    }
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_impl(const std::vector<ResultRow>& rows, bool runtime) {
    std::string out = "spec_id,m,nu,beta,log_abs_exact,phase_exact,log_abs_main,phase_main,"
                      "abs_ratio,err_estimate";
    if (runtime) out += ",runtime_ms";
    out += "\r\n";
    for (const auto& r : rows) {
        out += r.spec_id + "," + fmt(r.m) + "," + fmt(r.nu) + "," + fmt(r.beta) + "," +
               fmt(r.log_abs_exact) + "," + fmt(r.phase_exact) + "," + fmt(r.log_abs_main) +
               "," + fmt(r.phase_main) + "," + fmt(r.abs_ratio) + "," + fmt(r.err_estimate);
        if (runtime) out += "," + fmt(r.runtime_ms);
        out += "\r\n";
    }
    return out;
}

} // namespace

std::string rows_to_csv(const std::vector<ResultRow>& rows) { return csv_impl(rows, true); }
std::string rows_to_csv_no_runtime(const std::vector<ResultRow>& rows) {
    return csv_impl(rows, false);
}

int resolve_threads(int configured) {
    if (const char* env = std::getenv("THETA_ASYM_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return configured;
}

namespace {

struct Cell {
    double n = 0.0;
    double m = 0.0;
};

std::vector<ResultRow> run_cell(const ExperimentConfig& cfg, const Cell& cell) {
    std::vector<ResultRow> rows;
    auto stamp = [] { return std::chrono::steady_clock::now(); };
    auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count() / 1000.0;
    };

    if (cfg.fixture == "crank") {
        int n = (int)std::llround(cell.n);
        if (n < 1 || n > 40) throw ConfigError("crank fixture supports 1 <= n <= 40");
        auto t0 = stamp();
        CoefficientRecord exact = crank_extract(cell.m, n, cfg.quad, cfg.truncation);
        long count = 0;
        auto counts = crank_counts_gf(n);
        auto it = counts.find((int)std::llround(cell.m));
        if (it != counts.end()) count = it->second;
        ResultRow r;
        r.spec_id = "crank";
        r.m = cell.m;
        r.nu = n;
        r.beta = exact.beta;
        r.log_abs_exact = exact.value.log_mag;
        r.phase_exact = exact.value.phase;
        r.log_abs_main = (count == 0) ? -std::numeric_limits<double>::infinity()
                                      : std::log(std::abs((double)count));
        r.phase_main = (count < 0) ? pi : 0.0;
        r.abs_ratio = std::exp(r.log_abs_exact - r.log_abs_main);
        r.err_estimate = exact.err_estimate;
        r.runtime_ms = ms(t0, stamp());
        rows.push_back(r);
        return rows;
    }

    const QuotientSpec& spec = cfg.spec;
    Kernel kernel = (cfg.kernel == "sin") ? Kernel::sin_pv : Kernel::exp_fourier;
    // snap the requested n to the q-exponent lattice
    double dq = spec.delta_q();
    double nu = dq + std::round(cell.n - dq);
    double beta = pi * std::sqrt(2.0 / nu);

    {
        auto t0 = stamp();
        CoefficientRecord exact =
            cauchy_extract(spec, cell.m, nu, beta, kernel, cfg.quad, cfg.truncation);
        CoefficientRecord main = main_term(spec, cell.m, nu);
        ResultRow r;
        r.spec_id = spec.id + "/coeff";
        r.m = cell.m;
        r.nu = nu;
        r.beta = beta;
        r.log_abs_exact = exact.value.log_mag;
        r.phase_exact = exact.value.phase;
        r.log_abs_main = main.value.log_mag;
        r.phase_main = main.value.phase;
        r.abs_ratio = std::exp(r.log_abs_exact - r.log_abs_main);
        r.err_estimate = exact.err_estimate;
        r.runtime_ms = ms(t0, stamp());
        rows.push_back(r);
    }
    {
        auto t0 = stamp();
        std::complex<double> tau(0.0, beta / (2.0 * pi));
        FmResult exact = fm_pv_log(spec, cell.m, tau, kernel, cfg.quad, cfg.truncation);
        LogComplex main = fm_near_pole_main(spec, beta);
        ResultRow r;
        r.spec_id = spec.id + "/fm";
        r.m = cell.m;
        r.nu = nu;
        r.beta = beta;
        r.log_abs_exact = exact.value.log_mag;
        r.phase_exact = exact.value.phase;
        r.log_abs_main = main.log_mag;
        r.phase_main = main.phase;
        r.abs_ratio = std::exp(r.log_abs_exact - r.log_abs_main);
        r.err_estimate = exact.err;
        r.runtime_ms = ms(t0, stamp());
        rows.push_back(r);
    }
    return rows;
}

} // namespace

ExperimentResult run_ratio_experiment(const ExperimentConfig& config) {
    if (config.fixture == "crank") {
        for (double n : config.n_grid)
            if (n < 1.0 || n > 40.0)
                throw ConfigError("crank fixture supports 1 <= n <= 40");
    }
    std::vector<Cell> cells;
    for (double n : config.n_grid) {
        if (config.schedule) {
            cells.push_back({n, std::max(1.0, m_schedule(n, config.delta))});
        } else {
            for (double m : config.m_values) cells.push_back({n, m});
        }
    }
    std::vector<std::vector<ResultRow>> slots(cells.size());
    std::vector<char> bad(cells.size(), 0);

    int nthreads = std::min<int>(resolve_threads(config.threads), (int)cells.size());
    nthreads = std::max(nthreads, 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                slots[i] = run_cell(config, cells[i]);
            } catch (const std::exception&) {
                bad[i] = 1;
                ResultRow r;
                r.spec_id = (config.fixture == "crank") ? "crank" : config.spec.id + "/failed";
                r.m = cells[i].m;
                r.nu = cells[i].n;
                r.failed = true;
                r.log_abs_exact = r.log_abs_main = r.abs_ratio = r.phase_exact = r.phase_main =
                    std::nan("");
                r.err_estimate = std::numeric_limits<double>::infinity();
                slots[i] = {r};
            }
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExperimentResult out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (bad[i]) ++out.failed_rows;
        for (auto& r : slots[i]) out.rows.push_back(std::move(r));
    }
    return out;
}

} // namespace theta_asym
