#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "adqec/analysis.hpp"
#include "adqec/channel.hpp"
#include "adqec/codeset.hpp"
#include "adqec/recovery.hpp"
#include "adqec/search.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvalidCode = 4;
constexpr int kExitVerificationFailed = 5;

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct ManifestWriter {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::map<std::string, std::string> digests;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write_output(const std::string& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << content;
        std::ostringstream hex;
        hex << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(content);
        digests[path] = hex.str();
    }

    void finalize() {
        if (digests.empty()) return;
        nlohmann::json j;
        j["command"] = command;
        j["parameters"] = parameters;
        j["tool_version"] = kVersion;
        j["wall_time_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        auto outputs = nlohmann::json::object();
        for (const auto& [path, digest] : digests) outputs[path] = digest;
        j["outputs"] = outputs;
        std::string manifest_path = digests.begin()->first + ".manifest.json";
        std::ofstream out(manifest_path, std::ios::binary);
        out << j.dump(2) << "\n";
    }
};

std::vector<double> parse_grid(const std::string& spec) {
    double start, step, end;
    char c1, c2;
    std::istringstream is(spec);
    if (!(is >> start >> c1 >> step >> c2 >> end) || c1 != ':' || c2 != ':' || step <= 0)
        throw CLI::ValidationError("--gamma-grid", "expected START:STEP:END with positive STEP");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        double g = start + i * step;
        if (g > end + 1e-12) break;
        grid.push_back(std::min(g, end));
    }
    return grid;
}

adqec::CodeSet load_code(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return adqec::CodeSet::from_json(buf.str());
}

int cmd_search(int n, const std::string& mode_s, const std::string& strategy_s, double budget,
               const std::string& out_path) {
    auto mode = adqec::conflict_mode_from_string(mode_s);
    auto strategy = adqec::search_strategy_from_string(strategy_s);
    if (!mode || !strategy) return kExitUsage;
    if (n < 2 || n > 32) {
        std::cerr << "error: n must lie in [2, 32]\n";
        return kExitUsage;
    }
    adqec::SearchConfig config;
    config.n = n;
    config.mode = *mode;
    config.strategy = *strategy;
    config.time_budget_seconds = budget;
    adqec::SearchResult result;
    try {
        result = adqec::run_search(config);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (result.k == 0) {
        std::cerr << "error: no code found within budget\n";
        return kExitBudget;
    }
    std::cout << "n = " << n << "\nk = " << result.k << "\nlog2k = " << std::log2(double(result.k))
              << "\noptimal = " << (result.optimal ? "yes" : "no") << "\nelapsed = "
              << result.elapsed_seconds << " s\n";
    if (!out_path.empty()) {
        ManifestWriter manifest;
        manifest.command = "search";
        manifest.parameters = {{"n", n}, {"mode", mode_s}, {"strategy", strategy_s}, {"budget", budget}};
        manifest.write_output(out_path, result.code.to_json());
        manifest.finalize();
    }
    return 0;
}

int cmd_table(int from, int to, const std::string& mode_s, const std::string& strategy_s,
              double budget, const std::string& out_path, bool check_reference) {
    if (check_reference) {
        double slope = adqec::reference_slope();
        std::cout << "reference slope = " << std::setprecision(4) << slope << "\n";
        if (std::abs(slope - 0.85) > 0.02) {
            std::cerr << "error: reference slope outside 0.85 +/- 0.02\n";
            return kExitVerificationFailed;
        }
        return 0;
    }
    auto mode = adqec::conflict_mode_from_string(mode_s);
    auto strategy = adqec::search_strategy_from_string(strategy_s);
    if (!mode || !strategy) return kExitUsage;
    if (from > to || from < 2 || to > 32) {
        std::cerr << "error: bad n range\n";
        return kExitUsage;
    }
    adqec::SearchConfig config;
    config.mode = *mode;
    config.strategy = *strategy;
    config.time_budget_seconds = budget;
    adqec::TableReport report = adqec::rate_table(from, to, config);
    int produced = 0;
    for (const auto& row : report.rows) {
        std::cout << row.n << ": ";
        if (row.failure.empty()) {
            std::cout << "k = " << row.k;
            if (row.reference_k) std::cout << " (reference " << *row.reference_k << ")";
            ++produced;
        } else {
            std::cout << "failed: " << row.failure;
        }
        std::cout << "\n";
    }
    if (report.slope)
        std::cout << "slope = " << std::setprecision(4) << *report.slope << "\n";
    else
        std::cout << "slope = n/a\n";
    if (!out_path.empty()) {
        ManifestWriter manifest;
        manifest.command = "table";
        manifest.parameters = {{"from", from}, {"to", to}, {"mode", mode_s},
                               {"strategy", strategy_s}, {"budget", budget}};
        manifest.write_output(out_path, report.to_csv());
        manifest.finalize();
    }
    return produced > 0 ? 0 : kExitBudget;
}

int cmd_fidelity(const std::string& code_path, const std::string& grid_spec,
                 const std::string& out_path, const std::string& svg_path) {
    adqec::CodeSet code = load_code(code_path);
    adqec::ValidationReport validation = adqec::validate_code_set(code);
    if (!validation.valid()) {
        std::cerr << "error: " << validation.summary(code.n) << "\n";
        return kExitInvalidCode;
    }
    if (code.n > adqec::kSimulationCap) {
        std::cerr << "error: n exceeds the simulation cap\n";
        return kExitUsage;
    }
    std::vector<double> grid = parse_grid(grid_spec);
    adqec::FidelityCurve curve = adqec::fidelity_curve(code, grid);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < curve.gammas.size(); ++i) {
        if (curve.gammas[i] > 0.0) {
            xs.push_back(curve.gammas[i]);
            ys.push_back(1.0 - curve.f_code[i]);
        }
    }
    if (xs.size() >= 2) {
        adqec::QuadraticFit fit = adqec::fit_linear_quadratic(xs, ys);
        std::cout << "1 - F fit: a1 = " << fit.a1 << ", a2 = " << fit.a2 << "\n";
    }
    ManifestWriter manifest;
    manifest.command = "fidelity";
    manifest.parameters = {{"code", code_path}, {"gamma_grid", grid_spec}};
    if (!out_path.empty()) manifest.write_output(out_path, curve.to_csv());
    if (!svg_path.empty()) manifest.write_output(svg_path, curve.to_svg());
    manifest.finalize();
    return 0;
}

int cmd_verify(const std::string& code_path, const std::vector<double>& gammas) {
    adqec::CodeSet code = load_code(code_path);
    adqec::ValidationReport validation = adqec::validate_code_set(code);
    std::cout << "code set: " << validation.summary(code.n) << "\n";
    if (!validation.valid()) return kExitInvalidCode;
    bool ok = true;
    for (double g : gammas) {
        adqec::RecoveryChannel r = adqec::build_recovery(code, g);
        adqec::RecoveryReport report = adqec::verify_recovery(r);
        std::cout << "gamma = " << g << ": gram dev " << report.max_gram_deviation << ", tp dev "
                  << report.max_tp_deviation << (report.pass() ? " [pass]" : " [FAIL]") << "\n";
        ok = ok && report.pass();
    }
    adqec::ResidualReport residuals = adqec::first_order_residuals(code);
    double max_a1 = residuals.max_abs_a1();
    bool first_order_ok = max_a1 < 1e-6;
    std::cout << "max |a1| = " << max_a1 << (first_order_ok ? " [pass]" : " [FAIL]") << "\n";
    ok = ok && first_order_ok;
    return ok ? 0 : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-complementary amplitude-damping code toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker thread cap (0 = library default)");

    // search
    int n = 0;
    std::string mode = "strict", strategy = "greedy-lex", out_path, svg_path;
    double budget = 60.0;
    auto* search = app.add_subcommand("search", "Search for a maximal code set");
    search->add_option("n", n, "Word length")->required();
    search->add_option("--mode", mode, "strict|literal");
    search->add_option("--strategy", strategy, "greedy-lex|greedy-weight|exact");
    search->add_option("--budget", budget, "Time budget in seconds");
    search->add_option("--out", out_path, "Output CodeSet JSON file");

    // table
    int from = 4, to = 16;
    bool check_reference = false;
    auto* table = app.add_subcommand("table", "Encoded dimensions over a range of n");
    table->add_option("--from", from, "Smallest n");
    table->add_option("--to", to, "Largest n");
    table->add_option("--mode", mode, "strict|literal");
    table->add_option("--strategy", strategy, "greedy-lex|greedy-weight|exact");
    table->add_option("--budget", budget, "Per-n time budget in seconds");
    table->add_option("--out", out_path, "Output CSV file");
    table->add_flag("--check-reference", check_reference, "Self-test the bundled reference column");

    // fidelity
    std::string code_path, grid_spec = "0:0.02:0.5";
    auto* fidelity = app.add_subcommand("fidelity", "Fidelity curve of a code");
    fidelity->add_option("code", code_path, "CodeSet JSON file")->required();
    fidelity->add_option("--gamma-grid", grid_spec, "START:STEP:END");
    fidelity->add_option("--out", out_path, "Output CSV file");
    fidelity->add_option("--svg", svg_path, "Output SVG plot");

    // verify
    std::vector<double> gammas = {0.01, 0.05, 0.1};
    auto* verify = app.add_subcommand("verify", "Validate a code and its recovery");
    verify->add_option("code", code_path, "CodeSet JSON file")->required();
    verify->add_option("--gammas", gammas, "Gamma values for the recovery checks")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*search) return cmd_search(n, mode, strategy, budget, out_path);
        if (*table) return cmd_table(from, to, mode, strategy, budget, out_path, check_reference);
        if (*fidelity) return cmd_fidelity(code_path, grid_spec, out_path, svg_path);
        if (*verify) return cmd_verify(code_path, gammas);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
