// Acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "adqec/analysis.hpp"
#include "adqec/channel.hpp"
#include "adqec/codeset.hpp"
#include "adqec/recovery.hpp"
#include "adqec/search.hpp"

using namespace adqec;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "  failed: " << what << "\n";
        }
    }
};

CodeSet load_eight_twelve() {
    std::ifstream in(std::string(ADQEC_DATA_DIR) + "/code_8_12.json");
    if (!in) throw std::runtime_error("missing bundled (8,12) code file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return CodeSet::from_json(buf.str());
}

CodeSet four_two_code() {
    CodeSet s;
    s.n = 4;
    s.mode = ConflictMode::Strict;
    s.words = {0b0000, 0b0011, 0b1100, 0b1111};
    return s;
}

CodeSet literal_six_code() {
    CodeSet s;
    s.n = 4;
    s.mode = ConflictMode::Literal;
    s.words = {0b0000, 0b0001, 0b0011, 0b1100, 0b1110, 0b1111};
    return s;
}

void criterion_1(Check& c) {
    CodeSet code = load_eight_twelve();
    for (auto mode : {ConflictMode::Literal, ConflictMode::Strict}) {
        code.mode = mode;
        auto report = validate_code_set(code);
        c.expect(report.valid(), "bundled set valid under " + to_string(mode));
        c.expect(report.k == 12, "k = 12 under " + to_string(mode));
    }
}

void criterion_2(Check& c) {
    const std::vector<int> lower_bounds = {2, 2, 5, 8, 12};
    for (int n = 4; n <= 8; ++n) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.mode = ConflictMode::Strict;
        cfg.strategy = SearchStrategy::ExactBnB;
        cfg.time_budget_seconds = 55.0;
        auto result = exact_search(cfg);
        int bound = lower_bounds[static_cast<std::size_t>(n - 4)];
        c.expect(result.k >= bound,
                 "n=" + std::to_string(n) + " exact k=" + std::to_string(result.k) +
                     " >= " + std::to_string(bound));
        c.expect(validate_code_set(result.code).valid(), "n=" + std::to_string(n) + " code validates");
        if (n == 4) {
            c.expect(result.optimal, "n=4 search completed");
            c.expect(result.k == 2, "n=4 maximum is exactly 2");
        }
    }
}

void criterion_3(Check& c) {
    SearchConfig cfg;
    cfg.mode = ConflictMode::Strict;
    cfg.strategy = SearchStrategy::GreedyLex;
    auto report = rate_table(4, 16, cfg);
    std::vector<std::pair<int, int>> rows;
    for (const auto& row : report.rows) {
        c.expect(row.failure.empty(), "row n=" + std::to_string(row.n) + " produced");
        if (!row.failure.empty()) continue;
        SearchConfig row_cfg = cfg;
        row_cfg.n = row.n;
        auto res = greedy_search(row_cfg);
        c.expect(validate_code_set(res.code).valid(), "n=" + std::to_string(row.n) + " validates");
        c.expect(is_maximal(res.code), "n=" + std::to_string(row.n) + " maximal");
        rows.emplace_back(row.n, row.k);
    }
    c.expect(report.slope.has_value(), "slope defined");
    if (report.slope) {
        c.detail << "  greedy-lex slope = " << *report.slope << "\n";
        c.expect(*report.slope >= 0.70 && *report.slope <= 0.95, "slope in [0.70, 0.95]");
    }
    double ref = reference_slope();
    c.detail << "  reference slope = " << ref << "\n";
    c.expect(std::abs(ref - 0.85) <= 0.02, "reference column slope 0.85 +/- 0.02");
}

void criterion_4(Check& c) {
    for (int n = 1; n <= 10; ++n)
        for (double gamma : {0.0, 0.01, 0.1, 0.5, 1.0})
            c.expect(verify_trace_preserving(multi_qubit_ad_kraus({gamma, n}), 1e-12),
                     "damping CPTP at n=" + std::to_string(n) + " gamma=" + std::to_string(gamma));
    for (const auto& code : {four_two_code(), load_eight_twelve()}) {
        for (double gamma : {0.01, 0.05, 0.1, 0.3}) {
            auto report = verify_recovery(build_recovery(code, gamma), 1e-10);
            c.expect(report.sources_orthonormal && report.trace_preserving,
                     "recovery CPTP for n=" + std::to_string(code.n) +
                         " gamma=" + std::to_string(gamma));
        }
    }
}

void criterion_5(Check& c) {
    double a_42 = first_order_residuals(four_two_code()).max_abs_a1();
    double a_812 = first_order_residuals(load_eight_twelve()).max_abs_a1();
    c.detail << "  max |a1| (4,2) = " << a_42 << ", (8,12) = " << a_812 << "\n";
    c.expect(a_42 < 1e-6, "(4,2) first-order clean");
    c.expect(a_812 < 1e-6, "(8,12) first-order clean");
    auto literal = first_order_residuals(literal_six_code());
    bool leak = false;
    for (const auto& e : literal.entries)
        if (std::abs(e.a1) >= 0.4 && std::abs(e.a1) <= 0.6) leak = true;
    c.detail << "  literal six-word max |a1| = " << literal.max_abs_a1() << "\n";
    c.expect(leak, "literal-only set leaks with |a1| in [0.4, 0.6]");
}

void criterion_6(Check& c) {
    CodeSet code = load_eight_twelve();
    std::vector<double> grid;
    for (int i = 0; i <= 25; ++i) grid.push_back(i * 0.02);
    auto curve = fidelity_curve(code, grid);
    c.expect(std::abs(curve.f_code[0] - 1.0) <= 1e-10, "F(0) = 1");
    std::vector<double> xs = {1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 5e-2};
    std::vector<double> ys;
    for (double g : xs) ys.push_back(1.0 - code_fidelity(code, g));
    auto fit = fit_linear_quadratic(xs, ys);
    c.detail << "  1-F fit: a1 = " << fit.a1 << ", a2 = " << fit.a2 << "\n";
    c.expect(std::abs(fit.a1) < 1e-3, "|a1| < 1e-3 (linear term vanishes)");
    c.expect(fit.a2 > 0, "a2 > 0");
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid[i] >= 0.01 - 1e-12 && grid[i] <= 0.1 + 1e-12)
            c.expect(curve.f_code[i] > curve.f_bare[i],
                     "F_code > F_bare3 at gamma=" + std::to_string(grid[i]));
}

void criterion_7(Check& c) {
    bool predicates_agree = true;
    for (int n = 2; n <= 8 && predicates_agree; ++n) {
        uint32_t count = 1u << n;
        for (uint32_t a = 0; a < count && predicates_agree; ++a)
            for (uint32_t b = a + 1; b < count && predicates_agree; ++b)
                for (auto mode : {ConflictMode::Literal, ConflictMode::Strict})
                    if (conflicts(CodeWord(a, n), CodeWord(b, n), mode) !=
                        conflicts_by_enumeration(CodeWord(a, n), CodeWord(b, n), mode))
                        predicates_agree = false;
    }
    c.expect(predicates_agree, "optimized conflict predicate matches enumeration for n <= 8");

    CodeSet code = four_two_code();
    for (double gamma : {0.05, 0.2, 0.5}) {
        auto cc = CompositeChannel::build(code, gamma);
        Matrix basis = cc.codeword_basis();
        DensityMatrix rho{basis * basis.adjoint() / 2.0};
        DensityMatrix sigma{cc.apply_raw(rho.m)};
        double full = uhlmann_fidelity(rho, sigma);
        double reduced = code_fidelity(code, gamma);
        c.expect(std::abs(full - reduced) <= 1e-9,
                 "projector reduction = full space at gamma=" + std::to_string(gamma));
    }

    for (int m = 1; m <= 3; ++m)
        for (double gamma : {0.05, 0.3, 0.7})
            c.expect(std::abs(bare_fidelity(m, gamma) - bare_fidelity_simulated(m, gamma)) <= 1e-10,
                     "bare closed form = simulation at m=" + std::to_string(m));
}

void criterion_8(Check& c) {
    c.expect(quantum_hamming_bound(5, 1, 1, 3), "bound holds tightly at (5,1,1,3)");
    c.expect(!quantum_hamming_bound(4, 1, 1, 3), "bound fails at (4,1,1,3)");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"(8,12) example validity", criterion_1},
        {"exact-search lower bounds for n = 4..8", criterion_2},
        {"greedy scaling over n = 4..16", criterion_3},
        {"CPTP checks for damping and recovery channels", criterion_4},
        {"first-order correction and literal-mode leakage", criterion_5},
        {"fidelity curve shape for the (8,12) code", criterion_6},
        {"oracle equivalences", criterion_7},
        {"quantum Hamming bound fixture", criterion_8},
    };
    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail << "  exception: " << e.what() << "\n";
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << (i + 1) << ": " << (check.ok ? "PASS" : "FAIL") << " - "
                  << criteria[i].first << " (" << elapsed << " s)\n"
                  << check.detail.str();
        all_ok = all_ok && check.ok;
    }
    return all_ok ? 0 : 1;
}
